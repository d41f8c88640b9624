// Copyright 2026 The capsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPSIM_ERROR_HPP
#define CAPSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace capsim {

enum class ErrorCode {
    InvalidArgument = 1,
    DimensionMismatch,
    InvalidDimension,
    ConstraintViolation,
    BudgetExceeded,
    DecodeError,
    DegenerateProjection,
    InfiniteCost,
    Io,
};

/// Single exception type for the core library. The code is what the C API
/// surfaces; the message is for humans.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

}  // namespace capsim

#endif  // CAPSIM_ERROR_HPP
