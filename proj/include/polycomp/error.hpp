/*
 * Copyright 2026 The polycomp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef POLYCOMP_ERROR_HPP
#define POLYCOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycomp {

/// Machine-readable category of a domain error. The CLI prints these as
/// `ERR:<code>:` prefixes, so the spelling returned by code_name() is stable.
enum class ErrorCode {
    RingMismatch,
    NotInvertible,
    InvalidArgument,
    Unsupported,
    CeilingExceeded,
    NotMember,
    Precondition,
    Parse,
    OutOfRange,
    NotPrime,
    NotCoprime,
    Protocol,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
    if (!condition) fail(code, what);
}

}  // namespace polycomp

#endif  // POLYCOMP_ERROR_HPP
