// Copyright 2026 The eaqmds Authors
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

#ifndef EAQMDS_ERRORS_H
#define EAQMDS_ERRORS_H

#include <stdexcept>
#include <string>

namespace eaqmds {

/// Bad parameters or preconditions supplied by the caller (CLI exit code 2).
class ParameterError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Operands belong to different fields.
class FieldMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Internal consistency failure (e.g. a coefficient that should lie in a subfield does not).
class AlgebraError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An instance exceeds a configured resource guard (CLI exit code 3).
class GuardExceeded : public std::runtime_error {
   public:
    GuardExceeded(const std::string &what, long long limit) : std::runtime_error(what), limit_(limit) {
    }
    long long limit() const {
        return limit_;
    }

   private:
    long long limit_;
};

}  // namespace eaqmds

#endif  // EAQMDS_ERRORS_H
