// Copyright 2026 The Hyperstate Authors
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

#ifndef HYPERSTATE_ERRORS_H
#define HYPERSTATE_ERRORS_H

#include <stdexcept>
#include <string>

namespace hyperstate {

/// Base of every error raised by the library. `kind()` is a stable short tag
/// used in structured (JSON) error reports.
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string &what) : std::runtime_error(what), kind_(std::move(kind)) {
    }
    const std::string &kind() const noexcept {
        return kind_;
    }

   private:
    std::string kind_;
};

#define HYPERSTATE_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                         \
       public:                                                          \
        explicit Name(const std::string &what) : Error(#Name, what) {   \
        }                                                               \
    };

HYPERSTATE_DEFINE_ERROR(InvalidArgument)
HYPERSTATE_DEFINE_ERROR(ParseError)
HYPERSTATE_DEFINE_ERROR(NoPivot)
HYPERSTATE_DEFINE_ERROR(InvalidPivot)
HYPERSTATE_DEFINE_ERROR(ConditionViolated)
HYPERSTATE_DEFINE_ERROR(ForbiddenOutcome)
HYPERSTATE_DEFINE_ERROR(BoxConditionViolated)
HYPERSTATE_DEFINE_ERROR(ZeroProbabilityOutcome)
HYPERSTATE_DEFINE_ERROR(CapExceeded)
HYPERSTATE_DEFINE_ERROR(UncorrectedCZ)
HYPERSTATE_DEFINE_ERROR(PatternError)

#undef HYPERSTATE_DEFINE_ERROR

}  // namespace hyperstate

#endif
