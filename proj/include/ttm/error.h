// Copyright 2026 The TTM Authors
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

#ifndef TTM_ERROR_H
#define TTM_ERROR_H

#include <stdexcept>
#include <string>

namespace ttm {

enum class ErrorCode {
    CONFLICT,
    FLOATING,
    NO_FIXPOINT,
    PROMISE_VIOLATION,
    REDUNDANT_INPUT,
    SECRET_ZERO,
    BUDGET_EXCEEDED,
    INVALID_ARGUMENT,
    PARSE,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace ttm

#endif
