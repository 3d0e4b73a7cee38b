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

#include "ttm/error.h"

namespace ttm {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::CONFLICT:
            return "CONFLICT";
        case ErrorCode::FLOATING:
            return "FLOATING";
        case ErrorCode::NO_FIXPOINT:
            return "NO_FIXPOINT";
        case ErrorCode::PROMISE_VIOLATION:
            return "PROMISE_VIOLATION";
        case ErrorCode::REDUNDANT_INPUT:
            return "REDUNDANT_INPUT";
        case ErrorCode::SECRET_ZERO:
            return "SECRET_ZERO";
        case ErrorCode::BUDGET_EXCEEDED:
            return "BUDGET_EXCEEDED";
        case ErrorCode::INVALID_ARGUMENT:
            return "INVALID_ARGUMENT";
        case ErrorCode::PARSE:
            return "PARSE";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace ttm
