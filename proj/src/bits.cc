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

#include "ttm/bits.h"

#include "ttm/error.h"

namespace ttm {

BitVec BitVec::from_string(std::string_view text) {
    BitVec v(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::PARSE, "bit string contains '" + std::string(1, c) + "'");
        }
        v.bits_[i] = c == '1';
    }
    return v;
}

BitVec BitVec::from_index(uint64_t index, size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n; i++) {
        v.bits_[i] = (index >> (n - 1 - i)) & 1;
    }
    return v;
}

BitVec BitVec::unit(size_t i, size_t n) {
    BitVec v(n);
    v.bits_[i] = 1;
    return v;
}

uint64_t BitVec::to_index() const {
    if (bits_.size() > 64) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "bit vector wider than 64 has no integer index");
    }
    uint64_t r = 0;
    for (uint8_t b : bits_) {
        r = (r << 1) | b;
    }
    return r;
}

std::string BitVec::str() const {
    std::string s(bits_.size(), '0');
    for (size_t i = 0; i < bits_.size(); i++) {
        if (bits_[i]) {
            s[i] = '1';
        }
    }
    return s;
}

bool BitVec::any() const {
    for (uint8_t b : bits_) {
        if (b) {
            return true;
        }
    }
    return false;
}

size_t BitVec::popcount() const {
    size_t c = 0;
    for (uint8_t b : bits_) {
        c += b;
    }
    return c;
}

bool BitVec::dot(const BitVec &other) const {
    if (other.size() != size()) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "dot product of mismatched widths");
    }
    uint8_t acc = 0;
    for (size_t i = 0; i < bits_.size(); i++) {
        acc ^= bits_[i] & other.bits_[i];
    }
    return acc != 0;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.size() != size()) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "xor of mismatched widths");
    }
    for (size_t i = 0; i < bits_.size(); i++) {
        bits_[i] ^= other.bits_[i];
    }
    return *this;
}

}  // namespace ttm
