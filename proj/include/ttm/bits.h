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

#ifndef TTM_BITS_H
#define TTM_BITS_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ttm {

/// A fixed-width vector of bits indexed 0..n-1, where index 0 is x_1.
///
/// Strings print x_1 first. When a vector is packed into an integer index
/// (truth tables, instance tables), x_1 is the most significant bit.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n) : bits_(n, 0) {
    }

    static BitVec from_string(std::string_view text);
    static BitVec from_index(uint64_t index, size_t n);
    static BitVec unit(size_t i, size_t n);

    size_t size() const {
        return bits_.size();
    }
    bool get(size_t i) const {
        return bits_[i] != 0;
    }
    void set(size_t i, bool v) {
        bits_[i] = v ? 1 : 0;
    }
    void flip(size_t i) {
        bits_[i] ^= 1;
    }

    uint64_t to_index() const;
    std::string str() const;
    bool any() const;
    size_t popcount() const;
    /// Inner product over GF(2).
    bool dot(const BitVec &other) const;

    BitVec &operator^=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVec &other) const = default;
    bool operator<(const BitVec &other) const {
        return bits_ < other.bits_;
    }

   private:
    std::vector<uint8_t> bits_;
};

}  // namespace ttm

#endif
