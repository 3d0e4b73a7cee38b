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

#ifndef TTM_BV_H
#define TTM_BV_H

#include <cstddef>
#include <vector>

#include "ttm/bits.h"
#include "ttm/railnet.h"

namespace ttm {

/// A chain of one-input cells computing the XOR of s_i x_i, with s hidden in
/// the arrangement of its transistors.
///
/// Only the x gate lines, source lines, y, y_bar and the two output
/// terminals are meant to be touched from outside.
class CascadeCircuit {
   public:
    size_t size() const {
        return cascade_.cells.size();
    }
    const Cascade &cascade() const {
        return cascade_;
    }
    /// The terminal at +V when every input is 1, the assignment an odd count
    /// of balanced cells would give f.
    NodeId odd_label() const {
        return odd_label_;
    }
    /// Whether f and f_bar trade places relative to odd_label(). This holds
    /// exactly when the count of balanced cells is even.
    bool outputs_swapped() const {
        return swapped_;
    }
    NodeId f_node() const;
    NodeId f_bar_node() const;

   private:
    friend CascadeCircuit synthesize_cascade(const BitVec &s);
    Cascade cascade_;
    NodeId odd_label_ = NO_NODE;
    bool swapped_ = false;
};

/// IDENTITY cells where s_i = 1, CONST0 cells where s_i = 0.
CascadeCircuit synthesize_cascade(const BitVec &s);

/// Resolves the switch network with y = +V and reads f.
bool evaluate_cascade(const CascadeCircuit &c, const BitVec &x);

struct BvResult {
    BitVec secret;
    size_t queries;
    std::vector<QuadVector> readouts;
};

/// One source-out of every cell at once from x = 0, y = +V.
BvResult bv_recover(const CascadeCircuit &c);

}  // namespace ttm

#endif
