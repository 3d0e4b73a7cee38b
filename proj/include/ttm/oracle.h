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

#ifndef TTM_ORACLE_H
#define TTM_ORACLE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ttm/bits.h"
#include "ttm/rng.h"
#include "ttm/simon.h"

namespace ttm {

struct Gf2System {
    std::vector<BitVec> rows;
    BitVec rhs;
};

struct Gf2Solution {
    size_t rank = 0;
    bool consistent = false;
    /// One solution when consistent, free variables at 0.
    std::optional<BitVec> particular;
    /// Basis of the homogeneous solutions, one vector per free column in
    /// increasing column order.
    std::vector<BitVec> nullspace;
};

/// Gaussian elimination over GF(2) with rows packed into 64-bit words.
/// Pivots are taken lowest column first, lowest row first.
Gf2Solution gf2_solve(const Gf2System &sys);

/// All 2^k members of the span of `basis`, in Gray-code order from 0.
std::vector<BitVec> span_of(const std::vector<BitVec> &basis, size_t n);

/// What settle_mesh should return: the nullspace generator when the system
/// is consistent and the homogeneous rank is n - 1, nothing otherwise.
std::optional<BitVec> nullspace_candidate(const Gf2System &sys);

struct BruteForceSimon {
    BitVec secret;
    size_t queries;
};

/// Scans x = 0, 1, 2, ... until two inputs share a value.
BruteForceSimon brute_force_simon(const SimonInstance &inst);

/// Every nonzero y with y . secret = 0, ascending by packed index.
std::vector<BitVec> enumerate_separable(const BitVec &secret);

/// For each row r_i: r_i . s_hat = 0, and r_i . x or its complement matches
/// bit i of the instance on at least half of all inputs. n <= 12.
bool exhaustive_verify(const std::vector<BitVec> &rows, const BitVec &s_hat, const SimonInstance &inst);

/// Fraction of trials in which n uniform draws from {y : y . secret = 0}
/// have rank n - 1.
double sample_orthogonal_rank_fraction(const BitVec &secret, size_t trials, uint64_t seed);

/// Fraction of trials in which n uniform n-bit vectors have rank n.
double sample_full_rank_fraction(size_t n, size_t trials, uint64_t seed);

}  // namespace ttm

#endif
