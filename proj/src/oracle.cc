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

#include "ttm/oracle.h"

#include <unordered_map>

#include "ttm/error.h"

namespace ttm {

namespace {

using Words = std::vector<uint64_t>;

Words pack(const BitVec &v, size_t words) {
    Words w(words, 0);
    for (size_t i = 0; i < v.size(); i++) {
        if (v.get(i)) {
            w[i / 64] |= uint64_t{1} << (i % 64);
        }
    }
    return w;
}

bool bit(const Words &w, size_t i) {
    return (w[i / 64] >> (i % 64)) & 1;
}

void xor_into(Words &a, const Words &b) {
    for (size_t k = 0; k < a.size(); k++) {
        a[k] ^= b[k];
    }
}

// Rank of packed rows over their first n columns.
size_t packed_rank(std::vector<Words> rows, size_t n) {
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); col++) {
        size_t pr = rank;
        while (pr < rows.size() && !bit(rows[pr], col)) {
            pr++;
        }
        if (pr == rows.size()) {
            continue;
        }
        std::swap(rows[pr], rows[rank]);
        for (size_t r = rank + 1; r < rows.size(); r++) {
            if (bit(rows[r], col)) {
                xor_into(rows[r], rows[rank]);
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

Gf2Solution gf2_solve(const Gf2System &sys) {
    size_t n = sys.rows.empty() ? sys.rhs.size() : sys.rows[0].size();
    if (sys.rhs.size() != sys.rows.size()) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "rhs length does not match row count");
    }
    // Column n holds the right-hand side.
    size_t words = (n + 1 + 63) / 64;
    std::vector<Words> rows;
    for (size_t r = 0; r < sys.rows.size(); r++) {
        if (sys.rows[r].size() != n) {
            throw Error(ErrorCode::INVALID_ARGUMENT, "rows differ in width");
        }
        Words w = pack(sys.rows[r], words);
        if (sys.rhs.get(r)) {
            w[n / 64] |= uint64_t{1} << (n % 64);
        }
        rows.push_back(std::move(w));
    }

    Gf2Solution sol;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < n && sol.rank < rows.size(); col++) {
        size_t pr = sol.rank;
        while (pr < rows.size() && !bit(rows[pr], col)) {
            pr++;
        }
        if (pr == rows.size()) {
            continue;
        }
        std::swap(rows[pr], rows[sol.rank]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != sol.rank && bit(rows[r], col)) {
                xor_into(rows[r], rows[sol.rank]);
            }
        }
        pivot_col.push_back(col);
        sol.rank++;
    }

    sol.consistent = true;
    for (size_t r = sol.rank; r < rows.size(); r++) {
        if (bit(rows[r], n)) {
            sol.consistent = false;
        }
    }
    if (sol.consistent) {
        BitVec x(n);
        for (size_t r = 0; r < sol.rank; r++) {
            x.set(pivot_col[r], bit(rows[r], n));
        }
        sol.particular = x;
    }

    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) {
        is_pivot[c] = true;
    }
    for (size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVec v(n);
        v.set(free, true);
        for (size_t r = 0; r < sol.rank; r++) {
            if (bit(rows[r], free)) {
                v.set(pivot_col[r], true);
            }
        }
        sol.nullspace.push_back(v);
    }
    return sol;
}

std::vector<BitVec> span_of(const std::vector<BitVec> &basis, size_t n) {
    std::vector<BitVec> out{BitVec(n)};
    if (basis.size() > 20) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "span too large to list");
    }
    BitVec cur(n);
    for (uint64_t i = 1; i < (uint64_t{1} << basis.size()); i++) {
        cur ^= basis[(size_t)__builtin_ctzll(i)];
        out.push_back(cur);
    }
    return out;
}

std::optional<BitVec> nullspace_candidate(const Gf2System &sys) {
    Gf2Solution sol = gf2_solve(sys);
    if (!sol.consistent || sol.nullspace.size() != 1) {
        return std::nullopt;
    }
    return sol.nullspace[0];
}

BruteForceSimon brute_force_simon(const SimonInstance &inst) {
    size_t n = inst.n();
    std::unordered_map<uint64_t, uint64_t> seen;
    size_t queries = 0;
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        uint64_t v = inst.value(BitVec::from_index(x, n)).to_index();
        queries++;
        auto [it, fresh] = seen.emplace(v, x);
        if (!fresh) {
            return {BitVec::from_index(it->second ^ x, n), queries};
        }
    }
    throw Error(ErrorCode::INVALID_ARGUMENT, "instance has no collision");
}

std::vector<BitVec> enumerate_separable(const BitVec &secret) {
    if (!secret.any()) {
        throw Error(ErrorCode::SECRET_ZERO, "the all-zero secret is not allowed");
    }
    size_t n = secret.size();
    if (n > 20) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "enumeration stops at n = 20");
    }
    std::vector<BitVec> out;
    for (uint64_t y = 1; y < (uint64_t{1} << n); y++) {
        BitVec v = BitVec::from_index(y, n);
        if (!v.dot(secret)) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

bool exhaustive_verify(const std::vector<BitVec> &rows, const BitVec &s_hat, const SimonInstance &inst) {
    size_t n = inst.n();
    if (n > 12) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "exhaustive check stops at n = 12");
    }
    if (rows.size() != n || s_hat.size() != n) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "rows or candidate width does not match the instance");
    }
    uint64_t size = uint64_t{1} << n;
    for (size_t i = 0; i < n; i++) {
        if (rows[i].dot(s_hat)) {
            return false;
        }
        uint64_t agree = 0;
        for (uint64_t x = 0; x < size; x++) {
            bool fi = (inst.table()[x] >> (n - 1 - i)) & 1;
            if (rows[i].dot(BitVec::from_index(x, n)) == fi) {
                agree++;
            }
        }
        if (2 * agree < size && 2 * (size - agree) < size) {
            return false;
        }
    }
    return true;
}

double sample_orthogonal_rank_fraction(const BitVec &secret, size_t trials, uint64_t seed) {
    if (!secret.any()) {
        throw Error(ErrorCode::SECRET_ZERO, "the all-zero secret is not allowed");
    }
    if (trials == 0) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "trials must be at least 1");
    }
    size_t n = secret.size();
    size_t words = (n + 63) / 64;
    // Draws come from the full space by rejection, so the sampler does not
    // lean on any basis of the orthogonal space.
    Rng rng(seed);
    size_t hits = 0;
    for (size_t t = 0; t < trials; t++) {
        std::vector<Words> rows;
        while (rows.size() < n) {
            BitVec v(n);
            for (size_t j = 0; j < n; j++) {
                v.set(j, rng.below(2) == 1);
            }
            if (!v.dot(secret)) {
                rows.push_back(pack(v, words));
            }
        }
        if (packed_rank(rows, n) + 1 == n) {
            hits++;
        }
    }
    return (double)hits / (double)trials;
}

double sample_full_rank_fraction(size_t n, size_t trials, uint64_t seed) {
    if (n == 0 || trials == 0) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "n and trials must be at least 1");
    }
    size_t words = (n + 63) / 64;
    Rng rng(seed);
    size_t hits = 0;
    for (size_t t = 0; t < trials; t++) {
        std::vector<Words> rows;
        for (size_t r = 0; r < n; r++) {
            BitVec v(n);
            for (size_t j = 0; j < n; j++) {
                v.set(j, rng.below(2) == 1);
            }
            rows.push_back(pack(v, words));
        }
        if (packed_rank(rows, n) == n) {
            hits++;
        }
    }
    return (double)hits / (double)trials;
}

}  // namespace ttm
