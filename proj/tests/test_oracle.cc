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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "ttm/oracle.h"

using namespace ttm;

namespace {

BitVec B(const char *s) {
    return BitVec::from_string(s);
}

std::set<std::string> as_set(const std::vector<BitVec> &v) {
    std::set<std::string> out;
    for (const BitVec &b : v) {
        out.insert(b.str());
    }
    return out;
}

// Rank by counting distinct members of the row span.
size_t rank_by_span(const std::vector<BitVec> &rows, size_t n) {
    std::set<std::string> span{BitVec(n).str()};
    for (const BitVec &r : rows) {
        std::set<std::string> next = span;
        for (const std::string &s : span) {
            next.insert((BitVec::from_string(s) ^ r).str());
        }
        span = next;
    }
    size_t k = 0;
    while (((size_t)1 << k) < span.size()) {
        k++;
    }
    return k;
}

}  // namespace

TEST_CASE("gf2_solve examples") {
    Gf2Solution p = gf2_solve({{B("0110"), B("1111"), B("0010"), B("1011")}, B("0000")});
    CHECK(p.rank == 3);
    CHECK(p.consistent);
    CHECK(as_set(span_of(p.nullspace, 4)) == std::set<std::string>{"0000", "1001"});

    std::vector<BitVec> id;
    for (size_t i = 0; i < 5; i++) {
        id.push_back(BitVec::unit(i, 5));
    }
    Gf2Solution q = gf2_solve({id, BitVec(5)});
    CHECK(q.rank == 5);
    CHECK(q.nullspace.empty());
    CHECK(*q.particular == BitVec(5));

    Gf2Solution bad = gf2_solve({{B("11"), B("11")}, B("01")});
    CHECK(!bad.consistent);
    CHECK(!bad.particular.has_value());
}

TEST_CASE("gf2_solve against brute force") {
    Rng rng(21);
    for (int t = 0; t < 300; t++) {
        size_t n = 1 + rng.below(7);
        size_t m = 1 + rng.below(8);
        std::vector<BitVec> rows;
        BitVec rhs(m);
        for (size_t i = 0; i < m; i++) {
            rows.push_back(BitVec::from_index(rng.below((uint64_t)1 << n), n));
            rhs.set(i, rng.below(2));
        }
        Gf2Solution s = gf2_solve({rows, rhs});
        std::set<std::string> sols;
        std::set<std::string> homog;
        for (uint64_t x = 0; x < ((uint64_t)1 << n); x++) {
            BitVec v = BitVec::from_index(x, n);
            bool all = true;
            bool zero = true;
            for (size_t i = 0; i < m; i++) {
                all = all && rows[i].dot(v) == rhs.get(i);
                zero = zero && !rows[i].dot(v);
            }
            if (all) {
                sols.insert(v.str());
            }
            if (zero) {
                homog.insert(v.str());
            }
        }
        CHECK(s.consistent == !sols.empty());
        CHECK(s.rank == rank_by_span(rows, n));
        CHECK(as_set(span_of(s.nullspace, n)) == homog);
        if (s.consistent) {
            CHECK(sols.count(s.particular->str()) == 1);
        }
        // Row order does not matter.
        std::vector<size_t> perm(m);
        for (size_t i = 0; i < m; i++) {
            perm[i] = i;
        }
        rng.shuffle(perm);
        Gf2System shuffled{{}, BitVec(m)};
        for (size_t i = 0; i < m; i++) {
            shuffled.rows.push_back(rows[perm[i]]);
            shuffled.rhs.set(i, rhs.get(perm[i]));
        }
        Gf2Solution s2 = gf2_solve(shuffled);
        CHECK(s2.rank == s.rank);
        CHECK(s2.consistent == s.consistent);
        CHECK(as_set(span_of(s2.nullspace, n)) == as_set(span_of(s.nullspace, n)));
    }
}

TEST_CASE("gf2_solve wide rows") {
    // Width past one word.
    size_t n = 130;
    std::vector<BitVec> rows;
    for (size_t i = 0; i + 1 < n; i++) {
        BitVec r(n);
        r.set(i, true);
        r.set(n - 1, true);
        rows.push_back(r);
    }
    Gf2Solution s = gf2_solve({rows, BitVec(rows.size())});
    CHECK(s.rank == n - 1);
    REQUIRE(s.nullspace.size() == 1);
    CHECK(s.nullspace[0].popcount() == n);
}

TEST_CASE("brute_force_simon") {
    SimonInstance p = paper_instance();
    BruteForceSimon r = brute_force_simon(p);
    CHECK(r.secret == B("1001"));
    CHECK(p.query_count() == 0);

    BruteForceSimon one = brute_force_simon(make_instance(1, B("1"), 3));
    CHECK(one.secret == B("1"));
    CHECK(one.queries <= 2);

    Rng rng(6);
    for (size_t n = 2; n <= 12; n++) {
        for (int t = 0; t < 5; t++) {
            BitVec s = BitVec::from_index(1 + rng.below(((uint64_t)1 << n) - 1), n);
            BruteForceSimon b = brute_force_simon(make_instance(n, s, rng.next()));
            CHECK(b.secret == s);
            CHECK(b.queries <= ((size_t)1 << (n - 1)) + 1);
        }
    }
}

TEST_CASE("enumerate_separable") {
    CHECK(as_set(enumerate_separable(B("1001"))) ==
          std::set<std::string>{"0100", "0010", "0110", "1001", "1101", "1011", "1111"});
    CHECK(enumerate_separable(B("1")).empty());
    CHECK(as_set(enumerate_separable(B("11"))) == std::set<std::string>{"11"});
    CHECK_THROWS_AS(enumerate_separable(B("000")), Error);
    for (size_t n = 1; n <= 12; n++) {
        BitVec s = BitVec::from_index(((uint64_t)1 << n) - 1, n);
        auto v = enumerate_separable(s);
        CHECK(v.size() == ((size_t)1 << (n - 1)) - 1);
        CHECK(as_set(v).size() == v.size());
        for (const BitVec &y : v) {
            CHECK(!y.dot(s));
        }
    }
}

TEST_CASE("exhaustive_verify") {
    SimonInstance p = paper_instance();
    std::vector<BitVec> rows{B("0110"), B("1111"), B("0010"), B("1011")};
    CHECK(exhaustive_verify(rows, B("1001"), p));
    rows[2] = B("1000");
    CHECK(!exhaustive_verify(rows, B("1001"), p));
}

TEST_CASE("rank samplers") {
    // n = 2, secret 11: draws are 00 or 11, rank 1 unless both are 00.
    CHECK(sample_orthogonal_rank_fraction(B("11"), 20000, 1) == doctest::Approx(0.75).epsilon(0.03));
    CHECK(sample_full_rank_fraction(2, 20000, 1) == doctest::Approx(0.375).epsilon(0.05));
    CHECK(sample_full_rank_fraction(8, 20000, 2) ==
          doctest::Approx(convergence_probability_bound(8)).epsilon(0.05));
}
