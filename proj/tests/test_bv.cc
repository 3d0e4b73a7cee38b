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

#include "doctest.h"
#include "ttm/bv.h"
#include "ttm/rng.h"

using namespace ttm;

namespace {

constexpr Rail P = Rail::PLUS;
constexpr Rail M = Rail::MINUS;

// The classical route: f(0) and f(e_i) for each unit vector, n + 1 queries.
BitVec classical_secret(const CascadeCircuit &c, size_t *queries) {
    size_t n = c.size();
    bool base = evaluate_cascade(c, BitVec(n));
    BitVec s(n);
    for (size_t i = 0; i < n; i++) {
        s.set(i, evaluate_cascade(c, BitVec::unit(i, n)) != base);
    }
    *queries = n + 1;
    return s;
}

}  // namespace

TEST_CASE("synthesize_cascade cell kinds") {
    CascadeCircuit c = synthesize_cascade(BitVec::from_string("110"));
    REQUIRE(c.size() == 3);
    // Balanced cells have transistors on y-o_bar; the constant-0 cell only
    // on y-o and o_bar-y_bar.
    const Cascade &k = c.cascade();
    for (size_t i = 0; i < 3; i++) {
        const Corners &cr = k.cells[i].corners;
        int top = 0;
        for (size_t s : k.cells[i].switches) {
            const Switch &w = k.net.switches()[s];
            if ((w.a == cr.y && w.b == cr.o_bar) || (w.a == cr.o_bar && w.b == cr.y)) {
                top++;
            }
        }
        CHECK((top > 0) == (i < 2));
    }
    CHECK(evaluate_cascade(c, BitVec::from_string("101")));
}

TEST_CASE("evaluate_cascade examples") {
    CHECK(!evaluate_cascade(synthesize_cascade(BitVec::from_string("110")), BitVec::from_string("000")));
    CHECK(!evaluate_cascade(synthesize_cascade(BitVec::from_string("110")), BitVec::from_string("111")));
    CHECK(!evaluate_cascade(synthesize_cascade(BitVec::from_string("101")), BitVec::from_string("101")));
    CascadeCircuit zero = synthesize_cascade(BitVec(5));
    for (uint64_t x = 0; x < 32; x++) {
        CHECK(!evaluate_cascade(zero, BitVec::from_index(x, 5)));
    }
}

TEST_CASE("evaluate_cascade matches xor arithmetic, n <= 4") {
    for (size_t n = 1; n <= 4; n++) {
        for (uint64_t s = 0; s < (1u << n); s++) {
            BitVec sv = BitVec::from_index(s, n);
            CascadeCircuit c = synthesize_cascade(sv);
            for (uint64_t x = 0; x < (1u << n); x++) {
                BitVec xv = BitVec::from_index(x, n);
                bool want = false;
                for (size_t i = 0; i < n; i++) {
                    want ^= sv.get(i) && xv.get(i);
                }
                CHECK(evaluate_cascade(c, xv) == want);
            }
        }
    }
}

TEST_CASE("output swap follows the parity of balanced cells") {
    for (size_t n = 1; n <= 6; n++) {
        for (uint64_t s = 0; s < (1u << n); s++) {
            BitVec sv = BitVec::from_index(s, n);
            CascadeCircuit c = synthesize_cascade(sv);
            CHECK(c.outputs_swapped() == (sv.popcount() % 2 == 0));
            CHECK(c.f_node() != c.f_bar_node());
        }
    }
}

TEST_CASE("bv_recover on the worked example") {
    BvResult r = bv_recover(synthesize_cascade(BitVec::from_string("110")));
    CHECK(r.secret == BitVec::from_string("110"));
    CHECK(r.queries == 1);
    CHECK(r.readouts[0] == QuadVector{M, M, P, M});
    CHECK(r.readouts[2] == QuadVector{P, M, P, M});
    CHECK(classify_quad(r.readouts[0]) == QuadMode::DIFFERENTIAL_PAIRS);
    CHECK(classify_quad(r.readouts[2]) == QuadMode::COMMON_PAIRS);

    BvResult one = bv_recover(synthesize_cascade(BitVec::from_string("1")));
    CHECK(one.secret == BitVec::from_string("1"));
    CHECK(classify_quad(one.readouts[0]) == QuadMode::DIFFERENTIAL_PAIRS);
}

TEST_CASE("bv_recover round trip, exhaustive n <= 8") {
    for (size_t n = 1; n <= 8; n++) {
        for (uint64_t s = 0; s < (1u << n); s++) {
            BitVec sv = BitVec::from_index(s, n);
            BvResult r = bv_recover(synthesize_cascade(sv));
            CHECK(r.secret == sv);
            CHECK(r.queries == 1);
        }
    }
}

TEST_CASE("bv_recover round trip, random up to n = 64") {
    Rng rng(2024);
    for (int t = 0; t < 1000; t++) {
        size_t n = 1 + (size_t)rng.below(64);
        BitVec s(n);
        for (size_t i = 0; i < n; i++) {
            s.set(i, rng.below(2) == 1);
        }
        CascadeCircuit c = synthesize_cascade(s);
        CHECK(bv_recover(c).secret == s);
        if (t % 50 == 0) {
            size_t q = 0;
            CHECK(classical_secret(c, &q) == s);
            CHECK(q == n + 1);
        }
    }
    BitVec ones = BitVec::from_string("11111111");
    size_t q = 0;
    CHECK(bv_recover(synthesize_cascade(ones)).secret == classical_secret(synthesize_cascade(ones), &q));
}

TEST_CASE("hardware grows linearly") {
    for (size_t n : {1, 2, 5, 17, 40}) {
        BitVec s(n);
        for (size_t i = 0; i < n; i += 2) {
            s.set(i, true);
        }
        CascadeCircuit c = synthesize_cascade(s);
        CHECK(c.size() == n);
        CHECK(c.cascade().net.switches().size() == 4 * n);
        CHECK(c.cascade().net.num_nodes() == 2 + 6 * n);
    }
}
