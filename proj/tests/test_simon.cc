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

#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ttm/oracle.h"
#include "ttm/simon.h"

using namespace ttm;

namespace {

BitVec B(const char *s) {
    return BitVec::from_string(s);
}

std::vector<DataElement> paper_trace() {
    return load_trace(std::string(TTM_DATA_DIR) + "/paper_example.trace");
}

// (circuit, bit) toggles, one-based.
std::set<std::pair<size_t, size_t>> toggles(const StepRecord &s) {
    std::set<std::pair<size_t, size_t>> out;
    for (auto [i, j] : s.s_toggles) {
        out.insert({i + 1, j + 1});
    }
    return out;
}

}  // namespace

TEST_CASE("make_instance pairing and values") {
    SimonInstance inst = make_instance(4, B("1001"), 11);
    std::map<uint32_t, int> hist;
    for (uint64_t x = 0; x < 16; x++) {
        hist[inst.table()[x]]++;
        CHECK(inst.table()[x] == inst.table()[x ^ 9]);
    }
    CHECK(hist.size() == 8);
    for (auto [v, count] : hist) {
        CHECK(count == 2);
    }
    CHECK_THROWS_AS(make_instance(4, B("0000"), 1), Error);
    try {
        make_instance(3, B("000"), 1);
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::SECRET_ZERO);
    }
    // Bad tables are refused.
    std::vector<uint32_t> t(inst.table());
    t[0] ^= 1;
    CHECK_THROWS_AS(SimonInstance(4, B("1001"), t), Error);
}

TEST_CASE("worked-example instance") {
    SimonInstance p = paper_instance();
    CHECK(p.value(B("0000")) == B("1101"));
    CHECK(p.value(B("1001")) == B("1101"));
    CHECK(p.value(B("1010")) == B("0111"));
    CHECK(p.query_count() == 0);
    CHECK(verify_candidate(p, B("1001")));
    CHECK(!verify_candidate(p, B("0001")));
    CHECK(p.query_count() == 2);
}

TEST_CASE("trace parsing") {
    auto t = paper_trace();
    REQUIRE(t.size() == 7);
    CHECK(t[3].x == B("1110"));
    CHECK(t[3].f == B("0110"));
    std::istringstream bad1("0001 1101\n");
    CHECK_THROWS_AS(parse_trace(bad1), Error);
    std::istringstream bad2("0000 110\n");
    CHECK_THROWS_AS(parse_trace(bad2), Error);
    std::istringstream ok("# comment\n\n00 01\n10 11\n");
    CHECK(parse_trace(ok).size() == 2);
}

TEST_CASE("ripple_y") {
    CHECK(!ripple_y(B("0000"), B("1000"), false));
    CHECK(ripple_y(B("1000"), B("1100"), false));
    for (uint64_t s = 0; s < 16; s++) {
        CHECK(ripple_y(BitVec::from_index(s, 4), B("0000"), true));
        CHECK(!ripple_y(BitVec::from_index(s, 4), B("0000"), false));
    }
    // Switch level agrees on a sample; the full sweep is an acceptance item.
    CHECK(ripple_y_switch(B("1011"), B("1110"), true) == ripple_y(B("1011"), B("1110"), true));
    CHECK(ripple_y_switch(B("0000"), B("1111"), false) == false);
}

TEST_CASE("FunctionBank init and pulses") {
    FunctionBank b = FunctionBank::init(4, B("1101"));
    CHECK(b.y() == B("1101"));
    for (size_t i = 0; i < 4; i++) {
        CHECK(b.output(i, B("0000")) == B("1101").get(i));
    }
    CHECK(FunctionBank::init(4, B("0000")).y() == B("0000"));

    PulseReport r = b.h_pulse(B("1000"), B("1000"));
    CHECK(r.toggled_circuits == std::vector<size_t>{1, 3});
    CHECK(b.rows()[1] == B("1000"));
    CHECK(b.rows()[3] == B("1000"));
    CHECK(b.y() == B("1101"));

    FunctionBank before = b;
    PulseReport same = b.h_pulse(B("1000"), B("0000"));
    CHECK(same.no_change);
    CHECK(b.rows() == before.rows());
    CHECK(b.y() == before.y());

    // After each pulse the fitted outputs match the data just imposed.
    b.h_pulse(B("1100"), B("1001"));
    for (size_t i = 0; i < 4; i++) {
        CHECK(b.output(i, B("1100")) == B("1001").get(i));
    }
}

TEST_CASE("h_pulse switch level matches") {
    auto t = paper_trace();
    FunctionBank a = FunctionBank::init(4, t[0].f);
    FunctionBank b = FunctionBank::init(4, t[0].f);
    for (size_t k = 1; k < t.size(); k++) {
        a.h_pulse(t[k].x, t[k].f);
        b.h_pulse(t[k].x, t[k].f, nullptr, true);
        CHECK(a.rows() == b.rows());
        CHECK(a.y() == b.y());
    }
}

TEST_CASE("worked-example replay toggles") {
    SimonConfig cfg;
    cfg.record_trace = true;
    RunReport r = replay_trace(paper_trace(), nullptr, cfg);
    REQUIRE(r.trace.size() == 7);
    using T = std::set<std::pair<size_t, size_t>>;
    CHECK(toggles(r.trace[1]) == T{{2, 1}, {4, 1}});
    CHECK(toggles(r.trace[2]) == T{{4, 2}});
    CHECK(toggles(r.trace[3]) == T{{1, 3}, {2, 3}, {3, 3}, {4, 3}});
    CHECK(toggles(r.trace[4]) == T{{1, 4}});
    CHECK(toggles(r.trace[5]) == T{{1, 2}, {2, 2}, {4, 2}});
    CHECK(toggles(r.trace[6]) == T{{1, 4}, {2, 4}, {4, 4}});
    CHECK(r.final_rows == std::vector<BitVec>{B("0110"), B("1111"), B("0010"), B("1011")});
    CHECK(r.final_rhs == B("0000"));
    REQUIRE(r.secret.has_value());
    CHECK(*r.secret == B("1001"));
    CHECK(r.data_elements == 7);
    // The trace never visits 1001, so nothing can be confirmed from it.
    CHECK(!r.verified);
    CHECK(r.trace[3].candidate == B("0001"));
    CHECK(r.trace[3].verification == "pending");

    SimonInstance p = paper_instance();
    RunReport checked = replay_trace(paper_trace(), &p, cfg);
    CHECK(checked.verified);
    CHECK(checked.trace[3].verification == "rejected");
}

TEST_CASE("rhs tracks y toggles") {
    auto t = paper_trace();
    FunctionBank b = FunctionBank::init(4, t[0].f);
    for (size_t k = 1; k < t.size(); k++) {
        b.h_pulse(t[k].x, t[k].f);
        EliminationSystem sys = build_elimination(b);
        // Recompute: y_i = f_i xor r_i . x, compared with the starting y.
        for (size_t i = 0; i < 4; i++) {
            bool y = t[k].f.get(i) ^ b.rows()[i].dot(t[k].x);
            CHECK(sys.rhs.get(i) == (y != t[0].f.get(i)));
        }
    }
    CHECK(build_elimination(FunctionBank::init(3, B("101"))).rows == std::vector<BitVec>(3, BitVec(3)));
}

TEST_CASE("settle_mesh") {
    EliminationSystem paper{{B("0110"), B("1111"), B("0010"), B("1011")}, B("0000")};
    MeshResult m = settle_mesh(paper);
    REQUIRE(m.candidate.has_value());
    CHECK(*m.candidate == B("1001"));
    CHECK(m.consistent);

    EliminationSystem zero{std::vector<BitVec>(4, BitVec(4)), BitVec(4)};
    CHECK(!settle_mesh(zero).candidate.has_value());

    EliminationSystem low{{B("1100"), B("1100"), B("0000"), B("0000")}, BitVec(4)};
    CHECK(!settle_mesh(low).candidate.has_value());

    EliminationSystem bad{{B("10"), B("10")}, B("01")};
    CHECK(!settle_mesh(bad).consistent);

    Rng rng(5);
    for (int t = 0; t < 300; t++) {
        size_t n = 2 + rng.below(5);
        EliminationSystem sys;
        sys.rhs = BitVec(n);
        for (size_t i = 0; i < n; i++) {
            sys.rows.push_back(BitVec::from_index(rng.below((uint64_t)1 << n), n));
            sys.rhs.set(i, rng.below(4) == 0);
        }
        CHECK(settle_mesh(sys).candidate == nullspace_candidate({sys.rows, sys.rhs}));
    }
}

TEST_CASE("feedback cells and relaxation") {
    Rail P = Rail::PLUS;
    Rail M = Rail::MINUS;
    CHECK(FeedbackCell::stable(true, true, P, M, M, P));
    CHECK(!FeedbackCell::stable(true, true, P, M, P, M));
    CHECK(FeedbackCell::stable(true, false, P, M, P, M));
    CHECK(FeedbackCell::stable(false, true, M, P, M, P));
    CHECK(!FeedbackCell::stable(false, true, M, P, P, M));

    EliminationSystem paper{{B("0110"), B("1111"), B("0010"), B("1011")}, B("0000")};
    CHECK(mesh_stable(paper, B("1001")));
    CHECK(mesh_stable(paper, B("0000")));
    CHECK(!mesh_stable(paper, B("0001")));
    Rng rng(3);
    MeshResult m = relax_mesh(paper, rng);
    REQUIRE(m.candidate.has_value());
    CHECK(*m.candidate == B("1001"));
    CHECK(mesh_stable(paper, *m.candidate));
}

TEST_CASE("walk") {
    SimonInstance inst = make_instance(5, B("10110"), 2);
    Rng rng(9);
    WalkState w = start_walk(5, WalkMode::SINGLE_BIT);
    BitVec prev = w.x;
    std::vector<int> flips(5, 0);
    for (int k = 0; k < 1000; k++) {
        DataElement d = next_data(inst, w, rng);
        BitVec diff = d.x ^ prev;
        REQUIRE(diff.popcount() == 1);
        for (size_t j = 0; j < 5; j++) {
            flips[j] += diff.get(j);
        }
        CHECK(d.f == inst.value(d.x));
        prev = d.x;
    }
    // Each block of five steps flips every index once.
    for (int f : flips) {
        CHECK(f == 200);
    }
    WalkState g = start_walk(5, WalkMode::GENERAL);
    prev = g.x;
    for (int k = 0; k < 100; k++) {
        DataElement d = next_data(inst, g, rng);
        CHECK(d.x != prev);
        prev = d.x;
    }
}

TEST_CASE("solve_simon") {
    SimonInstance one = make_instance(1, B("1"), 4);
    RunReport r1 = solve_simon(one, {});
    CHECK(*r1.secret == B("1"));
    CHECK(r1.eliminations == 1);

    for (uint64_t seed = 1; seed <= 20; seed++) {
        Rng pick(seed);
        BitVec s = BitVec::from_index(1 + pick.below(15), 4);
        SimonInstance inst = make_instance(4, s, seed);
        SimonConfig cfg;
        cfg.seed = seed;
        RunReport r = solve_simon(inst, cfg);
        CHECK(r.verified);
        CHECK(*r.secret == brute_force_simon(inst).secret);
        CHECK(exhaustive_verify(r.final_rows, *r.secret, inst));
        CHECK(r.queries == inst.query_count());
    }

    SimonInstance hard = make_instance(6, B("100001"), 3);
    SimonConfig tight;
    tight.max_data = 3;
    CHECK_THROWS_AS(solve_simon(hard, tight), BudgetExceeded);
    try {
        solve_simon(hard, tight);
    } catch (const BudgetExceeded &e) {
        CHECK(e.code() == ErrorCode::BUDGET_EXCEEDED);
        CHECK(e.report().data_elements == 3);
    }
}

TEST_CASE("solve_simon variants") {
    SimonInstance inst = make_instance(5, B("01101"), 8);
    for (auto walk : {WalkMode::SINGLE_BIT, WalkMode::GENERAL}) {
        for (auto mesh : {MeshMode::ELIMINATION, MeshMode::RELAXATION}) {
            SimonConfig cfg;
            cfg.walk = walk;
            cfg.mesh = mesh;
            cfg.cadence = 2;
            cfg.seed = 77;
            RunReport r = solve_simon(inst, cfg);
            CHECK(*r.secret == B("01101"));
            CHECK(r.eliminations == r.h_pulses / 2);
        }
    }
    SimonConfig a;
    a.seed = 4;
    SimonConfig b = a;
    b.switch_level = true;
    RunReport ra = solve_simon(inst, a);
    RunReport rb = solve_simon(inst, b);
    CHECK(ra.final_rows == rb.final_rows);
    CHECK(ra.data_elements == rb.data_elements);
}

TEST_CASE("convergence bound and monte carlo") {
    CHECK(convergence_probability_bound(1) == doctest::Approx(0.5));
    CHECK(convergence_probability_bound(2) == doctest::Approx(0.375));
    CHECK(convergence_probability_limit() == doctest::Approx(0.28879).epsilon(1e-5));
    MonteCarloReport one = monte_carlo(3, 1, 5);
    CHECK(one.data_used.size() == 1);
    MonteCarloReport m = monte_carlo(4, 50, 12);
    CHECK(m.success_rate == 1.0);
    MonteCarloReport again = monte_carlo(4, 50, 12);
    CHECK(again.data_used == m.data_used);
}

TEST_CASE("delay estimate") {
    DelayEstimate d = estimate_ripple_delay(1000, 10e9, 1, 3000);
    CHECK(d.per_ripple == doctest::Approx(1e-7));
    CHECK(d.total == doctest::Approx(3e-4));
    CHECK(estimate_ripple_delay(1, 2e9, 1, 1).per_ripple == doctest::Approx(0.5e-9));
    CHECK_THROWS_AS(estimate_ripple_delay(0, 1, 1, 1), Error);
}
