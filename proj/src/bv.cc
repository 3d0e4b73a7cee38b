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

#include "ttm/bv.h"

#include "ttm/error.h"

namespace ttm {

namespace {

Drives input_drives(const Cascade &c, const BitVec &x) {
    Drives d{{c.y, Rail::PLUS}, {c.y_bar, Rail::MINUS}};
    for (size_t i = 0; i < c.cells.size(); i++) {
        auto q = quad_drives(c.cells[i].gates, common_mode(x.get(i)));
        d.insert(d.end(), q.begin(), q.end());
    }
    return d;
}

}  // namespace

NodeId CascadeCircuit::f_node() const {
    NodeId other = odd_label_ == cascade_.out() ? cascade_.out_bar() : cascade_.out();
    return swapped_ ? other : odd_label_;
}

NodeId CascadeCircuit::f_bar_node() const {
    return f_node() == cascade_.out() ? cascade_.out_bar() : cascade_.out();
}

CascadeCircuit synthesize_cascade(const BitVec &s) {
    if (s.size() == 0) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "secret must have at least one bit");
    }
    std::vector<CellKind> kinds;
    for (size_t i = 0; i < s.size(); i++) {
        kinds.push_back(s.get(i) ? CellKind::IDENTITY : CellKind::CONST0);
    }
    CascadeCircuit c;
    c.cascade_ = build_cascade(kinds);
    const Cascade &k = c.cascade_;

    // Label the outputs by probing the finished circuit, not by reading s.
    BitVec ones(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        ones.set(i, true);
    }
    Potentials p = resolve(k.net, input_drives(k, ones), {k.out(), k.out_bar()});
    c.odd_label_ = *p[k.out_bar()] == Rail::PLUS ? k.out_bar() : k.out();
    // With y = +V, f sits on o_bar. The odd label misses it when the parity
    // at all-ones is even.
    c.swapped_ = c.odd_label_ != k.out_bar();
    return c;
}

bool evaluate_cascade(const CascadeCircuit &c, const BitVec &x) {
    const Cascade &k = c.cascade();
    if (x.size() != c.size()) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "input width does not match the cascade");
    }
    Potentials p = resolve(k.net, input_drives(k, x), {k.out(), k.out_bar()});
    return bit_of(*p[c.f_node()]);
}

BvResult bv_recover(const CascadeCircuit &c) {
    const Cascade &k = c.cascade();
    size_t n = c.size();
    Drives d = input_drives(k, BitVec(n));
    Potentials state = resolve(k.net, d, {k.out(), k.out_bar()});
    std::vector<Tie> ties;
    for (const CellPorts &cell : k.cells) {
        auto t = answer_ties(k.net, cell);
        ties.insert(ties.end(), t.begin(), t.end());
    }
    Potentials after = source_out(k.net, d, ties, state, {k.y, k.y_bar});
    BvResult r{BitVec(n), 1, {}};
    for (size_t i = 0; i < n; i++) {
        QuadVector q = read_quad(k.cells[i].gates, after);
        r.readouts.push_back(q);
        r.secret.set(i, classify_quad(q) == QuadMode::DIFFERENTIAL_PAIRS);
    }
    return r;
}

}  // namespace ttm
