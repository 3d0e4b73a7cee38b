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

#include "ttm/deutsch.h"

#include <algorithm>
#include <bit>
#include <string>

#include "ttm/error.h"

namespace ttm {

const char *verdict_name(Verdict v) {
    return v == Verdict::BALANCED ? "BALANCED" : "CONSTANT";
}

TruthTable parse_truth_table(std::string_view text) {
    size_t n = 0;
    while (((size_t)1 << n) < text.size()) {
        n++;
    }
    if (n == 0 || n > 4 || ((size_t)1 << n) != text.size()) {
        throw Error(ErrorCode::PARSE, "truth table length must be 2, 4, 8 or 16");
    }
    TruthTable t{0, n};
    for (size_t r = 0; r < text.size(); r++) {
        if (text[r] != '0' && text[r] != '1') {
            throw Error(ErrorCode::PARSE, "truth table contains '" + std::string(1, text[r]) + "'");
        }
        if (text[r] == '1') {
            t.bits |= 1u << r;
        }
    }
    return t;
}

Verdict census(const TruthTable &t) {
    size_t ones = 0;
    for (uint32_t r = 0; r < t.rows(); r++) {
        ones += t.at(r);
    }
    if (ones == 0 || ones == t.rows()) {
        return Verdict::CONSTANT;
    }
    if (2 * ones == t.rows()) {
        return Verdict::BALANCED;
    }
    throw Error(ErrorCode::PROMISE_VIOLATION, "table is neither balanced nor constant");
}

bool affects(const TruthTable &t, size_t v) {
    uint32_t mask = 1u << (t.n - 1 - v);
    for (uint32_t r = 0; r < t.rows(); r++) {
        if (t.at(r) != t.at(r ^ mask)) {
            return true;
        }
    }
    return false;
}

namespace {

struct Literal {
    size_t var;
    Polarity polarity;
};
// A path is a series of parallel groups.
using Group = std::vector<Literal>;
using Path = std::vector<Group>;

bool row_bit(uint32_t row, size_t var, size_t n) {
    return (row >> (n - 1 - var)) & 1;
}

// Conducts exactly on rows where f is 1: one series chain per such row,
// input A listed first so it lands at the anchor corner.
std::vector<Path> minterm_network(const TruthTable &t) {
    std::vector<Path> paths;
    for (uint32_t r = 0; r < t.rows(); r++) {
        if (!t.at(r)) {
            continue;
        }
        Path p;
        for (size_t v = 0; v < t.n; v++) {
            p.push_back({{v, row_bit(r, v, t.n) ? Polarity::N : Polarity::P}});
        }
        paths.push_back(p);
    }
    return paths;
}

// Conducts exactly on rows where f is 0: for each 1-row, a parallel group of
// the complemented literals, all groups in series. A group from a row with
// A = 1 goes first so that a P-type A transistor sits at the anchor corner.
std::vector<Path> dual_network(const TruthTable &t) {
    Path front;
    Path rest;
    for (uint32_t r = 0; r < t.rows(); r++) {
        if (!t.at(r)) {
            continue;
        }
        Group g;
        for (size_t v = 0; v < t.n; v++) {
            g.push_back({v, row_bit(r, v, t.n) ? Polarity::P : Polarity::N});
        }
        if (front.empty() && row_bit(r, 0, t.n)) {
            front.push_back(g);
        } else {
            rest.push_back(g);
        }
    }
    front.insert(front.end(), rest.begin(), rest.end());
    return {front};
}

// A branch runs from its high corner (nearer y) to its low corner.
struct Branch {
    NodeId high;
    NodeId low;
    bool upper;
    std::vector<size_t> switches;
};

struct Builder {
    SwitchNet &net;
    const std::vector<QuadGates> &inputs;
    int counter = 0;

    NodeId gate(const Literal &l, bool upper) const {
        const QuadGates &q = inputs[l.var];
        if (l.polarity == Polarity::N) {
            return upper ? q.x_n : q.x_n_bar;
        }
        return upper ? q.x_p : q.x_p_bar;
    }

    // Lays each path from high to low. Paths are listed from their anchor
    // corner outward. Sources follow the path direction: P toward high, N
    // toward low.
    void add(Branch &b, const std::vector<Path> &paths, bool anchor_low, const std::string &tag) {
        for (Path p : paths) {
            if (anchor_low) {
                std::reverse(p.begin(), p.end());
            }
            NodeId cur = b.high;
            for (size_t gi = 0; gi < p.size(); gi++) {
                NodeId next = b.low;
                if (gi + 1 < p.size()) {
                    next = net.add_node(tag + "." + std::to_string(counter++));
                }
                for (const Literal &l : p[gi]) {
                    size_t k = net.add_switch(cur, next, l.polarity, gate(l, b.upper));
                    net.set_source(k, l.polarity == Polarity::P ? cur : next);
                    b.switches.push_back(k);
                }
                cur = next;
            }
        }
    }
};

// N answers touch their branch's low corner, P answers its high corner, so
// every answer source is a corner.
size_t find_answer(
    const SwitchNet &net, NodeId gate, Polarity polarity, const Branch &first, const Branch &second) {
    for (const Branch *b : {&first, &second}) {
        NodeId corner = polarity == Polarity::N ? b->low : b->high;
        for (size_t k : b->switches) {
            const Switch &s = net.switches()[k];
            if (s.gate == gate && s.polarity == polarity && (s.a == corner || s.b == corner)) {
                return k;
            }
        }
    }
    throw Error(ErrorCode::INVALID_ARGUMENT, "no answer transistor for gate " + net.name(gate));
}

const char *const INPUT_NAMES[] = {"A", "B", "C", "D"};

}  // namespace

TwoInputCircuit build_two_input(const TruthTable &t, bool allow_wide) {
    if (t.n < 2 || t.n > 4) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "network builder takes 2 to 4 inputs");
    }
    if (t.n > 2 && !allow_wide) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "more than 2 inputs requires allow_wide");
    }
    Verdict v = census(t);
    if (v == Verdict::BALANCED) {
        for (size_t i = 0; i < t.n; i++) {
            if (!affects(t, i)) {
                throw Error(
                    ErrorCode::REDUNDANT_INPUT, std::string("input ") + INPUT_NAMES[i] + " never affects f");
            }
        }
    }

    TwoInputCircuit c{t, {}, {}, {}, {}};
    SwitchNet &net = c.net;
    NodeId y = net.add_node("y");
    NodeId y_bar = net.add_node("y_bar");
    c.corners = {y, y_bar, net.add_node("o"), net.add_node("o_bar")};
    for (size_t i = 0; i < t.n; i++) {
        std::string p = INPUT_NAMES[i];
        c.inputs.push_back({
            net.add_node(p + ".x_n"),
            net.add_node(p + ".x_n_bar"),
            net.add_node(p + ".x_p"),
            net.add_node(p + ".x_p_bar"),
        });
    }

    std::vector<Path> on;
    std::vector<Path> off;
    std::vector<Path> ref_on;
    std::vector<Path> ref_off;
    if (v == Verdict::BALANCED) {
        on = minterm_network(t);
        off = dual_network(t);
    } else {
        // Constants put the even-parity reference network and its dual in
        // parallel, so the branch conducts for every input.
        TruthTable ref{0, t.n};
        for (uint32_t r = 0; r < t.rows(); r++) {
            if (std::popcount(r) % 2 == 0) {
                ref.bits |= 1u << r;
            }
        }
        ref_on = minterm_network(ref);
        ref_off = dual_network(ref);
    }

    const Corners &k = c.corners;
    Builder b{net, c.inputs};
    Branch top{y, k.o_bar, true, {}};
    Branch bottom{k.o, y_bar, false, {}};
    Branch left{y, k.o, true, {}};
    Branch right{k.o_bar, y_bar, false, {}};
    // Minterm chains anchor input A at the low corner, dual groups at the
    // high corner.
    auto lay = [&](Branch &br, const std::vector<Path> &paths, bool dual, const char *tag) {
        b.add(br, paths, !dual, tag);
    };
    if (v == Verdict::BALANCED) {
        lay(top, on, false, "top");
        lay(bottom, on, false, "bottom");
        lay(left, off, true, "left");
        lay(right, off, true, "right");
    } else {
        Branch &hi = t.bits != 0 ? top : left;
        Branch &lo = t.bits != 0 ? bottom : right;
        lay(hi, ref_on, false, t.bits != 0 ? "top" : "left");
        lay(hi, ref_off, true, t.bits != 0 ? "top" : "left");
        lay(lo, ref_on, false, t.bits != 0 ? "bottom" : "right");
        lay(lo, ref_off, true, t.bits != 0 ? "bottom" : "right");
    }

    const QuadGates &a = c.inputs[0];
    c.answer = {
        find_answer(net, a.x_n, Polarity::N, top, left),
        find_answer(net, a.x_n_bar, Polarity::N, bottom, right),
        find_answer(net, a.x_p, Polarity::P, left, top),
        find_answer(net, a.x_p_bar, Polarity::P, right, bottom),
    };
    return c;
}

namespace {

Drives input_drives(const TwoInputCircuit &c, uint32_t row, bool y) {
    Drives d{{c.corners.y, rail_of(y)}, {c.corners.y_bar, rail_of(!y)}};
    for (size_t v = 0; v < c.inputs.size(); v++) {
        auto q = quad_drives(c.inputs[v], common_mode(row_bit(row, v, c.table.n)));
        d.insert(d.end(), q.begin(), q.end());
    }
    return d;
}

}  // namespace

bool evaluate_two_input(const TwoInputCircuit &c, uint32_t row, bool y) {
    const Corners &k = c.corners;
    Potentials p = resolve(c.net, input_drives(c, row, y), {k.o, k.o_bar});
    return !bit_of(*p[k.o_bar]) ^ y;
}

Classification deutsch_classify(const SingleCell &cell, bool x_initial) {
    QuadVector q = source_out_quad(cell, x_initial, true);
    int s = sum_detector(q);
    return {s != 0 ? Verdict::BALANCED : Verdict::CONSTANT, 1, q, s};
}

Classification deutsch_jozsa_classify(const TwoInputCircuit &c, bool a_initial) {
    const Corners &k = c.corners;
    uint32_t row = a_initial ? (uint32_t)(c.table.rows() / 2) : 0;
    Drives d = input_drives(c, row, true);
    Potentials state = resolve(c.net, d, {k.o, k.o_bar});
    auto gates = c.inputs[0].all();
    std::vector<Tie> ties;
    for (size_t i = 0; i < 4; i++) {
        ties.push_back({gates[i], c.net.switches()[c.answer[i]].source});
    }
    Potentials after = source_out(c.net, d, ties, state, {k.y, k.y_bar});
    QuadVector q = read_quad(c.inputs[0], after);
    int s = sum_detector(q);
    return {s != 0 ? Verdict::BALANCED : Verdict::CONSTANT, 1, q, s};
}

TruthTable remove_redundant_inputs(const TruthTable &t) {
    if (census(t) == Verdict::CONSTANT) {
        return t;
    }
    std::vector<size_t> keep;
    for (size_t v = 0; v < t.n; v++) {
        if (affects(t, v)) {
            keep.push_back(v);
        }
    }
    TruthTable out{0, keep.size()};
    for (uint32_t r = 0; r < out.rows(); r++) {
        uint32_t full = 0;
        for (size_t i = 0; i < keep.size(); i++) {
            if (row_bit(r, i, keep.size())) {
                full |= 1u << (t.n - 1 - keep[i]);
            }
        }
        if (t.at(full)) {
            out.bits |= 1u << r;
        }
    }
    return out;
}

Classification classify_table(const TruthTable &t, bool allow_wide) {
    TruthTable r = remove_redundant_inputs(t);
    if (r.n == 1) {
        CellKind k = r.bits == 0b10 ? CellKind::IDENTITY
                     : r.bits == 0b01 ? CellKind::NEGATION
                     : r.bits == 0 ? CellKind::CONST0
                                   : CellKind::CONST1;
        return deutsch_classify(build_single_cell(k));
    }
    return deutsch_jozsa_classify(build_two_input(r, allow_wide));
}

BruteForceResult brute_force_classify(const std::function<bool(uint64_t)> &oracle, size_t n) {
    if (n == 0 || n > 63) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "input count must be 1..63");
    }
    uint64_t needed = ((uint64_t)1 << (n - 1)) + 1;
    bool first = oracle(0);
    for (uint64_t q = 1; q < needed; q++) {
        if (oracle(q) != first) {
            return {Verdict::BALANCED, (size_t)q + 1};
        }
    }
    return {Verdict::CONSTANT, (size_t)needed};
}

}  // namespace ttm
