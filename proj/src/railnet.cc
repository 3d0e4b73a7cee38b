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

#include "ttm/railnet.h"

#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "ttm/error.h"

namespace ttm {

const char *rail_name(Rail r) {
    return r == Rail::PLUS ? "+V" : "-V";
}

const char *pair_mode_name(PairMode m) {
    return m == PairMode::COMMON ? "COMMON" : "DIFFERENTIAL";
}

const char *quad_mode_name(QuadMode m) {
    return m == QuadMode::COMMON_PAIRS ? "COMMON_PAIRS" : "DIFFERENTIAL_PAIRS";
}

QuadVector common_mode(bool x) {
    Rail r = rail_of(x);
    return {r, r, r, r};
}

std::string to_string(const QuadVector &q) {
    return std::string("(") + rail_name(q.x_n) + ", " + rail_name(q.x_n_bar) + ", " + rail_name(q.x_p) + ", " +
           rail_name(q.x_p_bar) + ")";
}

PairMode classify_pair(Rail a, Rail b) {
    return a == b ? PairMode::COMMON : PairMode::DIFFERENTIAL;
}

QuadMode classify_quad(const QuadVector &q) {
    PairMode n = classify_pair(q.x_n, q.x_n_bar);
    PairMode p = classify_pair(q.x_p, q.x_p_bar);
    return n == p ? QuadMode::COMMON_PAIRS : QuadMode::DIFFERENTIAL_PAIRS;
}

int sum_detector(const QuadVector &q) {
    int s = 0;
    for (Rail r : {q.x_n, q.x_n_bar, q.x_p, q.x_p_bar}) {
        s += r == Rail::PLUS ? 1 : -1;
    }
    return s;
}

NodeId SwitchNet::add_node(std::string name) {
    if (index_.contains(name)) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "duplicate node name " + name);
    }
    NodeId id = (NodeId)names_.size();
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    return id;
}

size_t SwitchNet::add_switch(NodeId a, NodeId b, Polarity polarity, NodeId gate) {
    if (a >= num_nodes() || b >= num_nodes() || gate >= num_nodes() || a == b) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "switch terminals must be distinct existing nodes");
    }
    switches_.push_back({a, b, polarity, gate, NO_NODE});
    return switches_.size() - 1;
}

void SwitchNet::set_source(size_t index, NodeId terminal) {
    Switch &s = switches_.at(index);
    if (terminal != s.a && terminal != s.b) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "source must be a terminal of its switch");
    }
    s.source = terminal;
}

NodeId SwitchNet::node(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "no node named " + std::string(name));
    }
    return it->second;
}

namespace {

struct Dsu {
    std::vector<NodeId> parent;
    explicit Dsu(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    NodeId find(NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        // Smaller root wins so the partition does not depend on edge order.
        if (a < b) {
            parent[b] = a;
        } else if (b < a) {
            parent[a] = b;
        }
    }
};

std::string component_names(const SwitchNet &net, Dsu &dsu, NodeId root) {
    std::string out;
    for (NodeId v = 0; v < net.num_nodes(); v++) {
        if (dsu.find(v) == root) {
            if (!out.empty()) {
                out += ",";
            }
            out += net.name(v);
        }
    }
    return "{" + out + "}";
}

// One resolution pass with the given gate levels. With `prior` set, an
// undriven component keeps the charge its nodes agree on. Gates being sourced
// out drain into their component and carry no vote.
Potentials resolve_pass(
    const SwitchNet &net,
    const std::vector<std::optional<Rail>> &gate_level,
    const std::vector<std::optional<Rail>> &drive,
    const std::vector<Tie> &ties,
    const Potentials *prior,
    const std::vector<uint8_t> *drained,
    const std::vector<NodeId> &observed) {
    size_t n = net.num_nodes();
    Dsu dsu(n);
    for (const Switch &s : net.switches()) {
        const std::optional<Rail> &g = gate_level[s.gate];
        if (!g.has_value()) {
            throw Error(ErrorCode::FLOATING, "gate " + net.name(s.gate) + " has no level");
        }
        if (s.closed_by(*g)) {
            dsu.unite(s.a, s.b);
        }
    }
    for (const Tie &t : ties) {
        dsu.unite(t.gate, t.source);
    }

    Potentials root_level(n);
    for (NodeId v = 0; v < n; v++) {
        if (!drive[v].has_value()) {
            continue;
        }
        NodeId r = dsu.find(v);
        if (root_level[r].has_value() && *root_level[r] != *drive[v]) {
            throw Error(ErrorCode::CONFLICT, "component " + component_names(net, dsu, r) + " holds both rails");
        }
        root_level[r] = drive[v];
    }

    if (prior != nullptr) {
        std::vector<uint8_t> driven(n, 0);
        std::vector<uint8_t> mixed(n, 0);
        Potentials charge(n);
        for (NodeId v = 0; v < n; v++) {
            NodeId r = dsu.find(v);
            if (root_level[r].has_value()) {
                driven[r] = 1;
            }
        }
        for (NodeId v = 0; v < n; v++) {
            NodeId r = dsu.find(v);
            if (driven[r] || !(*prior)[v].has_value() || (*drained)[v]) {
                continue;
            }
            if (charge[r].has_value() && *charge[r] != *(*prior)[v]) {
                mixed[r] = 1;
            }
            charge[r] = (*prior)[v];
        }
        for (NodeId r = 0; r < n; r++) {
            if (!driven[r] && !mixed[r] && charge[r].has_value()) {
                root_level[r] = charge[r];
            }
        }
    }

    Potentials out(n);
    for (NodeId v = 0; v < n; v++) {
        out[v] = root_level[dsu.find(v)];
    }
    for (NodeId v : observed) {
        if (!out[v].has_value()) {
            throw Error(ErrorCode::FLOATING, "node " + net.name(v) + " is undriven");
        }
    }
    return out;
}

std::vector<std::optional<Rail>> drive_vector(const SwitchNet &net, const Drives &drivers) {
    std::vector<std::optional<Rail>> drive(net.num_nodes());
    for (const Drive &d : drivers) {
        if (d.node >= net.num_nodes()) {
            throw Error(ErrorCode::INVALID_ARGUMENT, "driver on unknown node");
        }
        if (drive[d.node].has_value() && *drive[d.node] != d.level) {
            throw Error(ErrorCode::CONFLICT, "node " + net.name(d.node) + " driven to both rails");
        }
        drive[d.node] = d.level;
    }
    return drive;
}

}  // namespace

Potentials resolve(const SwitchNet &net, const Drives &drivers, const std::vector<NodeId> &observed) {
    auto drive = drive_vector(net, drivers);
    return resolve_pass(net, drive, drive, {}, nullptr, nullptr, observed);
}

Potentials source_out(
    const SwitchNet &net,
    const Drives &drivers,
    const std::vector<Tie> &ties,
    const Potentials &prior,
    const std::vector<NodeId> &observed) {
    size_t n = net.num_nodes();
    if (prior.size() != n) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "prior state has the wrong size");
    }
    std::vector<uint8_t> tied(n, 0);
    std::vector<NodeId> watch = observed;
    for (const Tie &t : ties) {
        tied[t.gate] = 1;
        watch.push_back(t.gate);
    }
    Drives kept;
    for (const Drive &d : drivers) {
        if (!tied[d.node]) {
            kept.push_back(d);
        }
    }
    auto drive = drive_vector(net, kept);

    std::vector<std::optional<Rail>> level(n);
    for (const Switch &s : net.switches()) {
        level[s.gate] = drive[s.gate].has_value() ? drive[s.gate] : prior[s.gate];
    }

    size_t limit = 2 * net.switches().size() + 4;
    for (size_t iter = 0; iter < limit; iter++) {
        Potentials p = resolve_pass(net, level, drive, ties, &prior, &tied, watch);
        bool changed = false;
        for (const Tie &t : ties) {
            if (level[t.gate] != p[t.gate]) {
                level[t.gate] = p[t.gate];
                changed = true;
            }
        }
        if (!changed) {
            return p;
        }
    }
    throw Error(ErrorCode::NO_FIXPOINT, "sourcing out did not settle");
}

bool zero_current(const SwitchNet &net, const Potentials &p) {
    for (const Switch &s : net.switches()) {
        if (!p[s.gate].has_value() || !s.closed_by(*p[s.gate])) {
            continue;
        }
        if (p[s.a] != p[s.b]) {
            return false;
        }
    }
    return true;
}

const char *cell_kind_name(CellKind k) {
    switch (k) {
        case CellKind::IDENTITY:
            return "IDENTITY";
        case CellKind::NEGATION:
            return "NEGATION";
        case CellKind::CONST0:
            return "CONST0";
        case CellKind::CONST1:
            return "CONST1";
    }
    return "?";
}

CellKind parse_cell_kind(std::string_view text) {
    for (CellKind k : {CellKind::IDENTITY, CellKind::NEGATION, CellKind::CONST0, CellKind::CONST1}) {
        if (text == cell_kind_name(k)) {
            return k;
        }
    }
    throw Error(ErrorCode::PARSE, "unknown cell kind " + std::string(text));
}

bool is_balanced(CellKind k) {
    return k == CellKind::IDENTITY || k == CellKind::NEGATION;
}

bool cell_function(CellKind k, bool x) {
    switch (k) {
        case CellKind::IDENTITY:
            return x;
        case CellKind::NEGATION:
            return !x;
        case CellKind::CONST0:
            return false;
        case CellKind::CONST1:
            return true;
    }
    return false;
}

void designate_sources(SwitchNet &net, const std::vector<size_t> &switches, NodeId high, NodeId low) {
    size_t n = net.num_nodes();
    std::vector<std::vector<NodeId>> adj(n);
    for (size_t i : switches) {
        const Switch &s = net.switches()[i];
        adj[s.a].push_back(s.b);
        adj[s.b].push_back(s.a);
    }
    auto bfs = [&](NodeId start) {
        std::vector<size_t> dist(n, std::numeric_limits<size_t>::max());
        std::deque<NodeId> queue{start};
        dist[start] = 0;
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            for (NodeId w : adj[v]) {
                if (dist[w] == std::numeric_limits<size_t>::max()) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    };
    auto from_high = bfs(high);
    auto from_low = bfs(low);
    for (size_t i : switches) {
        const Switch &s = net.switches()[i];
        NodeId upper;
        if (from_high[s.a] != from_high[s.b]) {
            upper = from_high[s.a] < from_high[s.b] ? s.a : s.b;
        } else if (from_low[s.a] != from_low[s.b]) {
            upper = from_low[s.a] > from_low[s.b] ? s.a : s.b;
        } else {
            throw Error(
                ErrorCode::INVALID_ARGUMENT,
                "cannot orient switch between " + net.name(s.a) + " and " + net.name(s.b));
        }
        NodeId lower = upper == s.a ? s.b : s.a;
        net.set_source(i, s.polarity == Polarity::P ? upper : lower);
    }
}

CellPorts add_cell(SwitchNet &net, CellKind kind, NodeId y, NodeId y_bar, const std::string &prefix) {
    CellPorts c{};
    c.corners = {y, y_bar, net.add_node(prefix + "o"), net.add_node(prefix + "o_bar")};
    c.gates = {
        net.add_node(prefix + "x_n"),
        net.add_node(prefix + "x_n_bar"),
        net.add_node(prefix + "x_p"),
        net.add_node(prefix + "x_p_bar"),
    };
    const Corners &k = c.corners;
    const QuadGates &g = c.gates;
    // Minterm branches are y-o_bar (top) and o-y_bar (bottom); maxterm
    // branches are y-o (left) and o_bar-y_bar (right).
    switch (kind) {
        case CellKind::IDENTITY:
            c.answer = {
                net.add_switch(y, k.o_bar, Polarity::N, g.x_n),
                net.add_switch(k.o, y_bar, Polarity::N, g.x_n_bar),
                net.add_switch(y, k.o, Polarity::P, g.x_p),
                net.add_switch(k.o_bar, y_bar, Polarity::P, g.x_p_bar),
            };
            break;
        case CellKind::NEGATION:
            c.answer = {
                net.add_switch(y, k.o, Polarity::N, g.x_n),
                net.add_switch(k.o_bar, y_bar, Polarity::N, g.x_n_bar),
                net.add_switch(y, k.o_bar, Polarity::P, g.x_p),
                net.add_switch(k.o, y_bar, Polarity::P, g.x_p_bar),
            };
            break;
        case CellKind::CONST0:
            c.answer = {
                net.add_switch(y, k.o, Polarity::N, g.x_n),
                net.add_switch(k.o_bar, y_bar, Polarity::N, g.x_n_bar),
                net.add_switch(y, k.o, Polarity::P, g.x_p),
                net.add_switch(k.o_bar, y_bar, Polarity::P, g.x_p_bar),
            };
            break;
        case CellKind::CONST1:
            c.answer = {
                net.add_switch(y, k.o_bar, Polarity::N, g.x_n),
                net.add_switch(k.o, y_bar, Polarity::N, g.x_n_bar),
                net.add_switch(y, k.o_bar, Polarity::P, g.x_p),
                net.add_switch(k.o, y_bar, Polarity::P, g.x_p_bar),
            };
            break;
    }
    c.switches.assign(c.answer.begin(), c.answer.end());
    designate_sources(net, c.switches, y, y_bar);
    return c;
}

Drives quad_drives(const QuadGates &g, const QuadVector &q) {
    return {{g.x_n, q.x_n}, {g.x_n_bar, q.x_n_bar}, {g.x_p, q.x_p}, {g.x_p_bar, q.x_p_bar}};
}

QuadVector read_quad(const QuadGates &g, const Potentials &p) {
    auto at = [&](NodeId v) {
        if (!p[v].has_value()) {
            throw Error(ErrorCode::FLOATING, "gate rail has no level");
        }
        return *p[v];
    };
    return {at(g.x_n), at(g.x_n_bar), at(g.x_p), at(g.x_p_bar)};
}

std::vector<Tie> answer_ties(const SwitchNet &net, const CellPorts &cell) {
    std::vector<Tie> ties;
    auto gates = cell.gates.all();
    for (size_t k = 0; k < 4; k++) {
        const Switch &s = net.switches()[cell.answer[k]];
        ties.push_back({gates[k], s.source});
    }
    return ties;
}

SingleCell build_single_cell(CellKind kind) {
    SingleCell cell{kind, {}, {}};
    NodeId y = cell.net.add_node("y");
    NodeId y_bar = cell.net.add_node("y_bar");
    cell.ports = add_cell(cell.net, kind, y, y_bar, "");
    return cell;
}

namespace {

std::vector<NodeId> corner_list(const Corners &k) {
    return {k.y, k.y_bar, k.o, k.o_bar};
}

}  // namespace

Potentials settle_cell(const SingleCell &cell, bool x, bool y) {
    const Corners &k = cell.ports.corners;
    Drives d = quad_drives(cell.ports.gates, common_mode(x));
    d.push_back({k.y, rail_of(y)});
    d.push_back({k.y_bar, rail_of(!y)});
    return resolve(cell.net, d, corner_list(k));
}

bool evaluate_cell(const SingleCell &cell, bool x, bool y) {
    Potentials p = settle_cell(cell, x, y);
    return !bit_of(*p[cell.ports.corners.o_bar]) ^ y;
}

Potentials source_out(const SingleCell &cell, const Potentials &state) {
    const Corners &k = cell.ports.corners;
    if (!state[k.y].has_value() || !state[k.y_bar].has_value()) {
        throw Error(ErrorCode::FLOATING, "cell rails are not driven");
    }
    Drives d{{k.y, *state[k.y]}, {k.y_bar, *state[k.y_bar]}};
    return source_out(cell.net, d, answer_ties(cell.net, cell.ports), state, corner_list(k));
}

QuadVector source_out_quad(const SingleCell &cell, bool x, bool y) {
    return read_quad(cell.ports.gates, source_out(cell, settle_cell(cell, x, y)));
}

Cascade build_cascade(const std::vector<CellKind> &kinds) {
    if (kinds.empty()) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "cascade needs at least one cell");
    }
    Cascade c{};
    c.y = c.net.add_node("y");
    c.y_bar = c.net.add_node("y_bar");
    NodeId hi = c.y;
    NodeId lo = c.y_bar;
    for (size_t i = 0; i < kinds.size(); i++) {
        c.cells.push_back(add_cell(c.net, kinds[i], hi, lo, "c" + std::to_string(i + 1) + "."));
        hi = c.cells.back().corners.o;
        lo = c.cells.back().corners.o_bar;
    }
    return c;
}

std::array<double, 2> hadamard2(const std::array<double, 2> &v) {
    const double h = 1.0 / std::sqrt(2.0);
    return {h * (v[0] + v[1]), h * (v[0] - v[1])};
}

}  // namespace ttm
