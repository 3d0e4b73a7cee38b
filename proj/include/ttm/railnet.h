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

#ifndef TTM_RAILNET_H
#define TTM_RAILNET_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ttm {

enum class Rail : uint8_t { MINUS = 0, PLUS = 1 };

constexpr Rail complement(Rail r) {
    return r == Rail::PLUS ? Rail::MINUS : Rail::PLUS;
}
/// Logic 1 is +V, logic 0 is -V.
constexpr Rail rail_of(bool bit) {
    return bit ? Rail::PLUS : Rail::MINUS;
}
constexpr bool bit_of(Rail r) {
    return r == Rail::PLUS;
}
const char *rail_name(Rail r);

enum class PairMode { COMMON, DIFFERENTIAL };
enum class QuadMode { COMMON_PAIRS, DIFFERENTIAL_PAIRS };

const char *pair_mode_name(PairMode m);
const char *quad_mode_name(QuadMode m);

/// The four gate rails of one qubit input.
struct QuadVector {
    Rail x_n;
    Rail x_n_bar;
    Rail x_p;
    Rail x_p_bar;
    bool operator==(const QuadVector &) const = default;
};

/// All four rails at the logic level of x (the pre-Hadamard input).
QuadVector common_mode(bool x);
std::string to_string(const QuadVector &q);

PairMode classify_pair(Rail a, Rail b);
QuadMode classify_quad(const QuadVector &q);
/// Count of PLUS rails minus count of MINUS rails.
int sum_detector(const QuadVector &q);

enum class Polarity { N, P };

using NodeId = uint32_t;
inline constexpr NodeId NO_NODE = UINT32_MAX;

struct Switch {
    NodeId a;
    NodeId b;
    Polarity polarity;
    NodeId gate;
    NodeId source = NO_NODE;

    /// N conducts on a PLUS gate, P on a MINUS gate.
    bool closed_by(Rail gate_level) const {
        return (polarity == Polarity::N) == (gate_level == Rail::PLUS);
    }
};

class SwitchNet {
   public:
    NodeId add_node(std::string name);
    size_t add_switch(NodeId a, NodeId b, Polarity polarity, NodeId gate);
    void set_source(size_t index, NodeId terminal);

    size_t num_nodes() const {
        return names_.size();
    }
    const std::string &name(NodeId id) const {
        return names_[id];
    }
    /// Looks up a node by name. Throws INVALID_ARGUMENT if absent.
    NodeId node(std::string_view name) const;
    const std::vector<Switch> &switches() const {
        return switches_;
    }

   private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<Switch> switches_;
};

struct Drive {
    NodeId node;
    Rail level;
};
using Drives = std::vector<Drive>;
using Potentials = std::vector<std::optional<Rail>>;

/// A gate wired to a source terminal during sourcing out.
struct Tie {
    NodeId gate;
    NodeId source;
};

/// Resolves the net into equipotential components.
///
/// Every switch gate must be driven. Throws CONFLICT when a component holds
/// both rails and FLOATING when an observed node has no driven potential.
Potentials resolve(const SwitchNet &net, const Drives &drivers, const std::vector<NodeId> &observed);

/// Wires each tied gate to its source and iterates to a fixpoint.
///
/// Tied gates lose any external drive. A component left without a driver
/// keeps the charge its nodes held in `prior` when they agree on it; the
/// tied gates themselves drain and do not count.
Potentials source_out(
    const SwitchNet &net,
    const Drives &drivers,
    const std::vector<Tie> &ties,
    const Potentials &prior,
    const std::vector<NodeId> &observed);

/// True iff every closed switch has equal potentials on both terminals.
bool zero_current(const SwitchNet &net, const Potentials &p);

enum class CellKind { IDENTITY, NEGATION, CONST0, CONST1 };

const char *cell_kind_name(CellKind k);
CellKind parse_cell_kind(std::string_view text);
bool is_balanced(CellKind k);
bool cell_function(CellKind k, bool x);

/// Corner o carries y XOR f; o_bar its complement.
struct Corners {
    NodeId y;
    NodeId y_bar;
    NodeId o;
    NodeId o_bar;
};

struct QuadGates {
    NodeId x_n;
    NodeId x_n_bar;
    NodeId x_p;
    NodeId x_p_bar;
    std::array<NodeId, 4> all() const {
        return {x_n, x_n_bar, x_p, x_p_bar};
    }
};

/// Handles to one gate cell inside a larger net.
struct CellPorts {
    Corners corners;
    QuadGates gates;
    /// Switch index of the answer transistor for each quad slot, in
    /// QuadGates::all() order.
    std::array<size_t, 4> answer;
    std::vector<size_t> switches;
};

/// Adds the four-transistor cell of `kind` between corners y and y_bar,
/// creating o, o_bar and the four gate nodes, and designates sources.
CellPorts add_cell(SwitchNet &net, CellKind kind, NodeId y, NodeId y_bar, const std::string &prefix);

/// Picks source terminals for the given switches from their distance to the
/// cell's high and low corners. P sources face high, N sources face low.
void designate_sources(SwitchNet &net, const std::vector<size_t> &switches, NodeId high, NodeId low);

Drives quad_drives(const QuadGates &g, const QuadVector &q);
QuadVector read_quad(const QuadGates &g, const Potentials &p);
std::vector<Tie> answer_ties(const SwitchNet &net, const CellPorts &cell);

struct SingleCell {
    CellKind kind;
    SwitchNet net;
    CellPorts ports;
};

SingleCell build_single_cell(CellKind kind);
/// Resolves the cell with common-mode input x and y driven to the given bit.
Potentials settle_cell(const SingleCell &cell, bool x, bool y);
/// f read off o_bar in the y frame: f = not(o_bar) xor y.
bool evaluate_cell(const SingleCell &cell, bool x, bool y);
/// Sources out all four gates of the cell starting from `state`.
Potentials source_out(const SingleCell &cell, const Potentials &state);
QuadVector source_out_quad(const SingleCell &cell, bool x, bool y = true);

/// A chain of cells with y of cell i+1 taken from o of cell i.
struct Cascade {
    SwitchNet net;
    NodeId y;
    NodeId y_bar;
    std::vector<CellPorts> cells;
    NodeId out() const {
        return cells.back().corners.o;
    }
    NodeId out_bar() const {
        return cells.back().corners.o_bar;
    }
};

Cascade build_cascade(const std::vector<CellKind> &kinds);

/// (1/sqrt 2) [[1, 1], [1, -1]] v.
std::array<double, 2> hadamard2(const std::array<double, 2> &v);

}  // namespace ttm

#endif
