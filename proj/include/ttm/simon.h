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

#ifndef TTM_SIMON_H
#define TTM_SIMON_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttm/bits.h"
#include "ttm/error.h"
#include "ttm/railnet.h"
#include "ttm/rng.h"

namespace ttm {

/// A 2:1 function f with f(x) = f(x xor s), stored as a full table.
class SimonInstance {
   public:
    /// Checks the pairing and that distinct pairs get distinct values.
    /// table[i] is f at BitVec::from_index(i, n), packed the same way.
    SimonInstance(size_t n, BitVec secret, std::vector<uint32_t> table);

    size_t n() const {
        return n_;
    }
    const BitVec &secret() const {
        return secret_;
    }
    const std::vector<uint32_t> &table() const {
        return table_;
    }
    /// Counted oracle access.
    BitVec query(const BitVec &x) const;
    /// Uncounted access, for checks that are not part of a run.
    BitVec value(const BitVec &x) const;
    size_t query_count() const {
        return queries_;
    }

   private:
    size_t n_;
    BitVec secret_;
    std::vector<uint32_t> table_;
    mutable size_t queries_ = 0;
};

/// Pair representatives, taken in increasing x, receive distinct uniform
/// values. Throws SECRET_ZERO for a zero secret; tables stop at n = 20.
SimonInstance make_instance(size_t n, const BitVec &secret, uint64_t seed);

/// The four-bit worked example with secret 1001.
SimonInstance paper_instance();

struct DataElement {
    BitVec x;
    BitVec f;
};

/// Reads `<x> <f>` lines; blank lines and lines starting with '#' are
/// skipped. The first element must have x = 0.
std::vector<DataElement> parse_trace(std::istream &in);
std::vector<DataElement> load_trace(const std::string &path);

enum class WalkMode { SINGLE_BIT, GENERAL };

/// y = f xor (s_row . x).
bool ripple_y(const BitVec &s_row, const BitVec &x, bool f_imposed);
/// The same value read off the switch network: the cascade output is held
/// at f and y is resolved backward through the cells.
bool ripple_y_switch(const BitVec &s_row, const BitVec &x, bool f_imposed);

struct PulseReport {
    bool no_change = false;
    std::vector<size_t> toggled_circuits;
    /// (circuit, bit) pairs whose s control toggled.
    std::vector<std::pair<size_t, size_t>> s_toggles;
};

/// n separable circuits on one x bus, with the H-pulse latches.
class FunctionBank {
   public:
    /// x bus at 0, all s rows 0, y = f0, latches primed.
    static FunctionBank init(size_t n, const BitVec &f0);

    size_t n() const {
        return rows_.size();
    }
    const std::vector<BitVec> &rows() const {
        return rows_;
    }
    const BitVec &y() const {
        return y_;
    }
    const BitVec &initial_y() const {
        return initial_y_;
    }
    const BitVec &x_bus() const {
        return x_;
    }
    const BitVec &x_prev() const {
        return x_prev_;
    }
    const BitVec &y_prev() const {
        return y_prev_;
    }
    /// Output of circuit i at input x under the current y.
    bool output(size_t i, const BitVec &x) const;

    /// Imposes (new_x, new_f), toggles s controls of circuits whose y moved,
    /// then latches. With several changed bits one is picked by `rng`, or the
    /// lowest when `rng` is null.
    PulseReport h_pulse(const BitVec &new_x, const BitVec &new_f, Rng *rng = nullptr, bool switch_level = false);

   private:
    std::vector<BitVec> rows_;
    BitVec y_;
    BitVec initial_y_;
    BitVec x_;
    BitVec x_prev_;
    BitVec y_prev_;
};

struct WalkState {
    BitVec x;
    WalkMode mode = WalkMode::SINGLE_BIT;
    std::vector<size_t> order;
    size_t pos = 0;
};

WalkState start_walk(size_t n, WalkMode mode);

/// Moves the walk and queries the instance there. Single-bit mode flips the
/// bits in a fresh seeded order each block of n steps, so every index flips
/// equally often. General mode flips a uniform nonempty subset.
DataElement next_data(const SimonInstance &inst, WalkState &walk, Rng &rng);

struct EliminationSystem {
    std::vector<BitVec> rows;
    BitVec rhs;
};

/// rows = the fitted s rows; rhs[i] = y_i xor initial_y_i.
EliminationSystem build_elimination(const FunctionBank &bank);

struct MeshResult {
    std::optional<BitVec> candidate;
    bool consistent = false;
    size_t coax_attempts = 0;
    size_t relax_steps = 0;
};

/// Candidate iff rows . x = rhs is consistent and forcing x_k = 1 for some k
/// leaves exactly one solution of the homogeneous system; k runs 1..n.
MeshResult settle_mesh(const EliminationSystem &sys);

/// The two stable corner patterns of a cell with its inverter feedback.
struct FeedbackCell {
    /// s: the cell is balanced (otherwise a constant-0 pass-through).
    static bool stable(bool s, bool gate_high, Rail y, Rail y_bar, Rail o, Rail o_bar);
};

/// Whether every feedback cell of every circuit is stable with the x bus at
/// x, y at +V, and each circuit output held at 1 xor rhs_i.
bool mesh_stable(const EliminationSystem &sys, const BitVec &x);

/// Seeded local relaxation over the feedback cells: from the coaxed state,
/// flip a gate in an unstable circuit until the mesh is stable. Returns the
/// first stable nonzero x found with some x_k forced to 1.
MeshResult relax_mesh(const EliminationSystem &sys, Rng &rng, size_t max_steps_per_coax = 10000);

/// table[0] == table[candidate], one counted query.
bool verify_candidate(const SimonInstance &inst, const BitVec &candidate);

enum class MeshMode { ELIMINATION, RELAXATION };

struct SimonConfig {
    uint64_t seed = 1;
    /// 0 means 50 n. The initial element counts.
    size_t max_data = 0;
    WalkMode walk = WalkMode::SINGLE_BIT;
    /// Eliminate after every k-th pulse.
    size_t cadence = 1;
    bool record_trace = false;
    bool switch_level = false;
    MeshMode mesh = MeshMode::ELIMINATION;
    std::function<void(const EliminationSystem &, const MeshResult &)> on_elimination;
};

struct StepRecord {
    BitVec x;
    BitVec f;
    BitVec y;
    bool no_change = false;
    std::vector<size_t> toggled_circuits;
    std::vector<std::pair<size_t, size_t>> s_toggles;
    std::vector<BitVec> rows;
    BitVec rhs;
    bool eliminated = false;
    std::optional<BitVec> candidate;
    size_t coax_attempts = 0;
    /// "accepted", "rejected", "pending" or empty.
    std::string verification;
};

struct RunReport {
    size_t n = 0;
    std::optional<BitVec> secret;
    bool verified = false;
    size_t data_elements = 0;
    size_t h_pulses = 0;
    size_t eliminations = 0;
    size_t coax_attempts = 0;
    size_t queries = 0;
    uint64_t seed = 0;
    std::vector<BitVec> final_rows;
    BitVec final_rhs;
    std::vector<StepRecord> trace;
};

class BudgetExceeded : public Error {
   public:
    explicit BudgetExceeded(RunReport report);
    const RunReport &report() const {
        return report_;
    }

   private:
    RunReport report_;
};

/// Streams walk data through the bank until a verified candidate appears.
/// Throws BudgetExceeded after config.max_data elements.
RunReport solve_simon(const SimonInstance &inst, const SimonConfig &config);

/// Runs a fixed trace. Candidates are checked against `inst` when given,
/// otherwise against values seen in the trace; a candidate whose value the
/// trace lacks stays pending. Ends with the last candidate if none verified.
RunReport replay_trace(const std::vector<DataElement> &trace, const SimonInstance *inst, const SimonConfig &config);

/// prod_{k=0}^{n-1} (2^n - 2^k) / 2^n.
double convergence_probability_bound(size_t n);
/// The same product as n grows without bound.
double convergence_probability_limit();

struct MonteCarloReport {
    size_t n = 0;
    size_t trials = 0;
    uint64_t seed = 0;
    size_t successes = 0;
    double success_rate = 0;
    double median_data = 0;
    double mean_data = 0;
    /// Over all eliminations, the share whose n fitted rows had rank n - 1.
    double window_rank_fraction = 0;
    double bound = 0;
    std::vector<size_t> data_used;
};

/// Seeded random instances (uniform nonzero secret), one solve each.
MonteCarloReport monte_carlo(size_t n, size_t trials, uint64_t seed, const SimonConfig &base = {});

struct DelayEstimate {
    double per_ripple;
    double total;
};

/// per_ripple = n_qubits / frequency * penalty; total = iterations * per_ripple.
DelayEstimate estimate_ripple_delay(double n_qubits, double frequency, double penalty, double iterations);

}  // namespace ttm

#endif
