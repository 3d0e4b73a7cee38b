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

#ifndef TTM_DEUTSCH_H
#define TTM_DEUTSCH_H

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "ttm/railnet.h"

namespace ttm {

enum class Verdict { BALANCED, CONSTANT };

const char *verdict_name(Verdict v);

struct Classification {
    Verdict verdict;
    /// Source-out steps used. Always 1 for the circuit classifiers.
    size_t queries;
    QuadVector readout;
    int sum;
};

/// A truth table over n inputs. Bit r holds f on row r, where input 1 (A) is
/// the most significant bit of r.
struct TruthTable {
    uint32_t bits;
    size_t n;

    bool at(uint32_t row) const {
        return (bits >> row) & 1;
    }
    size_t rows() const {
        return (size_t)1 << n;
    }
};

/// Parses a string of 2^n characters, f(row 0) first.
TruthTable parse_truth_table(std::string_view text);

/// BALANCED or CONSTANT by counting ones. Throws PROMISE_VIOLATION otherwise.
Verdict census(const TruthTable &t);

/// Whether input v (0 = A) changes f for some assignment of the others.
bool affects(const TruthTable &t, size_t v);

struct TwoInputCircuit {
    TruthTable table;
    SwitchNet net;
    Corners corners;
    std::vector<QuadGates> inputs;
    /// Answer transistors of input A, in QuadGates::all() order.
    std::array<size_t, 4> answer;
};

/// Builds the dual-rail network of a promise table.
///
/// Minterm chains sit between y-o_bar and o-y_bar, their duals between y-o
/// and o_bar-y_bar. n = 3 or 4 needs allow_wide; the network has order 2^n
/// transistors. Throws PROMISE_VIOLATION for tables that are neither balanced
/// nor constant and REDUNDANT_INPUT for a balanced table with an input that
/// never affects f.
TwoInputCircuit build_two_input(const TruthTable &t, bool allow_wide = false);

bool evaluate_two_input(const TwoInputCircuit &c, uint32_t row, bool y = true);

/// Common-mode input, one source-out of the cell's gates, sum detector.
Classification deutsch_classify(const SingleCell &cell, bool x_initial = false);

/// Sources out only input A's four gates. The other inputs sit at logic 0;
/// a_initial picks A's starting level and with it the initial f.
Classification deutsch_jozsa_classify(const TwoInputCircuit &c, bool a_initial = false);

/// Drops inputs that never affect f. Leaves constant tables at their width.
TruthTable remove_redundant_inputs(const TruthTable &t);

/// Caller-side entry point: removes redundant inputs, then classifies a
/// one-input table with a single cell and a wider one with build_two_input.
Classification classify_table(const TruthTable &t, bool allow_wide = false);

struct BruteForceResult {
    Verdict verdict;
    size_t queries;
};

/// Queries rows 0, 1, 2, ... until two values differ or 2^(n-1)+1 agree.
BruteForceResult brute_force_classify(const std::function<bool(uint64_t)> &oracle, size_t n);

}  // namespace ttm

#endif
