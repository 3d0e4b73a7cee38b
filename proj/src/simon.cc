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

#include "ttm/simon.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace ttm {

SimonInstance::SimonInstance(size_t n, BitVec secret, std::vector<uint32_t> table)
    : n_(n), secret_(std::move(secret)), table_(std::move(table)) {
    if (n == 0 || n > 20) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "instance width must be 1..20");
    }
    if (secret_.size() != n) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "secret width does not match n");
    }
    if (!secret_.any()) {
        throw Error(ErrorCode::SECRET_ZERO, "the all-zero secret is not allowed");
    }
    if (table_.size() != ((size_t)1 << n)) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "table must have 2^n entries");
    }
    uint64_t s = secret_.to_index();
    std::map<uint32_t, uint64_t> seen;
    for (uint64_t x = 0; x < table_.size(); x++) {
        if (table_[x] >> n) {
            throw Error(ErrorCode::INVALID_ARGUMENT, "table value wider than n");
        }
        if (table_[x] != table_[x ^ s]) {
            throw Error(ErrorCode::INVALID_ARGUMENT, "table breaks f(x) = f(x xor s)");
        }
        auto [it, fresh] = seen.emplace(table_[x], x);
        if (!fresh && it->second != (x ^ s)) {
            throw Error(ErrorCode::INVALID_ARGUMENT, "two pairs share a value");
        }
    }
}

BitVec SimonInstance::query(const BitVec &x) const {
    queries_++;
    return value(x);
}

BitVec SimonInstance::value(const BitVec &x) const {
    if (x.size() != n_) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "query width does not match n");
    }
    return BitVec::from_index(table_[x.to_index()], n_);
}

SimonInstance make_instance(size_t n, const BitVec &secret, uint64_t seed) {
    if (n == 0 || n > 20) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "instance width must be 1..20");
    }
    if (secret.size() != n) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "secret width does not match n");
    }
    if (!secret.any()) {
        throw Error(ErrorCode::SECRET_ZERO, "the all-zero secret is not allowed");
    }
    uint64_t size = (uint64_t)1 << n;
    uint64_t s = secret.to_index();
    Rng rng(seed);
    std::vector<uint32_t> pool(size);
    for (uint64_t i = 0; i < size; i++) {
        pool[i] = (uint32_t)i;
    }
    std::vector<uint32_t> table(size);
    uint64_t taken = 0;
    for (uint64_t x = 0; x < size; x++) {
        if ((x ^ s) < x) {
            continue;
        }
        uint64_t j = taken + rng.below(size - taken);
        std::swap(pool[taken], pool[j]);
        table[x] = table[x ^ s] = pool[taken];
        taken++;
    }
    return SimonInstance(n, secret, std::move(table));
}

SimonInstance paper_instance() {
    // Seven pairs carry the values streamed in the worked example; the value
    // of the pair {0100, 1101} never appears there and is set to 0000.
    const char *pairs[][3] = {
        {"0000", "1001", "1101"},
        {"1000", "0001", "1000"},
        {"1100", "0101", "1001"},
        {"1110", "0111", "0110"},
        {"1111", "0110", "1110"},
        {"1011", "0010", "0010"},
        {"1010", "0011", "0111"},
        {"0100", "1101", "0000"},
    };
    std::vector<uint32_t> table(16);
    for (const auto &p : pairs) {
        uint32_t v = (uint32_t)BitVec::from_string(p[2]).to_index();
        table[BitVec::from_string(p[0]).to_index()] = v;
        table[BitVec::from_string(p[1]).to_index()] = v;
    }
    return SimonInstance(4, BitVec::from_string("1001"), std::move(table));
}

std::vector<DataElement> parse_trace(std::istream &in) {
    std::vector<DataElement> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ss(line);
        std::string xs;
        std::string fs;
        if (!(ss >> xs) || xs[0] == '#') {
            continue;
        }
        std::string extra;
        if (!(ss >> fs) || (ss >> extra)) {
            throw Error(ErrorCode::PARSE, "trace line " + std::to_string(line_no) + ": expected '<x> <f>'");
        }
        DataElement e{BitVec::from_string(xs), BitVec::from_string(fs)};
        if (e.x.size() != e.f.size() || (!out.empty() && e.x.size() != out[0].x.size())) {
            throw Error(ErrorCode::PARSE, "trace line " + std::to_string(line_no) + ": width mismatch");
        }
        if (out.empty() && e.x.any()) {
            throw Error(ErrorCode::PARSE, "trace must start at x = 0");
        }
        out.push_back(std::move(e));
    }
    if (out.empty()) {
        throw Error(ErrorCode::PARSE, "trace is empty");
    }
    return out;
}

std::vector<DataElement> load_trace(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "cannot open trace " + path);
    }
    return parse_trace(in);
}

bool ripple_y(const BitVec &s_row, const BitVec &x, bool f_imposed) {
    return f_imposed ^ s_row.dot(x);
}

namespace {

std::vector<CellKind> kinds_of(const BitVec &s_row) {
    std::vector<CellKind> kinds;
    for (size_t j = 0; j < s_row.size(); j++) {
        kinds.push_back(s_row.get(j) ? CellKind::IDENTITY : CellKind::CONST0);
    }
    return kinds;
}

Drives gate_drives(const Cascade &c, const BitVec &x) {
    Drives d;
    for (size_t j = 0; j < c.cells.size(); j++) {
        auto q = quad_drives(c.cells[j].gates, common_mode(x.get(j)));
        d.insert(d.end(), q.begin(), q.end());
    }
    return d;
}

}  // namespace

bool ripple_y_switch(const BitVec &s_row, const BitVec &x, bool f_imposed) {
    if (s_row.size() != x.size()) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "row and input widths differ");
    }
    Cascade c = build_cascade(kinds_of(s_row));
    Drives d = gate_drives(c, x);
    d.push_back({c.out(), rail_of(f_imposed)});
    d.push_back({c.out_bar(), rail_of(!f_imposed)});
    Potentials p = resolve(c.net, d, {c.y, c.y_bar});
    if (*p[c.y] == *p[c.y_bar]) {
        throw Error(ErrorCode::CONFLICT, "y rails resolved to the same level");
    }
    return bit_of(*p[c.y]);
}

FunctionBank FunctionBank::init(size_t n, const BitVec &f0) {
    if (f0.size() != n || n == 0) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "f0 width does not match n");
    }
    FunctionBank b;
    b.rows_.assign(n, BitVec(n));
    b.x_ = BitVec(n);
    // With every s row at 0, y absorbs f unchanged.
    b.y_ = f0;
    b.initial_y_ = f0;
    // The priming pulse copies the present state into the latches.
    b.x_prev_ = b.x_;
    b.y_prev_ = b.y_;
    return b;
}

bool FunctionBank::output(size_t i, const BitVec &x) const {
    return y_.get(i) ^ rows_[i].dot(x);
}

PulseReport FunctionBank::h_pulse(const BitVec &new_x, const BitVec &new_f, Rng *rng, bool switch_level) {
    size_t n = this->n();
    if (new_x.size() != n || new_f.size() != n) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "data width does not match the bank");
    }
    PulseReport rep;
    if (new_x == x_prev_) {
        rep.no_change = true;
        return rep;
    }
    auto ripple = [&](size_t i) {
        return switch_level ? ripple_y_switch(rows_[i], new_x, new_f.get(i)) : ripple_y(rows_[i], new_x, new_f.get(i));
    };

    // Asynchronous ripple of the imposed outputs back to y.
    x_ = new_x;
    for (size_t i = 0; i < n; i++) {
        y_.set(i, ripple(i));
    }

    // Rising edge: toggle one s control per moved y, on a changed x bit.
    std::vector<size_t> changed;
    for (size_t j = 0; j < n; j++) {
        if (new_x.get(j) != x_prev_.get(j)) {
            changed.push_back(j);
        }
    }
    for (size_t i = 0; i < n; i++) {
        if (y_.get(i) == y_prev_.get(i)) {
            continue;
        }
        size_t j = changed[0];
        if (changed.size() > 1 && rng != nullptr) {
            j = changed[rng->below(changed.size())];
        }
        rows_[i].flip(j);
        rep.toggled_circuits.push_back(i);
        rep.s_toggles.push_back({i, j});
        y_.set(i, ripple(i));
    }

    // Falling edge.
    x_prev_ = x_;
    y_prev_ = y_;
    return rep;
}

WalkState start_walk(size_t n, WalkMode mode) {
    WalkState w;
    w.x = BitVec(n);
    w.mode = mode;
    w.pos = n;
    return w;
}

DataElement next_data(const SimonInstance &inst, WalkState &walk, Rng &rng) {
    size_t n = inst.n();
    if (walk.mode == WalkMode::SINGLE_BIT) {
        if (walk.pos >= walk.order.size()) {
            walk.order.resize(n);
            for (size_t i = 0; i < n; i++) {
                walk.order[i] = i;
            }
            rng.shuffle(walk.order);
            walk.pos = 0;
        }
        walk.x.flip(walk.order[walk.pos++]);
    } else {
        bool any = false;
        while (!any) {
            for (size_t i = 0; i < n; i++) {
                if (rng.below(2) == 1) {
                    walk.x.flip(i);
                    any = true;
                }
            }
        }
    }
    return {walk.x, inst.query(walk.x)};
}

EliminationSystem build_elimination(const FunctionBank &bank) {
    return {bank.rows(), bank.y() ^ bank.initial_y()};
}

namespace {

// Gauss-Jordan on augmented rows. Returns false when some row reduces to
// 0 = 1; otherwise the solution when it is unique.
bool solve_affine(std::vector<BitVec> rows, std::vector<bool> rhs, size_t n, std::optional<BitVec> *unique) {
    size_t rank = 0;
    std::vector<size_t> pivots;
    for (size_t col = 0; col < n && rank < rows.size(); col++) {
        size_t pr = rank;
        while (pr < rows.size() && !rows[pr].get(col)) {
            pr++;
        }
        if (pr == rows.size()) {
            continue;
        }
        std::swap(rows[pr], rows[rank]);
        std::swap(rhs[pr], rhs[rank]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
                rhs[r] = rhs[r] != rhs[rank];
            }
        }
        pivots.push_back(col);
        rank++;
    }
    for (size_t r = rank; r < rows.size(); r++) {
        if (rhs[r]) {
            return false;
        }
    }
    unique->reset();
    if (rank == n) {
        BitVec x(n);
        for (size_t r = 0; r < rank; r++) {
            x.set(pivots[r], rhs[r]);
        }
        *unique = x;
    }
    return true;
}

size_t gf2_rank(std::vector<BitVec> rows, size_t n) {
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); col++) {
        size_t pr = rank;
        while (pr < rows.size() && !rows[pr].get(col)) {
            pr++;
        }
        if (pr == rows.size()) {
            continue;
        }
        std::swap(rows[pr], rows[rank]);
        for (size_t r = rank + 1; r < rows.size(); r++) {
            if (rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

MeshResult settle_mesh(const EliminationSystem &sys) {
    MeshResult res;
    size_t n = sys.rhs.size();
    std::vector<bool> rhs(sys.rows.size());
    for (size_t i = 0; i < rhs.size(); i++) {
        rhs[i] = sys.rhs.get(i);
    }
    std::optional<BitVec> unused;
    res.consistent = solve_affine(sys.rows, rhs, n, &unused);
    if (!res.consistent) {
        return res;
    }
    // Coax: hold x_k high on the homogeneous mesh and see whether it
    // settles into a single state.
    for (size_t k = 0; k < n; k++) {
        res.coax_attempts++;
        std::vector<BitVec> rows = sys.rows;
        std::vector<bool> zero(rows.size(), false);
        rows.push_back(BitVec::unit(k, n));
        zero.push_back(true);
        std::optional<BitVec> x;
        if (solve_affine(rows, zero, n, &x) && x.has_value()) {
            res.candidate = x;
            return res;
        }
    }
    return res;
}

bool FeedbackCell::stable(bool s, bool gate_high, Rail y, Rail y_bar, Rail o, Rail o_bar) {
    bool top_eq = y == o_bar;
    bool bottom_eq = o == y_bar;
    bool left_eq = y == o;
    bool right_eq = o_bar == y_bar;
    if (s && gate_high) {
        return top_eq && bottom_eq && y != o;
    }
    return left_eq && right_eq && y != o_bar;
}

bool mesh_stable(const EliminationSystem &sys, const BitVec &x) {
    for (size_t i = 0; i < sys.rows.size(); i++) {
        const BitVec &row = sys.rows[i];
        Cascade c = build_cascade(kinds_of(row));
        Drives d = gate_drives(c, x);
        d.push_back({c.y, Rail::PLUS});
        d.push_back({c.y_bar, Rail::MINUS});
        Potentials p = resolve(c.net, d, {c.out(), c.out_bar()});
        for (size_t j = 0; j < c.cells.size(); j++) {
            const Corners &k = c.cells[j].corners;
            if (!FeedbackCell::stable(row.get(j), x.get(j), *p[k.y], *p[k.y_bar], *p[k.o], *p[k.o_bar])) {
                return false;
            }
        }
        if (*p[c.out()] != rail_of(!sys.rhs.get(i))) {
            return false;
        }
    }
    return true;
}

namespace {

// Corner walk through one circuit using the stable cell patterns. Returns
// whether the output lands on its held level.
bool circuit_settles(const BitVec &row, const BitVec &x, bool rhs) {
    Rail y = Rail::PLUS;
    Rail y_bar = Rail::MINUS;
    for (size_t j = 0; j < row.size(); j++) {
        if (row.get(j) && x.get(j)) {
            std::swap(y, y_bar);
        }
    }
    return y == rail_of(!rhs);
}

// Flips gates in unstable circuits until every circuit settles. `held` is a
// gate the relaxation may not move, or n for none.
bool relax(const EliminationSystem &sys, const BitVec &rhs, BitVec &x, size_t held, Rng &rng, size_t max_steps,
           size_t *steps) {
    size_t n = x.size();
    for (size_t step = 0; step <= max_steps; step++) {
        std::vector<size_t> unstable;
        for (size_t i = 0; i < sys.rows.size(); i++) {
            if (!circuit_settles(sys.rows[i], x, rhs.get(i))) {
                unstable.push_back(i);
            }
        }
        if (unstable.empty()) {
            return true;
        }
        if (step == max_steps) {
            break;
        }
        const BitVec &row = sys.rows[unstable[rng.below(unstable.size())]];
        std::vector<size_t> movable;
        for (size_t j = 0; j < n; j++) {
            if (row.get(j) && j != held) {
                movable.push_back(j);
            }
        }
        if (movable.empty()) {
            return false;
        }
        x.flip(movable[rng.below(movable.size())]);
        (*steps)++;
    }
    return false;
}

}  // namespace

MeshResult relax_mesh(const EliminationSystem &sys, Rng &rng, size_t max_steps_per_coax) {
    MeshResult res;
    size_t n = sys.rhs.size();
    BitVec x(n);
    res.consistent = relax(sys, sys.rhs, x, n, rng, max_steps_per_coax, &res.relax_steps);
    if (!res.consistent) {
        return res;
    }
    BitVec zero(n);
    for (size_t k = 0; k < n; k++) {
        res.coax_attempts++;
        BitVec xk = BitVec::unit(k, n);
        if (relax(sys, zero, xk, k, rng, max_steps_per_coax, &res.relax_steps)) {
            res.candidate = xk;
            return res;
        }
    }
    return res;
}

bool verify_candidate(const SimonInstance &inst, const BitVec &candidate) {
    if (!candidate.any()) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "candidate must be nonzero");
    }
    return inst.query(candidate) == inst.value(BitVec(inst.n()));
}

BudgetExceeded::BudgetExceeded(RunReport report)
    : Error(ErrorCode::BUDGET_EXCEEDED, "no verified secret within " + std::to_string(report.data_elements) +
                                            " data elements"),
      report_(std::move(report)) {
}

namespace {

enum class Check { ACCEPTED, REJECTED, PENDING };

// The shared pulse / eliminate / verify loop. `next` yields the next data
// element or nothing when the source is exhausted; `check` judges a
// candidate.
RunReport run_machine(
    size_t n,
    const BitVec &f0,
    const std::function<std::optional<DataElement>()> &next,
    const std::function<Check(const BitVec &)> &check,
    const SimonConfig &config,
    Rng &rng,
    size_t max_data,
    bool *finished) {
    RunReport rep;
    rep.n = n;
    rep.seed = config.seed;
    FunctionBank bank = FunctionBank::init(n, f0);
    rep.data_elements = 1;
    size_t cadence = std::max<size_t>(1, config.cadence);
    *finished = false;

    auto snapshot = [&] {
        rep.final_rows = bank.rows();
        rep.final_rhs = bank.y() ^ bank.initial_y();
    };
    snapshot();
    if (config.record_trace) {
        StepRecord s;
        s.x = BitVec(n);
        s.f = f0;
        s.y = bank.y();
        s.rows = bank.rows();
        s.rhs = rep.final_rhs;
        rep.trace.push_back(std::move(s));
    }

    while (rep.data_elements < max_data) {
        std::optional<DataElement> d = next();
        if (!d.has_value()) {
            break;
        }
        rep.data_elements++;
        PulseReport pulse = bank.h_pulse(d->x, d->f, config.walk == WalkMode::GENERAL ? &rng : nullptr, config.switch_level);
        rep.h_pulses++;
        snapshot();

        StepRecord step;
        step.x = d->x;
        step.f = d->f;
        step.y = bank.y();
        step.no_change = pulse.no_change;
        step.toggled_circuits = pulse.toggled_circuits;
        step.s_toggles = pulse.s_toggles;
        step.rows = bank.rows();
        step.rhs = rep.final_rhs;

        bool done = false;
        if (rep.h_pulses % cadence == 0) {
            EliminationSystem sys = build_elimination(bank);
            MeshResult mesh;
            if (config.mesh == MeshMode::RELAXATION) {
                mesh = relax_mesh(sys, rng);
            } else {
                mesh = settle_mesh(sys);
            }
            rep.eliminations++;
            rep.coax_attempts += mesh.coax_attempts;
            step.eliminated = true;
            step.candidate = mesh.candidate;
            step.coax_attempts = mesh.coax_attempts;
            if (config.on_elimination) {
                config.on_elimination(sys, mesh);
            }
            if (mesh.candidate.has_value()) {
                rep.secret = mesh.candidate;
                Check c = check(*mesh.candidate);
                step.verification = c == Check::ACCEPTED ? "accepted" : c == Check::REJECTED ? "rejected" : "pending";
                if (c == Check::ACCEPTED) {
                    rep.verified = true;
                    done = true;
                }
            }
        }
        if (config.record_trace) {
            rep.trace.push_back(std::move(step));
        }
        if (done) {
            *finished = true;
            break;
        }
    }
    return rep;
}

}  // namespace

RunReport solve_simon(const SimonInstance &inst, const SimonConfig &config) {
    size_t n = inst.n();
    size_t max_data = config.max_data ? config.max_data : 50 * n;
    size_t q0 = inst.query_count();
    Rng rng(config.seed);
    WalkState walk = start_walk(n, config.walk);
    BitVec f0 = inst.query(BitVec(n));
    // Once rejected, a candidate is not queried again.
    std::vector<BitVec> rejected;
    auto next = [&]() -> std::optional<DataElement> { return next_data(inst, walk, rng); };
    auto check = [&](const BitVec &cand) {
        if (std::find(rejected.begin(), rejected.end(), cand) != rejected.end()) {
            return Check::REJECTED;
        }
        if (verify_candidate(inst, cand)) {
            return Check::ACCEPTED;
        }
        rejected.push_back(cand);
        return Check::REJECTED;
    };
    bool finished = false;
    RunReport rep = run_machine(n, f0, next, check, config, rng, max_data, &finished);
    rep.queries = inst.query_count() - q0;
    if (!finished) {
        rep.secret.reset();
        throw BudgetExceeded(std::move(rep));
    }
    return rep;
}

RunReport replay_trace(const std::vector<DataElement> &trace, const SimonInstance *inst, const SimonConfig &config) {
    if (trace.empty()) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "empty trace");
    }
    size_t n = trace[0].x.size();
    if (inst != nullptr && inst->n() != n) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "trace width does not match the instance");
    }
    Rng rng(config.seed);
    size_t pos = 1;
    size_t lookups = 0;
    auto next = [&]() -> std::optional<DataElement> {
        if (pos >= trace.size()) {
            return std::nullopt;
        }
        return trace[pos++];
    };
    auto check = [&](const BitVec &cand) {
        if (inst != nullptr) {
            lookups++;
            return verify_candidate(*inst, cand) ? Check::ACCEPTED : Check::REJECTED;
        }
        for (const DataElement &e : trace) {
            if (e.x == cand) {
                lookups++;
                return e.f == trace[0].f ? Check::ACCEPTED : Check::REJECTED;
            }
        }
        return Check::PENDING;
    };
    bool finished = false;
    RunReport rep = run_machine(n, trace[0].f, next, check, config, rng, SIZE_MAX, &finished);
    rep.queries = rep.data_elements + lookups;
    return rep;
}

double convergence_probability_bound(size_t n) {
    if (n == 0) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "n must be at least 1");
    }
    double p = 1.0;
    for (size_t k = 0; k < n; k++) {
        // (2^n - 2^k) / 2^n = 1 - 2^(k - n)
        p *= 1.0 - std::ldexp(1.0, (int)k - (int)n);
    }
    return p;
}

double convergence_probability_limit() {
    double p = 1.0;
    for (int k = 1; k <= 200; k++) {
        p *= 1.0 - std::ldexp(1.0, -k);
    }
    return p;
}

MonteCarloReport monte_carlo(size_t n, size_t trials, uint64_t seed, const SimonConfig &base) {
    if (trials == 0) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "trials must be at least 1");
    }
    MonteCarloReport mc;
    mc.n = n;
    mc.trials = trials;
    mc.seed = seed;
    mc.bound = convergence_probability_bound(n);
    size_t eliminations = 0;
    size_t rank_hits = 0;
    double sum = 0;
    for (size_t t = 0; t < trials; t++) {
        Rng pick(derive_seed(seed, 3 * t));
        BitVec secret = BitVec::from_index(1 + pick.below(((uint64_t)1 << n) - 1), n);
        SimonInstance inst = make_instance(n, secret, derive_seed(seed, 3 * t + 1));
        SimonConfig cfg = base;
        cfg.seed = derive_seed(seed, 3 * t + 2);
        cfg.on_elimination = [&](const EliminationSystem &sys, const MeshResult &m) {
            eliminations++;
            if (gf2_rank(sys.rows, n) + 1 == n) {
                rank_hits++;
            }
            if (base.on_elimination) {
                base.on_elimination(sys, m);
            }
        };
        size_t used;
        try {
            RunReport r = solve_simon(inst, cfg);
            used = r.data_elements;
            mc.successes++;
        } catch (const BudgetExceeded &e) {
            used = e.report().data_elements;
        }
        mc.data_used.push_back(used);
        sum += (double)used;
    }
    mc.success_rate = (double)mc.successes / (double)trials;
    mc.mean_data = sum / (double)trials;
    std::vector<size_t> sorted = mc.data_used;
    std::sort(sorted.begin(), sorted.end());
    size_t mid = sorted.size() / 2;
    mc.median_data = sorted.size() % 2 ? (double)sorted[mid] : 0.5 * (double)(sorted[mid - 1] + sorted[mid]);
    mc.window_rank_fraction = eliminations ? (double)rank_hits / (double)eliminations : 0.0;
    return mc;
}

DelayEstimate estimate_ripple_delay(double n_qubits, double frequency, double penalty, double iterations) {
    if (!(n_qubits > 0) || !(frequency > 0) || !(penalty > 0) || !(iterations > 0)) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "delay inputs must be positive");
    }
    double per = n_qubits / frequency * penalty;
    return {per, per * iterations};
}

}  // namespace ttm
