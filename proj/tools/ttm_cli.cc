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

// Command-line front end. Reports go to stdout, diagnostics to stderr.
// Exit status: 0 success, 1 algorithm failure, 2 usage error.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ttm/bv.h"
#include "ttm/deutsch.h"
#include "ttm/error.h"
#include "ttm/report_json.h"
#include "ttm/rng.h"
#include "ttm/simon.h"

namespace {

using nlohmann::ordered_json;

constexpr int EXIT_ALGORITHM = 1;
constexpr int EXIT_USAGE = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::optional<uint64_t> seed;
    size_t n = 0;
    std::string secret;
    std::string kind;
    std::string table;
    bool allow_wide = false;
    std::string replay;
    bool paper_instance = false;
    std::string walk = "single-bit";
    std::string mesh = "elimination";
    size_t cadence = 1;
    size_t max_data_mult = 50;
    bool trace = false;
    size_t trials = 100;
    double qubits = 1000;
    double frequency = 10e9;
    double penalty = 1;
    double iterations = 3000;
};

void emit(const ordered_json &report, const Options &o) {
    if (o.format == "csv") {
        std::cout << ttm::csv_projection(report);
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

uint64_t need_seed(const Options &o) {
    if (o.seed.has_value()) {
        return *o.seed;
    }
    if (const char *env = std::getenv("TTM_SEED")) {
        try {
            size_t used = 0;
            uint64_t v = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw UsageError("TTM_SEED is not an unsigned integer");
    }
    throw UsageError("--seed is required for this command (or set TTM_SEED)");
}

ttm::BitVec secret_or_random(const Options &o, uint64_t stream) {
    if (!o.secret.empty()) {
        ttm::BitVec s = ttm::BitVec::from_string(o.secret);
        if (o.n != 0 && o.n != s.size()) {
            throw UsageError("--secret length does not match --n");
        }
        return s;
    }
    if (o.n == 0) {
        throw UsageError("--n or --secret is required");
    }
    ttm::Rng rng(ttm::derive_seed(need_seed(o), stream));
    ttm::BitVec s(o.n);
    while (!s.any()) {
        for (size_t i = 0; i < o.n; i++) {
            s.set(i, rng.below(2) == 1);
        }
    }
    return s;
}

ttm::SimonConfig simon_config(const Options &o, size_t n) {
    ttm::SimonConfig c;
    c.walk = o.walk == "general" ? ttm::WalkMode::GENERAL : ttm::WalkMode::SINGLE_BIT;
    c.mesh = o.mesh == "relaxation" ? ttm::MeshMode::RELAXATION : ttm::MeshMode::ELIMINATION;
    c.cadence = o.cadence;
    c.max_data = o.max_data_mult * n;
    c.record_trace = o.trace;
    return c;
}

int run_deutsch(const Options &o) {
    if (o.kind.empty() == o.table.empty()) {
        throw UsageError("give exactly one of --kind and --table");
    }
    ttm::Classification c;
    if (!o.kind.empty()) {
        std::string kind = o.kind;
        std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char ch) { return std::toupper(ch); });
        c = ttm::deutsch_classify(ttm::build_single_cell(ttm::parse_cell_kind(kind)));
    } else {
        c = ttm::classify_table(ttm::parse_truth_table(o.table), o.allow_wide);
    }
    emit(ttm::classification_json(c), o);
    return 0;
}

int run_bv(const Options &o) {
    ttm::BitVec s = secret_or_random(o, 0);
    ttm::BvResult r = ttm::bv_recover(ttm::synthesize_cascade(s));
    ordered_json j = ttm::bv_json(r);
    if (o.seed || o.secret.empty()) {
        j["seed"] = need_seed(o);
    }
    emit(j, o);
    return r.secret == s ? 0 : EXIT_ALGORITHM;
}

int run_simon(const Options &o) {
    if (!o.replay.empty()) {
        std::vector<ttm::DataElement> trace = ttm::load_trace(o.replay);
        std::optional<ttm::SimonInstance> inst;
        if (o.paper_instance) {
            inst = ttm::paper_instance();
        }
        ttm::SimonConfig c = simon_config(o, trace[0].x.size());
        ttm::RunReport r = ttm::replay_trace(trace, inst ? &*inst : nullptr, c);
        emit(ttm::run_report_json(r), o);
        return r.secret ? 0 : EXIT_ALGORITHM;
    }
    uint64_t seed = need_seed(o);
    ttm::BitVec s = secret_or_random(o, 0);
    ttm::SimonInstance inst = ttm::make_instance(s.size(), s, ttm::derive_seed(seed, 1));
    ttm::SimonConfig c = simon_config(o, s.size());
    c.seed = seed;
    try {
        emit(ttm::run_report_json(ttm::solve_simon(inst, c)), o);
        return 0;
    } catch (const ttm::BudgetExceeded &e) {
        emit(ttm::run_report_json(e.report()), o);
        std::cerr << e.what() << "\n";
        return EXIT_ALGORITHM;
    }
}

int run_montecarlo(const Options &o) {
    if (o.n == 0) {
        throw UsageError("--n is required");
    }
    uint64_t seed = need_seed(o);
    ttm::MonteCarloReport r = ttm::monte_carlo(o.n, o.trials, seed, simon_config(o, o.n));
    emit(ttm::monte_carlo_json(r), o);
    return 0;
}

int run_delay(const Options &o) {
    emit(ttm::delay_json(ttm::estimate_ripple_delay(o.qubits, o.frequency, o.penalty, o.iterations)), o);
    return 0;
}

bool usage_code(ttm::ErrorCode c) {
    switch (c) {
        case ttm::ErrorCode::INVALID_ARGUMENT:
        case ttm::ErrorCode::PARSE:
        case ttm::ErrorCode::SECRET_ZERO:
        case ttm::ErrorCode::PROMISE_VIOLATION:
        case ttm::ErrorCode::REDUNDANT_INPUT:
            return true;
        default:
            return false;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Transistor circuit models of Deutsch, Bernstein-Vazirani and Simon."};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_seed = [&](CLI::App *sub) {
        sub->add_option_function<uint64_t>("--seed", [&](const uint64_t &v) { o.seed = v; }, "RNG seed");
    };
    auto add_walk = [&](CLI::App *sub) {
        sub->add_option("--walk", o.walk, "single-bit or general")->check(CLI::IsMember({"single-bit", "general"}));
        sub->add_option("--mesh", o.mesh, "elimination or relaxation")
            ->check(CLI::IsMember({"elimination", "relaxation"}));
        sub->add_option("--cadence", o.cadence, "eliminate after every k-th pulse")->check(CLI::PositiveNumber);
        sub->add_option("--max-data-mult", o.max_data_mult, "data budget as a multiple of n")
            ->check(CLI::PositiveNumber);
    };

    CLI::App *deutsch = app.add_subcommand("deutsch", "classify a cell kind or a promise table");
    deutsch->add_option("--kind", o.kind, "identity, negation, const0 or const1");
    deutsch->add_option("--table", o.table, "truth table, f(row 0) first");
    deutsch->add_flag("--allow-wide", o.allow_wide, "accept 3- and 4-input tables");
    add_format(deutsch);

    CLI::App *bv = app.add_subcommand("bv", "recover a hidden string in one query");
    bv->add_option("--n", o.n, "string length")->check(CLI::PositiveNumber);
    bv->add_option("--secret", o.secret, "explicit string, x_1 first");
    add_seed(bv);
    add_format(bv);

    CLI::App *simon = app.add_subcommand("simon", "find the period of a 2:1 function");
    simon->add_option("--n", o.n, "input width")->check(CLI::Range(1, 20));
    simon->add_option("--secret", o.secret, "explicit secret, x_1 first");
    simon->add_option("--replay", o.replay, "trace file of '<x> <f>' lines");
    simon->add_flag("--paper-instance", o.paper_instance, "check replay candidates against the worked example");
    simon->add_flag("--trace", o.trace, "include per-step records");
    add_seed(simon);
    add_walk(simon);
    add_format(simon);

    CLI::App *mc = app.add_subcommand("montecarlo", "success statistics over random instances");
    mc->add_option("--n", o.n, "input width")->check(CLI::Range(1, 20));
    mc->add_option("--trials", o.trials, "instances")->check(CLI::PositiveNumber);
    add_seed(mc);
    add_walk(mc);
    add_format(mc);

    CLI::App *delay = app.add_subcommand("delay", "ripple delay estimate");
    delay->add_option("--qubits", o.qubits, "qubits per ripple")->check(CLI::PositiveNumber);
    delay->add_option("--frequency", o.frequency, "clock in Hz")->check(CLI::PositiveNumber);
    delay->add_option("--penalty", o.penalty, "slowdown factor")->check(CLI::PositiveNumber);
    delay->add_option("--iterations", o.iterations, "ripples")->check(CLI::PositiveNumber);
    add_format(delay);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_USAGE;
    }

    try {
        if (*deutsch) {
            return run_deutsch(o);
        }
        if (*bv) {
            return run_bv(o);
        }
        if (*simon) {
            return run_simon(o);
        }
        if (*mc) {
            return run_montecarlo(o);
        }
        return run_delay(o);
    } catch (const UsageError &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const ttm::Error &e) {
        std::cerr << e.what() << "\n";
        return usage_code(e.code()) ? EXIT_USAGE : EXIT_ALGORITHM;
    }
}
