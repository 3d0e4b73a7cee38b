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

#include "ttm/report_json.h"

#include <sstream>

namespace ttm {

using nlohmann::ordered_json;

namespace {

ordered_json bit_list(const std::vector<BitVec> &v) {
    ordered_json a = ordered_json::array();
    for (const BitVec &b : v) {
        a.push_back(b.str());
    }
    return a;
}

ordered_json step_json(const StepRecord &s) {
    ordered_json j;
    j["x"] = s.x.str();
    j["f"] = s.f.str();
    j["y"] = s.y.str();
    j["no_change"] = s.no_change;
    ordered_json toggles = ordered_json::array();
    for (auto [circuit, bit] : s.s_toggles) {
        // One-based, as circuits and bits are numbered in the write-ups.
        toggles.push_back({{"circuit", circuit + 1}, {"bit", bit + 1}});
    }
    j["s_toggles"] = toggles;
    j["rows"] = bit_list(s.rows);
    j["rhs"] = s.rhs.str();
    j["eliminated"] = s.eliminated;
    j["candidate"] = s.candidate ? ordered_json(s.candidate->str()) : ordered_json(nullptr);
    j["verification"] = s.verification;
    return j;
}

}  // namespace

ordered_json run_report_json(const RunReport &r) {
    ordered_json j;
    j["command"] = "simon";
    j["n"] = r.n;
    j["secret"] = r.secret ? ordered_json(r.secret->str()) : ordered_json(nullptr);
    j["verified"] = r.verified;
    j["data_elements"] = r.data_elements;
    j["h_pulses"] = r.h_pulses;
    j["eliminations"] = r.eliminations;
    j["queries"] = r.queries;
    j["coax_attempts"] = r.coax_attempts;
    j["seed"] = r.seed;
    j["final_rows"] = bit_list(r.final_rows);
    j["final_rhs"] = r.final_rhs.str();
    if (!r.trace.empty()) {
        ordered_json t = ordered_json::array();
        for (const StepRecord &s : r.trace) {
            t.push_back(step_json(s));
        }
        j["trace"] = t;
    }
    return j;
}

ordered_json monte_carlo_json(const MonteCarloReport &r) {
    ordered_json j;
    j["command"] = "montecarlo";
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["successes"] = r.successes;
    j["success_rate"] = r.success_rate;
    j["median_data"] = r.median_data;
    j["mean_data"] = r.mean_data;
    j["window_rank_fraction"] = r.window_rank_fraction;
    j["bound"] = r.bound;
    return j;
}

ordered_json classification_json(const Classification &c) {
    ordered_json j;
    j["command"] = "deutsch";
    j["verdict"] = verdict_name(c.verdict);
    j["queries"] = c.queries;
    j["readout"] = to_string(c.readout);
    j["mode"] = quad_mode_name(classify_quad(c.readout));
    j["sum"] = c.sum;
    return j;
}

ordered_json bv_json(const BvResult &r) {
    ordered_json j;
    j["command"] = "bv";
    j["n"] = r.secret.size();
    j["secret"] = r.secret.str();
    j["queries"] = r.queries;
    ordered_json q = ordered_json::array();
    for (const QuadVector &v : r.readouts) {
        q.push_back(to_string(v));
    }
    j["readouts"] = q;
    return j;
}

ordered_json delay_json(const DelayEstimate &d) {
    ordered_json j;
    j["command"] = "delay";
    j["per_ripple_seconds"] = d.per_ripple;
    j["total_seconds"] = d.total;
    return j;
}

std::string csv_projection(const ordered_json &report) {
    std::ostringstream head;
    std::ostringstream row;
    bool first = true;
    for (const auto &[key, value] : report.items()) {
        if (value.is_array() || value.is_object()) {
            continue;
        }
        if (!first) {
            head << ',';
            row << ',';
        }
        first = false;
        head << key;
        if (value.is_string()) {
            row << value.get<std::string>();
        } else if (!value.is_null()) {
            row << value.dump();
        }
    }
    return head.str() + "\n" + row.str() + "\n";
}

}  // namespace ttm
