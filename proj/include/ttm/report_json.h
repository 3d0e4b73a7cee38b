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

#ifndef TTM_REPORT_JSON_H
#define TTM_REPORT_JSON_H

#include <string>

#include "json.hpp"
#include "ttm/bv.h"
#include "ttm/deutsch.h"
#include "ttm/simon.h"

namespace ttm {

/// Bit strings print x_1 first. The trace is included only when recorded.
nlohmann::ordered_json run_report_json(const RunReport &r);
nlohmann::ordered_json monte_carlo_json(const MonteCarloReport &r);
nlohmann::ordered_json classification_json(const Classification &c);
nlohmann::ordered_json bv_json(const BvResult &r);
nlohmann::ordered_json delay_json(const DelayEstimate &d);

/// Header line and one value line over the scalar fields of `report`.
/// Arrays and objects are left out.
std::string csv_projection(const nlohmann::ordered_json &report);

}  // namespace ttm

#endif
