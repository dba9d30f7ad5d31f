// Copyright 2026 The weaklab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "weaklab/cli/config.hpp"

namespace weaklab::cli {

inline constexpr const char *kArtifactVersion = "0.1.0";

enum ExitStatus : int {
    kExitPass = 0,
    kExitToleranceFailure = 1,
    kExitConfigError = 2,
    kExitNumericalError = 3,
};

/// value <= tolerance
struct Check {
    std::string name;
    double value;
    double tolerance;
    bool passed;
};

/// A flat CSV table with pre-rendered cells.
struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Outcome {
    nlohmann::json report;
    std::vector<Check> checks;
    std::vector<Table> tables;

    bool passed() const;
};

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

/// Runs the experiment named in `cfg`. Library failures propagate as
/// weaklab::Error.
Outcome execute(const RunConfig &cfg);

nlohmann::json run_record(const RunConfig &cfg, const Outcome &outcome,
                          const std::string &timestamp);

/// Writes run.json and the CSV tables (plus summary.csv) into cfg.output_dir.
void write_outputs(const RunConfig &cfg, const Outcome &outcome, const nlohmann::json &record);

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace weaklab::cli
