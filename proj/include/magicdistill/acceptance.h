// Copyright 2026 The magicdistill Authors
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


#ifndef MAGICDISTILL_ACCEPTANCE_H
#define MAGICDISTILL_ACCEPTANCE_H

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "magicdistill/tables.h"

namespace magicdistill {

struct CheckResult {
    int criterion = 0;
    std::string group;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    /// Group names to run; empty runs everything.
    std::vector<std::string> only;
    int workers = 1;
    uint64_t seed = 20260101;
    /// Directory for search checkpoints; empty keeps them in memory only.
    std::string checkpoint_dir;
    /// Called after each check (for streaming output).
    std::function<void(const CheckResult&)> on_result;
};

/// Group names in criterion order.
const std::vector<std::string>& check_groups();
/// Criterion number of a group (0 if unknown).
int group_criterion(const std::string& group);

/// Runs the selected checks against the given tables.
std::vector<CheckResult> run_acceptance(const Tables& tables, const AcceptanceOptions& options);

/// Groups that depend on the embedded tables and run in seconds.
const std::vector<std::string>& table_groups();

struct CorruptionOutcome {
    std::string location;
    std::vector<std::string> failed_checks;
};
/// Flips each nonzero sign of the tables in turn and reruns the table groups.
std::vector<CorruptionOutcome> negative_controls(const Tables& tables, int workers = 1);

void print_result(std::ostream& os, const CheckResult& r);

}  // namespace magicdistill

#endif  // MAGICDISTILL_ACCEPTANCE_H
