// Copyright 2026 The qrgcorr Authors
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

// Self-checks that compare the closed forms against the brute-force oracle
// and against each other. Used by the `verify` subcommand.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qrg/xstate.hpp"

namespace qrg {

/// Random valid X state: Dirichlet(1,1,1,1) populations, coherences
/// uniform within their positivity bounds (random sign).
XState sample_xstate(std::mt19937_64 &rng);

/// Like sample_xstate, restricted to states where the Pauli-basis
/// discord optimum is guaranteed (rejection sampling).
XState sample_guarded_xstate(std::mt19937_64 &rng);

struct VerifyConfig {
    std::uint64_t seed = 42;
    int random_states = 10000;
    int oracle_states = 200;
    /// Test hook: corrupts one comparison so the suite must fail.
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyConfig &cfg);

}  // namespace qrg
