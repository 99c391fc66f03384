/*
 * Copyright 2026 The cycbound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "cb/bounds.hpp"
#include "cb/cyclic.hpp"

namespace cb {

struct SweepOptions {
    uint64_t min_n = 7;
    uint64_t max_n = 35;
    uint64_t max_nb = 9;  // single parity check associates of coprime length up to this
    unsigned threads = 0; // 0 = hardware concurrency
    uint64_t budget = kDefaultBruteForceBudget;
};

/// One binary cyclic code checked against the distance oracle.
struct SweepRecord {
    uint64_t n = 0;
    std::vector<uint64_t> defining_set;
    uint64_t k = 0;
    uint64_t d_true = 0;
    uint64_t bch = 0;
    uint64_t ht = 0;
    uint64_t gen1 = 0; // best over the SPC family; 0 when no coprime associate exists
    uint64_t gen2 = 0;
    bool has_associate = false;
    bool sound = false; // bch <= ht <= d and gen1, gen2 <= d
};

/// Every binary cyclic code of odd length in [min_n, max_n] (all unions of
/// cyclotomic cosets except the zero code), with all four bounds checked
/// against the brute-force distance. Records are in deterministic order
/// regardless of the thread count.
std::vector<SweepRecord> sweep_binary_codes(const SweepOptions& options = {});

} // namespace cb
