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

#include "cb/sweep.hpp"

#include <atomic>
#include <thread>

namespace cb {

namespace {

struct Job {
    uint64_t n;
    std::vector<int64_t> defining_set;
};

} // namespace

std::vector<SweepRecord> sweep_binary_codes(const SweepOptions& options) {
    // enumerate all coset unions per odd length
    std::vector<Job> jobs;
    for (uint64_t n = options.min_n | 1; n <= options.max_n; n += 2) {
        auto cosets = cyclotomic_cosets(n, 2);
        const size_t m = cosets.size();
        if (m > 20) continue; // cannot happen at desk scale
        for (uint64_t pick = 0; pick < (uint64_t(1) << m); ++pick) {
            std::vector<int64_t> d;
            for (size_t c = 0; c < m; ++c)
                if (pick >> c & 1)
                    for (uint64_t r : cosets[c]) d.push_back(static_cast<int64_t>(r));
            if (d.size() == n) continue; // zero code
            jobs.push_back({n, std::move(d)});
        }
    }

    // associate codes: single parity check codes of odd length
    std::vector<CyclicCode> spc;
    for (uint64_t nb = 3; nb <= options.max_nb; nb += 2)
        spc.push_back(CyclicCode::from_defining_set(2, nb, {0}));

    // warm the shared splitting fields before spawning workers (the bound
    // searches themselves are residue-level and need no field arithmetic)
    for (uint64_t n = options.min_n | 1; n <= options.max_n; n += 2) splitting_field(n, 2);

    std::vector<SweepRecord> records(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= jobs.size()) return;
            const Job& job = jobs[idx];
            CyclicCode code = CyclicCode::from_defining_set(2, job.n, job.defining_set);
            SweepRecord rec;
            rec.n = job.n;
            rec.defining_set = code.defining_set().residues();
            rec.k = code.k();
            rec.d_true = min_distance_bruteforce(code, options.budget);
            rec.bch = bch_bound(code.defining_set()).value;
            rec.ht = ht_bound(code.defining_set()).value;
            for (const auto& b : spc) {
                if (gcd_u64(code.n(), b.n()) != 1) continue;
                rec.has_associate = true;
                rec.gen1 = std::max(rec.gen1, generalized_bound(code, b, 2, BoundVariant::gen1).value);
                rec.gen2 = std::max(rec.gen2, generalized_bound(code, b, 2, BoundVariant::gen2).value);
            }
            rec.sound = rec.bch <= rec.ht && rec.ht <= rec.d_true &&
                        (!rec.has_associate || (rec.gen1 <= rec.d_true && rec.gen2 <= rec.d_true));
            records[idx] = std::move(rec);
        }
    };
    unsigned nthreads = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

} // namespace cb
