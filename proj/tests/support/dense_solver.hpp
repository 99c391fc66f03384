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
#include <optional>
#include <vector>

#include "cb/field.hpp"

// Test oracle: solves the stacked key-equation system directly by Gaussian
// elimination. For each sequence j and row r in [0, len - L):
//     sum_{k=1..L} Lambda_k S^(j)[r + L - k] = -S^(j)[r + L]
// Unknowns Lambda_1..Lambda_L with Lambda_0 = 1. Returns the full locator
// [1, Lambda_1, ..., Lambda_L] (trailing zeros trimmed) when the system is
// consistent with a unique solution, nullopt otherwise. Kept deliberately
// independent of the shift-register synthesis it cross-checks.
inline std::optional<std::vector<uint64_t>> dense_key_equation_solve(
    const cb::FieldContext& F, const std::vector<std::vector<uint64_t>>& seqs, uint64_t L) {
    const uint64_t len = seqs.empty() ? 0 : seqs[0].size();
    if (L > len) return std::nullopt;
    if (L == 0) {
        for (const auto& s : seqs)
            for (uint64_t v : s)
                if (v) return std::nullopt;
        return std::vector<uint64_t>{1};
    }
    const uint64_t rows_per = len - L;
    std::vector<std::vector<uint64_t>> m(seqs.size() * rows_per,
                                         std::vector<uint64_t>(L + 1, 0));
    for (size_t j = 0; j < seqs.size(); ++j) {
        for (uint64_t r = 0; r < rows_per; ++r) {
            auto& row = m[j * rows_per + r];
            for (uint64_t k = 1; k <= L; ++k) row[k - 1] = seqs[j][r + L - k];
            row[L] = F.neg(seqs[j][r + L]); // augmented column
        }
    }
    // forward elimination with partial pivoting by first nonzero
    uint64_t rank = 0;
    std::vector<uint64_t> pivot_col;
    for (uint64_t col = 0; col < L && rank < m.size(); ++col) {
        size_t pr = rank;
        while (pr < m.size() && m[pr][col] == 0) ++pr;
        if (pr == m.size()) return std::nullopt; // rank deficient: not unique
        std::swap(m[rank], m[pr]);
        uint64_t inv = F.inv(m[rank][col]);
        for (auto& v : m[rank]) v = F.mul(v, inv);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            uint64_t factor = m[r][col];
            for (uint64_t c = col; c <= L; ++c)
                m[r][c] = F.sub(m[r][c], F.mul(factor, m[rank][c]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t r = rank; r < m.size(); ++r)
        if (m[r][L] != 0) return std::nullopt; // inconsistent
    std::vector<uint64_t> lambda(L + 1, 0);
    lambda[0] = 1;
    for (uint64_t i = 0; i < rank; ++i) lambda[pivot_col[i] + 1] = m[i][L];
    while (lambda.size() > 1 && lambda.back() == 0) lambda.pop_back();
    return lambda;
}
