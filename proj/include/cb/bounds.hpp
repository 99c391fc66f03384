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
#include <string>
#include <vector>

#include "cb/cyclic.hpp"

namespace cb {

enum class BoundVariant { bch, ht, gen1, gen2 };

std::string to_string(BoundVariant v);
std::optional<BoundVariant> bound_variant_from_string(const std::string& s);

/// Machine-checkable witness for a lower bound on the minimum distance of
/// a cyclic code A, optionally relative to an associated code B.
///
/// The witnessed statement: for every i in [0, delta-2] and j in [0, nu],
/// the exponent f1 + i*m1 + j lies in D_A, or the companion exponent
/// (f2 + i*m2 + j for gen1, f2 + i*m2 for gen2) lies in D_B. The implied
/// bound value depends on the variant:
///   bch:  delta            (nu = 0)
///   ht:   delta + nu
///   gen1: ceil((delta + nu) / d_b)
///   gen2: ceil(delta / d_b) + nu
struct BoundCertificate {
    BoundVariant variant = BoundVariant::bch;
    uint64_t n_a = 0;
    uint64_t n_b = 1;  // 1 for bch/ht (no associate)
    uint64_t f1 = 0, f2 = 0;
    uint64_t m1 = 1, m2 = 1;
    uint64_t delta = 2, nu = 0;
    uint64_t d_b = 1; // minimum distance of B; 1 for bch/ht
    uint64_t value = 0;

    bool uses_associate() const { return variant == BoundVariant::gen1 || variant == BoundVariant::gen2; }
    /// Which theorem the parameters instantiate; nu = 0 degenerates both
    /// generalized variants to the BCH-bound generalization.
    std::string theorem() const;
};

uint64_t bound_value(BoundVariant v, uint64_t delta, uint64_t nu, uint64_t d_b);

struct BoundResult {
    uint64_t value = 1;
    std::optional<BoundCertificate> certificate;
};

/// Exact residue test of the vanishing condition described above.
bool check_vanishing_condition(const DefiningSet& da, const DefiningSet& db, int64_t f1, int64_t f2,
                               int64_t m1, int64_t m2, uint64_t delta, uint64_t nu,
                               BoundVariant variant);

/// Largest delta over all f and m coprime to n with delta-1 exponents
/// f + i*m inside D. Value 1 with no certificate for an empty set.
BoundResult bch_bound(const DefiningSet& d);

/// Largest delta + nu over progressions {f + i*m + j}. Ties prefer the
/// largest delta, then the smallest nu, then the smallest (m, f).
BoundResult ht_bound(const DefiningSet& d);

struct SearchRanges {
    std::optional<std::vector<uint64_t>> f1s, f2s, m1s, m2s;
};

/// Exhaustive certificate search for the generalized bounds: maximizes the
/// variant's bound value over all (f1, f2, m1, m2, delta, nu) subject to
/// the vanishing condition, with nu capped by nu + 1 <= delta - 1.
/// d_b must be the true minimum distance of B (caller-supplied).
BoundResult generalized_bound(const CyclicCode& a, const CyclicCode& b, uint64_t d_b,
                              BoundVariant variant, const SearchRanges& ranges = {});

struct VerifyResult {
    bool ok = false;
    std::string reason; // empty when ok
};

/// Re-checks certificate invariants and the residue condition, then runs a
/// randomized semantic check evaluating the certificate's coefficient sums
/// on random codeword pairs in the joint splitting field.
VerifyResult verify_certificate(const BoundCertificate& cert, const CyclicCode& a,
                                const CyclicCode* b = nullptr, unsigned samples = 50,
                                uint64_t seed = 0x5eed5eedULL);

} // namespace cb
