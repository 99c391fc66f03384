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
#include <span>
#include <string>
#include <vector>

#include "cb/bounds.hpp"
#include "cb/cyclic.hpp"
#include "cb/poly.hpp"

namespace cb {

/// nu+1 syndrome sequences of length delta-1 over the joint field, together
/// with everything downstream stages need: the certificate parameters, the
/// lifted weight-d_b word b(X) and the root elements alpha and beta.
struct SyndromeSet {
    const FieldContext* field = nullptr;
    uint64_t alpha = 0, beta = 0;
    uint64_t n_a = 0, n_b = 1;
    uint64_t q = 2;
    uint64_t f1 = 0, f2 = 0, m1 = 1, m2 = 1, delta = 2, nu = 0, d_b = 1;
    std::vector<uint64_t> b_support;       // exponents z with b_z != 0
    std::vector<uint64_t> b_coeffs;        // lifted coefficients, aligned with b_support
    std::vector<std::vector<uint64_t>> seq; // seq[j][i], j in [0, nu], i in [0, delta-2]

    bool all_zero() const;
};

/// Error locator polynomial over the joint field, normalized to Lambda(0) = 1.
struct ErrorLocator {
    Poly lambda;
    uint64_t shift_register_length = 0; // degree found by synthesis
};

struct DecodeResult {
    enum class Status { corrected, failure };
    Status status = Status::failure;
    std::vector<uint64_t> error_positions;
    std::vector<uint64_t> error_values; // over GF(q)
    std::vector<uint64_t> corrected;    // length n_a over GF(q)
    std::vector<std::pair<uint64_t, uint64_t>> rank_audit; // (t, syndrome matrix rank)
    std::string reason; // on failure
};

/// floor((delta + nu - 1) / (2 d_b)); requires a gen1 certificate.
uint64_t decoding_radius(const BoundCertificate& cert);
uint64_t decoding_radius(uint64_t delta, uint64_t nu, uint64_t d_b);

/// S_i^(j) = r(alpha^(f1+i*m1+j)) * b(beta^(f2+i*m2+j)). The codeword part
/// cancels under the certificate's vanishing condition, so the sequences
/// depend only on the error pattern.
SyndromeSet compute_syndromes(const CyclicCode& a, std::span<const uint64_t> received,
                              const Poly& b_word, const BoundCertificate& cert);

/// Shortest LFSR jointly generating all given sequences of equal length:
/// returns (L, Lambda) with Lambda_0 = 1 and sum_k Lambda_k s[j][i-k] = 0
/// for every j and every i in [L, len).
std::pair<uint64_t, std::vector<uint64_t>> synthesize_joint_lfsr(
    const FieldContext& field, const std::vector<std::vector<uint64_t>>& sequences);

/// Joint key-equation solve for a trial error count t: accepts the
/// synthesized locator when its length fits d_b * t and the residual
/// coefficients d_b*t .. delta-2 of Lambda * S^(j) all vanish.
std::optional<ErrorLocator> solve_key_equation(const SyndromeSet& s, uint64_t t);

/// Rank over the joint field of the stacked syndrome matrix with nu+1
/// blocks of shape (delta-1-d_b*t) x (d_b*t).
uint64_t syndrome_matrix_rank(const SyndromeSet& s, uint64_t t);

/// Positions p with Lambda((alpha^(p*m1) * beta^(z*m2))^-1) = 0 for every z
/// in the support of b. Fails unless exactly deg(Lambda)/d_b positions match.
std::optional<std::vector<uint64_t>> find_error_positions(const ErrorLocator& loc,
                                                          const SyndromeSet& s);

/// Error values over GF(q) solving the syndrome system for the located
/// positions; fails on an inconsistent system or values outside GF(q).
std::optional<std::vector<uint64_t>> recover_error_values(const std::vector<uint64_t>& positions,
                                                          const SyndromeSet& s);

struct DecodeOptions {
    bool audit_rank = false;
    std::optional<Poly> b_word; // override for the weight-d_b codeword of B
};

/// Full pipeline: syndromes, then ascending trial error counts t <= tau with
/// key equation, root finding, value recovery and a final re-encode check.
DecodeResult decode(const CyclicCode& a, std::span<const uint64_t> received,
                    const BoundCertificate& cert, const CyclicCode& b,
                    const DecodeOptions& options = {});

} // namespace cb
