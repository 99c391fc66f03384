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

#include "cb/field.hpp"
#include "cb/poly.hpp"

namespace cb {

/// Default cap on brute-force enumeration (number of codewords visited).
constexpr uint64_t kDefaultBruteForceBudget = uint64_t(1) << 24;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Set of residues modulo n. Used both for defining sets of cyclic codes
/// and for the transformed sets that product-code constructions consume.
class DefiningSet {
public:
    DefiningSet(uint64_t n, std::vector<int64_t> residues);
    static DefiningSet empty(uint64_t n) { return DefiningSet(n, {}); }

    uint64_t modulus() const { return n_; }
    const std::vector<uint64_t>& residues() const { return r_; }
    size_t size() const { return r_.size(); }
    bool contains(uint64_t residue) const;
    bool contains_signed(int64_t residue) const { return contains(mod_norm(residue, n_)); }

    /// Membership mask indexed by residue, for tight inner loops.
    std::vector<char> mask() const;

    /// Same residues read modulo a larger (or equal) modulus.
    DefiningSet with_modulus(uint64_t n) const;

    DefiningSet united(const DefiningSet& o) const;

    bool operator==(const DefiningSet& o) const { return n_ == o.n_ && r_ == o.r_; }

private:
    uint64_t n_;
    std::vector<uint64_t> r_; // sorted, unique, in [0, n)
};

enum class SetTransform { multiply, shift };

/// Elementwise i*z mod n or i+z mod n.
DefiningSet transform_defining_set(const DefiningSet& d, int64_t z, SetTransform mode);

/// Partition of Z_n into orbits under multiplication by q; each coset is
/// sorted ascending, cosets ordered by smallest member. Requires gcd(n, q) == 1.
std::vector<std::vector<uint64_t>> cyclotomic_cosets(uint64_t n, uint64_t q);

/// q-ary cyclic code of length n given by a defining set D (the exponents
/// i with g(root^i) = 0) and the generator polynomial g over GF(q).
/// The root is a fixed element of order n in the stored splitting context;
/// defining-set semantics are always relative to that root.
class CyclicCode {
public:
    static CyclicCode from_defining_set(uint64_t q, uint64_t n, const DefiningSet& d);
    static CyclicCode from_defining_set(uint64_t q, uint64_t n, std::vector<int64_t> residues);
    static CyclicCode from_generator(uint64_t q, uint64_t n, std::vector<uint64_t> gen);
    /// [1,1] code over GF(q); degenerate associate that reduces product
    /// constructions to the plain single-code case.
    static CyclicCode trivial(uint64_t q);
    /// Assemble from parts already known to be consistent (product codes
    /// carry their own root element).
    static CyclicCode from_parts(uint64_t q, uint64_t n, DefiningSet d, Poly g,
                                 const FieldContext& root_ctx, uint64_t root);

    uint64_t q() const { return q_; }
    uint64_t n() const { return n_; }
    uint64_t k() const { return k_; }
    const DefiningSet& defining_set() const { return d_; }
    const Poly& generator() const { return g_; }
    const FieldContext& alphabet() const { return *alphabet_; }
    const FieldContext& root_context() const { return *root_ctx_; }
    uint64_t root() const { return root_; }

    /// True when the word (length <= n over GF(q)) is a codeword.
    bool contains(const Poly& w) const;
    bool contains(std::span<const uint64_t> w) const;

private:
    CyclicCode(uint64_t q, uint64_t n, DefiningSet d, Poly g, const FieldContext& alphabet,
               const FieldContext& root_ctx, uint64_t root);

    uint64_t q_, n_, k_;
    DefiningSet d_;
    Poly g_;
    const FieldContext* alphabet_;
    const FieldContext* root_ctx_;
    uint64_t root_;
};

/// Non-systematic encoding: message * generator. Message length k over GF(q).
Poly encode(const CyclicCode& code, std::span<const uint64_t> message);

/// Exact minimum Hamming distance. Enumerates the smaller of the code and
/// (for binary codes) its dual, transforming dual weights through the
/// MacWilliams identity. `at_least` enables early exit once that weight
/// is reached by direct enumeration.
uint64_t min_distance_bruteforce(const CyclicCode& code,
                                 uint64_t budget = kDefaultBruteForceBudget,
                                 std::optional<uint64_t> at_least = std::nullopt);

/// A codeword of minimum weight; ties broken toward the smallest
/// coefficient sequence compared from the highest position down.
Poly min_weight_codeword(const CyclicCode& code, uint64_t budget = kDefaultBruteForceBudget);

/// Full weight distribution A_0..A_n (binary codes only).
std::vector<int64_t> weight_distribution(const CyclicCode& code,
                                         uint64_t budget = kDefaultBruteForceBudget);

} // namespace cb
