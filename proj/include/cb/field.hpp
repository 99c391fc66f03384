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
#include <stdexcept>
#include <vector>

namespace cb {

class FieldElement;

/// Arithmetic context for GF(p^m). Elements are integer indices in
/// [0, p^m) encoding their coefficient vector base p, little endian
/// (constant term in the least significant digit).
///
/// Contexts are immutable after construction and interned by make_field(),
/// so pointer equality decides whether two elements live in the same field.
class FieldContext {
public:
    uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    uint64_t size() const { return size_; }

    /// Monic irreducible modulus, m+1 coefficients over GF(p), constant first.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    /// Smallest-index element of multiplicative order p^m - 1.
    uint64_t generator_index() const { return generator_; }

    // Raw arithmetic on element indices.
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;
    uint64_t div(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, int64_t e) const;

    /// Multiplicative order of a nonzero element.
    uint64_t element_order(uint64_t a) const;

    /// True when a lies in the subfield of q elements (a^q == a).
    bool in_subfield(uint64_t a, uint64_t q) const;

    FieldElement element(uint64_t index) const;
    FieldElement zero() const;
    FieldElement one() const;

    bool operator==(const FieldContext& other) const { return this == &other; }

private:
    FieldContext(uint64_t p, unsigned m);
    friend const FieldContext& make_field(uint64_t p, unsigned m);

    uint64_t mul_generic(uint64_t a, uint64_t b) const;

    uint64_t p_;
    unsigned m_;
    uint64_t size_;
    std::vector<uint32_t> modulus_;
    uint64_t modulus_mask2_ = 0; // bitmask of modulus, p == 2 only
    uint64_t generator_ = 0;
    std::vector<uint64_t> order_prime_factors_; // prime factors of p^m - 1
    bool use_tables_ = false;
    std::vector<uint32_t> exp_; // exp_[i] = g^i, i in [0, size-1)
    std::vector<uint32_t> log_; // log_[x] for x >= 1
};

/// Value type for a single field element; comparable and combinable only
/// within one context.
class FieldElement {
public:
    FieldElement() : ctx_(nullptr), v_(0) {}
    FieldElement(const FieldContext& ctx, uint64_t index) : ctx_(&ctx), v_(index) {
        if (index >= ctx.size()) throw std::invalid_argument("field element index out of range");
    }

    uint64_t index() const { return v_; }
    const FieldContext& context() const { return *ctx_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return with(ctx(o).add(v_, o.v_)); }
    FieldElement operator-(const FieldElement& o) const { return with(ctx(o).sub(v_, o.v_)); }
    FieldElement operator*(const FieldElement& o) const { return with(ctx(o).mul(v_, o.v_)); }
    FieldElement operator/(const FieldElement& o) const { return with(ctx(o).div(v_, o.v_)); }
    FieldElement operator-() const { return with(ctx_->neg(v_)); }
    FieldElement inverse() const { return with(ctx_->inv(v_)); }
    FieldElement pow(int64_t e) const { return with(ctx_->pow(v_, e)); }
    uint64_t order() const { return ctx_->element_order(v_); }

    bool operator==(const FieldElement& o) const { return ctx_ == o.ctx_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldElement with(uint64_t v) const { return FieldElement(*ctx_, v); }
    const FieldContext& ctx(const FieldElement& o) const {
        if (ctx_ == nullptr || o.ctx_ == nullptr) throw std::domain_error("uninitialized field element");
        if (ctx_ != o.ctx_) throw std::domain_error("field elements belong to different contexts");
        return *ctx_;
    }
    const FieldContext* ctx_;
    uint64_t v_;
};

/// Returns the interned context for GF(p^m) with the deterministic
/// lowest-index monic irreducible modulus. Throws for non-prime p or
/// when p^m exceeds the size ceiling of 2^32.
const FieldContext& make_field(uint64_t p, unsigned m);

/// Smallest s >= 1 with q^s = 1 (mod n); requires gcd(n, q) == 1.
unsigned splitting_degree(uint64_t n, uint64_t q);

/// Deterministic element of exact multiplicative order n; requires
/// n | p^m - 1. Computed as generator^((p^m - 1)/n).
FieldElement element_of_order(const FieldContext& ctx, uint64_t n);

/// Factors q as p^e with p prime; throws if q is not a prime power.
std::pair<uint64_t, unsigned> factor_prime_power(uint64_t q);

/// Splitting field of X^n - 1 over GF(q): GF(p^(e*s)) with s = splitting_degree(n, q).
const FieldContext& splitting_field(uint64_t n, uint64_t q);

/// Smallest common field containing elements of order na and nb over GF(q):
/// GF(q^s) with s = lcm of the two splitting degrees.
const FieldContext& joint_field(uint64_t na, uint64_t nb, uint64_t q);

/// Canonical embedding of a small field into a big one whose degree it
/// divides. The map sends the small field's residue class of X to the
/// smallest-index root of the small modulus inside the big field.
class FieldEmbedding {
public:
    static const FieldEmbedding& get(const FieldContext& small, const FieldContext& big);

    const FieldContext& small() const { return *small_; }
    const FieldContext& big() const { return *big_; }

    uint64_t lift(uint64_t small_index) const;
    /// Preimage under the embedding, or nullopt when the element is
    /// outside the embedded subfield.
    std::optional<uint64_t> project(uint64_t big_index) const;

private:
    FieldEmbedding(const FieldContext& small, const FieldContext& big);
    const FieldContext* small_;
    const FieldContext* big_;
    std::vector<uint64_t> image_;          // indexed by small element
    std::vector<std::pair<uint64_t, uint64_t>> preimage_; // sorted (big, small)
};

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64(uint64_t a, uint64_t b);
bool is_prime_u64(uint64_t n);
/// Canonical residue of v modulo n, in [0, n).
uint64_t mod_norm(int64_t v, uint64_t n);

} // namespace cb
