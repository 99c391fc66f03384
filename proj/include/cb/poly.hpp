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
#include <span>
#include <utility>
#include <vector>

#include "cb/field.hpp"

namespace cb {

/// Dense univariate polynomial over a field context. Coefficients are
/// element indices, constant term first; the canonical form carries no
/// trailing zeros, the zero polynomial is the empty sequence.
class Poly {
public:
    explicit Poly(const FieldContext& f) : f_(&f) {}
    Poly(const FieldContext& f, std::vector<uint64_t> coeffs);

    static Poly zero(const FieldContext& f) { return Poly(f); }
    static Poly one(const FieldContext& f) { return Poly(f, {1}); }
    static Poly x(const FieldContext& f) { return Poly(f, {0, 1}); }
    static Poly monomial(const FieldContext& f, size_t e, uint64_t c = 1);
    /// X^n - 1 over f.
    static Poly xn_minus_one(const FieldContext& f, uint64_t n);

    const FieldContext& field() const { return *f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    size_t weight() const;
    uint64_t operator[](size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    std::vector<uint64_t> coeffs_padded(size_t n) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint64_t c) const;
    Poly shifted(size_t k) const; // multiply by X^k
    Poly monic() const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    bool divisible_by(const Poly& d) const { return (*this % d).is_zero(); }

    uint64_t eval(uint64_t x) const;

    /// f(X^e) reduced mod X^n - 1; colliding exponents accumulate.
    Poly substitute_power(uint64_t e, uint64_t n) const;

    /// Coefficient-wise image under a field embedding.
    Poly lifted(const FieldEmbedding& emb) const;
    /// Coefficient-wise preimage; throws if any coefficient is outside
    /// the embedded subfield.
    Poly projected(const FieldEmbedding& emb) const;

    static Poly gcd(Poly a, Poly b); // monic

    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim();
    const FieldContext* f_;
    std::vector<uint64_t> c_;
};

} // namespace cb
