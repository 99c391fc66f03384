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

#include "cb/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cb {

Poly::Poly(const FieldContext& f, std::vector<uint64_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (uint64_t c : c_)
        if (c >= f.size()) throw std::invalid_argument("polynomial coefficient out of field range");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const FieldContext& f, size_t e, uint64_t c) {
    std::vector<uint64_t> v(e + 1, 0);
    v[e] = c;
    return Poly(f, std::move(v));
}

Poly Poly::xn_minus_one(const FieldContext& f, uint64_t n) {
    std::vector<uint64_t> v(n + 1, 0);
    v[0] = f.neg(1);
    v[n] = 1;
    return Poly(f, std::move(v));
}

size_t Poly::weight() const {
    size_t w = 0;
    for (uint64_t c : c_)
        if (c) ++w;
    return w;
}

std::vector<uint64_t> Poly::coeffs_padded(size_t n) const {
    if (c_.size() > n) throw std::invalid_argument("polynomial does not fit requested length");
    std::vector<uint64_t> v = c_;
    v.resize(n, 0);
    return v;
}

Poly Poly::operator+(const Poly& o) const {
    if (f_ != o.f_) throw std::domain_error("polynomials over different fields");
    Poly r(*f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->add((*this)[i], o[i]);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (f_ != o.f_) throw std::domain_error("polynomials over different fields");
    Poly r(*f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->sub((*this)[i], o[i]);
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (f_ != o.f_) throw std::domain_error("polynomials over different fields");
    if (is_zero() || o.is_zero()) return Poly(*f_);
    Poly r(*f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
        }
    }
    r.trim();
    return r;
}

Poly Poly::scaled(uint64_t c) const {
    Poly r(*f_);
    if (c == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = f_->mul(x, c);
    return r;
}

Poly Poly::shifted(size_t k) const {
    if (is_zero()) return Poly(*f_);
    Poly r(*f_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial cannot be made monic");
    return scaled(f_->inv(c_.back()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (f_ != d.f_) throw std::domain_error("polynomials over different fields");
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(*f_), r = *this;
    const int dd = d.degree();
    if (degree() < dd) return {q, r};
    q.c_.assign(c_.size() - d.c_.size() + 1, 0);
    uint64_t lead_inv = f_->inv(d.c_.back());
    while (!r.is_zero() && r.degree() >= dd) {
        size_t shift = static_cast<size_t>(r.degree() - dd);
        uint64_t coef = f_->mul(r.c_.back(), lead_inv);
        q.c_[shift] = coef;
        for (size_t i = 0; i < d.c_.size(); ++i)
            r.c_[shift + i] = f_->sub(r.c_[shift + i], f_->mul(coef, d.c_[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

uint64_t Poly::eval(uint64_t x) const {
    uint64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::substitute_power(uint64_t e, uint64_t n) const {
    if (n == 0) throw std::invalid_argument("reduction modulus must be positive");
    Poly r(*f_);
    r.c_.assign(n, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        uint64_t pos = (static_cast<unsigned __int128>(i) * e) % n;
        r.c_[pos] = f_->add(r.c_[pos], c_[i]);
    }
    r.trim();
    return r;
}

Poly Poly::lifted(const FieldEmbedding& emb) const {
    if (&emb.small() != f_) throw std::domain_error("embedding domain mismatch");
    Poly r(emb.big());
    r.c_.reserve(c_.size());
    for (uint64_t c : c_) r.c_.push_back(emb.lift(c));
    r.trim();
    return r;
}

Poly Poly::projected(const FieldEmbedding& emb) const {
    if (&emb.big() != f_) throw std::domain_error("embedding codomain mismatch");
    Poly r(emb.small());
    r.c_.reserve(c_.size());
    for (uint64_t c : c_) {
        auto s = emb.project(c);
        if (!s) throw std::domain_error("coefficient lies outside the subfield");
        r.c_.push_back(*s);
    }
    r.trim();
    return r;
}

Poly Poly::gcd(Poly a, Poly b) {
    if (&a.field() != &b.field()) throw std::domain_error("polynomials over different fields");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

} // namespace cb
