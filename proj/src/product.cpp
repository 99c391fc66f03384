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

#include "cb/product.hpp"

#include <stdexcept>

namespace cb {

std::pair<int64_t, int64_t> bezout(uint64_t n1, uint64_t n2) {
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("bezout requires positive lengths");
    if (gcd_u64(n1, n2) != 1) throw std::invalid_argument("bezout requires coprime lengths");
    // extended Euclid for x*n1 + y*n2 = 1
    int64_t r0 = static_cast<int64_t>(n1), r1 = static_cast<int64_t>(n2);
    int64_t x0 = 1, x1 = 0;
    while (r1 != 0) {
        int64_t qt = r0 / r1;
        int64_t r2 = r0 - qt * r1;
        int64_t x2 = x0 - qt * x1;
        r0 = r1;
        r1 = r2;
        x0 = x1;
        x1 = x2;
    }
    // r0 == 1; pick the representative of x0 mod n2 with minimal |a|,
    // preferring the negative one on ties.
    int64_t m2 = static_cast<int64_t>(n2);
    int64_t hi = ((x0 % m2) + m2) % m2; // in [0, n2)
    int64_t lo = hi - m2;               // in [-n2, 0)
    int64_t a = (hi < -lo) ? hi : lo;
    int64_t b = (1 - a * static_cast<int64_t>(n1)) / static_cast<int64_t>(n2);
    return {a, b};
}

Poly product_generator(const Poly& g1, const Poly& g2, uint64_t n1, uint64_t n2) {
    if (&g1.field() != &g2.field()) throw std::invalid_argument("component generators over different fields");
    if (gcd_u64(n1, n2) != 1) throw std::invalid_argument("component lengths must be coprime");
    const FieldContext& F = g1.field();
    if (!Poly::xn_minus_one(F, n1).divisible_by(g1) || !Poly::xn_minus_one(F, n2).divisible_by(g2))
        throw std::invalid_argument("component generator does not divide X^n - 1");
    const uint64_t N = n1 * n2;
    auto [a, b] = bezout(n1, n2);
    uint64_t e1 = mod_norm(b * static_cast<int64_t>(n2), N);
    uint64_t e2 = mod_norm(a * static_cast<int64_t>(n1), N);
    Poly prod = g1.substitute_power(e1, N) * g2.substitute_power(e2, N);
    // stay inside the quotient ring before taking the gcd
    Poly xn1 = Poly::xn_minus_one(F, N);
    prod = prod % xn1;
    return Poly::gcd(xn1, prod);
}

DefiningSet product_defining_set(const DefiningSet& da, const DefiningSet& db, uint64_t n1,
                                 uint64_t n2) {
    if (da.modulus() != n1 || db.modulus() != n2)
        throw std::invalid_argument("defining set moduli differ from lengths");
    if (gcd_u64(n1, n2) != 1) throw std::invalid_argument("component lengths must be coprime");
    const uint64_t N = n1 * n2;
    auto [a, b] = bezout(n1, n2);
    DefiningSet ba = transform_defining_set(da, b, SetTransform::multiply).with_modulus(N);
    DefiningSet ab = transform_defining_set(db, a, SetTransform::multiply).with_modulus(N);
    DefiningSet out = DefiningSet::empty(N);
    for (uint64_t i = 0; i < n2; ++i)
        out = out.united(transform_defining_set(ba, static_cast<int64_t>(i * n1), SetTransform::shift));
    for (uint64_t i = 0; i < n1; ++i)
        out = out.united(transform_defining_set(ab, static_cast<int64_t>(i * n2), SetTransform::shift));
    return out;
}

std::pair<uint64_t, uint64_t> crt_parameters(int64_t f1, int64_t f2, int64_t m1, int64_t m2,
                                             uint64_t n1, uint64_t n2) {
    if (gcd_u64(n1, n2) != 1) throw std::invalid_argument("component lengths must be coprime");
    const uint64_t N = n1 * n2;
    auto [a, b] = bezout(n1, n2);
    __int128 bb = static_cast<__int128>(b) * b * static_cast<int64_t>(n2);
    __int128 aa = static_cast<__int128>(a) * a * static_cast<int64_t>(n1);
    auto norm = [N](__int128 v) {
        __int128 m = static_cast<__int128>(N);
        __int128 r = v % m;
        if (r < 0) r += m;
        return static_cast<uint64_t>(r);
    };
    uint64_t f = norm(static_cast<__int128>(f1) * bb + static_cast<__int128>(f2) * aa);
    uint64_t m = norm(static_cast<__int128>(m1) * bb + static_cast<__int128>(m2) * aa);
    return {f, m};
}

ProductCode make_product(const CyclicCode& a, const CyclicCode& b) {
    if (a.q() != b.q()) throw std::invalid_argument("product codes require a common alphabet");
    if (gcd_u64(a.n(), b.n()) != 1) throw std::invalid_argument("product codes require coprime lengths");
    auto [ba, bb] = bezout(a.n(), b.n());
    const uint64_t N = a.n() * b.n();
    DefiningSet dc = product_defining_set(a.defining_set(), b.defining_set(), a.n(), b.n());
    Poly g = product_generator(a.generator(), b.generator(), a.n(), b.n());
    if (dc.size() != N - a.k() * b.k())
        throw std::logic_error("product defining set size mismatch");
    if (static_cast<uint64_t>(g.degree()) != dc.size())
        throw std::logic_error("product generator degree does not match the defining set");

    // gamma = alpha^nb * beta^na in the joint field. Then gamma^(b*i + j*na)
    // evaluates the A-factor at alpha^i, so the multiplied-and-shifted
    // component sets are exactly the roots of the product generator.
    const FieldContext& joint = joint_field(a.n(), b.n(), a.q());
    uint64_t alpha = FieldEmbedding::get(a.root_context(), joint).lift(a.root());
    uint64_t beta = FieldEmbedding::get(b.root_context(), joint).lift(b.root());
    uint64_t gamma = joint.mul(joint.pow(alpha, static_cast<int64_t>(b.n())),
                               joint.pow(beta, static_cast<int64_t>(a.n())));

    ProductCode pc{a, b, ba, bb, N, a.k() * b.k(), std::move(dc), std::move(g)};
    pc.root_ = gamma;
    pc.root_ctx_ = &joint;
    return pc;
}

const FieldContext& ProductCode::root_context() const { return *root_ctx_; }

CyclicCode ProductCode::as_cyclic_code() const {
    return CyclicCode::from_parts(a.q(), n, defining_set, generator, *root_ctx_, root_);
}

Poly interleave(const ProductCode& pc, const std::vector<std::vector<uint64_t>>& mat) {
    const uint64_t na = pc.a.n(), nb = pc.b.n();
    if (mat.size() != na) throw std::invalid_argument("matrix must have na rows");
    for (const auto& row : mat)
        if (row.size() != nb) throw std::invalid_argument("matrix rows must have nb entries");
    // columns (length na) must lie in A, rows (length nb) in B
    for (uint64_t v = 0; v < nb; ++v) {
        std::vector<uint64_t> col(na);
        for (uint64_t u = 0; u < na; ++u) col[u] = mat[u][v];
        if (!pc.a.contains(col))
            throw std::invalid_argument("column " + std::to_string(v) + " is not a codeword of A");
    }
    for (uint64_t u = 0; u < na; ++u) {
        if (!pc.b.contains(mat[u]))
            throw std::invalid_argument("row " + std::to_string(u) + " is not a codeword of B");
    }
    std::vector<uint64_t> c(pc.n, 0);
    for (uint64_t i = 0; i < pc.n; ++i) c[i] = mat[i % na][i % nb];
    return Poly(pc.a.alphabet(), std::move(c));
}

std::vector<std::vector<uint64_t>> deinterleave(const ProductCode& pc, const Poly& word) {
    const uint64_t na = pc.a.n(), nb = pc.b.n();
    if (word.degree() >= static_cast<int>(pc.n))
        throw std::invalid_argument("word is longer than the product code length");
    std::vector<std::vector<uint64_t>> mat(na, std::vector<uint64_t>(nb, 0));
    for (uint64_t i = 0; i < pc.n; ++i) mat[i % na][i % nb] = word[i];
    return mat;
}

} // namespace cb
