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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cb/product.hpp"

using namespace cb;

namespace {

const std::vector<uint64_t> kProductSet17x3 = {
    0,  3,  5,  6,  7,  9,  10, 11, 12, 14, 15, 18, 20, 21, 22, 23, 24,
    27, 28, 29, 30, 31, 33, 36, 37, 39, 40, 41, 42, 44, 45, 46, 48};

CyclicCode code_a17() { return CyclicCode::from_defining_set(2, 17, {1, 2, 4, 8, 9, 13, 15, 16}); }
CyclicCode code_b3() { return CyclicCode::from_defining_set(2, 3, {0}); }

// Random product codeword as a sum of rank-one products of component
// codewords; spans the whole product code.
std::vector<std::vector<uint64_t>> random_product_matrix(const ProductCode& pc,
                                                         std::mt19937_64& rng) {
    const FieldContext& F = pc.a.alphabet();
    std::vector<std::vector<uint64_t>> mat(pc.a.n(), std::vector<uint64_t>(pc.b.n(), 0));
    for (int term = 0; term < 3; ++term) {
        std::vector<uint64_t> ma(pc.a.k()), mb(pc.b.k());
        for (auto& s : ma) s = rng() % pc.a.q();
        for (auto& s : mb) s = rng() % pc.b.q();
        auto ca = encode(pc.a, ma).coeffs_padded(pc.a.n());
        auto cb_ = encode(pc.b, mb).coeffs_padded(pc.b.n());
        for (uint64_t u = 0; u < pc.a.n(); ++u)
            for (uint64_t v = 0; v < pc.b.n(); ++v)
                mat[u][v] = F.add(mat[u][v], F.mul(ca[u], cb_[v]));
    }
    return mat;
}

std::vector<uint64_t> generator_roots(const ProductCode& pc) {
    const FieldContext& F = pc.root_context();
    Poly g = pc.generator.lifted(FieldEmbedding::get(pc.a.alphabet(), F));
    std::vector<uint64_t> roots;
    for (uint64_t i = 0; i < pc.n; ++i)
        if (g.eval(F.pow(pc.root(), static_cast<int64_t>(i))) == 0) roots.push_back(i);
    return roots;
}

} // namespace

TEST_CASE("bezout canonicalization") {
    CHECK(bezout(17, 3) == std::make_pair(int64_t(-1), int64_t(6)));
    CHECK(bezout(1, 9) == std::make_pair(int64_t(1), int64_t(0)));
    CHECK(bezout(5, 3) == std::make_pair(int64_t(-1), int64_t(2)));
    CHECK(bezout(3, 5) == std::make_pair(int64_t(2), int64_t(-1)));
    CHECK_THROWS_AS(bezout(6, 3), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        uint64_t n1 = 1 + rng() % 50, n2 = 1 + rng() % 50;
        if (gcd_u64(n1, n2) != 1) continue;
        auto [a, b] = bezout(n1, n2);
        CHECK(a * static_cast<int64_t>(n1) + b * static_cast<int64_t>(n2) == 1);
        CHECK(std::abs(a) <= static_cast<int64_t>(n2));
    }
}

TEST_CASE("product defining set reproduces the worked example") {
    auto dc = product_defining_set(DefiningSet(17, {1, 2, 4, 8, -8, -4, -2, -1}),
                                   DefiningSet(3, {0}), 17, 3);
    CHECK(dc.modulus() == 51);
    CHECK(dc.residues() == kProductSet17x3);
    CHECK(dc.size() == 33);
    CHECK(dc.size() == 51 - 9 * 2); // n - ka*kb
}

TEST_CASE("empty component sets give an empty product set") {
    auto dc = product_defining_set(DefiningSet::empty(5), DefiningSet::empty(3), 5, 3);
    CHECK(dc.size() == 0);
}

TEST_CASE("crt parameters") {
    CHECK(crt_parameters(-4, -1, 1, 1, 17, 3) == std::make_pair(uint64_t(10), uint64_t(23)));

    // zero offsets degenerate to f = 0, m = b^2 n2 + a^2 n1
    auto [f0, m0] = crt_parameters(0, 0, 1, 1, 17, 3);
    CHECK(f0 == 0);
    CHECK(m0 == mod_norm(6 * 6 * 3 + (-1) * (-1) * 17, 51));

    // congruence property: f + i*m = b(f1 + i*m1) mod n1 and a(f2 + i*m2) mod n2
    auto [f, m] = crt_parameters(-4, -1, 1, 1, 17, 3);
    auto [a, b] = bezout(17, 3);
    for (int64_t i = 0; i <= 50; ++i) {
        int64_t lhs = static_cast<int64_t>(f) + i * static_cast<int64_t>(m);
        CHECK(mod_norm(lhs, 17) == mod_norm(b * (-4 + i * 1), 17));
        CHECK(mod_norm(lhs, 3) == mod_norm(a * (-1 + i * 1), 3));
    }

    // the same congruences on random inputs
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        uint64_t n1 = 2 + rng() % 30, n2 = 2 + rng() % 30;
        if (gcd_u64(n1, n2) != 1) continue;
        int64_t f1 = static_cast<int64_t>(rng() % (2 * n1)) - static_cast<int64_t>(n1);
        int64_t f2 = static_cast<int64_t>(rng() % (2 * n2)) - static_cast<int64_t>(n2);
        int64_t m1 = static_cast<int64_t>(1 + rng() % (n1 - 1));
        int64_t m2 = static_cast<int64_t>(1 + rng() % (n2 - 1));
        auto [ff, mm] = crt_parameters(f1, f2, m1, m2, n1, n2);
        auto [aa, bb] = bezout(n1, n2);
        for (int64_t i = 0; i < 8; ++i) {
            int64_t lhs = static_cast<int64_t>(ff) + i * static_cast<int64_t>(mm);
            CHECK(mod_norm(lhs, n1) == mod_norm(bb * (f1 + i * m1), n1));
            CHECK(mod_norm(lhs, n2) == mod_norm(aa * (f2 + i * m2), n2));
        }
    }
}

TEST_CASE("product generator of the worked example has degree 33 with roots on the set") {
    ProductCode pc = make_product(code_a17(), code_b3());
    CHECK(pc.n == 51);
    CHECK(pc.k == 18);
    CHECK(pc.bezout_a == -1);
    CHECK(pc.bezout_b == 6);
    CHECK(pc.generator.degree() == 33);
    CHECK(pc.defining_set.residues() == kProductSet17x3);
    CHECK(generator_roots(pc) == pc.defining_set.residues());
}

TEST_CASE("trivial component B drops out of the generator formula") {
    // B = [3,3] full code, g2 = 1
    CyclicCode a = code_a17();
    CyclicCode b = CyclicCode::from_defining_set(2, 3, std::vector<int64_t>{});
    ProductCode pc = make_product(a, b);
    CHECK(pc.k == 9 * 3);
    CHECK(pc.generator.degree() == 51 - 27);
    // defining set is the union of the shifted copies of b*D_A alone
    auto dc = product_defining_set(a.defining_set(), DefiningSet::empty(3), 17, 3);
    CHECK(pc.defining_set == dc);
}

TEST_CASE("generator and defining-set routes agree on [3,2]x[5,4]") {
    CyclicCode a = CyclicCode::from_defining_set(2, 3, {0});
    CyclicCode b = CyclicCode::from_defining_set(2, 5, {0});
    ProductCode pc = make_product(a, b);
    CHECK(pc.n == 15);
    CHECK(pc.k == 8);
    CHECK(pc.generator.degree() == 7);
    CHECK(generator_roots(pc) == pc.defining_set.residues());
}

TEST_CASE("product distance is multiplicative at desk scale") {
    CyclicCode a = CyclicCode::from_defining_set(2, 3, {0});
    CyclicCode b = CyclicCode::from_defining_set(2, 5, {0});
    ProductCode pc = make_product(a, b);
    CHECK(min_distance_bruteforce(pc.as_cyclic_code()) == 4); // 2 * 2
}

TEST_CASE("interleaving is a bijection that lands on the defining set") {
    ProductCode pc = make_product(code_a17(), code_b3());
    std::mt19937_64 rng(23);

    // zero matrix maps to the zero word
    std::vector<std::vector<uint64_t>> zero(17, std::vector<uint64_t>(3, 0));
    CHECK(interleave(pc, zero).is_zero());

    const FieldContext& F = pc.root_context();
    const FieldEmbedding& lift = FieldEmbedding::get(pc.a.alphabet(), F);
    for (int trial = 0; trial < 25; ++trial) {
        auto mat = random_product_matrix(pc, rng);
        Poly word = interleave(pc, mat);
        CHECK(deinterleave(pc, word) == mat);
        // interleaved word vanishes at gamma^i for every i in the product set
        Poly w = word.lifted(lift);
        for (uint64_t i : pc.defining_set.residues())
            CHECK(w.eval(F.pow(pc.root(), static_cast<int64_t>(i))) == 0);
        // and is divisible by the product generator
        CHECK(word.divisible_by(pc.generator));
        // a cyclic shift stays in the code
        auto shifted = word.coeffs_padded(pc.n);
        std::rotate(shifted.rbegin(), shifted.rbegin() + 1, shifted.rend());
        CHECK(Poly(pc.a.alphabet(), shifted).divisible_by(pc.generator));
    }

    // a word with a weight-1 row cannot sit in the distance-2 row code
    auto mat = random_product_matrix(pc, rng);
    mat[2] = {1, 0, 0};
    CHECK_THROWS_AS(interleave(pc, mat), std::invalid_argument);
}

TEST_CASE("generator roots equal the defining set on random coprime pairs") {
    std::mt19937_64 rng(29);
    // candidate odd lengths whose joint splitting field stays small
    const std::vector<std::pair<uint64_t, uint64_t>> pairs = {
        {3, 5}, {3, 7}, {3, 11}, {3, 13}, {3, 17}, {5, 7}, {5, 9}, {7, 9},
        {5, 3}, {7, 3}, {9, 5},  {15, 7}, {7, 15}, {9, 7}, {3, 31}, {21, 5}};
    int done = 0;
    while (done < 50) {
        auto [n1, n2] = pairs[rng() % pairs.size()];
        auto pick = [&](uint64_t n) {
            auto cosets = cyclotomic_cosets(n, 2);
            std::vector<int64_t> d;
            for (const auto& c : cosets)
                if (rng() % 2)
                    for (uint64_t r : c) d.push_back(static_cast<int64_t>(r));
            if (d.size() == n) d.clear(); // avoid the zero code
            return d;
        };
        CyclicCode a = CyclicCode::from_defining_set(2, n1, pick(n1));
        CyclicCode b = CyclicCode::from_defining_set(2, n2, pick(n2));
        ProductCode pc = make_product(a, b);
        CHECK(generator_roots(pc) == pc.defining_set.residues());
        CHECK(pc.defining_set.size() == pc.n - a.k() * b.k());
        ++done;
    }
}
