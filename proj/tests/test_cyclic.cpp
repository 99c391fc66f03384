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
#include <set>

#include "cb/cyclic.hpp"

using namespace cb;

namespace {

// Orbit enumeration independent of the library implementation.
std::set<std::set<uint64_t>> cosets_by_orbit(uint64_t n, uint64_t q) {
    std::set<std::set<uint64_t>> out;
    for (uint64_t r = 0; r < n; ++r) {
        std::set<uint64_t> orbit;
        uint64_t cur = r;
        while (!orbit.count(cur)) {
            orbit.insert(cur);
            cur = cur * q % n;
        }
        out.insert(orbit);
    }
    return out;
}

// Direct GF(2) polynomial multiplication mod X^n - 1 on bitmasks.
uint64_t mulmod_gf2(uint64_t a, uint64_t b, uint64_t n) {
    uint64_t r = 0;
    for (uint64_t i = 0; i < n; ++i)
        if (a >> i & 1)
            for (uint64_t j = 0; j < n; ++j)
                if (b >> j & 1) r ^= uint64_t(1) << ((i + j) % n);
    return r;
}

std::vector<uint64_t> random_message(const CyclicCode& code, std::mt19937_64& rng) {
    std::vector<uint64_t> msg(code.k());
    for (auto& s : msg) s = rng() % code.q();
    return msg;
}

} // namespace

TEST_CASE("cyclotomic cosets match independent orbit enumeration") {
    auto c32 = cyclotomic_cosets(3, 2);
    REQUIRE(c32.size() == 2);
    CHECK(c32[0] == std::vector<uint64_t>{0});
    CHECK(c32[1] == std::vector<uint64_t>{1, 2});

    auto c72 = cyclotomic_cosets(7, 2);
    REQUIRE(c72.size() == 3);
    CHECK(c72[0] == std::vector<uint64_t>{0});
    CHECK(c72[1] == std::vector<uint64_t>{1, 2, 4});
    CHECK(c72[2] == std::vector<uint64_t>{3, 5, 6});

    auto c172 = cyclotomic_cosets(17, 2);
    bool found = false;
    for (const auto& c : c172)
        if (c == std::vector<uint64_t>{1, 2, 4, 8, 9, 13, 15, 16}) found = true;
    CHECK(found);

    for (auto [n, q] : {std::pair<uint64_t, uint64_t>{15, 2}, {21, 2}, {13, 3}, {11, 4}}) {
        auto lib = cyclotomic_cosets(n, q);
        std::set<std::set<uint64_t>> as_sets;
        uint64_t total = 0;
        for (const auto& c : lib) {
            as_sets.insert(std::set<uint64_t>(c.begin(), c.end()));
            total += c.size();
            CHECK(c.front() == *std::min_element(c.begin(), c.end())); // representative
            for (uint64_t r : c) CHECK(std::binary_search(c.begin(), c.end(), r * q % n));
        }
        CHECK(total == n); // partition
        CHECK(as_sets == cosets_by_orbit(n, q));
    }

    CHECK_THROWS_AS(cyclotomic_cosets(4, 2), std::invalid_argument);
}

TEST_CASE("defining set transforms") {
    DefiningSet d17(17, {1, 2, 4, 8, -8, -4, -2, -1});
    CHECK(d17.residues() == std::vector<uint64_t>{1, 2, 4, 8, 9, 13, 15, 16});

    CHECK(transform_defining_set(d17, 1, SetTransform::multiply) == d17);
    auto mult6 = transform_defining_set(d17, 6, SetTransform::multiply);
    CHECK(mult6.residues() == std::vector<uint64_t>{3, 5, 6, 7, 10, 11, 12, 14});

    DefiningSet d03(3, {0});
    auto shift17 = transform_defining_set(d03, 17, SetTransform::shift);
    CHECK(shift17.residues() == std::vector<uint64_t>{2});

    // composition: multiply by z then z' equals multiply by z*z'
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        uint64_t n = 5 + rng() % 40;
        std::vector<int64_t> residues;
        for (int i = 0; i < 6; ++i) residues.push_back(static_cast<int64_t>(rng() % n));
        DefiningSet d(n, residues);
        int64_t z1 = static_cast<int64_t>(rng() % (2 * n)) - static_cast<int64_t>(n);
        int64_t z2 = static_cast<int64_t>(rng() % (2 * n)) - static_cast<int64_t>(n);
        auto two_steps = transform_defining_set(transform_defining_set(d, z1, SetTransform::multiply),
                                                z2, SetTransform::multiply);
        CHECK(two_steps == transform_defining_set(d, z1 * z2, SetTransform::multiply));
        auto two_shifts = transform_defining_set(transform_defining_set(d, z1, SetTransform::shift),
                                                 z2, SetTransform::shift);
        CHECK(two_shifts == transform_defining_set(d, z1 + z2, SetTransform::shift));
    }
}

TEST_CASE("single parity check code [3,2]") {
    CyclicCode b = CyclicCode::from_defining_set(2, 3, {0});
    CHECK(b.n() == 3);
    CHECK(b.k() == 2);
    CHECK(b.generator() == Poly(b.alphabet(), {1, 1})); // 1 + X
    CHECK(min_distance_bruteforce(b) == 2);
    CHECK(min_weight_codeword(b) == Poly(b.alphabet(), {1, 1})); // 1 + X preferred
}

TEST_CASE("binary [17,9] reversible code") {
    CyclicCode a = CyclicCode::from_defining_set(2, 17, {1, 2, 4, 8, 9, 13, 15, 16});
    CHECK(a.n() == 17);
    CHECK(a.k() == 9);
    CHECK(a.generator().degree() == 8);
    CHECK(min_distance_bruteforce(a) == 5);
    CHECK(min_weight_codeword(a).weight() == 5);
}

TEST_CASE("empty and full defining sets") {
    CyclicCode full = CyclicCode::from_defining_set(2, 7, std::vector<int64_t>{});
    CHECK(full.k() == 7);
    CHECK(full.generator() == Poly::one(full.alphabet()));
    CHECK(min_distance_bruteforce(full) == 1);

    std::vector<int64_t> everything;
    for (int64_t i = 0; i < 7; ++i) everything.push_back(i);
    CHECK_THROWS_AS(CyclicCode::from_defining_set(2, 7, everything), std::invalid_argument);
}

TEST_CASE("coset closure is enforced with the offending residue reported") {
    try {
        CyclicCode::from_defining_set(2, 7, {1, 2}); // 2*2=4 missing
        FAIL("expected a closure error");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("4") != std::string::npos);
    }
    CHECK_THROWS_AS(CyclicCode::from_defining_set(2, 4, {0}), std::invalid_argument); // gcd != 1
}

TEST_CASE("generator round trip") {
    CyclicCode a = CyclicCode::from_defining_set(2, 17, {1, 2, 4, 8, 9, 13, 15, 16});
    CyclicCode b = CyclicCode::from_generator(2, 17, a.generator().coeffs());
    CHECK(b.defining_set() == a.defining_set());
    CHECK(b.k() == a.k());
    // 1 + X + X^2 divides X^3 - 1 but not X^7 - 1
    CHECK_THROWS_AS(CyclicCode::from_generator(2, 7, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("hamming [7,4] as cyclic code") {
    CyclicCode h = CyclicCode::from_defining_set(2, 7, {1, 2, 4});
    CHECK(h.k() == 4);
    CHECK(min_distance_bruteforce(h) == 3);
    CHECK(min_weight_codeword(h).weight() == 3);

    // oracle: enumerate all 16 codewords directly over GF(2)
    uint64_t gmask = 0;
    for (int i = 0; i <= h.generator().degree(); ++i)
        if (h.generator()[i]) gmask |= uint64_t(1) << i;
    uint64_t best = 7;
    for (uint64_t m = 1; m < 16; ++m) {
        uint64_t w = mulmod_gf2(m, gmask, 7);
        best = std::min<uint64_t>(best, static_cast<uint64_t>(__builtin_popcountll(w)));
    }
    CHECK(best == 3);
}

TEST_CASE("repetition code min weight codeword is all ones") {
    CyclicCode rep = CyclicCode::from_defining_set(2, 7, {1, 2, 3, 4, 5, 6});
    CHECK(rep.k() == 1);
    Poly w = min_weight_codeword(rep);
    CHECK(w.weight() == 7);
    CHECK(min_distance_bruteforce(rep) == 7);
}

TEST_CASE("encoding places roots exactly on the defining set") {
    CyclicCode b = CyclicCode::from_defining_set(2, 3, {0});
    CHECK(encode(b, std::vector<uint64_t>{0, 0}).is_zero());
    // (1 + X)(1 + X) = 1 + X^2
    CHECK(encode(b, std::vector<uint64_t>{1, 1}) == Poly(b.alphabet(), {1, 0, 1}));
    CHECK_THROWS_AS(encode(b, std::vector<uint64_t>{1}), std::invalid_argument);

    std::mt19937_64 rng(21);
    for (const auto& code : {CyclicCode::from_defining_set(2, 17, {1, 2, 4, 8, 9, 13, 15, 16}),
                             CyclicCode::from_defining_set(2, 7, {1, 2, 4}),
                             CyclicCode::from_defining_set(3, 13, {1, 3, 9})}) {
        const FieldContext& big = code.root_context();
        const FieldEmbedding& lift = FieldEmbedding::get(code.alphabet(), big);
        // c(alpha^i) = 0 for all i in D, for 100 random messages
        for (int trial = 0; trial < 100; ++trial) {
            Poly c = encode(code, random_message(code, rng)).lifted(lift);
            for (uint64_t i : code.defining_set().residues())
                CHECK(c.eval(big.pow(code.root(), static_cast<int64_t>(i))) == 0);
        }
        // for every i outside D some codeword does not vanish
        for (uint64_t i = 0; i < code.n(); ++i) {
            if (code.defining_set().contains(i)) continue;
            bool hit = false;
            for (int trial = 0; trial < 200 && !hit; ++trial) {
                Poly c = encode(code, random_message(code, rng)).lifted(lift);
                if (c.eval(big.pow(code.root(), static_cast<int64_t>(i))) != 0) hit = true;
            }
            CHECK(hit);
        }
    }
}

TEST_CASE("generator divides X^n - 1 for assorted codes") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        uint64_t n = 3 + 2 * (rng() % 16); // odd length
        auto cosets = cyclotomic_cosets(n, 2);
        std::vector<int64_t> d;
        for (const auto& c : cosets)
            if (rng() % 2)
                for (uint64_t r : c) d.push_back(static_cast<int64_t>(r));
        if (d.size() == n) continue;
        CyclicCode code = CyclicCode::from_defining_set(2, n, d);
        CHECK(Poly::xn_minus_one(code.alphabet(), n).divisible_by(code.generator()));
        CHECK(code.k() + code.defining_set().size() == n);
    }
}

TEST_CASE("quaternary code over GF(4)") {
    // cosets of 4 mod 5: {0}, {1, 4}, {2, 3}
    CyclicCode c = CyclicCode::from_defining_set(4, 5, {1, 4});
    CHECK(c.k() == 3);
    CHECK(Poly::xn_minus_one(c.alphabet(), 5).divisible_by(c.generator()));
    uint64_t d = min_distance_bruteforce(c);
    CHECK(d == 3);
}

TEST_CASE("weight distribution agrees between direct and dual routes") {
    // n = 15 codes are small enough to enumerate both sides
    auto cosets = cyclotomic_cosets(15, 2);
    for (uint64_t pick = 0; pick < (uint64_t(1) << cosets.size()); ++pick) {
        std::vector<int64_t> d;
        for (size_t c = 0; c < cosets.size(); ++c)
            if (pick >> c & 1)
                for (uint64_t r : cosets[c]) d.push_back(static_cast<int64_t>(r));
        if (d.size() == 15) continue;
        CyclicCode code = CyclicCode::from_defining_set(2, 15, d);
        auto via_lib = weight_distribution(code);
        // direct enumeration oracle on bitmasks
        uint64_t gmask = 0;
        for (int i = 0; i <= code.generator().degree(); ++i)
            if (code.generator()[i]) gmask |= uint64_t(1) << i;
        std::vector<int64_t> direct(16, 0);
        for (uint64_t m = 0; m < (uint64_t(1) << code.k()); ++m) {
            uint64_t w = mulmod_gf2(m, gmask, 15);
            direct[__builtin_popcountll(w)]++;
        }
        CHECK(via_lib == direct);
    }
}

TEST_CASE("brute force budget is enforced") {
    CyclicCode big = CyclicCode::from_defining_set(2, 17, {0});
    CHECK(min_distance_bruteforce(big) == 2); // dual route avoids 2^16 enumeration
    CHECK_THROWS_AS(min_weight_codeword(big, 1024), BudgetExceeded);
}

TEST_CASE("early exit lower bound returns the exact distance when tight") {
    CyclicCode a = CyclicCode::from_defining_set(2, 17, {1, 2, 4, 8, 9, 13, 15, 16});
    CHECK(min_distance_bruteforce(a, kDefaultBruteForceBudget, 5) == 5);
}
