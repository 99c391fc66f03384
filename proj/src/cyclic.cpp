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

#include "cb/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cb {

DefiningSet::DefiningSet(uint64_t n, std::vector<int64_t> residues) : n_(n) {
    if (n == 0) throw std::invalid_argument("defining set needs a positive modulus");
    r_.reserve(residues.size());
    for (int64_t v : residues) r_.push_back(mod_norm(v, n));
    std::sort(r_.begin(), r_.end());
    r_.erase(std::unique(r_.begin(), r_.end()), r_.end());
}

bool DefiningSet::contains(uint64_t residue) const {
    return std::binary_search(r_.begin(), r_.end(), residue);
}

std::vector<char> DefiningSet::mask() const {
    std::vector<char> m(n_, 0);
    for (uint64_t r : r_) m[r] = 1;
    return m;
}

DefiningSet DefiningSet::with_modulus(uint64_t n) const {
    if (n < n_) throw std::invalid_argument("cannot shrink a defining set's modulus");
    std::vector<int64_t> v(r_.begin(), r_.end());
    return DefiningSet(n, std::move(v));
}

DefiningSet DefiningSet::united(const DefiningSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("union requires equal moduli");
    std::vector<int64_t> v;
    v.reserve(r_.size() + o.r_.size());
    v.insert(v.end(), r_.begin(), r_.end());
    v.insert(v.end(), o.r_.begin(), o.r_.end());
    return DefiningSet(n_, std::move(v));
}

DefiningSet transform_defining_set(const DefiningSet& d, int64_t z, SetTransform mode) {
    const uint64_t n = d.modulus();
    uint64_t zz = mod_norm(z, n);
    std::vector<int64_t> out;
    out.reserve(d.size());
    for (uint64_t r : d.residues()) {
        unsigned __int128 v = (mode == SetTransform::multiply)
                                  ? static_cast<unsigned __int128>(r) * zz
                                  : static_cast<unsigned __int128>(r) + zz;
        out.push_back(static_cast<int64_t>(v % n));
    }
    return DefiningSet(n, std::move(out));
}

std::vector<std::vector<uint64_t>> cyclotomic_cosets(uint64_t n, uint64_t q) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    if (gcd_u64(n, q) != 1) throw std::invalid_argument("cyclotomic cosets require gcd(n, q) == 1");
    std::vector<char> seen(n, 0);
    std::vector<std::vector<uint64_t>> cosets;
    for (uint64_t r = 0; r < n; ++r) {
        if (seen[r]) continue;
        std::vector<uint64_t> orbit;
        uint64_t cur = r;
        do {
            orbit.push_back(cur);
            seen[cur] = 1;
            cur = (static_cast<unsigned __int128>(cur) * q) % n;
        } while (cur != r);
        std::sort(orbit.begin(), orbit.end());
        cosets.push_back(std::move(orbit));
    }
    return cosets;
}

CyclicCode::CyclicCode(uint64_t q, uint64_t n, DefiningSet d, Poly g, const FieldContext& alphabet,
                       const FieldContext& root_ctx, uint64_t root)
    : q_(q), n_(n), k_(n - d.size()), d_(std::move(d)), g_(std::move(g)), alphabet_(&alphabet),
      root_ctx_(&root_ctx), root_(root) {}

CyclicCode CyclicCode::from_defining_set(uint64_t q, uint64_t n, std::vector<int64_t> residues) {
    return from_defining_set(q, n, DefiningSet(n, std::move(residues)));
}

CyclicCode CyclicCode::from_defining_set(uint64_t q, uint64_t n, const DefiningSet& d) {
    if (d.modulus() != n) throw std::invalid_argument("defining set modulus differs from length");
    if (gcd_u64(n, q) != 1) throw std::invalid_argument("cyclic codes require gcd(n, q) == 1");
    for (uint64_t r : d.residues()) {
        uint64_t img = (static_cast<unsigned __int128>(r) * q) % n;
        if (!d.contains(img))
            throw std::invalid_argument("defining set not closed under multiplication by q: residue " +
                                        std::to_string(r) + " maps to " + std::to_string(img));
    }
    if (d.size() == n) throw std::invalid_argument("full defining set gives the zero code");

    auto [p, e] = factor_prime_power(q);
    const FieldContext& alphabet = make_field(p, e);
    const FieldContext& big = splitting_field(n, q);
    uint64_t alpha = element_of_order(big, n).index();

    Poly gbig = Poly::one(big);
    for (uint64_t i : d.residues()) {
        uint64_t rooti = big.pow(alpha, static_cast<int64_t>(i));
        gbig = gbig * Poly(big, {big.neg(rooti), 1});
    }
    const FieldEmbedding& emb = FieldEmbedding::get(alphabet, big);
    Poly g = gbig.projected(emb);

    if (!Poly::xn_minus_one(alphabet, n).divisible_by(g))
        throw std::logic_error("generator does not divide X^n - 1");
    return CyclicCode(q, n, d, std::move(g), alphabet, big, alpha);
}

CyclicCode CyclicCode::from_generator(uint64_t q, uint64_t n, std::vector<uint64_t> gen) {
    if (gcd_u64(n, q) != 1) throw std::invalid_argument("cyclic codes require gcd(n, q) == 1");
    auto [p, e] = factor_prime_power(q);
    const FieldContext& alphabet = make_field(p, e);
    Poly g(alphabet, std::move(gen));
    if (g.is_zero()) throw std::invalid_argument("generator polynomial must be nonzero");
    g = g.monic();
    if (static_cast<uint64_t>(g.degree()) >= n)
        throw std::invalid_argument("generator degree must be smaller than the length");
    if (!Poly::xn_minus_one(alphabet, n).divisible_by(g))
        throw std::invalid_argument("generator does not divide X^n - 1");

    const FieldContext& big = splitting_field(n, q);
    uint64_t alpha = element_of_order(big, n).index();
    const FieldEmbedding& emb = FieldEmbedding::get(alphabet, big);
    Poly gbig = g.lifted(emb);
    std::vector<int64_t> roots;
    for (uint64_t i = 0; i < n; ++i)
        if (gbig.eval(big.pow(alpha, static_cast<int64_t>(i))) == 0)
            roots.push_back(static_cast<int64_t>(i));
    DefiningSet d(n, std::move(roots));
    if (d.size() != static_cast<uint64_t>(g.degree()))
        throw std::logic_error("root count does not match generator degree");
    return CyclicCode(q, n, std::move(d), std::move(g), alphabet, big, alpha);
}

CyclicCode CyclicCode::trivial(uint64_t q) { return from_defining_set(q, 1, DefiningSet::empty(1)); }

CyclicCode CyclicCode::from_parts(uint64_t q, uint64_t n, DefiningSet d, Poly g,
                                  const FieldContext& root_ctx, uint64_t root) {
    auto [p, e] = factor_prime_power(q);
    const FieldContext& alphabet = make_field(p, e);
    if (&g.field() != &alphabet) throw std::invalid_argument("generator must live over GF(q)");
    return CyclicCode(q, n, std::move(d), std::move(g), alphabet, root_ctx, root);
}

bool CyclicCode::contains(const Poly& w) const {
    if (&w.field() != alphabet_) throw std::domain_error("word is over a different alphabet");
    if (w.degree() >= static_cast<int>(n_)) return false;
    return w.divisible_by(g_);
}

bool CyclicCode::contains(std::span<const uint64_t> w) const {
    if (w.size() != n_) throw std::invalid_argument("word length differs from code length");
    return contains(Poly(*alphabet_, std::vector<uint64_t>(w.begin(), w.end())));
}

Poly encode(const CyclicCode& code, std::span<const uint64_t> message) {
    if (message.size() != code.k()) throw std::invalid_argument("message length must equal k");
    Poly m(code.alphabet(), std::vector<uint64_t>(message.begin(), message.end()));
    return m * code.generator();
}

namespace {

// Weights of all codewords of a binary cyclic code via Gray-code
// enumeration of the 2^k messages; n must fit a 64-bit mask.
std::vector<int64_t> binary_weights_direct(const CyclicCode& code, uint64_t budget) {
    const uint64_t n = code.n(), k = code.k();
    if (n > 63) throw std::invalid_argument("binary enumeration limited to n <= 63");
    if (k >= 63 || (uint64_t(1) << k) > budget)
        throw BudgetExceeded("enumeration of 2^" + std::to_string(k) + " codewords exceeds budget");
    std::vector<uint64_t> gshift(k);
    uint64_t gmask = 0;
    for (int i = 0; i <= code.generator().degree(); ++i)
        if (code.generator()[i]) gmask |= uint64_t(1) << i;
    for (uint64_t i = 0; i < k; ++i) gshift[i] = gmask << i;

    std::vector<int64_t> counts(n + 1, 0);
    counts[0] = 1;
    uint64_t word = 0;
    const uint64_t total = uint64_t(1) << k;
    for (uint64_t m = 1; m < total; ++m) {
        word ^= gshift[std::countr_zero(m)];
        counts[std::popcount(word)]++;
    }
    return counts;
}

// Binomial table up to n; C(63, 31) still fits in int64.
std::vector<std::vector<int64_t>> binomials(uint64_t n) {
    std::vector<std::vector<int64_t>> c(n + 1, std::vector<int64_t>(n + 1, 0));
    for (uint64_t i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (uint64_t j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c;
}

// MacWilliams transform of a dual weight distribution (binary).
std::vector<int64_t> macwilliams(const std::vector<int64_t>& dual, uint64_t n, uint64_t dual_dim) {
    auto c = binomials(n);
    std::vector<int64_t> a(n + 1, 0);
    const __int128 denom = __int128(1) << dual_dim;
    for (uint64_t j = 0; j <= n; ++j) {
        __int128 acc = 0;
        for (uint64_t w = 0; w <= n; ++w) {
            if (dual[w] == 0) continue;
            __int128 kraw = 0;
            for (uint64_t l = 0; l <= j && l <= w; ++l) {
                if (j - l > n - w) continue;
                __int128 term = __int128(c[w][l]) * c[n - w][j - l];
                kraw += (l & 1) ? -term : term;
            }
            acc += __int128(dual[w]) * kraw;
        }
        if (acc % denom != 0 || acc < 0) throw std::logic_error("MacWilliams transform not integral");
        a[j] = static_cast<int64_t>(acc / denom);
    }
    return a;
}

DefiningSet dual_defining_set(const CyclicCode& code) {
    const uint64_t n = code.n();
    std::vector<int64_t> out;
    for (uint64_t i = 0; i < n; ++i)
        if (!code.defining_set().contains(i)) out.push_back(static_cast<int64_t>((n - i) % n));
    return DefiningSet(n, std::move(out));
}

// Odometer enumeration for non-binary alphabets. Calls visit(word, weight)
// for every nonzero codeword; returns false if the budget is exceeded.
template <typename Visit>
void generic_enumerate(const CyclicCode& code, uint64_t budget, Visit visit) {
    const uint64_t q = code.q(), n = code.n(), k = code.k();
    double total = 1;
    for (uint64_t i = 0; i < k; ++i) {
        total *= static_cast<double>(q);
        if (total > static_cast<double>(budget))
            throw BudgetExceeded("enumeration of q^k codewords exceeds budget");
    }
    const FieldContext& F = code.alphabet();
    const Poly& g = code.generator();
    std::vector<uint64_t> msg(k, 0);
    std::vector<uint64_t> word(n, 0);
    auto add_g_multiple = [&](uint64_t pos, uint64_t delta) {
        for (int i = 0; i <= g.degree(); ++i)
            word[pos + i] = F.add(word[pos + i], F.mul(delta, g[i]));
    };
    while (true) {
        // advance odometer
        size_t pos = 0;
        while (pos < k) {
            uint64_t old = msg[pos];
            uint64_t next = old + 1;
            if (next < q) {
                msg[pos] = next;
                add_g_multiple(pos, F.sub(next, old));
                break;
            }
            msg[pos] = 0;
            add_g_multiple(pos, F.sub(0, old));
            ++pos;
        }
        if (pos == k) break; // wrapped around to all-zero
        uint64_t w = 0;
        for (uint64_t c : word)
            if (c) ++w;
        if (!visit(word, w)) return;
    }
}

} // namespace

std::vector<int64_t> weight_distribution(const CyclicCode& code, uint64_t budget) {
    if (code.q() != 2) throw std::invalid_argument("weight_distribution implemented for binary codes");
    const uint64_t n = code.n(), k = code.k();
    if (k <= n - k) return binary_weights_direct(code, budget);
    // Enumerate the dual and transform back.
    std::vector<int64_t> dual_weights;
    DefiningSet dd = dual_defining_set(code);
    if (dd.size() == n) { // dual of the full code is the zero code
        dual_weights.assign(n + 1, 0);
        dual_weights[0] = 1;
    } else {
        CyclicCode dual = CyclicCode::from_defining_set(2, n, dd);
        dual_weights = binary_weights_direct(dual, budget);
    }
    return macwilliams(dual_weights, n, n - k);
}

uint64_t min_distance_bruteforce(const CyclicCode& code, uint64_t budget,
                                 std::optional<uint64_t> at_least) {
    if (code.q() == 2) {
        if (code.k() <= code.n() - code.k()) {
            // direct side; early exit applies
            uint64_t best = code.n() + 1;
            const uint64_t n = code.n(), k = code.k();
            if (n > 63) throw std::invalid_argument("binary enumeration limited to n <= 63");
            if (k >= 63 || (uint64_t(1) << k) > budget)
                throw BudgetExceeded("enumeration of 2^k codewords exceeds budget");
            uint64_t gmask = 0;
            for (int i = 0; i <= code.generator().degree(); ++i)
                if (code.generator()[i]) gmask |= uint64_t(1) << i;
            std::vector<uint64_t> gshift(k);
            for (uint64_t i = 0; i < k; ++i) gshift[i] = gmask << i;
            uint64_t word = 0;
            const uint64_t total = uint64_t(1) << k;
            for (uint64_t m = 1; m < total; ++m) {
                word ^= gshift[std::countr_zero(m)];
                uint64_t w = static_cast<uint64_t>(std::popcount(word));
                if (w < best) {
                    best = w;
                    if (at_least && best == *at_least) return best;
                }
            }
            return best;
        }
        auto a = weight_distribution(code, budget);
        for (uint64_t j = 1; j <= code.n(); ++j)
            if (a[j] > 0) return j;
        throw std::logic_error("code has no nonzero codeword");
    }
    uint64_t best = code.n() + 1;
    generic_enumerate(code, budget, [&](const std::vector<uint64_t>&, uint64_t w) {
        if (w < best) {
            best = w;
            if (at_least && best == *at_least) return false;
        }
        return true;
    });
    return best;
}

Poly min_weight_codeword(const CyclicCode& code, uint64_t budget) {
    if (code.q() == 2 && code.n() <= 63) {
        const uint64_t n = code.n(), k = code.k();
        if (k >= 63 || (uint64_t(1) << k) > budget)
            throw BudgetExceeded("enumeration of 2^k codewords exceeds budget");
        uint64_t gmask = 0;
        for (int i = 0; i <= code.generator().degree(); ++i)
            if (code.generator()[i]) gmask |= uint64_t(1) << i;
        std::vector<uint64_t> gshift(k);
        for (uint64_t i = 0; i < k; ++i) gshift[i] = gmask << i;
        uint64_t word = 0, best_w = n + 1, best_word = 0;
        const uint64_t total = uint64_t(1) << k;
        for (uint64_t m = 1; m < total; ++m) {
            word ^= gshift[std::countr_zero(m)];
            uint64_t w = static_cast<uint64_t>(std::popcount(word));
            if (w < best_w || (w == best_w && word < best_word)) {
                best_w = w;
                best_word = word;
            }
        }
        std::vector<uint64_t> coeffs(n, 0);
        for (uint64_t i = 0; i < n; ++i)
            if (best_word >> i & 1) coeffs[i] = 1;
        return Poly(code.alphabet(), std::move(coeffs));
    }
    std::vector<uint64_t> best;
    uint64_t best_w = code.n() + 1;
    auto lex_less = [](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
        // compare from the highest coefficient down
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    };
    generic_enumerate(code, budget, [&](const std::vector<uint64_t>& w, uint64_t wt) {
        if (wt < best_w || (wt == best_w && lex_less(w, best))) {
            best_w = wt;
            best = w;
        }
        return true;
    });
    if (best.empty()) throw std::logic_error("code has no nonzero codeword");
    return Poly(code.alphabet(), std::move(best));
}

} // namespace cb
