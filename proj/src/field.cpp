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

#include "cb/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace cb {

namespace {

constexpr uint64_t kSizeCeiling = uint64_t(1) << 32;
constexpr uint64_t kTableCeiling = uint64_t(1) << 20;

// Dense polynomials over GF(p) as digit vectors, little endian, used only
// for modulus selection before a context exists.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    ptrim(r);
    return r;
}

// a mod f, f monic
PPoly pmod(PPoly a, const PPoly& f, uint64_t p) {
    ptrim(a);
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (size_t i = 0; i < f.size(); ++i) {
                uint64_t sub = (lead * f[i]) % p;
                uint64_t cur = a[shift + i];
                a[shift + i] = static_cast<uint32_t>((cur + p - sub) % p);
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.size() <= df) break;
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint64_t p) {
    return pmod(pmul(a, b, p), f, p);
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
    // inverses mod p by Fermat
    auto inv_mod_p = [p](uint64_t x) {
        uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return r;
    };
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic so pmod applies
        uint64_t il = inv_mod_p(b.back());
        PPoly bm = b;
        for (auto& c : bm) c = static_cast<uint32_t>((uint64_t(c) * il) % p);
        a = pmod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// X^(p^k) mod f by repeated Frobenius (square-and-multiply on the exponent).
PPoly x_pow_pk_mod(const PPoly& f, uint64_t p, unsigned k) {
    PPoly x = {0, 1};
    PPoly r = pmod(x, f, p);
    for (unsigned step = 0; step < k; ++step) {
        // r <- r^p mod f
        PPoly acc = {1};
        PPoly base = r;
        uint64_t e = p;
        while (e) {
            if (e & 1) acc = pmulmod(acc, base, f, p);
            base = pmulmod(base, base, f, p);
            e >>= 1;
        }
        r = std::move(acc);
    }
    return r;
}

// Rabin irreducibility test for a monic polynomial of degree m over GF(p).
bool is_irreducible(const PPoly& f, uint64_t p, unsigned m) {
    if (m == 0) return false;
    // X^(p^m) == X mod f
    PPoly xm = x_pow_pk_mod(f, p, m);
    PPoly x = pmod({0, 1}, f, p);
    if (xm != x) return false;
    // gcd(f, X^(p^(m/l)) - X) == 1 for every prime l | m
    unsigned rem = m;
    for (unsigned l = 2; l <= rem; ++l) {
        if (rem % l != 0) continue;
        while (rem % l == 0) rem /= l;
        PPoly xk = x_pow_pk_mod(f, p, m / l);
        // xk - x
        PPoly d = xk;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = static_cast<uint32_t>((d[1] + p - 1) % p);
        ptrim(d);
        PPoly g = pgcd(f, d, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) { return a / gcd_u64(a, b) * b; }

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t mod_norm(int64_t v, uint64_t n) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    int64_t m = static_cast<int64_t>(n);
    int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<uint64_t>(r);
}

FieldContext::FieldContext(uint64_t p, unsigned m) : p_(p), m_(m) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m == 0) throw std::invalid_argument("extension degree must be positive");
    size_ = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (size_ > kSizeCeiling / p) throw std::invalid_argument("field size exceeds ceiling of 2^32");
        size_ *= p;
    }
    if (size_ < 2) throw std::invalid_argument("field must have at least two elements");

    // Deterministic modulus: smallest index i such that X^m + digits(i) is
    // irreducible, digits base p little endian.
    bool found = false;
    for (uint64_t idx = 0; idx < size_; ++idx) {
        PPoly f(m + 1, 0);
        uint64_t t = idx;
        for (unsigned d = 0; d < m; ++d) {
            f[d] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p, m)) {
            modulus_ = std::move(f);
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found"); // cannot happen

    if (p_ == 2) {
        for (unsigned i = 0; i <= m_; ++i)
            if (modulus_[i]) modulus_mask2_ |= uint64_t(1) << i;
    }

    order_prime_factors_ = prime_factors(size_ - 1);

    // Smallest-index generator of the multiplicative group.
    for (uint64_t cand = 1; cand < size_; ++cand) {
        bool full = true;
        for (uint64_t r : order_prime_factors_) {
            // cand^((size-1)/r) == 1 means the order is a proper divisor
            uint64_t e = (size_ - 1) / r;
            // generic pow without tables (tables not built yet)
            uint64_t acc = 1, base = cand;
            while (e) {
                if (e & 1) acc = mul_generic(acc, base);
                base = mul_generic(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            generator_ = cand;
            break;
        }
    }
    if (generator_ == 0) throw std::logic_error("no generator found");

    if (size_ <= kTableCeiling) {
        use_tables_ = true;
        exp_.resize(size_ - 1);
        log_.assign(size_, 0);
        uint64_t cur = 1;
        for (uint64_t i = 0; i + 1 < size_; ++i) {
            exp_[i] = static_cast<uint32_t>(cur);
            log_[cur] = static_cast<uint32_t>(i);
            cur = mul_generic(cur, generator_);
        }
    }
}

uint64_t FieldContext::add(uint64_t a, uint64_t b) const {
    if (p_ == 2) return a ^ b;
    uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        uint64_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return r;
}

uint64_t FieldContext::neg(uint64_t a) const {
    if (p_ == 2) return a;
    uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        uint64_t da = a % p_;
        a /= p_;
        r += ((p_ - da) % p_) * mult;
        mult *= p_;
    }
    return r;
}

uint64_t FieldContext::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t FieldContext::mul_generic(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (p_ == 2) {
        // carryless multiply with modular reduction per shift
        uint64_t acc = 0;
        uint64_t x = a;
        while (b) {
            if (b & 1) acc ^= x;
            b >>= 1;
            x <<= 1;
            if (x & (uint64_t(1) << m_)) x ^= modulus_mask2_;
        }
        return acc;
    }
    // digit vectors
    std::vector<uint64_t> da(m_), db(m_);
    uint64_t t = a;
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = t % p_;
        t /= p_;
    }
    t = b;
    for (unsigned i = 0; i < m_; ++i) {
        db[i] = t % p_;
        t /= p_;
    }
    std::vector<uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    // reduce by monic modulus
    for (size_t d = prod.size(); d-- > m_;) {
        uint64_t lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        size_t shift = d - m_;
        for (unsigned i = 0; i < m_; ++i) {
            uint64_t sub = (lead * modulus_[i]) % p_;
            prod[shift + i] = (prod[shift + i] + p_ - sub) % p_;
        }
    }
    uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += prod[i] * mult;
        mult *= p_;
    }
    return r;
}

uint64_t FieldContext::mul(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (use_tables_) {
        uint64_t s = log_[a] + log_[b];
        if (s >= size_ - 1) s -= size_ - 1;
        return exp_[s];
    }
    return mul_generic(a, b);
}

uint64_t FieldContext::inv(uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero in field");
    if (use_tables_) {
        uint64_t l = log_[a];
        return exp_[l == 0 ? 0 : size_ - 1 - l];
    }
    return pow(a, static_cast<int64_t>(size_ - 2));
}

uint64_t FieldContext::div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

uint64_t FieldContext::pow(uint64_t a, int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("division by zero in field");
        return 0;
    }
    uint64_t group = size_ - 1;
    uint64_t ee = mod_norm(e, group);
    if (use_tables_) {
        uint64_t l = (static_cast<unsigned __int128>(log_[a]) * ee) % group;
        return exp_[l];
    }
    uint64_t acc = 1, base = a;
    while (ee) {
        if (ee & 1) acc = mul_generic(acc, base);
        base = mul_generic(base, base);
        ee >>= 1;
    }
    return acc;
}

uint64_t FieldContext::element_order(uint64_t a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    uint64_t ord = size_ - 1;
    for (uint64_t r : order_prime_factors_) {
        while (ord % r == 0 && pow(a, static_cast<int64_t>(ord / r)) == 1) ord /= r;
    }
    return ord;
}

bool FieldContext::in_subfield(uint64_t a, uint64_t q) const {
    return pow(a, static_cast<int64_t>(q)) == a;
}

FieldElement FieldContext::element(uint64_t index) const { return FieldElement(*this, index); }
FieldElement FieldContext::zero() const { return FieldElement(*this, 0); }
FieldElement FieldContext::one() const { return FieldElement(*this, 1); }

const FieldContext& make_field(uint64_t p, unsigned m) {
    static std::mutex mu;
    static std::map<std::pair<uint64_t, unsigned>, std::unique_ptr<FieldContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto ctx = std::unique_ptr<FieldContext>(new FieldContext(p, m));
        it = cache.emplace(key, std::move(ctx)).first;
    }
    return *it->second;
}

unsigned splitting_degree(uint64_t n, uint64_t q) {
    if (n == 0 || q < 2) throw std::invalid_argument("splitting_degree requires n >= 1, q >= 2");
    if (gcd_u64(n, q) != 1) throw std::invalid_argument("splitting_degree requires gcd(n, q) == 1");
    uint64_t cur = 1 % n;
    for (unsigned s = 1;; ++s) {
        cur = (static_cast<unsigned __int128>(cur) * q) % n;
        if (cur == 1 % n) return s;
        if (s > 64 && s > n) throw std::logic_error("splitting degree search overflow");
    }
}

FieldElement element_of_order(const FieldContext& ctx, uint64_t n) {
    if (n == 0 || (ctx.size() - 1) % n != 0)
        throw std::invalid_argument("requested order does not divide the group order");
    uint64_t e = (ctx.size() - 1) / n;
    return ctx.element(ctx.pow(ctx.generator_index(), static_cast<int64_t>(e)));
}

std::pair<uint64_t, unsigned> factor_prime_power(uint64_t q) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    for (uint64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        unsigned e = 0;
        uint64_t t = q;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        if (t != 1) throw std::invalid_argument("alphabet size is not a prime power");
        return {p, e};
    }
    return {q, 1}; // q prime
}

const FieldContext& splitting_field(uint64_t n, uint64_t q) {
    auto [p, e] = factor_prime_power(q);
    unsigned s = splitting_degree(n, q);
    return make_field(p, e * s);
}

const FieldContext& joint_field(uint64_t na, uint64_t nb, uint64_t q) {
    auto [p, e] = factor_prime_power(q);
    unsigned s = static_cast<unsigned>(lcm_u64(splitting_degree(na, q), splitting_degree(nb, q)));
    return make_field(p, e * s);
}

FieldEmbedding::FieldEmbedding(const FieldContext& small, const FieldContext& big)
    : small_(&small), big_(&big) {
    if (small.characteristic() != big.characteristic())
        throw std::invalid_argument("embedding requires equal characteristic");
    if (big.degree() % small.degree() != 0)
        throw std::invalid_argument("small field degree must divide big field degree");
    if (small.size() > kTableCeiling)
        throw std::invalid_argument("embedding table too large");

    const uint64_t q = small.size();
    if (&small == &big) {
        image_.resize(q);
        preimage_.reserve(q);
        for (uint64_t i = 0; i < q; ++i) {
            image_[i] = i;
            preimage_.emplace_back(i, i);
        }
        return;
    }

    // Find the smallest-index root of the small modulus among the big
    // field's subfield of q elements.
    uint64_t root = 0;
    auto eval_small_modulus = [&](uint64_t x) {
        uint64_t acc = 0;
        const auto& f = small.modulus();
        for (size_t i = f.size(); i-- > 0;) acc = big.add(big.mul(acc, x), f[i]);
        return acc;
    };
    std::vector<uint64_t> sub;
    sub.reserve(q);
    sub.push_back(0);
    uint64_t step = (big.size() - 1) / (q - 1);
    uint64_t g = big.generator_index();
    for (uint64_t k = 0; k + 1 < q; ++k)
        sub.push_back(big.pow(g, static_cast<int64_t>(step * k)));
    std::sort(sub.begin(), sub.end());
    bool have_root = false;
    for (uint64_t x : sub) {
        if (eval_small_modulus(x) == 0) {
            root = x;
            have_root = true;
            break;
        }
    }
    if (!have_root) throw std::logic_error("small modulus has no root in big field");

    image_.resize(q);
    const uint64_t p = small.characteristic();
    for (uint64_t idx = 0; idx < q; ++idx) {
        uint64_t t = idx, acc = 0, rp = 1;
        for (unsigned d = 0; d < small.degree(); ++d) {
            uint64_t digit = t % p;
            t /= p;
            if (digit) acc = big.add(acc, big.mul(digit, rp));
            rp = big.mul(rp, root);
        }
        image_[idx] = acc;
        preimage_.emplace_back(acc, idx);
    }
    std::sort(preimage_.begin(), preimage_.end());
}

uint64_t FieldEmbedding::lift(uint64_t small_index) const {
    if (small_index >= image_.size()) throw std::invalid_argument("element index out of range");
    return image_[small_index];
}

std::optional<uint64_t> FieldEmbedding::project(uint64_t big_index) const {
    auto it = std::lower_bound(preimage_.begin(), preimage_.end(),
                               std::make_pair(big_index, uint64_t(0)));
    if (it == preimage_.end() || it->first != big_index) return std::nullopt;
    return it->second;
}

const FieldEmbedding& FieldEmbedding::get(const FieldContext& small, const FieldContext& big) {
    static std::mutex mu;
    static std::map<std::pair<const FieldContext*, const FieldContext*>,
                    std::unique_ptr<FieldEmbedding>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(&small, &big);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto emb = std::unique_ptr<FieldEmbedding>(new FieldEmbedding(small, big));
        it = cache.emplace(key, std::move(emb)).first;
    }
    return *it->second;
}

} // namespace cb
