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
#include <utility>
#include <vector>

#include "cb/cyclic.hpp"

namespace cb {

/// Canonical Bezout pair (a, b) with a*n1 + b*n2 == 1: the representative
/// with minimal |a|, ties broken toward the negative one. Requires
/// gcd(n1, n2) == 1.
std::pair<int64_t, int64_t> bezout(uint64_t n1, uint64_t n2);

/// Cyclic product code of two component codes over the same alphabet with
/// coprime lengths. The defining set lives modulo na*nb; the root element
/// gamma = alpha^nb * beta^na is chosen compatibly with both component
/// roots so the defining set and the generator describe the same code.
struct ProductCode {
    CyclicCode a;
    CyclicCode b;
    int64_t bezout_a;
    int64_t bezout_b;
    uint64_t n; // na * nb
    uint64_t k; // ka * kb
    DefiningSet defining_set;
    Poly generator;

    const FieldContext& root_context() const;
    uint64_t root() const { return root_; }
    /// View as a plain cyclic code of length na*nb.
    CyclicCode as_cyclic_code() const;

    uint64_t root_ = 0;
    const FieldContext* root_ctx_ = nullptr;
};

ProductCode make_product(const CyclicCode& a, const CyclicCode& b);

/// Generator of the product code:
/// gcd(X^(n1*n2) - 1, g1(X^(b*n2)) * g2(X^(a*n1))), substitution exponents
/// reduced mod n1*n2 since everything lives in that quotient ring.
Poly product_generator(const Poly& g1, const Poly& g2, uint64_t n1, uint64_t n2);

/// Defining set of the product code modulo n1*n2: the union of the two
/// families of multiplied-and-shifted component sets.
DefiningSet product_defining_set(const DefiningSet& da, const DefiningSet& db, uint64_t n1,
                                 uint64_t n2);

/// Parameters (f, m) modulo n1*n2 with f = f1*b^2*n2 + f2*a^2*n1 and m
/// likewise, mapping component-level exponent progressions onto the
/// product code: f + i*m = b*(f1 + i*m1) mod n1 and = a*(f2 + i*m2) mod n2.
std::pair<uint64_t, uint64_t> crt_parameters(int64_t f1, int64_t f2, int64_t m1, int64_t m2,
                                             uint64_t n1, uint64_t n2);

/// Interleave an na x nb array (columns of length na in A, rows of length
/// nb in B) into the univariate product codeword c_i = m[i mod na][i mod nb].
Poly interleave(const ProductCode& pc, const std::vector<std::vector<uint64_t>>& mat);

/// Inverse of interleave.
std::vector<std::vector<uint64_t>> deinterleave(const ProductCode& pc,
                                                const Poly& word);

} // namespace cb
