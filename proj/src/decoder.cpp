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

#include "cb/decoder.hpp"

#include <algorithm>
#include <stdexcept>

namespace cb {

namespace {

// Row-major matrix over a field context, just enough linear algebra for
// syndrome ranks and the error-value solve.
struct Matrix {
    const FieldContext& F;
    size_t rows, cols;
    std::vector<uint64_t> a;

    Matrix(const FieldContext& f, size_t r, size_t c) : F(f), rows(r), cols(c), a(r * c, 0) {}
    uint64_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint64_t at(size_t r, size_t c) const { return a[r * cols + c]; }
};

uint64_t matrix_rank(Matrix m) {
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        for (size_t c = 0; c < m.cols; ++c) std::swap(m.a[rank * m.cols + c], m.a[pivot * m.cols + c]);
        uint64_t inv = m.F.inv(m.at(rank, col));
        for (size_t r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            uint64_t factor = m.F.mul(m.at(r, col), inv);
            for (size_t c = col; c < m.cols; ++c)
                m.at(r, c) = m.F.sub(m.at(r, c), m.F.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

// Solves M x = rhs when the system is consistent with full column rank;
// returns nullopt otherwise.
std::optional<std::vector<uint64_t>> solve_full_rank(Matrix m, std::vector<uint64_t> rhs) {
    const size_t n = m.cols;
    size_t rank = 0;
    std::vector<size_t> pivot_row_of_col(n, SIZE_MAX);
    for (size_t col = 0; col < n && rank < m.rows; ++col) {
        size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) return std::nullopt; // rank deficient
        for (size_t c = 0; c < n; ++c) std::swap(m.a[rank * n + c], m.a[pivot * n + c]);
        std::swap(rhs[rank], rhs[pivot]);
        uint64_t inv = m.F.inv(m.at(rank, col));
        for (size_t c = 0; c < n; ++c) m.at(rank, c) = m.F.mul(m.at(rank, c), inv);
        rhs[rank] = m.F.mul(rhs[rank], inv);
        for (size_t r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            uint64_t factor = m.at(r, col);
            for (size_t c = col; c < n; ++c)
                m.at(r, c) = m.F.sub(m.at(r, c), m.F.mul(factor, m.at(rank, c)));
            rhs[r] = m.F.sub(rhs[r], m.F.mul(factor, rhs[rank]));
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    if (rank < n) return std::nullopt;
    // consistency of the remaining rows
    for (size_t r = rank; r < m.rows; ++r)
        if (rhs[r] != 0) return std::nullopt;
    std::vector<uint64_t> x(n);
    for (size_t c = 0; c < n; ++c) x[c] = rhs[pivot_row_of_col[c]];
    return x;
}

} // namespace

bool SyndromeSet::all_zero() const {
    for (const auto& s : seq)
        for (uint64_t v : s)
            if (v) return false;
    return true;
}

uint64_t decoding_radius(uint64_t delta, uint64_t nu, uint64_t d_b) {
    if (d_b == 0) throw std::invalid_argument("d_b must be positive");
    return (delta + nu - 1) / (2 * d_b);
}

uint64_t decoding_radius(const BoundCertificate& cert) {
    if (cert.variant != BoundVariant::gen1)
        throw std::invalid_argument("decoding radius applies to gen1 certificates");
    return decoding_radius(cert.delta, cert.nu, cert.d_b);
}

SyndromeSet compute_syndromes(const CyclicCode& a, std::span<const uint64_t> received,
                              const Poly& b_word, const BoundCertificate& cert) {
    if (cert.variant != BoundVariant::gen1)
        throw std::invalid_argument("syndromes follow the gen1 exponent pattern");
    if (received.size() != a.n()) throw std::invalid_argument("received word length differs from n_a");
    for (uint64_t s : received)
        if (s >= a.q()) throw std::invalid_argument("received symbol outside the alphabet");
    if (b_word.is_zero()) throw std::invalid_argument("b(X) must be a nonzero codeword of B");

    SyndromeSet out;
    out.n_a = a.n();
    out.n_b = cert.n_b;
    out.q = a.q();
    out.f1 = cert.f1 % a.n();
    out.f2 = cert.n_b ? cert.f2 % cert.n_b : 0;
    out.m1 = cert.m1;
    out.m2 = cert.m2;
    out.delta = cert.delta;
    out.nu = cert.nu;
    out.d_b = cert.d_b;

    const FieldContext& joint = joint_field(a.n(), cert.n_b, a.q());
    out.field = &joint;
    out.alpha = FieldEmbedding::get(a.root_context(), joint).lift(a.root());
    out.beta = element_of_order(joint, cert.n_b).index();

    const FieldEmbedding& lift = FieldEmbedding::get(a.alphabet(), joint);
    for (int z = 0; z <= b_word.degree(); ++z) {
        if (b_word[z] == 0) continue;
        out.b_support.push_back(static_cast<uint64_t>(z));
        out.b_coeffs.push_back(lift.lift(b_word[z]));
    }

    // evaluations of r and b at all needed exponents, memoized per residue
    std::vector<uint64_t> r_lift(a.n());
    for (uint64_t i = 0; i < a.n(); ++i) r_lift[i] = lift.lift(received[i]);
    auto r_eval = [&](uint64_t e) {
        uint64_t x = joint.pow(out.alpha, static_cast<int64_t>(e));
        uint64_t acc = 0, xp = 1;
        for (uint64_t i = 0; i < a.n(); ++i) {
            if (r_lift[i]) acc = joint.add(acc, joint.mul(r_lift[i], xp));
            xp = joint.mul(xp, x);
        }
        return acc;
    };
    auto b_eval = [&](uint64_t e) {
        uint64_t x = joint.pow(out.beta, static_cast<int64_t>(e));
        uint64_t acc = 0;
        for (size_t idx = 0; idx < out.b_support.size(); ++idx)
            acc = joint.add(acc, joint.mul(out.b_coeffs[idx],
                                           joint.pow(x, static_cast<int64_t>(out.b_support[idx]))));
        return acc;
    };
    std::vector<int64_t> r_cache(a.n(), -1), b_cache(cert.n_b, -1);
    auto r_at = [&](uint64_t e) {
        e %= a.n();
        if (r_cache[e] < 0) r_cache[e] = static_cast<int64_t>(r_eval(e));
        return static_cast<uint64_t>(r_cache[e]);
    };
    auto b_at = [&](uint64_t e) {
        e %= cert.n_b;
        if (b_cache[e] < 0) b_cache[e] = static_cast<int64_t>(b_eval(e));
        return static_cast<uint64_t>(b_cache[e]);
    };

    out.seq.assign(cert.nu + 1, std::vector<uint64_t>(cert.delta - 1, 0));
    for (uint64_t j = 0; j <= cert.nu; ++j)
        for (uint64_t i = 0; i < cert.delta - 1; ++i) {
            uint64_t e1 = (out.f1 + i * out.m1 + j) % a.n();
            uint64_t e2 = (out.f2 + i * out.m2 + j) % cert.n_b;
            out.seq[j][i] = joint.mul(r_at(e1), b_at(e2));
        }
    return out;
}

std::pair<uint64_t, std::vector<uint64_t>> synthesize_joint_lfsr(
    const FieldContext& field, const std::vector<std::vector<uint64_t>>& sequences) {
    const size_t M = sequences.size();
    if (M == 0) throw std::invalid_argument("need at least one sequence");
    const size_t N = sequences[0].size();
    for (const auto& s : sequences)
        if (s.size() != N) throw std::invalid_argument("sequences must have equal length");

    // Iterative triangularization: T has support in columns 0..L with
    // T[L] = 1; row (r, j) requires sum_c T[c] * s[j][r+c] = 0 for all
    // r <= N-1-L. Rows where no stored pivot can cancel a discrepancy
    // force L to grow; the first L whose scan completes is minimal. The
    // reversed T gives Lambda with Lambda(0) = 1.
    struct Record {
        std::vector<uint64_t> poly;
        uint64_t discrepancy;
    };
    std::vector<std::optional<Record>> records(N * M);
    std::vector<uint64_t> T{1};
    size_t L = 0;
    while (L < N) {
        bool advanced = false;
        for (size_t r = 0; r + L < N && !advanced; ++r) {
            for (size_t j = 0; j < M; ++j) {
                uint64_t disc = 0;
                for (size_t c = 0; c <= L; ++c)
                    if (T[c]) disc = field.add(disc, field.mul(T[c], sequences[j][r + c]));
                if (disc == 0) continue;
                auto& rec = records[r * M + j];
                if (rec) {
                    uint64_t factor = field.div(disc, rec->discrepancy);
                    if (rec->poly.size() > T.size()) T.resize(rec->poly.size(), 0);
                    for (size_t c = 0; c < rec->poly.size(); ++c)
                        T[c] = field.sub(T[c], field.mul(factor, rec->poly[c]));
                } else {
                    rec = Record{T, disc};
                    // lengthen the register and restart the scan
                    T.insert(T.begin(), 0);
                    ++L;
                    advanced = true;
                    break;
                }
            }
        }
        if (!advanced) break; // scan completed; L is feasible
    }
    // Lambda_k = T[L - k]
    std::vector<uint64_t> lambda(L + 1, 0);
    for (size_t k = 0; k <= L; ++k) lambda[k] = L - k < T.size() ? T[L - k] : 0;
    while (lambda.size() > 1 && lambda.back() == 0) lambda.pop_back();
    return {L, lambda};
}

std::optional<ErrorLocator> solve_key_equation(const SyndromeSet& s, uint64_t t) {
    const uint64_t L_max = s.d_b * t;
    if (L_max > s.delta - 2)
        throw std::invalid_argument("trial error count exceeds the key equation capacity");
    auto [L, lambda] = synthesize_joint_lfsr(*s.field, s.seq);
    if (L > L_max) return std::nullopt;
    // residual: coefficients d_b*t .. delta-2 of Lambda * S^(j) must vanish
    const FieldContext& F = *s.field;
    for (const auto& sj : s.seq) {
        for (uint64_t i = L_max; i < s.delta - 1; ++i) {
            uint64_t acc = 0;
            for (size_t k = 0; k < lambda.size() && k <= i; ++k)
                if (lambda[k]) acc = F.add(acc, F.mul(lambda[k], sj[i - k]));
            if (acc != 0) return std::nullopt;
        }
    }
    ErrorLocator loc{Poly(F, lambda), L};
    return loc;
}

uint64_t syndrome_matrix_rank(const SyndromeSet& s, uint64_t t) {
    const uint64_t cols = s.d_b * t;
    if (cols == 0) return 0;
    if (cols + 1 > s.delta - 1)
        throw std::invalid_argument("matrix shape requires d_b * t <= delta - 2");
    const uint64_t rows_per_block = s.delta - 1 - cols;
    Matrix m(*s.field, (s.nu + 1) * rows_per_block, cols);
    for (uint64_t j = 0; j <= s.nu; ++j)
        for (uint64_t r = 0; r < rows_per_block; ++r)
            for (uint64_t c = 0; c < cols; ++c)
                m.at(j * rows_per_block + r, c) = s.seq[j][r + c];
    return matrix_rank(std::move(m));
}

std::optional<std::vector<uint64_t>> find_error_positions(const ErrorLocator& loc,
                                                          const SyndromeSet& s) {
    const FieldContext& F = *s.field;
    const Poly& lambda = loc.lambda;
    std::vector<uint64_t> positions;
    for (uint64_t p = 0; p < s.n_a; ++p) {
        bool all_roots = true;
        for (uint64_t z : s.b_support) {
            uint64_t root_arg =
                F.inv(F.mul(F.pow(s.alpha, static_cast<int64_t>(p * s.m1)),
                            F.pow(s.beta, static_cast<int64_t>(z * s.m2))));
            if (lambda.eval(root_arg) != 0) {
                all_roots = false;
                break;
            }
        }
        if (all_roots) positions.push_back(p);
    }
    uint64_t deg = static_cast<uint64_t>(std::max(lambda.degree(), 0));
    if (positions.size() * s.d_b != deg) return std::nullopt;
    return positions;
}

std::optional<std::vector<uint64_t>> recover_error_values(const std::vector<uint64_t>& positions,
                                                          const SyndromeSet& s) {
    const FieldContext& F = *s.field;
    const size_t t = positions.size();
    if (t == 0) return std::vector<uint64_t>{};
    const uint64_t rows_per_block = s.delta - 1;
    Matrix m(F, (s.nu + 1) * rows_per_block, t);
    std::vector<uint64_t> rhs((s.nu + 1) * rows_per_block, 0);
    for (uint64_t j = 0; j <= s.nu; ++j) {
        for (uint64_t i = 0; i < rows_per_block; ++i) {
            size_t row = j * rows_per_block + i;
            rhs[row] = s.seq[j][i];
            for (size_t pi = 0; pi < t; ++pi) {
                uint64_t p = positions[pi];
                // alpha^(p(f1+j)) * sum_z b_z beta^(z(f2+j)) (alpha^(p m1) beta^(z m2))^i
                uint64_t outer = F.pow(s.alpha, static_cast<int64_t>(p * (s.f1 + j)));
                uint64_t acc = 0;
                for (size_t zi = 0; zi < s.b_support.size(); ++zi) {
                    uint64_t z = s.b_support[zi];
                    uint64_t inner = F.mul(F.pow(s.alpha, static_cast<int64_t>(p * s.m1)),
                                           F.pow(s.beta, static_cast<int64_t>(z * s.m2)));
                    uint64_t term = F.mul(s.b_coeffs[zi],
                                          F.pow(s.beta, static_cast<int64_t>(z * (s.f2 + j))));
                    acc = F.add(acc, F.mul(term, F.pow(inner, static_cast<int64_t>(i))));
                }
                m.at(row, pi) = F.mul(outer, acc);
            }
        }
    }
    auto sol = solve_full_rank(std::move(m), std::move(rhs));
    if (!sol) return std::nullopt;
    // values must live in GF(q) and be nonzero
    auto [p, e] = factor_prime_power(s.q);
    const FieldContext& alphabet = make_field(p, e);
    const FieldEmbedding& emb = FieldEmbedding::get(alphabet, F);
    std::vector<uint64_t> values(t);
    for (size_t i = 0; i < t; ++i) {
        auto small = emb.project((*sol)[i]);
        if (!small || *small == 0) return std::nullopt;
        values[i] = *small;
    }
    return values;
}

DecodeResult decode(const CyclicCode& a, std::span<const uint64_t> received,
                    const BoundCertificate& cert, const CyclicCode& b,
                    const DecodeOptions& options) {
    if (cert.variant != BoundVariant::gen1)
        throw std::invalid_argument("decoding requires a gen1 certificate");
    if (cert.n_b != b.n()) throw std::invalid_argument("certificate and code B disagree on n_b");

    DecodeResult out;
    Poly b_word = options.b_word ? *options.b_word : min_weight_codeword(b);
    if (!b.contains(b_word)) {
        out.reason = "b(X) is not a codeword of B";
        return out;
    }
    if (b_word.weight() != cert.d_b) {
        out.reason = "b(X) weight differs from the certificate's d_b";
        return out;
    }

    SyndromeSet s = compute_syndromes(a, received, b_word, cert);
    // the key equation can hold at most (delta-2)/d_b errors
    const uint64_t tau = std::min(decoding_radius(cert), (cert.delta - 2) / cert.d_b);
    if (options.audit_rank)
        for (uint64_t t = 1; t <= tau; ++t)
            out.rank_audit.emplace_back(t, syndrome_matrix_rank(s, t));

    const FieldContext& alphabet = a.alphabet();
    for (uint64_t t = 0; t <= tau; ++t) {
        auto loc = solve_key_equation(s, t);
        if (!loc) continue;
        auto positions = find_error_positions(*loc, s);
        if (!positions) continue;
        auto values = recover_error_values(*positions, s);
        if (!values) continue;
        std::vector<uint64_t> corrected(received.begin(), received.end());
        for (size_t i = 0; i < positions->size(); ++i) {
            uint64_t p = (*positions)[i];
            corrected[p] = alphabet.sub(corrected[p], (*values)[i]);
        }
        if (!a.contains(corrected)) continue;
        SyndromeSet check = compute_syndromes(a, corrected, b_word, cert);
        if (!check.all_zero()) continue;
        out.status = DecodeResult::Status::corrected;
        out.error_positions = std::move(*positions);
        out.error_values = std::move(*values);
        out.corrected = std::move(corrected);
        return out;
    }
    out.reason = "no trial error count up to the radius produced a consistent codeword";
    return out;
}

} // namespace cb
