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

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cb/bounds.hpp"
#include "cb/codefile.hpp"
#include "cb/cyclic.hpp"
#include "cb/decoder.hpp"
#include "cb/product.hpp"
#include "cb/sweep.hpp"

namespace {

using nlohmann::json;

uint64_t brute_force_budget() {
    if (const char* env = std::getenv("CB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("CB_BUDGET must be a positive integer");
    }
    return cb::kDefaultBruteForceBudget;
}

// One logical output record: `key=value` lines in text mode, a single JSON
// object per record in json mode.
struct Report {
    explicit Report(bool j) : as_json(j) {}
    bool as_json;
    json obj = json::object();
    std::ostringstream text;

    void field(const std::string& key, const std::string& value) {
        if (as_json) obj[key] = value;
        else text << key << "=" << value << "\n";
    }
    void field(const std::string& key, uint64_t value) {
        if (as_json) obj[key] = value;
        else text << key << "=" << value << "\n";
    }
    void field(const std::string& key, int64_t value) {
        if (as_json) obj[key] = value;
        else text << key << "=" << value << "\n";
    }
    void field(const std::string& key, const std::vector<uint64_t>& value) {
        if (as_json) obj[key] = value;
        else text << key << "=" << cb::format_list(value) << "\n";
    }
    void line(const std::string& raw) {
        if (!as_json) text << raw << "\n";
    }
    void emit() {
        if (as_json) std::cout << obj.dump() << "\n";
        else std::cout << text.str();
    }
};

std::vector<uint64_t> parse_received(const std::string& raw, uint64_t n, uint64_t q) {
    std::vector<uint64_t> word;
    if (raw.rfind("0x", 0) == 0 || raw.rfind("0X", 0) == 0) {
        if (q != 2) throw std::invalid_argument("hex received words are for binary codes");
        unsigned long long bits = std::stoull(raw.substr(2), nullptr, 16);
        for (uint64_t i = 0; i < n; ++i) word.push_back(bits >> i & 1);
        return word;
    }
    std::istringstream in(raw);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        long long v = std::stoll(tok);
        if (v < 0 || static_cast<uint64_t>(v) >= q)
            throw std::invalid_argument("received symbol outside the alphabet");
        word.push_back(static_cast<uint64_t>(v));
    }
    if (word.size() != n) throw std::invalid_argument("received word must have n symbols");
    return word;
}

void report_certificate(Report& rep, const cb::BoundCertificate& cert) {
    rep.field("variant", cb::to_string(cert.variant));
    rep.field("theorem", cert.theorem());
    rep.field("value", cert.value);
    rep.field("f1", cert.f1);
    rep.field("f2", cert.f2);
    rep.field("m1", cert.m1);
    rep.field("m2", cert.m2);
    rep.field("delta", cert.delta);
    rep.field("nu", cert.nu);
    rep.field("d_b", cert.d_b);
}

int cmd_distance(const std::string& path, bool as_json) {
    cb::CyclicCode code = cb::CodeSpecFile::load(path).to_code();
    uint64_t d = cb::min_distance_bruteforce(code, brute_force_budget());
    if (as_json) {
        json o{{"n", code.n()}, {"k", code.k()}, {"d", d}};
        std::cout << o.dump() << "\n";
    } else {
        std::cout << "n=" << code.n() << " k=" << code.k() << " d=" << d << "\n";
    }
    return 0;
}

int cmd_analyze(const std::string& path_a, const std::string& path_b, const std::string& variant,
                const std::string& out_path, bool as_json) {
    cb::CodeSpecFile spec_a = cb::CodeSpecFile::load(path_a);
    cb::CyclicCode a = spec_a.to_code();
    auto v = cb::bound_variant_from_string(variant);
    if (!v) throw std::invalid_argument("unknown variant: " + variant);

    cb::BoundResult result;
    std::optional<cb::CodeSpecFile> spec_b;
    std::optional<cb::CyclicCode> b;
    if (*v == cb::BoundVariant::bch) {
        result = cb::bch_bound(a.defining_set());
    } else if (*v == cb::BoundVariant::ht) {
        result = cb::ht_bound(a.defining_set());
    } else {
        if (path_b.empty()) throw std::invalid_argument("gen1/gen2 need --with <fileB>");
        spec_b = cb::CodeSpecFile::load(path_b);
        b = spec_b->to_code();
        uint64_t d_b = cb::min_distance_bruteforce(*b, brute_force_budget());
        result = cb::generalized_bound(a, *b, d_b, *v);
    }

    Report rep{as_json};
    if (!result.certificate) {
        rep.field("value", result.value);
        rep.field("certificate", std::string("none"));
        rep.emit();
        return 0;
    }
    const cb::BoundCertificate& cert = *result.certificate;
    report_certificate(rep, cert);
    cb::VerifyResult vr = cb::verify_certificate(cert, a, b ? &*b : nullptr);
    rep.field("verified", std::string(vr.ok ? "true" : "false"));
    if (!vr.ok) rep.field("reason", vr.reason);
    rep.emit();

    if (!out_path.empty()) {
        cb::CertificateFile cf;
        cf.cert = cert;
        cf.code_a = spec_a;
        if (spec_b) cf.code_b = spec_b;
        cf.save(out_path);
    }
    return vr.ok ? 0 : 1;
}

int cmd_product(const std::string& path_a, const std::string& path_b,
                const std::vector<int64_t>& crt, bool as_json) {
    cb::CyclicCode a = cb::CodeSpecFile::load(path_a).to_code();
    cb::CyclicCode b = cb::CodeSpecFile::load(path_b).to_code();
    cb::ProductCode pc = cb::make_product(a, b);
    Report rep{as_json};
    rep.field("n", pc.n);
    rep.field("k", pc.k);
    rep.field("bezout_a", pc.bezout_a);
    rep.field("bezout_b", pc.bezout_b);
    rep.field("defining_set", pc.defining_set.residues());
    rep.field("generator", pc.generator.coeffs());
    if (!crt.empty()) {
        if (crt.size() != 4) throw std::invalid_argument("--crt needs f1 f2 m1 m2");
        auto [f, m] = cb::crt_parameters(crt[0], crt[1], crt[2], crt[3], a.n(), b.n());
        if (as_json) {
            rep.field("f", f);
            rep.field("m", m);
        } else {
            rep.line("f=" + std::to_string(f) + " m=" + std::to_string(m));
        }
    }
    rep.emit();
    return 0;
}

int cmd_search(const std::string& path_a, const std::string& family, uint64_t max_nb,
               bool as_json) {
    if (family != "spc") throw std::invalid_argument("only --b-family spc is supported");
    cb::CyclicCode a = cb::CodeSpecFile::load(path_a).to_code();
    uint64_t best1 = 0, best2 = 0;
    std::optional<cb::BoundCertificate> best1_cert, best2_cert;
    for (uint64_t nb = 2; nb <= max_nb; ++nb) {
        if (cb::gcd_u64(nb, a.q()) != 1 || cb::gcd_u64(nb, a.n()) != 1) continue;
        cb::CyclicCode b = cb::CyclicCode::from_defining_set(a.q(), nb, {0});
        uint64_t d_b = cb::min_distance_bruteforce(b, brute_force_budget());
        auto r1 = cb::generalized_bound(a, b, d_b, cb::BoundVariant::gen1);
        auto r2 = cb::generalized_bound(a, b, d_b, cb::BoundVariant::gen2);
        Report rep{as_json};
        rep.field("n_b", nb);
        rep.field("d_b", d_b);
        rep.field("gen1", r1.value);
        rep.field("gen2", r2.value);
        rep.emit();
        if (r1.value > best1 && r1.certificate) {
            best1 = r1.value;
            best1_cert = r1.certificate;
        }
        if (r2.value > best2 && r2.certificate) {
            best2 = r2.value;
            best2_cert = r2.certificate;
        }
    }
    if (best1_cert) {
        Report rep{as_json};
        rep.field("best", std::string("gen1"));
        report_certificate(rep, *best1_cert);
        rep.emit();
    }
    if (best2_cert) {
        Report rep{as_json};
        rep.field("best", std::string("gen2"));
        report_certificate(rep, *best2_cert);
        rep.emit();
    }
    return 0;
}

int cmd_decode(const std::string& path_a, const std::string& cert_path,
               const std::string& received_raw, const std::string& bword_raw, bool audit_rank,
               bool lax, bool as_json) {
    cb::CyclicCode a = cb::CodeSpecFile::load(path_a).to_code();
    cb::CertificateFile cf = cb::CertificateFile::load(cert_path);
    if (!cf.code_b) throw std::invalid_argument("certificate carries no associated code B");
    cb::CyclicCode cert_a = cf.code_a.to_code();
    if (cert_a.n() != a.n() || cert_a.q() != a.q() ||
        !(cert_a.defining_set() == a.defining_set()))
        throw std::invalid_argument("certificate was issued for a different code");
    cb::VerifyResult vr = cf.verify();
    if (!vr.ok) {
        if (!lax) throw std::invalid_argument("certificate fails verification: " + vr.reason);
        std::cerr << "warning: certificate fails verification: " << vr.reason << "\n";
    }
    cb::CyclicCode b = cf.code_b->to_code();
    std::vector<uint64_t> received = parse_received(received_raw, a.n(), a.q());
    cb::DecodeOptions opts;
    opts.audit_rank = audit_rank;
    if (!bword_raw.empty())
        opts.b_word = cb::Poly(b.alphabet(), parse_received(bword_raw, b.n(), b.q()));
    cb::DecodeResult res = cb::decode(a, received, cf.cert, b, opts);
    Report rep{as_json};
    bool ok = res.status == cb::DecodeResult::Status::corrected;
    rep.field("status", std::string(ok ? "corrected" : "failure"));
    if (ok) {
        rep.field("error_positions", res.error_positions);
        rep.field("error_values", res.error_values);
        rep.field("corrected", res.corrected);
    } else {
        rep.field("reason", res.reason);
    }
    for (auto [t, rank] : res.rank_audit)
        rep.field("rank_t" + std::to_string(t), rank);
    rep.emit();
    return ok ? 0 : 2;
}

int cmd_sweep(uint64_t min_n, uint64_t max_n, uint64_t max_nb, unsigned threads, bool as_json) {
    cb::SweepOptions opt;
    opt.min_n = min_n;
    opt.max_n = max_n;
    opt.max_nb = max_nb;
    opt.threads = threads;
    opt.budget = brute_force_budget();
    auto records = cb::sweep_binary_codes(opt);
    uint64_t violations = 0;
    for (const auto& rec : records) {
        Report rep{as_json};
        rep.field("n", rec.n);
        rep.field("defining_set", rec.defining_set);
        rep.field("k", rec.k);
        rep.field("d", rec.d_true);
        rep.field("bch", rec.bch);
        rep.field("ht", rec.ht);
        if (rec.has_associate) {
            rep.field("gen1", rec.gen1);
            rep.field("gen2", rec.gen2);
        }
        rep.field("status", std::string(rec.sound ? "ok" : "VIOLATION"));
        rep.emit();
        if (!rec.sound) ++violations;
    }
    Report rep{as_json};
    rep.field("codes", static_cast<uint64_t>(records.size()));
    rep.field("violations", violations);
    rep.emit();
    return violations == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic code bounds, cyclic product codes and syndrome decoding"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON record per line");

    auto* dist = app.add_subcommand("distance", "brute-force minimum distance of a code file");
    std::string dist_file;
    dist->add_option("file", dist_file, "code description file")->required();

    auto* analyze = app.add_subcommand("analyze", "compute a distance bound with certificate");
    std::string an_file, an_with, an_variant = "ht", an_out;
    analyze->add_option("file", an_file, "code description file")->required();
    analyze->add_option("--with", an_with, "associated code file (gen1/gen2)");
    analyze->add_option("--variant", an_variant, "bch|ht|gen1|gen2");
    analyze->add_option("--out", an_out, "write the certificate to this file");

    auto* product = app.add_subcommand("product", "construct the cyclic product code");
    std::string pr_a, pr_b;
    std::vector<int64_t> pr_crt;
    product->add_option("fileA", pr_a)->required();
    product->add_option("fileB", pr_b)->required();
    product->add_option("--crt", pr_crt, "f1 f2 m1 m2: also print product parameters (f, m)")
        ->expected(4);

    auto* search = app.add_subcommand("search", "scan associated codes for the best bound");
    std::string se_file, se_family = "spc";
    uint64_t se_max_nb = 9;
    search->add_option("file", se_file)->required();
    search->add_option("--b-family", se_family, "family of associated codes (spc)");
    search->add_option("--max-nb", se_max_nb, "largest associate length");

    auto* decode = app.add_subcommand("decode", "decode a received word with a gen1 certificate");
    std::string de_file, de_cert, de_received, de_bword;
    bool de_audit = false, de_lax = false;
    decode->add_option("file", de_file)->required();
    decode->add_option("--cert", de_cert, "certificate file")->required();
    decode->add_option("--received", de_received, "hex (0x..) or comma-separated symbols")
        ->required();
    decode->add_option("--bword", de_bword, "override b(X): a weight-d_b codeword of B");
    decode->add_flag("--audit-rank", de_audit, "print the syndrome matrix rank per trial t");
    decode->add_flag("--lax", de_lax, "only warn when the certificate fails verification");

    auto* sweep = app.add_subcommand("sweep", "soundness sweep over binary cyclic codes");
    uint64_t sw_min = 7, sw_max = 35, sw_max_nb = 9;
    unsigned sw_threads = 0;
    bool sw_all = false;
    sweep->add_flag("--all-binary", sw_all, "every coset union per length (always on)");
    sweep->add_option("--min-n", sw_min, "smallest length");
    sweep->add_option("--max-n", sw_max, "largest length");
    sweep->add_option("--max-nb", sw_max_nb, "largest associate length");
    sweep->add_option("--threads", sw_threads, "worker threads (0 = auto)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (dist->parsed()) return cmd_distance(dist_file, as_json);
        if (analyze->parsed()) return cmd_analyze(an_file, an_with, an_variant, an_out, as_json);
        if (product->parsed()) return cmd_product(pr_a, pr_b, pr_crt, as_json);
        if (search->parsed()) return cmd_search(se_file, se_family, se_max_nb, as_json);
        if (decode->parsed())
            return cmd_decode(de_file, de_cert, de_received, de_bword, de_audit, de_lax, as_json);
        if (sweep->parsed()) return cmd_sweep(sw_min, sw_max, sw_max_nb, sw_threads, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
