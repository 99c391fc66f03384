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

#include "cb/codefile.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cb {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// key -> raw value, comments stripped
std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed line: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("empty key in line: " + line);
        if (kv.count(key)) throw std::invalid_argument("duplicate key: " + key);
        kv[key] = val;
    }
    return kv;
}

std::vector<int64_t> parse_list(const std::string& raw) {
    std::string s = trim(raw);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("expected a bracketed list, got: " + raw);
    s = s.substr(1, s.size() - 2);
    std::vector<int64_t> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        size_t pos = 0;
        int64_t v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad list entry: " + tok);
        out.push_back(v);
    }
    return out;
}

int64_t parse_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("missing field: " + key);
    size_t pos = 0;
    int64_t v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("bad integer for " + key);
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

// Collects the keys with a given prefix (like "a.") into a sub-document.
std::string strip_prefix_block(const std::map<std::string, std::string>& kv,
                               const std::string& prefix) {
    std::ostringstream out;
    for (const auto& [k, v] : kv)
        if (k.rfind(prefix, 0) == 0) out << k.substr(prefix.size()) << " = " << v << "\n";
    return out.str();
}

} // namespace

std::string format_list(const std::vector<uint64_t>& values) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
    out << "]";
    return out.str();
}

std::string format_list_signed(const std::vector<int64_t>& values) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
    out << "]";
    return out.str();
}

CyclicCode CodeSpecFile::to_code() const {
    if (defining_set.has_value() == generator.has_value())
        throw std::invalid_argument("exactly one of defining_set/generator must be present");
    if (defining_set) return CyclicCode::from_defining_set(q, n, *defining_set);
    return CyclicCode::from_generator(q, n, *generator);
}

CodeSpecFile CodeSpecFile::from_code(const CyclicCode& code, const std::string& name) {
    CodeSpecFile f;
    if (!name.empty()) f.name = name;
    f.q = code.q();
    f.n = code.n();
    std::vector<int64_t> d(code.defining_set().residues().begin(),
                           code.defining_set().residues().end());
    f.defining_set = std::move(d);
    return f;
}

std::string CodeSpecFile::serialize() const {
    std::ostringstream out;
    if (name) out << "name = " << *name << "\n";
    out << "q = " << q << "\n";
    out << "n = " << n << "\n";
    if (defining_set) out << "defining_set = " << format_list_signed(*defining_set) << "\n";
    if (generator) out << "generator = " << format_list(*generator) << "\n";
    return out.str();
}

CodeSpecFile CodeSpecFile::parse(const std::string& text) {
    auto kv = parse_kv(text);
    CodeSpecFile f;
    if (kv.count("name")) f.name = kv["name"];
    f.q = static_cast<uint64_t>(parse_int(kv, "q"));
    f.n = static_cast<uint64_t>(parse_int(kv, "n"));
    bool has_d = kv.count("defining_set"), has_g = kv.count("generator");
    if (has_d == has_g)
        throw std::invalid_argument("exactly one of defining_set/generator must be present");
    if (has_d) f.defining_set = parse_list(kv["defining_set"]);
    if (has_g) {
        std::vector<uint64_t> g;
        for (int64_t v : parse_list(kv["generator"])) {
            if (v < 0) throw std::invalid_argument("generator coefficients must be nonnegative");
            g.push_back(static_cast<uint64_t>(v));
        }
        f.generator = std::move(g);
    }
    return f;
}

CodeSpecFile CodeSpecFile::load(const std::string& path) { return parse(read_file(path)); }
void CodeSpecFile::save(const std::string& path) const { write_file(path, serialize()); }

std::string CertificateFile::serialize() const {
    std::ostringstream out;
    out << "variant = " << to_string(cert.variant) << "\n";
    out << "value = " << cert.value << "\n";
    out << "f1 = " << cert.f1 << "\n";
    out << "f2 = " << cert.f2 << "\n";
    out << "m1 = " << cert.m1 << "\n";
    out << "m2 = " << cert.m2 << "\n";
    out << "delta = " << cert.delta << "\n";
    out << "nu = " << cert.nu << "\n";
    out << "d_b = " << cert.d_b << "\n";
    std::istringstream a(code_a.serialize());
    std::string line;
    while (std::getline(a, line)) out << "a." << line << "\n";
    if (code_b) {
        std::istringstream b(code_b->serialize());
        while (std::getline(b, line)) out << "b." << line << "\n";
    }
    return out.str();
}

CertificateFile CertificateFile::parse(const std::string& text) {
    auto kv = parse_kv(text);
    CertificateFile f;
    auto it = kv.find("variant");
    if (it == kv.end()) throw std::invalid_argument("missing field: variant");
    auto v = bound_variant_from_string(it->second);
    if (!v) throw std::invalid_argument("unknown variant: " + it->second);
    f.cert.variant = *v;
    f.cert.value = static_cast<uint64_t>(parse_int(kv, "value"));
    f.code_a = CodeSpecFile::parse(strip_prefix_block(kv, "a."));
    f.cert.n_a = f.code_a.n;
    f.cert.f1 = mod_norm(parse_int(kv, "f1"), f.code_a.n);
    f.cert.m1 = mod_norm(parse_int(kv, "m1"), f.code_a.n);
    if (f.cert.m1 == 0) f.cert.m1 = f.code_a.n; // keep a nonzero representative
    f.cert.delta = static_cast<uint64_t>(parse_int(kv, "delta"));
    f.cert.nu = static_cast<uint64_t>(parse_int(kv, "nu"));
    f.cert.d_b = kv.count("d_b") ? static_cast<uint64_t>(parse_int(kv, "d_b")) : 1;
    std::string bblock = strip_prefix_block(kv, "b.");
    if (!bblock.empty()) {
        f.code_b = CodeSpecFile::parse(bblock);
        f.cert.n_b = f.code_b->n;
        f.cert.f2 = mod_norm(parse_int(kv, "f2"), f.code_b->n);
        f.cert.m2 = mod_norm(parse_int(kv, "m2"), f.code_b->n);
        if (f.cert.m2 == 0) f.cert.m2 = f.code_b->n;
    } else {
        f.cert.n_b = 1;
        f.cert.f2 = 0;
        f.cert.m2 = 1;
    }
    return f;
}

CertificateFile CertificateFile::load(const std::string& path) { return parse(read_file(path)); }
void CertificateFile::save(const std::string& path) const { write_file(path, serialize()); }

VerifyResult CertificateFile::verify() const {
    CyclicCode a = code_a.to_code();
    if (code_b) {
        CyclicCode b = code_b->to_code();
        return verify_certificate(cert, a, &b);
    }
    return verify_certificate(cert, a, nullptr);
}

} // namespace cb
