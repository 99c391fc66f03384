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

#include <optional>
#include <string>
#include <vector>

#include "cb/bounds.hpp"
#include "cb/cyclic.hpp"

namespace cb {

/// Line-oriented `key = value` description of a cyclic code. Exactly one of
/// defining_set/generator must be present; lists are bracketed and
/// comma-separated; `#` starts a comment; negative residues are normalized.
struct CodeSpecFile {
    std::optional<std::string> name;
    uint64_t q = 0;
    uint64_t n = 0;
    std::optional<std::vector<int64_t>> defining_set;
    std::optional<std::vector<uint64_t>> generator;

    CyclicCode to_code() const;
    static CodeSpecFile from_code(const CyclicCode& code, const std::string& name = "");
    std::string serialize() const;
    static CodeSpecFile parse(const std::string& text);
    static CodeSpecFile load(const std::string& path);
    void save(const std::string& path) const;
};

/// A bound certificate bundled with both code descriptions so it can be
/// re-verified on load.
struct CertificateFile {
    BoundCertificate cert;
    CodeSpecFile code_a;
    std::optional<CodeSpecFile> code_b;

    std::string serialize() const;
    static CertificateFile parse(const std::string& text);
    static CertificateFile load(const std::string& path);
    void save(const std::string& path) const;
    /// Runs verify_certificate on the embedded codes.
    VerifyResult verify() const;
};

std::string format_list(const std::vector<uint64_t>& values);
std::string format_list_signed(const std::vector<int64_t>& values);

} // namespace cb
