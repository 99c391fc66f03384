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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cb/codefile.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CYCBOUND_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

RunResult run_with_env(const std::string& env, const std::string& args) {
    std::string cmd = env + " " + std::string(CYCBOUND_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "cycbound-cli-test";
    fs::create_directories(dir);
    return dir;
}

fs::path write_a17() {
    fs::path p = scratch_dir() / "a17.code";
    std::ofstream out(p);
    out << "name = a17\nq = 2\nn = 17\ndefining_set = [1, 2, 4, 8, -8, -4, -2, -1]\n";
    return p;
}

fs::path write_b3() {
    fs::path p = scratch_dir() / "b3.code";
    std::ofstream out(p);
    out << "name = b3\nq = 2\nn = 3\ndefining_set = [0]\n";
    return p;
}

bool contains_line(const std::string& text, const std::string& line) {
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        if (text.substr(pos, end - pos) == line) return true;
        if (end == text.size()) break;
        pos = end + 1;
    }
    return false;
}

} // namespace

TEST_CASE("distance subcommand prints n, k, d") {
    auto a17 = write_a17();
    auto r = run_cli("distance " + a17.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n=17 k=9 d=5\n");
}

TEST_CASE("distance accepts generator files") {
    fs::path p = scratch_dir() / "spc3.code";
    {
        std::ofstream out(p);
        out << "q = 2\nn = 3\ngenerator = [1, 1]\n";
    }
    auto r = run_cli("distance " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n=3 k=2 d=2\n");
}

TEST_CASE("analyze emits the gen1 certificate of the worked example") {
    auto a17 = write_a17();
    auto b3 = write_b3();
    auto cert_path = scratch_dir() / "a17.cert";
    auto r = run_cli("analyze " + a17.string() + " --with " + b3.string() +
                     " --variant gen1 --out " + cert_path.string());
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.out, "variant=gen1"));
    CHECK(contains_line(r.out, "value=5"));
    CHECK(contains_line(r.out, "delta=10"));
    CHECK(contains_line(r.out, "nu=0"));
    CHECK(contains_line(r.out, "d_b=2"));
    CHECK(contains_line(r.out, "verified=true"));

    // round trip: the emitted certificate re-loads and re-verifies
    auto cf = cb::CertificateFile::load(cert_path.string());
    CHECK(cf.verify().ok);
    CHECK(cf.cert.value == 5);
}

TEST_CASE("analyze supports the plain variants") {
    auto a17 = write_a17();
    auto r = run_cli("analyze " + a17.string() + " --variant bch");
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.out, "value=4"));
    auto r2 = run_cli("analyze " + a17.string() + " --variant ht");
    CHECK(r2.exit_code == 0);
    CHECK(contains_line(r2.out, "value=5"));
    // gen1 without --with is a usage error
    auto r3 = run_cli("analyze " + a17.string() + " --variant gen1");
    CHECK(r3.exit_code == 1);
}

TEST_CASE("product subcommand prints the construction and crt parameters") {
    auto a17 = write_a17();
    auto b3 = write_b3();
    auto r = run_cli("product " + a17.string() + " " + b3.string() + " --crt -4 -1 1 1");
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.out, "n=51"));
    CHECK(contains_line(r.out, "k=18"));
    CHECK(contains_line(r.out, "bezout_a=-1"));
    CHECK(contains_line(r.out, "bezout_b=6"));
    CHECK(contains_line(r.out, "f=10 m=23"));
    CHECK(r.out.find("defining_set=[0, 3, 5, 6, 7, 9, 10, 11, 12, 14, 15, 18, 20, 21, 22, 23, "
                     "24, 27, 28, 29, 30, 31, 33, 36, 37, 39, 40, 41, 42, 44, 45, 46, 48]") !=
          std::string::npos);
}

TEST_CASE("decode subcommand corrects, audits and reports failures") {
    auto a17 = write_a17();
    auto b3 = write_b3();
    auto cert_path = scratch_dir() / "a17.cert";
    run_cli("analyze " + a17.string() + " --with " + b3.string() + " --variant gen1 --out " +
            cert_path.string());

    // plant two errors on the zero codeword
    auto r = run_cli("decode " + a17.string() + " --cert " + cert_path.string() +
                     " --received 0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0 --audit-rank");
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.out, "status=corrected"));
    CHECK(contains_line(r.out, "error_positions=[3, 11]"));
    CHECK(contains_line(r.out, "rank_t1=2"));
    CHECK(contains_line(r.out, "rank_t2=4"));

    // hex form of the same word
    auto rh = run_cli("decode " + a17.string() + " --cert " + cert_path.string() +
                      " --received 0x808");
    CHECK(rh.exit_code == 0);
    CHECK(contains_line(rh.out, "status=corrected"));
    CHECK(contains_line(rh.out, "error_positions=[3, 11]"));

    // explicit b(X) override with another weight-2 codeword of B
    auto rb = run_cli("decode " + a17.string() + " --cert " + cert_path.string() +
                      " --received 0x808 --bword 0,1,1");
    CHECK(rb.exit_code == 0);
    CHECK(contains_line(rb.out, "error_positions=[3, 11]"));

    // a non-codeword override is rejected
    auto rbad = run_cli("decode " + a17.string() + " --cert " + cert_path.string() +
                        " --received 0x808 --bword 1,1,1");
    CHECK(rbad.exit_code == 2);
}

TEST_CASE("decode failure exits with status 2") {
    auto a17 = write_a17();
    auto b3 = write_b3();
    auto cert_path = scratch_dir() / "a17.cert";
    run_cli("analyze " + a17.string() + " --with " + b3.string() + " --variant gen1 --out " +
            cert_path.string());
    // scan weight-3 patterns on the zero codeword until one fails to decode;
    // patterns within distance 2 of another codeword legitimately correct
    bool saw_failure = false;
    for (uint64_t p3 = 2; p3 < 17 && !saw_failure; ++p3) {
        std::string received = "0x" + [&] {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%llx",
                          static_cast<unsigned long long>(1ull | 2ull | (1ull << p3)));
            return std::string(buf);
        }();
        auto r = run_cli("decode " + a17.string() + " --cert " + cert_path.string() +
                         " --received " + received);
        if (r.exit_code == 2) {
            CHECK(contains_line(r.out, "status=failure"));
            saw_failure = true;
        } else {
            CHECK(r.exit_code == 0);
        }
    }
    CHECK(saw_failure);
}

TEST_CASE("json mode emits machine-readable records") {
    auto a17 = write_a17();
    auto r = run_cli("--json distance " + a17.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"n\":17") != std::string::npos);
    CHECK(r.out.find("\"k\":9") != std::string::npos);
    CHECK(r.out.find("\"d\":5") != std::string::npos);
}

TEST_CASE("search scans the spc family") {
    auto a17 = write_a17();
    auto r = run_cli("search " + a17.string() + " --b-family spc --max-nb 9");
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.out, "best=gen1"));
    CHECK(r.out.find("gen1=5") != std::string::npos);
}

TEST_CASE("sweep exits zero on a sound range") {
    auto r = run_cli("sweep --all-binary --min-n 7 --max-n 9 --max-nb 7");
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.out, "violations=0"));
}

TEST_CASE("usage errors exit with status 1") {
    auto r = run_cli("distance /nonexistent/file.code");
    CHECK(r.exit_code == 1);
    auto r2 = run_cli("analyze");
    CHECK(r2.exit_code != 0);
    fs::path bad = scratch_dir() / "bad.code";
    {
        std::ofstream out(bad);
        out << "q = 2\nn = 7\ndefining_set = [1, 2]\n"; // not coset closed
    }
    auto r3 = run_cli("distance " + bad.string());
    CHECK(r3.exit_code == 1);
}

TEST_CASE("CB_BUDGET caps the enumeration") {
    auto a17 = write_a17(); // both enumeration sides need 2^8 or more
    auto tight = run_with_env("CB_BUDGET=16", "distance " + a17.string());
    CHECK(tight.exit_code == 1);
    auto loose = run_with_env("CB_BUDGET=100000", "distance " + a17.string());
    CHECK(loose.exit_code == 0);
    CHECK(loose.out == "n=17 k=9 d=5\n");
}
