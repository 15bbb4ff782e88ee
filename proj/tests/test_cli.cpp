/*
 * Copyright 2026 The polycomp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
    int status = -1;
    std::string out;
};

// Splits a command line on blanks, honouring single and double quotes.
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_token = false;
    char quote = 0;
    for (char c : line) {
        if (quote) {
            if (c == quote) {
                quote = 0;
            } else {
                cur += c;
            }
        } else if (c == '\'' || c == '"') {
            quote = c;
            in_token = true;
        } else if (c == ' ' || c == '\t') {
            if (in_token) out.push_back(cur);
            cur.clear();
            in_token = false;
        } else {
            cur += c;
            in_token = true;
        }
    }
    if (in_token) out.push_back(cur);
    return out;
}

// Runs the real binary without a shell and captures stdout.
Outcome run_binary(const std::vector<std::string>& args) {
    int fds[2];
    REQUIRE(pipe(fds) == 0);
    const pid_t pid = fork();
    REQUIRE(pid >= 0);
    if (pid == 0) {
        dup2(fds[1], STDOUT_FILENO);
        close(fds[0]);
        close(fds[1]);
        std::vector<char*> argv;
        std::string prog = POLYCOMP_CLI_PATH;
        argv.push_back(prog.data());
        std::vector<std::string> copy = args;
        for (auto& a : copy) argv.push_back(a.data());
        argv.push_back(nullptr);
        execv(prog.c_str(), argv.data());
        _exit(127);
    }
    close(fds[1]);
    Outcome res;
    std::array<char, 4096> buf{};
    ssize_t n;
    while ((n = read(fds[0], buf.data(), buf.size())) > 0) res.out.append(buf.data(), static_cast<std::size_t>(n));
    close(fds[0]);
    int status = 0;
    waitpid(pid, &status, 0);
    res.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

struct Golden {
    std::string command, expected;
};

std::vector<Golden> examples_from_help() {
    const auto help = run_binary({"--help"});
    REQUIRE(help.status == 0);
    std::istringstream in(help.out);
    std::string line;
    while (std::getline(in, line) && line != "Examples:") {
    }
    std::vector<Golden> out;
    const std::string prompt = "  $ polycomp ";
    while (std::getline(in, line)) {
        if (line.rfind(prompt, 0) != 0) continue;
        std::string expected;
        REQUIRE(std::getline(in, expected));
        REQUIRE(expected.rfind("  ", 0) == 0);
        out.push_back({line.substr(prompt.size()), expected.substr(2)});
    }
    return out;
}

int run_in_process(const std::vector<std::string>& args, std::string* out_text = nullptr,
                   std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = polycomp::cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("every help example produces its documented output") {
    const auto golden = examples_from_help();
    CHECK(golden.size() == polycomp::cli::examples().size());
    CHECK(golden.size() >= 20);
    for (const auto& g : golden) {
        CAPTURE(g.command);
        const auto res = run_binary(tokenize(g.command));
        CHECK(res.status == 0);
        CHECK(res.out == g.expected + "\n");
    }
}

TEST_CASE("domain errors exit with 1 and a coded message") {
    std::string out, err;
    CHECK(run_in_process({"ideal", "totient", "(4)", "(5)"}, &out, &err) == 1);
    CHECK(out.empty());
    CHECK(err.rfind("ERR:not-prime: ", 0) == 0);
    CHECK(run_in_process({"rsa", "keygen", "--p", "3", "--q", "11", "--e", "5"}, &out, &err) == 1);
    CHECK(err.rfind("ERR:not-coprime: ", 0) == 0);
    CHECK(run_in_process({"monoid", "build", "--ring", "Z", "--monoid", "M<2,3>", "--primes", "2", "--exponents",
                          "4,3"},
                         &out, &err) == 1);
    CHECK(err.rfind("ERR:precondition: ", 0) == 0);
    CHECK(run_in_process({"poly", "irreducible", "F4:[1,t"}, &out, &err) == 1);
    CHECK(err.rfind("ERR:parse: ", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_in_process({}) == 2);
    CHECK(run_in_process({"nosuch"}) == 2);
    CHECK(run_in_process({"rsa", "keygen", "--p"}) == 2);
    CHECK(run_in_process({"ideal", "mul", "(3)"}) == 2);
    CHECK(run_binary({"frac", "encrypt", "--alpha", "29"}).status == 2);
}

TEST_CASE("json output and key files") {
    std::string out;
    CHECK(run_in_process({"--format", "json", "dh", "run", "--p", "7", "--g", "10", "--a", "3", "--b", "4"}, &out) ==
          0);
    CHECK(out.find("\"sF\"") != std::string::npos);

    const std::string key = "cli_test_rsa.key";
    CHECK(run_in_process({"rsa", "keygen", "--p", "3", "--q", "11", "--e", "3", "--key", key}) == 0);
    CHECK(run_in_process({"rsa", "encrypt", "--key", key, "--m", "2"}, &out) == 0);
    CHECK(out == "6\n");
    CHECK(run_in_process({"rsa", "decrypt", "--key", key, "--c", "6"}, &out) == 0);
    CHECK(out == "2\n");
    std::remove(key.c_str());

    const std::string transcript = "cli_test_transcript.txt";
    CHECK(run_in_process({"exchange", "dh", "--p", "101", "--g", "1234", "--seed", "9", "--out", transcript}) == 0);
    CHECK(run_in_process({"exchange", "replay", "--transcript", transcript, "--seed", "9"}, &out) == 0);
    CHECK(run_in_process({"exchange", "replay", "--transcript", transcript, "--seed", "10"}) == 1);
    std::remove(transcript.c_str());
}
