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

#include <string>

#include "polycomp/error.hpp"
#include "polycomp/keyexchange.hpp"
#include "polycomp/random.hpp"

using namespace polycomp;

namespace {

PrincipalIdeal I(long long n) { return PrincipalIdeal(BigInt(n)); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Protocol;
}

bool naive_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("fixed secrets reproduce the worked exchange") {
    const auto run = run_dh_with_secrets(DhParams{I(7), I(10)}, 3, 4);
    CHECK(run.agreed());
    CHECK(run.shared_f == I(1));
    const std::string text = run.transcript.serialize();
    CHECK(text.rfind("transcript v1 protocol=dh p=(7) g=(10)\nmsg F->S A=(2)\nmsg S->F B=(5)\ndigest F ", 0) == 0);
    CHECK(run.transcript.digests().size() == 2);
    CHECK(run.transcript.digests()[0].second == digest_hex("(1)"));
    CHECK(Transcript::parse(text) == run.transcript);
    CHECK(Transcript::parse(text).serialize() == text);
}

TEST_CASE("seeded runs are deterministic and replayable") {
    const DhParams params{I(101), I(1234)};
    const auto a = run_dh(params, 1, 2);
    const auto b = run_dh(params, 1, 2);
    CHECK(a.transcript.serialize() == b.transcript.serialize());
    CHECK(replay_dh(Transcript::parse(a.transcript.serialize()), 1, 2).transcript == a.transcript);
    bool differs = false;
    for (std::uint64_t s = 3; s < 20 && !differs; ++s)
        differs = run_dh(params, s, 2).transcript.serialize() != a.transcript.serialize();
    CHECK(differs);
    CHECK(code_of([&] {
              for (std::uint64_t s = 3; s < 50; ++s) (void)replay_dh(a.transcript, s, 2);
          }) == ErrorCode::Protocol);
}

TEST_CASE("a thousand random exchanges agree without leaking secrets") {
    Rng rng(1000);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 3; n < 2000; ++n)
        if (naive_prime(n)) primes.push_back(n);
    for (int i = 0; i < 1000; ++i) {
        const auto p = primes[rng.uniform(0, primes.size() - 1)];
        auto g = rng.uniform(p + 1, 5 * p);
        if (g % p == 0) ++g;
        const DhParams params{I(static_cast<long long>(p)), I(static_cast<long long>(g))};
        const auto [sf, ss] = split_seed(rng.next());
        const auto run = run_dh(params, sf, ss);
        CHECK(run.agreed());
        CHECK(secret_field_violations(run.transcript).empty());
        CHECK(replay_dh(run.transcript, sf, ss).transcript.serialize() == run.transcript.serialize());
    }
}

TEST_CASE("composite agreement") {
    const auto f = CipherPolynomial::parse("26:[A(1,1)]");
    const auto g = CipherPolynomial::parse("26:[A(1,2)]");
    const auto run = run_composite_agreement(f, g);
    CHECK(run.agreed());
    CHECK(run.key_f->to_string() == "26:[(A(1,1)*A(1,2))]");
    CHECK(secret_field_violations(run.transcript).empty());
    CHECK(replay_composite_agreement(Transcript::parse(run.transcript.serialize())).transcript == run.transcript);

    const auto bad = run_composite_agreement(f, CipherPolynomial::parse("29:[A(1,2)]"));
    CHECK_FALSE(bad.agreed());
    REQUIRE(bad.transcript.error().has_value());
    CHECK(bad.transcript.error()->find("alphabet mismatch") != std::string::npos);
    CHECK(bad.transcript.serialize().find("\nerror S invalid-argument") != std::string::npos);

    Rng rng(55);
    for (int i = 0; i < 1000; ++i) {
        const auto fr = random_affine_polynomial(rng, 26, rng.uniform(0, 3));
        const auto gr = random_affine_polynomial(rng, 26, rng.uniform(0, 3));
        const auto r = run_composite_agreement(fr, gr);
        CHECK(r.agreed());
        CHECK(*r.key_f == cipher_poly_mul(fr, gr));
        const auto text = r.transcript.serialize();
        CHECK(replay_composite_agreement(Transcript::parse(text)).transcript.serialize() == text);
    }
}

TEST_CASE("transcripts are append-only") {
    Transcript t("dh", {{"p", "(7)"}, {"g", "(10)"}});
    t.append({"F", "S", "A", "(2)"});
    t.record_digest("F", "00");
    CHECK(code_of([&] { t.append({"S", "F", "B", "(5)"}); }) == ErrorCode::Protocol);
    Transcript leaky("dh", {{"p", "(7)"}, {"g", "(10)"}});
    leaky.append({"F", "S", "a", "(3)"});
    CHECK(secret_field_violations(leaky).size() == 1);
    CHECK(code_of([] { (void)Transcript::parse("transcript v2 protocol=dh"); }) == ErrorCode::Parse);
}

TEST_CASE("digests") {
    CHECK(digest_hex("") == "cbf29ce484222325");
    CHECK(digest_hex("a") == "af63dc4c8601ec8c");
    const auto [a, b] = split_seed(42);
    CHECK(a != b);
}
