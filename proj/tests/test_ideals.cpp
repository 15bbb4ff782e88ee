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

#include <numeric>

#include "polycomp/error.hpp"
#include "polycomp/ideals.hpp"
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

bool naive_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("products") {
    CHECK(ideal_mul(I(3), I(5)) == I(15));
    CHECK(ideal_mul(I(6), I(4)) == I(24));
    CHECK(ideal_mul(I(17), I(1)) == I(17));
    CHECK(ideal_mul(I(17), I(0)).is_zero());
    CHECK(I(-6) == I(6));
    CHECK(ideal_mul(I(3), I(5)).to_string() == "(15)");

    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const auto a = I(static_cast<long long>(rng.uniform(0, 1000)));
        const auto b = I(static_cast<long long>(rng.uniform(0, 1000)));
        const auto c = I(static_cast<long long>(rng.uniform(0, 1000)));
        CHECK(ideal_mul(a, b) == ideal_mul(b, a));
        CHECK(ideal_mul(ideal_mul(a, b), c) == ideal_mul(a, ideal_mul(b, c)));
        CHECK(ideal_mul(a, I(1)) == a);
        CHECK(ideal_contains(a, ideal_mul(a, b)));
    }
}

TEST_CASE("totients") {
    CHECK(ideal_totient(I(3), I(11)) == I(20));
    CHECK(ideal_totient(I(2), I(3)) == I(2));
    CHECK(code_of([] { (void)ideal_totient(I(5), I(5)); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)ideal_totient(I(4), I(5)); }) == ErrorCode::NotPrime);
    // Euler's function counted directly.
    for (long long p : {2, 3, 5, 7, 11, 13})
        for (long long q : {17, 19, 23}) {
            long long count = 0;
            for (long long x = 1; x <= p * q; ++x)
                if (std::gcd(x, p * q) == 1) ++count;
            CHECK(ideal_totient(I(p), I(q)) == I(count));
        }
}

TEST_CASE("inverses") {
    CHECK(ideal_inverse(I(3), I(20)) == I(7));
    CHECK(ideal_inverse(I(1), I(20)) == I(1));
    CHECK(code_of([] { (void)ideal_inverse(I(4), I(20)); }) == ErrorCode::NotCoprime);
    for (long long phi = 2; phi <= 60; ++phi)
        for (long long e = 1; e < phi; ++e) {
            long long found = 0;
            for (long long d = 1; d < phi; ++d)
                if (e * d % phi == 1) {
                    found = d;
                    break;
                }
            if (found == 0) {
                CHECK(code_of([&] { (void)ideal_inverse(I(e), I(phi)); }) == ErrorCode::NotCoprime);
            } else {
                CHECK(ideal_inverse(I(e), I(phi)) == I(found));
            }
        }
}

TEST_CASE("containment, norms and primality") {
    CHECK(ideal_contains(I(2), I(6)));
    CHECK_FALSE(ideal_contains(I(6), I(2)));
    CHECK(ideal_contains(I(1), I(0)));
    CHECK(ideal_contains(I(0), I(0)));
    CHECK_FALSE(ideal_contains(I(0), I(5)));
    CHECK(*I(15).norm() == 15);
    CHECK_FALSE(I(0).norm().has_value());
    CHECK(norm_string(I(0)) == "inf");
    CHECK(norm_string(I(15)) == "15");
    CHECK(I(1).is_unit_ideal());
    for (long long n = 0; n < 300; ++n) CHECK(I(n).is_prime() == naive_prime(n));
}

TEST_CASE("parsing") {
    CHECK(PrincipalIdeal::parse("(15)") == I(15));
    CHECK(PrincipalIdeal::parse("15") == I(15));
    CHECK(PrincipalIdeal::parse("(-4)") == I(4));
    CHECK(code_of([] { (void)PrincipalIdeal::parse("(1x)"); }) == ErrorCode::Parse);
    CHECK(code_of([] { (void)PrincipalIdeal::parse("(15"); }) == ErrorCode::Parse);
}
