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
#include <vector>

#include "polycomp/ciphers.hpp"
#include "polycomp/error.hpp"
#include "polycomp/random.hpp"

using namespace polycomp;

namespace {

using U64s = std::vector<std::uint64_t>;
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

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (auto n = lo; n <= hi; ++n)
        if (naive_prime(n)) out.push_back(n);
    return out;
}

std::uint64_t naive_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    for (std::uint64_t i = 0; i < e; ++i) r = r * b % p;
    return r;
}

// Multiplicative order computed by walking powers.
std::uint64_t naive_order(std::uint64_t g, std::uint64_t p) {
    std::uint64_t x = g % p, k = 1;
    while (x != 1) {
        x = x * g % p;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("rsa examples") {
    const auto key = rsa_keygen(I(3), I(11), I(3));
    CHECK(key.n == I(33));
    CHECK(key.d == I(7));
    CHECK(key.phi == I(20));
    CHECK(key.to_record() == "rsa-ideal v1 N=(33) E=(3) D=(7) PHI=(20)");
    CHECK(RsaIdealKey::from_record(key.to_record()).d == I(7));
    const std::vector<BigInt> m{2, 0};
    const auto c = rsa_encrypt(m, key);
    CHECK(c == std::vector<BigInt>{6, 0});
    CHECK(rsa_decrypt(c, key) == m);
    CHECK(code_of([] { (void)rsa_keygen(I(2), I(2), I(3)); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)rsa_keygen(I(3), I(11), I(5)); }) == ErrorCode::NotCoprime);
    CHECK(code_of([] { (void)rsa_keygen(I(3), I(11), I(21)); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { (void)rsa_keygen(I(4), I(11), I(3)); }) == ErrorCode::NotPrime);
    const std::vector<BigInt> big{20};
    CHECK(code_of([&] { (void)rsa_encrypt(big, key); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { (void)RsaIdealKey::from_record("rsa-ideal v1 N=(33) E=(3) D=(8) PHI=(20)"); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("rsa round trips over random keys") {
    Rng rng(41);
    const auto primes = primes_between(2, 400);
    int keys = 0;
    while (keys < 300) {
        const auto p = primes[rng.uniform(0, primes.size() - 1)];
        const auto q = primes[rng.uniform(0, primes.size() - 1)];
        if (p == q) continue;
        const auto phi = (p - 1) * (q - 1);
        if (phi < 3) continue;
        const auto e = rng.uniform(2, phi - 1);
        if (std::gcd(e, phi) != 1) continue;
        const auto key = rsa_keygen(I(static_cast<long long>(p)), I(static_cast<long long>(q)),
                                    I(static_cast<long long>(e)));
        CHECK(BigInt(e) * key.d.generator() % phi == 1);
        std::vector<BigInt> m;
        for (int i = 0; i < 10; ++i) m.emplace_back(rng.uniform(0, phi - 1));
        CHECK(rsa_decrypt(rsa_encrypt(m, key), key) == m);
        ++keys;
    }
}

TEST_CASE("diffie-hellman") {
    const DhParams params{I(7), I(10)};
    const auto out = dh_exchange(params, 3, 4);
    CHECK(out.a_public == I(2));
    CHECK(out.b_public == I(5));
    CHECK(out.shared_f == I(1));
    CHECK(out.shared_s == I(1));
    CHECK(dh_exchange(params, 1, 1).shared_f == I(3));
    CHECK(code_of([] { validate(DhParams{I(8), I(10)}); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { validate(DhParams{I(11), I(10)}); }) == ErrorCode::Precondition);
    CHECK(code_of([] { validate(DhParams{I(7), I(14)}); }) == ErrorCode::Precondition);
    CHECK(code_of([&] { (void)dh_public(params, 0); }) == ErrorCode::InvalidArgument);

    Rng rng(77);
    const auto primes = primes_between(3, 500);
    for (int i = 0; i < 1000; ++i) {
        const auto p = primes[rng.uniform(0, primes.size() - 1)];
        auto g = rng.uniform(p + 1, 4 * p);
        if (g % p == 0) ++g;
        const auto a = rng.uniform(1, 10000), b = rng.uniform(1, 10000);
        const auto res = dh_exchange(DhParams{I(static_cast<long long>(p)), I(static_cast<long long>(g))}, a, b);
        CHECK(res.shared_f == res.shared_s);
        CHECK(res.shared_f == I(static_cast<long long>(g % p * (a % p) % p * (b % p) % p)));
    }
}

TEST_CASE("fractional key") {
    const FractionalKey key{29, 7};
    CHECK(frac_encrypt(5, key) == 6);
    CHECK(frac_decrypt(6, key) == 5);
    CHECK(code_of([] { validate(FractionalKey{29, 1}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { validate(FractionalKey{28, 3}); }) == ErrorCode::NotPrime);
    CHECK(code_of([&] { (void)frac_encrypt(1, key); }) == ErrorCode::OutOfRange);
    CHECK(code_of([&] { (void)frac_encrypt(30, key); }) == ErrorCode::OutOfRange);
    CHECK(FractionalKey::from_record(key.to_record()).k == 7);

    // Round trip over every plaintext, every key, for every prime |A| <= 101,
    // with the decryption checked against a search over t.
    for (auto alpha : primes_between(3, 101))
        for (std::uint64_t k = 2; k < alpha; ++k) {
            const FractionalKey fk{alpha, k};
            for (std::uint64_t x = 2; x <= alpha; ++x) {
                const auto y = frac_encrypt(x, fk);
                CHECK(y == x * k % alpha);
                std::uint64_t t = 0;
                while ((y + t * alpha) % k != 0) ++t;
                const auto expected = (y + t * alpha) / k;
                CHECK(frac_decrypt(y, fk) == (expected == 0 ? alpha : expected));
                CHECK(frac_decrypt(y, fk) == x);
            }
        }
}

TEST_CASE("fractional closed form") {
    for (auto alpha : primes_between(3, 100))
        for (std::uint64_t k = 2; k < alpha; ++k) {
            if (alpha % k != 1) continue;
            const FractionalKey fk{alpha, k};
            for (std::uint64_t x = 2; x <= alpha; ++x) {
                const auto closed = frac_decrypt_closed_form(frac_encrypt(x, fk), fk);
                REQUIRE(closed.has_value());
                CHECK(*closed % alpha == x % alpha);
            }
        }
    const FractionalKey bad{29, 3};
    CHECK_FALSE(frac_decrypt_closed_form(frac_encrypt(10, bad), bad).has_value());
}

TEST_CASE("zone cipher") {
    const ZoneKey key{29, 5, 3, {}};
    CHECK(key.zone_count() == 6);
    const U64s v{7, 1};
    const auto enc = zone_encrypt(v, key);
    REQUIRE(enc.size() == 2);
    CHECK(enc[0] == ZonePair{1, 1});
    CHECK(enc[1].zone == 0);
    CHECK(format_zone_stream(enc) == "1:1 0:3");
    CHECK(parse_zone_stream("1:1 0:3") == enc);
    CHECK(zone_decrypt(enc, key) == v);
    CHECK(code_of([] { validate(ZoneKey{29, 7, 7, {}}); }) == ErrorCode::NotCoprime);
    CHECK(code_of([] { validate(ZoneKey{29, 31, 3, {}}); }) == ErrorCode::Precondition);
    const U64s too_big{30};
    CHECK(code_of([&] { (void)zone_encrypt(too_big, key); }) == ErrorCode::OutOfRange);

    Rng rng(9);
    const auto primes = primes_between(2, 200);
    int keys = 0;
    while (keys < 1000) {
        const auto p = primes[rng.uniform(1, primes.size() - 1)];
        const auto q = primes[rng.uniform(0, primes.size() - 1)];
        if (q >= p) continue;
        const auto k = rng.uniform(1, 3 * q);
        if (std::gcd(k, q) != 1) continue;
        ZoneKey zk{p, q, k, {}};
        if (rng.coin()) zk.mask = zone_mask_from_seed(zk.zone_count(), rng.next());
        validate(zk);
        CHECK(ZoneKey::from_record(zk.to_record()).mask == zk.mask);
        U64s all(p);
        std::iota(all.begin(), all.end(), 1);
        CHECK(zone_decrypt(zone_encrypt(all, zk), zk) == all);
        ++keys;
    }
}

TEST_CASE("monoid cipher") {
    const MonoidCipherKey key{29, 2, {3}};
    const U64s m{7, 0};
    const auto d = monoid_encrypt(m, key);
    CHECK(d == U64s{7, 3});
    CHECK(monoid_decrypt(d, key) == m);
    CHECK(code_of([] { validate(MonoidCipherKey{29, 5, {3}}); }) == ErrorCode::Precondition);
    CHECK(code_of([] { validate(MonoidCipherKey{27, 2, {3}}); }) == ErrorCode::NotPrime);
    CHECK(MonoidCipherKey::from_record(key.to_record()).coeffs == key.coeffs);

    for (auto p : primes_between(3, 200))
        for (std::uint64_t g = 2; g < p; ++g) CHECK(is_primitive_root(g, p) == (naive_order(g, p) == p - 1));

    Rng rng(13);
    const auto primes = primes_between(3, 2000);
    for (int i = 0; i < 1000; ++i) {
        const auto p = primes[rng.uniform(0, primes.size() - 1)];
        const auto mk = monoid_keygen(p, rng.uniform(1, 5), rng);
        U64s msg;
        for (int j = 0; j < 8; ++j) msg.push_back(rng.uniform(0, p - 2));
        const auto enc = monoid_encrypt(msg, mk);
        for (std::size_t j = 0; j < msg.size(); ++j)
            CHECK(enc[j] == mk.coeffs[j % mk.coeffs.size()] * naive_pow(mk.x, msg[j], p) % p);
        CHECK(monoid_decrypt(enc, mk) == msg);
    }
}

TEST_CASE("discrete logs agree with exhaustive search") {
    for (auto p : primes_between(3, 211))
        for (std::uint64_t base = 2; base < p; base += 7)
            for (std::uint64_t target = 0; target < p; ++target)
                CHECK(discrete_log_bsgs(base, target, p) == discrete_log_exhaustive(base, target, p));
    CHECK(*discrete_log_bsgs(2, 12, 29) == 7);
    CHECK_FALSE(discrete_log_bsgs(2, 0, 29).has_value());
}

TEST_CASE("value lists") {
    const U64s v{0, 1, 26};
    CHECK(join_values(v) == "0 1 26");
    CHECK(parse_values("0 1  26") == v);
    CHECK(parse_big_values("12345678901234567890")[0] == BigInt("12345678901234567890"));
    CHECK(code_of([] { (void)parse_values("1 x"); }) == ErrorCode::Parse);
}
