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

#include "polycomp/bigint.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

#include "polycomp/error.hpp"

namespace polycomp {

std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::RingMismatch: return "ring-mismatch";
        case ErrorCode::NotInvertible: return "not-invertible";
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::CeilingExceeded: return "ceiling-exceeded";
        case ErrorCode::NotMember: return "not-member";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::OutOfRange: return "out-of-range";
        case ErrorCode::NotPrime: return "not-prime";
        case ErrorCode::NotCoprime: return "not-coprime";
        case ErrorCode::Protocol: return "protocol";
    }
    return "unknown";
}

BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    if (s.empty()) fail(ErrorCode::Parse, "empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail(ErrorCode::Parse, "bad integer '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') fail(ErrorCode::Parse, "bad integer '" + s + "'");
    }
    BigInt v(s.substr(i));
    return s[0] == '-' ? BigInt(-v) : v;
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt mod_floor(const BigInt& value, const BigInt& modulus) {
    BigInt r = value % modulus;
    if (r < 0) r += modulus;
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt pow_mod(BigInt base, BigInt exponent, const BigInt& modulus) {
    if (modulus == 1) return 0;
    BigInt result = 1;
    base = mod_floor(base, modulus);
    while (exponent > 0) {
        if ((exponent & 1) != 0) result = (result * base) % modulus;
        base = (base * base) % modulus;
        exponent >>= 1;
    }
    return result;
}

BigInt inverse_mod(const BigInt& value, const BigInt& modulus) {
    BigInt old_r = mod_floor(value, modulus), r = modulus;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        fail(ErrorCode::NotCoprime,
             to_string(value) + " is not invertible modulo " + to_string(modulus));
    }
    return mod_floor(old_s, modulus);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t inverse_mod(std::uint64_t value, std::uint64_t modulus) {
    return static_cast<std::uint64_t>(inverse_mod(BigInt(value), BigInt(modulus)));
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact for every n < 3.3 * 10^24.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max()) return is_prime(static_cast<std::uint64_t>(n));
    boost::random::mt19937 gen(0x5eed);
    return boost::multiprecision::miller_rabin_test(n, 40, gen);
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t to_u64(const BigInt& value) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
        fail(ErrorCode::OutOfRange, to_string(value) + " does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

}  // namespace polycomp
