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

#ifndef POLYCOMP_BIGINT_HPP
#define POLYCOMP_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polycomp {

using BigInt = boost::multiprecision::cpp_int;

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& value);

/// Least nonnegative residue of `value` modulo `modulus` (modulus > 0).
BigInt mod_floor(const BigInt& value, const BigInt& modulus);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow_mod(BigInt base, BigInt exponent, const BigInt& modulus);

/// Inverse of `value` modulo `modulus` in [0, modulus), or throws NotCoprime.
BigInt inverse_mod(const BigInt& value, const BigInt& modulus);

/// Deterministic for values below 2^64 (fixed Miller-Rabin witness set).
/// Larger inputs fall back to a fixed-seed probabilistic test.
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t inverse_mod(std::uint64_t value, std::uint64_t modulus);

/// Prime factorization by trial division, as (prime, exponent) pairs ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n);

/// Narrowing conversion that throws OutOfRange instead of truncating.
std::uint64_t to_u64(const BigInt& value);

}  // namespace polycomp

#endif  // POLYCOMP_BIGINT_HPP
