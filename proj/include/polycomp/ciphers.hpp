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

/**
 * @file ciphers.hpp
 * @brief Toy letter ciphers over ideals of Z and prime alphabets.
 *
 * None of these systems is secure. The contract is that decryption inverts
 * encryption for every valid key and message, and that invalid parameters are
 * rejected with a named error.
 *
 * Key records are single lines: `rsa-ideal v1 ...`, `frac v1 ...`,
 * `zone v1 ...`, `monoid-cipher v1 ...`.
 */

#ifndef POLYCOMP_CIPHERS_HPP
#define POLYCOMP_CIPHERS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/bigint.hpp"
#include "polycomp/ideals.hpp"
#include "polycomp/random.hpp"

namespace polycomp {

// --- multiplicative RSA over ideals -----------------------------------------

/// C = M e mod phi and M = C d mod phi. This is multiplication, not
/// exponentiation, so anyone holding (N, E, PHI) can recover d.
struct RsaIdealKey {
    PrincipalIdeal n, e, d, phi;

    /// `rsa-ideal v1 N=(33) E=(3) D=(7) PHI=(20)`.
    std::string to_record() const;
    static RsaIdealKey from_record(std::string_view line);
};

/// Requires distinct primes p, q and 1 < e < phi with gcd(e, phi) = 1.
RsaIdealKey rsa_keygen(const PrincipalIdeal& p, const PrincipalIdeal& q, const PrincipalIdeal& e);
/// Every M must lie in [0, phi).
std::vector<BigInt> rsa_encrypt(std::span<const BigInt> messages, const RsaIdealKey& key);
std::vector<BigInt> rsa_decrypt(std::span<const BigInt> ciphertexts, const RsaIdealKey& key);

// --- Diffie-Hellman over ideals ---------------------------------------------

/// Public values are g a mod p; the shared ideal is g a b mod p.
struct DhParams {
    PrincipalIdeal p, g;
};

/// p prime, g >= 2, norm (p) < norm (g), and g not divisible by p.
void validate(const DhParams& params);
/// (g a mod p) for a secret a >= 1.
PrincipalIdeal dh_public(const DhParams& params, const BigInt& secret);
/// (other · secret mod p).
PrincipalIdeal dh_shared(const DhParams& params, const PrincipalIdeal& other_public, const BigInt& secret);

struct DhOutcome {
    PrincipalIdeal a_public, b_public, shared_f, shared_s;
};
DhOutcome dh_exchange(const DhParams& params, const BigInt& a, const BigInt& b);

// --- fractional key ----------------------------------------------------------

/// y = x k mod |A| over a prime alphabet length |A|, plaintexts x in [2, |A|].
struct FractionalKey {
    std::uint64_t alpha = 0;
    std::uint64_t k = 0;

    std::string to_record() const;
    static FractionalKey from_record(std::string_view line);
};

/// |A| prime, 2 <= k < |A|.
void validate(const FractionalKey& key);
std::uint64_t frac_encrypt(std::uint64_t x, const FractionalKey& key);
/// Solves k | y + t |A| for the unique t in [0, k). Returns a value in
/// [1, |A|]; y = 0 decodes to |A|.
std::uint64_t frac_decrypt(std::uint64_t y, const FractionalKey& key);
/// The closed form (y + ((k - y mod k) mod k) |A|) / k. Correct whenever
/// |A| ≡ 1 (mod k); empty when the division is not exact.
std::optional<std::uint64_t> frac_decrypt_closed_form(std::uint64_t y, const FractionalKey& key);

// --- zone cipher -------------------------------------------------------------

/// Public prime alphabet length p, secret prime sub-length q < p and key k
/// coprime to q. Values v in [1, p] fall in zone ceil(v / q) - 1.
struct ZoneKey {
    std::uint64_t p = 0, q = 0, k = 0;
    /// Permutation of zone labels applied before transmission; empty means
    /// the zone index is sent in clear.
    std::vector<std::uint64_t> mask;

    std::uint64_t zone_count() const { return (p + q - 1) / q; }
    std::string to_record() const;
    static ZoneKey from_record(std::string_view line);
};

void validate(const ZoneKey& key);
/// Seeded Fisher-Yates permutation of [0, zones).
std::vector<std::uint64_t> zone_mask_from_seed(std::uint64_t zones, std::uint64_t seed);

struct ZonePair {
    std::uint64_t zone = 0;
    std::uint64_t d = 0;
    friend bool operator==(const ZonePair&, const ZonePair&) = default;
};

std::vector<ZonePair> zone_encrypt(std::span<const std::uint64_t> values, const ZoneKey& key);
std::vector<std::uint64_t> zone_decrypt(std::span<const ZonePair> stream, const ZoneKey& key);
/// `z:d z:d ...`.
std::string format_zone_stream(std::span<const ZonePair> stream);
std::vector<ZonePair> parse_zone_stream(std::string_view text);

// --- monoid-exponent cipher --------------------------------------------------

/// d_i = a_i X^{m_i} mod p, with the coefficient list used cyclically and X a
/// primitive root modulo the prime p.
struct MonoidCipherKey {
    std::uint64_t p = 0;
    std::uint64_t x = 0;
    std::vector<std::uint64_t> coeffs;

    std::string to_record() const;
    static MonoidCipherKey from_record(std::string_view line);
};

bool is_primitive_root(std::uint64_t g, std::uint64_t p);
void validate(const MonoidCipherKey& key);
/// Samples X from [2, p-1] until it is a primitive root, then `count`
/// coefficients from [1, p-1].
MonoidCipherKey monoid_keygen(std::uint64_t p, std::size_t count, Rng& rng);
/// Every m must lie in [0, p-2].
std::vector<std::uint64_t> monoid_encrypt(std::span<const std::uint64_t> messages, const MonoidCipherKey& key);
std::vector<std::uint64_t> monoid_decrypt(std::span<const std::uint64_t> ciphertexts, const MonoidCipherKey& key);

/// Baby-step giant-step: the least e in [0, p-1) with base^e ≡ target (mod p).
std::optional<std::uint64_t> discrete_log_bsgs(std::uint64_t base, std::uint64_t target, std::uint64_t p);
/// Same answer by walking the powers of base.
std::optional<std::uint64_t> discrete_log_exhaustive(std::uint64_t base, std::uint64_t target, std::uint64_t p);

/// Space-separated values.
std::string join_values(std::span<const std::uint64_t> values);
std::string join_values(std::span<const BigInt> values);
std::vector<std::uint64_t> parse_values(std::string_view text);
std::vector<BigInt> parse_big_values(std::string_view text);

}  // namespace polycomp

#endif  // POLYCOMP_CIPHERS_HPP
