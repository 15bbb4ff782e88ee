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

#include "polycomp/ciphers.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "polycomp/error.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

namespace {

std::uint64_t field_u64(const Record& rec, const std::string& key) { return parse_u64(rec.at(key)); }

std::vector<std::uint64_t> parse_list(std::string_view text) {
    std::vector<std::uint64_t> out;
    if (strip(text).empty()) return out;
    for (const auto& tok : split_top_level(text, ',')) out.push_back(parse_u64(tok));
    return out;
}

std::string format_list(std::span<const std::uint64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

// --- multiplicative RSA ------------------------------------------------------

std::string RsaIdealKey::to_record() const {
    return "rsa-ideal v1 N=" + n.to_string() + " E=" + e.to_string() + " D=" + d.to_string() +
           " PHI=" + phi.to_string();
}

RsaIdealKey RsaIdealKey::from_record(std::string_view line) {
    const Record rec = parse_record(line, "rsa-ideal");
    RsaIdealKey key{PrincipalIdeal::parse(rec.at("N")), PrincipalIdeal::parse(rec.at("E")),
                    PrincipalIdeal::parse(rec.at("D")), PrincipalIdeal::parse(rec.at("PHI"))};
    require(!key.phi.is_zero() && mod_floor(key.e.generator() * key.d.generator(), key.phi.generator()) ==
                                      (key.phi.is_unit_ideal() ? 0 : 1),
            ErrorCode::InvalidArgument, "key record violates E D ≡ 1 (mod PHI)");
    return key;
}

RsaIdealKey rsa_keygen(const PrincipalIdeal& p, const PrincipalIdeal& q, const PrincipalIdeal& e) {
    const PrincipalIdeal phi = ideal_totient(p, q);
    const BigInt& pe = e.generator();
    const BigInt& pphi = phi.generator();
    require(pe > 1 && pe < pphi, ErrorCode::OutOfRange,
            "need 1 < e < phi, got E=" + e.to_string() + " with PHI=" + phi.to_string());
    require(gcd(pe, pphi) == 1, ErrorCode::NotCoprime,
            "E=" + e.to_string() + " is not coprime to PHI=" + phi.to_string());
    return {ideal_mul(p, q), e, ideal_inverse(e, phi), phi};
}

namespace {
std::vector<BigInt> rsa_scale(std::span<const BigInt> values, const BigInt& factor, const BigInt& phi,
                              const char* what) {
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        require(v >= 0 && v < phi, ErrorCode::OutOfRange,
                std::string(what) + " value " + to_string(v) + " is outside [0, " + to_string(phi) + ")");
        out.push_back(mod_floor(v * factor, phi));
    }
    return out;
}
}  // namespace

std::vector<BigInt> rsa_encrypt(std::span<const BigInt> messages, const RsaIdealKey& key) {
    return rsa_scale(messages, key.e.generator(), key.phi.generator(), "message");
}

std::vector<BigInt> rsa_decrypt(std::span<const BigInt> ciphertexts, const RsaIdealKey& key) {
    return rsa_scale(ciphertexts, key.d.generator(), key.phi.generator(), "ciphertext");
}

// --- Diffie-Hellman ----------------------------------------------------------

void validate(const DhParams& params) {
    require(params.p.is_prime(), ErrorCode::NotPrime, "p=" + params.p.to_string() + " is not prime");
    require(params.g.generator() >= 2, ErrorCode::InvalidArgument, "g must be at least 2");
    require(params.p.generator() < params.g.generator(), ErrorCode::Precondition,
            "need norm (p) < norm (g), got p=" + params.p.to_string() + " g=" + params.g.to_string());
    require(params.g.generator() % params.p.generator() != 0, ErrorCode::Precondition,
            "g is divisible by p, every shared ideal would be (0)");
}

PrincipalIdeal dh_public(const DhParams& params, const BigInt& secret) {
    require(secret >= 1, ErrorCode::InvalidArgument, "secrets must be at least 1");
    return PrincipalIdeal(mod_floor(params.g.generator() * secret, params.p.generator()));
}

PrincipalIdeal dh_shared(const DhParams& params, const PrincipalIdeal& other_public, const BigInt& secret) {
    require(secret >= 1, ErrorCode::InvalidArgument, "secrets must be at least 1");
    return PrincipalIdeal(mod_floor(other_public.generator() * secret, params.p.generator()));
}

DhOutcome dh_exchange(const DhParams& params, const BigInt& a, const BigInt& b) {
    validate(params);
    DhOutcome out{dh_public(params, a), dh_public(params, b), PrincipalIdeal(), PrincipalIdeal()};
    out.shared_f = dh_shared(params, out.b_public, a);
    out.shared_s = dh_shared(params, out.a_public, b);
    return out;
}

// --- fractional key ----------------------------------------------------------

std::string FractionalKey::to_record() const {
    return "frac v1 ALPHA=" + std::to_string(alpha) + " K=" + std::to_string(k);
}

FractionalKey FractionalKey::from_record(std::string_view line) {
    const Record rec = parse_record(line, "frac");
    FractionalKey key{field_u64(rec, "ALPHA"), field_u64(rec, "K")};
    validate(key);
    return key;
}

void validate(const FractionalKey& key) {
    require(is_prime(key.alpha), ErrorCode::NotPrime, "alphabet length " + std::to_string(key.alpha) + " is not prime");
    require(key.k >= 2, ErrorCode::InvalidArgument, "key k must be at least 2");
    require(key.k < key.alpha, ErrorCode::OutOfRange, "key k must be below the alphabet length");
    require(gcd(key.k, key.alpha) == 1, ErrorCode::NotCoprime, "key k is not coprime to the alphabet length");
}

std::uint64_t frac_encrypt(std::uint64_t x, const FractionalKey& key) {
    validate(key);
    require(x >= 2 && x <= key.alpha, ErrorCode::OutOfRange,
            "plaintext " + std::to_string(x) + " is outside [2, " + std::to_string(key.alpha) + "]");
    return mul_mod(x, key.k, key.alpha);
}

std::uint64_t frac_decrypt(std::uint64_t y, const FractionalKey& key) {
    validate(key);
    require(y < key.alpha, ErrorCode::OutOfRange,
            "ciphertext " + std::to_string(y) + " is outside [0, " + std::to_string(key.alpha) + ")");
    const std::uint64_t alpha_inv = inverse_mod(key.alpha % key.k, key.k);
    const std::uint64_t t = mul_mod((key.k - y % key.k) % key.k, alpha_inv, key.k);
    const std::uint64_t x = (y + t * key.alpha) / key.k;
    return x == 0 ? key.alpha : x;
}

std::optional<std::uint64_t> frac_decrypt_closed_form(std::uint64_t y, const FractionalKey& key) {
    validate(key);
    const std::uint64_t d = y % key.k;
    const std::uint64_t num = y + ((key.k - d) % key.k) * key.alpha;
    if (num % key.k != 0) return std::nullopt;
    const std::uint64_t x = num / key.k;
    return x == 0 ? key.alpha : x;
}

// --- zone cipher -------------------------------------------------------------

std::string ZoneKey::to_record() const {
    std::string out = "zone v1 P=" + std::to_string(p) + " Q=" + std::to_string(q) + " K=" + std::to_string(k);
    if (!mask.empty()) out += " MASK=" + format_list(mask);
    return out;
}

ZoneKey ZoneKey::from_record(std::string_view line) {
    const Record rec = parse_record(line, "zone");
    ZoneKey key{field_u64(rec, "P"), field_u64(rec, "Q"), field_u64(rec, "K"), {}};
    if (rec.has("MASK")) key.mask = parse_list(rec.at("MASK"));
    validate(key);
    return key;
}

void validate(const ZoneKey& key) {
    require(is_prime(key.p), ErrorCode::NotPrime, "public alphabet length " + std::to_string(key.p) + " is not prime");
    require(is_prime(key.q), ErrorCode::NotPrime, "secret alphabet length " + std::to_string(key.q) + " is not prime");
    require(key.q < key.p, ErrorCode::Precondition, "secret alphabet must be shorter than the public one");
    require(key.k >= 1 && gcd(key.k, key.q) == 1, ErrorCode::NotCoprime, "key k must be coprime to q");
    if (!key.mask.empty()) {
        const std::uint64_t zones = key.zone_count();
        std::vector<std::uint64_t> sorted = key.mask;
        std::sort(sorted.begin(), sorted.end());
        bool ok = sorted.size() == zones;
        for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == i;
        require(ok, ErrorCode::InvalidArgument, "zone mask is not a permutation of the " + std::to_string(zones) + " zones");
    }
}

std::vector<std::uint64_t> zone_mask_from_seed(std::uint64_t zones, std::uint64_t seed) {
    std::vector<std::uint64_t> perm(zones);
    for (std::uint64_t i = 0; i < zones; ++i) perm[i] = i;
    Rng rng(seed);
    for (std::uint64_t i = zones; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(0, i - 1)]);
    return perm;
}

std::vector<ZonePair> zone_encrypt(std::span<const std::uint64_t> values, const ZoneKey& key) {
    validate(key);
    std::vector<ZonePair> out;
    out.reserve(values.size());
    for (auto v : values) {
        require(v >= 1 && v <= key.p, ErrorCode::OutOfRange,
                "value " + std::to_string(v) + " is outside [1, " + std::to_string(key.p) + "]");
        const std::uint64_t t = (v + key.q - 1) / key.q - 1;
        const std::uint64_t r = v - t * key.q;
        const std::uint64_t label = key.mask.empty() ? t : key.mask[t];
        out.push_back({label, mul_mod(r, key.k, key.q)});
    }
    return out;
}

std::vector<std::uint64_t> zone_decrypt(std::span<const ZonePair> stream, const ZoneKey& key) {
    validate(key);
    std::vector<std::uint64_t> unmask;
    if (!key.mask.empty()) {
        unmask.resize(key.mask.size());
        for (std::size_t i = 0; i < key.mask.size(); ++i) unmask[key.mask[i]] = i;
    }
    const std::uint64_t k_inv = inverse_mod(key.k % key.q, key.q);
    std::vector<std::uint64_t> out;
    out.reserve(stream.size());
    for (const auto& [label, d] : stream) {
        require(label < key.zone_count(), ErrorCode::OutOfRange, "zone label " + std::to_string(label) + " out of range");
        require(d < key.q, ErrorCode::OutOfRange, "residue " + std::to_string(d) + " out of range");
        const std::uint64_t t = unmask.empty() ? label : unmask[label];
        std::uint64_t r = mul_mod(d, k_inv, key.q);
        if (r == 0) r = key.q;
        const std::uint64_t v = t * key.q + r;
        require(v <= key.p, ErrorCode::OutOfRange, "pair " + std::to_string(label) + ":" + std::to_string(d) +
                                                       " decodes past the alphabet");
        out.push_back(v);
    }
    return out;
}

std::string format_zone_stream(std::span<const ZonePair> stream) {
    std::string out;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(stream[i].zone) + ":" + std::to_string(stream[i].d);
    }
    return out;
}

std::vector<ZonePair> parse_zone_stream(std::string_view text) {
    std::vector<ZonePair> out;
    for (const auto& tok : split_top_level(strip(text), ' ')) {
        if (tok.empty()) continue;
        const auto parts = split_top_level(tok, ':');
        require(parts.size() == 2, ErrorCode::Parse, "expected zone:residue, got '" + tok + "'");
        out.push_back({parse_u64(parts[0]), parse_u64(parts[1])});
    }
    return out;
}

// --- monoid-exponent cipher --------------------------------------------------

bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
    if (!is_prime(p) || g % p == 0) return false;
    if (p == 2) return g % 2 == 1;
    for (const auto& [q, e] : factor_trial(p - 1)) {
        (void)e;
        if (pow_mod(g, (p - 1) / q, p) == 1) return false;
    }
    return true;
}

std::string MonoidCipherKey::to_record() const {
    return "monoid-cipher v1 P=" + std::to_string(p) + " X=" + std::to_string(x) + " A=" + format_list(coeffs);
}

MonoidCipherKey MonoidCipherKey::from_record(std::string_view line) {
    const Record rec = parse_record(line, "monoid-cipher");
    MonoidCipherKey key{field_u64(rec, "P"), field_u64(rec, "X"), parse_list(rec.at("A"))};
    validate(key);
    return key;
}

void validate(const MonoidCipherKey& key) {
    require(is_prime(key.p), ErrorCode::NotPrime, "alphabet length " + std::to_string(key.p) + " is not prime");
    require(key.p >= 3, ErrorCode::InvalidArgument, "alphabet length must be at least 3");
    require(key.p < (std::uint64_t{1} << 40), ErrorCode::CeilingExceeded, "alphabet length above 2^40");
    require(key.x >= 2 && key.x <= key.p - 1, ErrorCode::OutOfRange, "X must lie in [2, p-1]");
    require(is_primitive_root(key.x, key.p), ErrorCode::Precondition,
            "X=" + std::to_string(key.x) + " is not a primitive root mod " + std::to_string(key.p));
    require(!key.coeffs.empty(), ErrorCode::InvalidArgument, "coefficient list is empty");
    for (auto a : key.coeffs) {
        require(a >= 1 && a <= key.p - 1, ErrorCode::OutOfRange, "coefficient " + std::to_string(a) + " outside [1, p-1]");
    }
}

MonoidCipherKey monoid_keygen(std::uint64_t p, std::size_t count, Rng& rng) {
    require(is_prime(p) && p >= 3, ErrorCode::NotPrime, "alphabet length " + std::to_string(p) + " is not an odd prime");
    require(count >= 1, ErrorCode::InvalidArgument, "need at least one coefficient");
    MonoidCipherKey key{p, 0, {}};
    do {
        key.x = rng.uniform(2, p - 1);
    } while (!is_primitive_root(key.x, p));
    for (std::size_t i = 0; i < count; ++i) key.coeffs.push_back(rng.uniform(1, p - 1));
    validate(key);
    return key;
}

std::vector<std::uint64_t> monoid_encrypt(std::span<const std::uint64_t> messages, const MonoidCipherKey& key) {
    validate(key);
    std::vector<std::uint64_t> out;
    out.reserve(messages.size());
    for (std::size_t i = 0; i < messages.size(); ++i) {
        const std::uint64_t m = messages[i];
        require(m <= key.p - 2, ErrorCode::OutOfRange,
                "message " + std::to_string(m) + " is outside [0, " + std::to_string(key.p - 2) + "]");
        const std::uint64_t a = key.coeffs[i % key.coeffs.size()];
        out.push_back(mul_mod(a, pow_mod(key.x, m, key.p), key.p));
    }
    return out;
}

std::vector<std::uint64_t> monoid_decrypt(std::span<const std::uint64_t> ciphertexts, const MonoidCipherKey& key) {
    validate(key);
    std::vector<std::uint64_t> out;
    out.reserve(ciphertexts.size());
    for (std::size_t i = 0; i < ciphertexts.size(); ++i) {
        const std::uint64_t d = ciphertexts[i];
        require(d % key.p != 0, ErrorCode::NotInvertible, "ciphertext " + std::to_string(d) + " is 0 mod p, no logarithm");
        const std::uint64_t a = key.coeffs[i % key.coeffs.size()];
        const std::uint64_t target = mul_mod(d % key.p, inverse_mod(a, key.p), key.p);
        const auto m = discrete_log_bsgs(key.x, target, key.p);
        require(m.has_value(), ErrorCode::NotInvertible, "no logarithm found");
        out.push_back(*m);
    }
    return out;
}

std::optional<std::uint64_t> discrete_log_bsgs(std::uint64_t base, std::uint64_t target, std::uint64_t p) {
    require(p >= 2 && p < (std::uint64_t{1} << 40), ErrorCode::CeilingExceeded, "modulus must lie in [2, 2^40)");
    base %= p;
    target %= p;
    if (target == 0 || base == 0) return std::nullopt;
    const std::uint64_t order = p - 1;
    auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
    while (m * m < order) ++m;
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m);
    std::uint64_t cur = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = mul_mod(cur, base, p);
    }
    // base^{-m} = base^{order - m} since base^order = 1.
    const std::uint64_t giant = pow_mod(base, (order - (m % order)) % order, p);
    std::uint64_t gamma = target;
    for (std::uint64_t i = 0; i < m; ++i) {
        auto it = baby.find(gamma);
        if (it != baby.end()) {
            const std::uint64_t e = i * m + it->second;
            if (e < order && pow_mod(base, e, p) == target) return e;
        }
        gamma = mul_mod(gamma, giant, p);
    }
    return std::nullopt;
}

std::optional<std::uint64_t> discrete_log_exhaustive(std::uint64_t base, std::uint64_t target, std::uint64_t p) {
    base %= p;
    target %= p;
    std::uint64_t cur = 1 % p;
    for (std::uint64_t e = 0; e + 1 < p; ++e) {
        if (cur == target) return e;
        cur = mul_mod(cur, base, p);
    }
    return std::nullopt;
}

std::string join_values(std::span<const std::uint64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_values(std::span<const BigInt> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += to_string(values[i]);
    }
    return out;
}

std::vector<std::uint64_t> parse_values(std::string_view text) {
    std::vector<std::uint64_t> out;
    for (const auto& tok : split_top_level(strip(text), ' ')) {
        if (!tok.empty()) out.push_back(parse_u64(tok));
    }
    return out;
}

std::vector<BigInt> parse_big_values(std::string_view text) {
    std::vector<BigInt> out;
    for (const auto& tok : split_top_level(strip(text), ' ')) {
        if (!tok.empty()) out.push_back(parse_bigint(tok));
    }
    return out;
}

}  // namespace polycomp
