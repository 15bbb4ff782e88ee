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
 * @file ring.hpp
 * @brief Coefficient rings: Z, Z/n, prime fields and extension fields.
 *
 * Ring descriptors are interned: every distinct ring exists once for the
 * lifetime of the process, and a Ring is a cheap handle to it. Two handles
 * compare equal exactly when they denote the same ring.
 *
 * Elements of finite rings are stored as a single integer code. For Z/n and
 * F_p the code is the residue in [0, n). For F_{p^k} = F_p[t]/(m(t)) the code
 * of c_0 + c_1 t + ... + c_{k-1} t^{k-1} is c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
 * Finite rings are limited to fewer than 2^32 elements.
 */

#ifndef POLYCOMP_RING_HPP
#define POLYCOMP_RING_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "polycomp/bigint.hpp"

namespace polycomp {

enum class RingKind { Integers, IntegersMod, PrimeField, ExtensionField };

class RingDescriptor;

class Ring {
   public:
    static Ring integers();
    static Ring integers_mod(std::uint64_t n);
    static Ring prime_field(std::uint64_t p);
    /// `modulus` is little-endian, monic, of degree k >= 1, irreducible over F_p.
    /// Irreducibility is verified by trial division.
    static Ring extension_field(std::uint64_t p, std::vector<std::uint64_t> modulus);
    /// F_q for a prime power q. Extension fields use the default modulus: the
    /// first monic irreducible polynomial of degree k in code order.
    static Ring galois_field(std::uint64_t q);
    /// Accepts `Z`, `Z/12`, `F5`, `F4` and `F(4)=F2[t]/(t^2+t+1)`.
    static Ring parse(std::string_view text);

    RingKind kind() const;
    /// n for Z/n, p for fields, 0 for Z.
    std::uint64_t characteristic() const;
    /// k for F_{p^k}; 1 for every other ring.
    unsigned degree() const;
    std::optional<std::uint64_t> size() const;
    /// Little-endian monic modulus of an extension field, {0, 1} otherwise.
    const std::vector<std::uint64_t>& modulus_poly() const;
    bool has_default_modulus() const;

    bool is_field() const;
    bool is_finite() const;
    bool is_domain() const;
    /// Smallest m with x^m = 0 for every nilpotent x.
    unsigned nilpotency_bound() const;

    /// Canonical text, e.g. `Z`, `Z/12`, `F5`, `F(4)=F2[t]/(t^2+t+1)`.
    std::string to_string() const;
    /// Like to_string() but extension fields with the default modulus print as `F4`.
    std::string short_name() const;

    const RingDescriptor& descriptor() const { return *d_; }

    friend bool operator==(Ring a, Ring b) { return a.d_ == b.d_; }

   private:
    explicit Ring(const RingDescriptor* d) : d_(d) {}
    const RingDescriptor* d_;
};

class RingElement {
   public:
    static RingElement zero(Ring ring);
    static RingElement one(Ring ring);
    /// Image of an integer under the canonical map Z -> ring.
    static RingElement from_integer(Ring ring, const BigInt& value);
    /// Finite rings only; `code` must be below the ring size.
    static RingElement from_code(Ring ring, std::uint64_t code);
    /// Extension fields: coefficients c_0..c_{k-1} of the representative in t.
    static RingElement from_coefficients(Ring ring, std::span<const std::uint64_t> coeffs);
    /// Integer literal, or a polynomial in `t` for extension fields.
    static RingElement parse(Ring ring, std::string_view text);

    Ring ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    std::uint64_t code() const;
    const BigInt& integer() const;
    std::vector<std::uint64_t> coefficients() const;

    bool is_unit() const;
    /// Throws NotInvertible for non-units.
    RingElement inverse() const;
    bool is_nilpotent() const;
    RingElement pow(std::uint64_t exponent) const;

    std::string to_string() const;

    friend RingElement operator+(const RingElement& x, const RingElement& y);
    friend RingElement operator-(const RingElement& x, const RingElement& y);
    friend RingElement operator*(const RingElement& x, const RingElement& y);
    friend RingElement operator-(const RingElement& x);
    RingElement& operator+=(const RingElement& y) { return *this = *this + y; }
    RingElement& operator-=(const RingElement& y) { return *this = *this - y; }
    RingElement& operator*=(const RingElement& y) { return *this = *this * y; }

    friend bool operator==(const RingElement& x, const RingElement& y) {
        return x.ring_ == y.ring_ && x.value_ == y.value_;
    }
    /// Canonical order within one ring: by code, or by integer value for Z.
    friend std::strong_ordering operator<=>(const RingElement& x, const RingElement& y);

   private:
    RingElement(Ring ring, std::variant<std::uint64_t, BigInt> value) : ring_(ring), value_(std::move(value)) {}

    Ring ring_;
    std::variant<std::uint64_t, BigInt> value_;
};

/// Every element of a finite ring in code order.
std::vector<RingElement> elements(Ring ring);

/// A ring homomorphism from a subfield (or the ring itself) into `target`.
/// Supported: identity, F_p into F_{p^k}, and F_{p^j} into F_{p^k} for j | k,
/// where the generator is sent to the root of its modulus with the smallest code.
class FieldEmbedding {
   public:
    FieldEmbedding(Ring source, Ring target);

    Ring source() const { return source_; }
    Ring target() const { return target_; }

    RingElement apply(const RingElement& x) const;
    /// Preimage of `y` if it lies in the image.
    std::optional<RingElement> preimage(const RingElement& y) const;
    bool contains(const RingElement& y) const { return preimage(y).has_value(); }

   private:
    Ring source_;
    Ring target_;
    bool identity_ = false;
    std::vector<std::uint64_t> image_;
    std::unordered_map<std::uint64_t, std::uint64_t> preimage_;
};

RingElement subfield_embed(const RingElement& x, Ring target);

/// Text of a little-endian integer polynomial in `var`, highest power first.
std::string format_poly_in(std::span<const std::uint64_t> coeffs, char var);

}  // namespace polycomp

#endif  // POLYCOMP_RING_HPP
