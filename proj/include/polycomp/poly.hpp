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
 * @file poly.hpp
 * @brief Dense univariate polynomials over any supported coefficient ring.
 *
 * Irreducibility and factorization over finite fields are decided by plain
 * trial division against every monic polynomial of degree up to deg(f)/2.
 * That costs about q^(deg f / 2) divisions, so both refuse inputs needing
 * more than 2^24 candidate divisors.
 *
 * Text format: ring prefix and little-endian coefficients, `F5:[1,0,2]`
 * meaning 1 + 2X^2 over F_5.
 */

#ifndef POLYCOMP_POLY_HPP
#define POLYCOMP_POLY_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polycomp/ring.hpp"

namespace polycomp {

class Polynomial {
   public:
    explicit Polynomial(Ring ring) : ring_(ring) {}
    /// Trailing zeros are dropped; every coefficient must belong to `ring`.
    Polynomial(Ring ring, std::vector<RingElement> coeffs);

    static Polynomial from_integers(Ring ring, std::initializer_list<long long> coeffs);
    static Polynomial constant(const RingElement& c);
    static Polynomial monomial(const RingElement& c, std::size_t degree);
    static Polynomial x(Ring ring) { return monomial(RingElement::one(ring), 1); }
    /// `F5:[1,0,2]`.
    static Polynomial parse(std::string_view text);
    /// `[1,0,2]` with the ring given separately.
    static Polynomial parse_coefficients(Ring ring, std::string_view list);

    Ring ring() const { return ring_; }
    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    std::span<const RingElement> coefficients() const { return coeffs_; }
    RingElement coeff(std::size_t i) const;
    RingElement leading() const { return coeff(coeffs_.empty() ? 0 : coeffs_.size() - 1); }
    RingElement constant_term() const { return coeff(0); }

    /// Requires a unit leading coefficient.
    Polynomial monic() const;
    Polynomial scaled(const RingElement& c) const;
    RingElement evaluate(const RingElement& x) const;

    std::string to_string() const;
    std::string coefficients_string() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
    /// Canonical order: by degree, then lexicographically on [c0, c1, ...].
    friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

   private:
    void trim();

    Ring ring_;
    std::vector<RingElement> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Division by a polynomial whose leading coefficient is a unit.
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient a / b if b divides a (b must have a unit leading coefficient).
std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b);

/// Constant term is a unit and every higher coefficient is nilpotent.
bool is_unit(const Polynomial& f);
/// Every coefficient is nilpotent.
bool is_nilpotent(const Polynomial& f);
/// Finite fields only, deg f >= 1.
bool is_irreducible(const Polynomial& f);

struct Factorization {
    RingElement unit;
    /// Monic irreducible factors with multiplicity, in canonical order.
    std::vector<std::pair<Polynomial, unsigned>> factors;

    Polynomial expand() const;
    std::string to_string() const;
};

/// Finite fields only, f != 0.
Factorization factor(const Polynomial& f);

/// Brute-force search for g with f g = 1 and deg g <= degree_bound (<= 8),
/// over a finite coefficient ring. Candidates are enumerated coefficient by
/// coefficient, discarding a prefix as soon as a product coefficient that it
/// already determines is wrong.
std::optional<Polynomial> inverse_search(const Polynomial& f, unsigned degree_bound);

/// All monic polynomials of the given degree over a finite ring, in code order.
std::vector<Polynomial> monic_polynomials(Ring ring, unsigned degree);

}  // namespace polycomp

#endif  // POLYCOMP_POLY_HPP
