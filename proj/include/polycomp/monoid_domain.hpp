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
 * @file monoid_domain.hpp
 * @brief Monoid domains B[M] over numerical monoids M ⊆ N_0.
 *
 * M is given by positive generators; 0 is always a member. Membership is
 * tabulated once up to d * a_min * a_max (d the gcd of the generators), past
 * which every multiple of d belongs to M.
 *
 * Text formats: monoid `M<2,3>`; element `F5:M<2,3>:{2:1,3:4}` listing
 * exponent:coefficient pairs.
 */

#ifndef POLYCOMP_MONOID_DOMAIN_HPP
#define POLYCOMP_MONOID_DOMAIN_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/ring.hpp"

namespace polycomp {

class NumericalMonoid {
   public:
    explicit NumericalMonoid(std::vector<std::uint64_t> generators);
    static NumericalMonoid parse(std::string_view text);

    const std::vector<std::uint64_t>& generators() const;
    /// Throws InvalidArgument for negative m.
    bool contains(std::int64_t m) const;
    /// Nonzero member that is not a sum of two nonzero members.
    bool is_atom(std::uint64_t m) const;
    std::vector<std::uint64_t> members_up_to(std::uint64_t bound) const;

    std::string to_string() const;

    friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
        return a.generators() == b.generators();
    }

   private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

class MonoidElement {
   public:
    using Terms = std::map<std::uint64_t, RingElement>;

    /// Zero coefficients are dropped; every exponent must lie in M.
    MonoidElement(Ring ring, NumericalMonoid monoid, Terms terms);
    static MonoidElement monomial(const RingElement& c, NumericalMonoid monoid, std::uint64_t exponent);
    static MonoidElement parse(std::string_view text);

    Ring ring() const { return ring_; }
    const NumericalMonoid& monoid() const { return monoid_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RingElement coeff(std::uint64_t exponent) const;
    std::uint64_t min_exponent() const;
    std::uint64_t max_exponent() const;

    std::string to_string() const;

    friend MonoidElement operator+(const MonoidElement& a, const MonoidElement& b);
    friend MonoidElement operator-(const MonoidElement& a);
    friend MonoidElement operator-(const MonoidElement& a, const MonoidElement& b);
    friend MonoidElement operator*(const MonoidElement& a, const MonoidElement& b);
    friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
        return a.ring_ == b.ring_ && a.monoid_ == b.monoid_ && a.terms_ == b.terms_;
    }

   private:
    Ring ring_;
    NumericalMonoid monoid_;
    Terms terms_;
};

/// A term with exponent 0 and unit coefficient, every other coefficient
/// nilpotent. Over a domain: exactly the unit constants.
bool is_unit(const MonoidElement& f);
/// Every coefficient nilpotent. Over a domain: only zero.
bool is_nilpotent(const MonoidElement& f);

/// Nonzero nonunit generating a prime ideal: |p| prime in Z; in Z/n an
/// element with gcd(p, n) prime. Fields have none.
bool is_prime_element(const RingElement& p);

struct CertifiedIrreducible {
    MonoidElement element;
    /// One line per verified precondition.
    std::vector<std::string> certificate;
};

/// Builds p_{r-1} X^{m_r} - ... - p_2 X^{m_3} - p_1 X^{m_2} - X^{m_1}
/// from primes p_1..p_{r-1} of B and distinct exponents m_1..m_r of M with
/// m_1 an atom of M and m_2..m_r outside m_1 + M. The first prime term carries
/// a plus sign, all others a minus sign. Each failed precondition is reported
/// by name.
CertifiedIrreducible build_irreducible_from_primes(Ring ring, const NumericalMonoid& monoid, const std::vector<BigInt>& primes,
                                           const std::vector<std::uint64_t>& exponents);

/// True when no f = g h with g, h nonunits exists among candidates with
/// exponents <= exponent_bound and coefficients in the box: [-coeff_bound,
/// coeff_bound] for Z, the whole ring for finite B (coeff_bound unused).
///
/// Over a domain the search fixes the lowest and highest exponents of g,
/// enumerates g's coefficients from the bottom up and solves for h's
/// coefficients one at a time, pruning as soon as an h coefficient leaves the
/// box, is non-integral, or sits at an exponent outside M. Rings with zero
/// divisors are searched pair by pair.
bool irreducible_oracle(const MonoidElement& f, std::uint64_t exponent_bound, std::uint64_t coeff_bound);

}  // namespace polycomp

#endif  // POLYCOMP_MONOID_DOMAIN_HPP
