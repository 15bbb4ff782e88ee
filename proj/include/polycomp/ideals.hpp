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

// Principal ideals (n) of the integers, named by their nonnegative generator.

#ifndef POLYCOMP_IDEALS_HPP
#define POLYCOMP_IDEALS_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "polycomp/bigint.hpp"

namespace polycomp {

class PrincipalIdeal {
   public:
    /// (n) = (-n); the stored generator is |n|.
    explicit PrincipalIdeal(const BigInt& n = 0);
    /// Accepts `(15)` or a bare integer.
    static PrincipalIdeal parse(std::string_view text);

    const BigInt& generator() const { return n_; }
    bool is_zero() const { return n_ == 0; }
    bool is_unit_ideal() const { return n_ == 1; }
    /// Index [Z : (n)]; empty for the zero ideal, whose index is infinite.
    std::optional<BigInt> norm() const;
    bool is_prime() const;

    /// `(15)`.
    std::string to_string() const;

    friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;

   private:
    BigInt n_;
};

PrincipalIdeal ideal_mul(const PrincipalIdeal& a, const PrincipalIdeal& b);
/// ((p-1)(q-1)) for distinct prime ideals (p), (q).
PrincipalIdeal ideal_totient(const PrincipalIdeal& p, const PrincipalIdeal& q);
/// (d) with e d ≡ 1 mod phi and d in [1, phi). phi = 1 gives (1).
PrincipalIdeal ideal_inverse(const PrincipalIdeal& e, const PrincipalIdeal& phi);
/// I ⊇ J, i.e. generator(I) divides generator(J).
bool ideal_contains(const PrincipalIdeal& outer, const PrincipalIdeal& inner);
/// Norm as text: the integer, or `inf` for (0).
std::string norm_string(const PrincipalIdeal& ideal);

}  // namespace polycomp

#endif  // POLYCOMP_IDEALS_HPP
