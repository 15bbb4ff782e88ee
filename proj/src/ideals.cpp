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

#include "polycomp/ideals.hpp"

#include "polycomp/error.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

PrincipalIdeal::PrincipalIdeal(const BigInt& n) : n_(n < 0 ? BigInt(-n) : n) {}

PrincipalIdeal PrincipalIdeal::parse(std::string_view raw) {
    const std::string text = strip(raw);
    if (!text.empty() && text.front() == '(') return PrincipalIdeal(parse_bigint(unwrap(text, '(', ')')));
    return PrincipalIdeal(parse_bigint(text));
}

std::optional<BigInt> PrincipalIdeal::norm() const {
    if (n_ == 0) return std::nullopt;
    return n_;
}

bool PrincipalIdeal::is_prime() const { return polycomp::is_prime(n_); }

std::string PrincipalIdeal::to_string() const { return "(" + polycomp::to_string(n_) + ")"; }

PrincipalIdeal ideal_mul(const PrincipalIdeal& a, const PrincipalIdeal& b) {
    return PrincipalIdeal(a.generator() * b.generator());
}

PrincipalIdeal ideal_totient(const PrincipalIdeal& p, const PrincipalIdeal& q) {
    require(p.is_prime(), ErrorCode::NotPrime, "P=" + p.to_string() + " is not a prime ideal");
    require(q.is_prime(), ErrorCode::NotPrime, "Q=" + q.to_string() + " is not a prime ideal");
    require(!(p == q), ErrorCode::InvalidArgument, "P and Q must be distinct, both are " + p.to_string());
    return PrincipalIdeal((p.generator() - 1) * (q.generator() - 1));
}

PrincipalIdeal ideal_inverse(const PrincipalIdeal& e, const PrincipalIdeal& phi) {
    require(!phi.is_zero(), ErrorCode::InvalidArgument, "modulus ideal must be nonzero");
    if (phi.is_unit_ideal()) return PrincipalIdeal(1);
    if (gcd(e.generator(), phi.generator()) != 1) {
        fail(ErrorCode::NotCoprime, "E=" + e.to_string() + " and " + phi.to_string() + " are not coprime");
    }
    const PrincipalIdeal d(inverse_mod(e.generator(), phi.generator()));
    require(mod_floor(e.generator() * d.generator(), phi.generator()) == 1, ErrorCode::Precondition,
            "inverse failed its own congruence check");
    return d;
}

bool ideal_contains(const PrincipalIdeal& outer, const PrincipalIdeal& inner) {
    if (outer.is_zero()) return inner.is_zero();
    return inner.generator() % outer.generator() == 0;
}

std::string norm_string(const PrincipalIdeal& ideal) {
    const auto n = ideal.norm();
    return n ? to_string(*n) : std::string("inf");
}

}  // namespace polycomp
