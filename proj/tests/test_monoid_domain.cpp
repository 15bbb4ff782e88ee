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

#include <set>
#include <string>
#include <vector>

#include "polycomp/error.hpp"
#include "polycomp/monoid_domain.hpp"
#include "polycomp/random.hpp"

using namespace polycomp;

namespace {

MonoidElement E(const char* text) { return MonoidElement::parse(text); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Protocol;
}

// Every element with exponents up to `bound`, coefficients from `coeffs`.
std::vector<MonoidElement> all_elements(Ring ring, const NumericalMonoid& m, std::uint64_t bound,
                                        const std::vector<RingElement>& coeffs) {
    const auto exps = m.members_up_to(bound);
    std::vector<MonoidElement> out;
    std::vector<std::size_t> idx(exps.size(), 0);
    while (true) {
        MonoidElement::Terms t;
        for (std::size_t i = 0; i < exps.size(); ++i) t.emplace(exps[i], coeffs[idx[i]]);
        out.emplace_back(ring, m, std::move(t));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == coeffs.size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

// Text forms of every product g h of nonzero nonunits from the candidate set.
std::set<std::string> all_products(const std::vector<MonoidElement>& cands) {
    std::vector<const MonoidElement*> nonunits;
    for (const auto& c : cands)
        if (!c.is_zero() && !is_unit(c)) nonunits.push_back(&c);
    std::set<std::string> out;
    for (const auto* g : nonunits)
        for (const auto* h : nonunits) out.insert((*g * *h).to_string());
    return out;
}

void check_oracle_against_pairs(Ring ring, const char* monoid, std::uint64_t bound, std::vector<RingElement> coeffs,
                                std::uint64_t coeff_bound) {
    const auto m = NumericalMonoid::parse(monoid);
    const auto cands = all_elements(ring, m, bound, coeffs);
    const auto products = all_products(cands);
    for (const auto& f : cands) {
        if (f.is_zero() || is_unit(f)) continue;
        CAPTURE(f.to_string());
        CHECK(irreducible_oracle(f, bound, coeff_bound) == (products.count(f.to_string()) == 0));
    }
}

std::vector<RingElement> box(Ring ring, long long lo, long long hi) {
    std::vector<RingElement> out;
    for (long long v = lo; v <= hi; ++v) out.push_back(RingElement::from_integer(ring, v));
    return out;
}

}  // namespace

TEST_CASE("numerical monoid membership") {
    const auto m = NumericalMonoid::parse("M<2,3>");
    CHECK_FALSE(m.contains(1));
    CHECK(m.contains(7));
    CHECK(m.contains(0));
    CHECK(NumericalMonoid::parse("M<5,7>").contains(0));
    CHECK(code_of([&] { (void)m.contains(-1); }) == ErrorCode::InvalidArgument);
    CHECK(m.is_atom(2));
    CHECK(m.is_atom(3));
    CHECK_FALSE(m.is_atom(4));
    CHECK_FALSE(m.is_atom(0));
    CHECK(m.to_string() == "M<2,3>");

    // Brute-force coin problem for a few generator sets.
    for (const char* text : {"M<3,5>", "M<4,6>", "M<5,7,9>", "M<6,10,15>"}) {
        const auto mon = NumericalMonoid::parse(text);
        const auto& gens = mon.generators();
        std::vector<bool> reach(400, false);
        reach[0] = true;
        for (std::size_t v = 1; v < reach.size(); ++v)
            for (auto g : gens)
                if (g <= v && reach[v - g]) reach[v] = true;
        for (std::size_t v = 0; v < reach.size(); ++v) CHECK(mon.contains(static_cast<std::int64_t>(v)) == reach[v]);
    }
}

TEST_CASE("units and nilpotents") {
    CHECK(is_unit(E("F5:M<2,3>:{0:1}")));
    CHECK_FALSE(is_unit(E("F5:M<2,3>:{2:1}")));
    CHECK(is_unit(E("F7:M<2,3>:{0:2,3:0}")));
    CHECK(E("F7:M<2,3>:{0:2,3:0}").terms().size() == 1);
    CHECK(is_nilpotent(E("F3:M<2,3>:{}")));
    CHECK_FALSE(is_nilpotent(E("F3:M<2,3>:{2:1}")));
    CHECK(is_nilpotent(E("Z/4:M<2,3>:{0:2,2:2}")));
    CHECK(is_unit(E("Z/4:M<2,3>:{0:1,2:2}")));
    CHECK_FALSE(is_unit(E("Z:M<2,3>:{0:2}")));
    CHECK(is_unit(E("Z:M<2,3>:{0:-1}")));
}

TEST_CASE("arithmetic") {
    CHECK(E("F5:M<2,3>:{2:1}") * E("F5:M<2,3>:{3:1}") == E("F5:M<2,3>:{5:1}"));
    CHECK(E("F5:M<2,3>:{0:1,2:1}") * E("F5:M<2,3>:{0:1,2:-1}") == E("F5:M<2,3>:{0:1,4:-1}"));
    const auto s = E("F5:M<2,3>:{2:1,3:1}");
    CHECK(s * s == E("F5:M<2,3>:{4:1,5:2,6:1}"));
    CHECK(code_of([] { (void)E("F5:M<2,3>:{1:1}"); }) == ErrorCode::NotMember);
    CHECK(code_of([] { (void)(E("F5:M<2,3>:{2:1}") * E("F7:M<2,3>:{2:1}")); }) == ErrorCode::RingMismatch);

    Rng rng(5);
    const Ring z = Ring::integers();
    const auto m = NumericalMonoid::parse("M<3,5>");
    const auto members = m.members_up_to(20);
    auto random_element = [&] {
        MonoidElement::Terms t;
        const auto n = rng.uniform(1, 4);
        for (std::uint64_t i = 0; i < n; ++i)
            t.insert_or_assign(members[rng.uniform(0, members.size() - 1)],
                               RingElement::from_integer(z, static_cast<long long>(rng.uniform(0, 18)) - 9));
        return MonoidElement(z, m, std::move(t));
    };
    for (int i = 0; i < 300; ++i) {
        const auto a = random_element(), b = random_element(), c = random_element();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).max_exponent() == a.max_exponent() + b.max_exponent());
        const auto ab = a * b;
        for (const auto& [e, coeff] : ab.terms()) CHECK(m.contains(static_cast<std::int64_t>(e)));
    }
}

TEST_CASE("unit criterion matches brute-force inverse search over small rings") {
    for (const char* name : {"F2", "F3", "Z/4", "Z/6"}) {
        CAPTURE(name);
        const Ring r = Ring::parse(name);
        std::vector<RingElement> coeffs;
        for (std::uint64_t c = 0; c < *r.size(); ++c) coeffs.push_back(RingElement::from_code(r, c));
        const auto m = NumericalMonoid::parse("M<2,3>");
        const auto cands = all_elements(r, m, 4, coeffs);
        const auto one = E((std::string(name) + ":M<2,3>:{0:1}").c_str());
        for (const auto& f : cands) {
            bool found = false;
            for (const auto& g : cands)
                if (f * g == one) {
                    found = true;
                    break;
                }
            CAPTURE(f.to_string());
            CHECK(is_unit(f) == found);
        }
    }
}

TEST_CASE("construction from primes") {
    const Ring z = Ring::integers();
    const auto m23 = NumericalMonoid::parse("M<2,3>");
    const auto built = build_irreducible_from_primes(z, m23, {2}, {2, 3});
    CHECK(built.element == E("Z:M<2,3>:{2:-1,3:2}"));
    CHECK(built.certificate.size() >= 3);
    CHECK(code_of([&] { (void)build_irreducible_from_primes(z, m23, {2}, {4, 3}); }) == ErrorCode::Precondition);
    CHECK(code_of([&] { (void)build_irreducible_from_primes(z, m23, {2}, {2, 5}); }) == ErrorCode::Precondition);
    CHECK(code_of([&] { (void)build_irreducible_from_primes(z, m23, {4}, {2, 3}); }) == ErrorCode::Precondition);
    CHECK(code_of([&] { (void)build_irreducible_from_primes(Ring::parse("F5"), m23, {2}, {2, 3}); }) ==
          ErrorCode::Unsupported);
    const auto three = build_irreducible_from_primes(z, m23, {2, 3}, {2, 3, 0});
    CHECK(three.element == E("Z:M<2,3>:{0:3,2:-1,3:-2}"));
    CHECK(irreducible_oracle(three.element, 10, 5));
    CHECK(is_prime_element(RingElement::from_integer(Ring::parse("Z/6"), 2)));
    CHECK_FALSE(is_prime_element(RingElement::from_integer(Ring::parse("Z/6"), 1)));
    CHECK_FALSE(is_prime_element(RingElement::from_integer(z, 6)));
    CHECK(is_prime_element(RingElement::from_integer(z, -7)));
}

TEST_CASE("irreducibility oracle examples") {
    CHECK(irreducible_oracle(E("Z:M<2,3>:{2:-1,3:2}"), 6, 4));
    CHECK_FALSE(irreducible_oracle(E("F2:M<2,3>:{4:1}"), 6, 0));
    CHECK(irreducible_oracle(E("F2:M<2,3>:{2:1}"), 6, 0));
    CHECK(code_of([] { (void)irreducible_oracle(E("Z:M<2,3>:{0:1}"), 6, 4); }) == ErrorCode::Precondition);
    CHECK(code_of([] { (void)irreducible_oracle(E("Z:M<2,3>:{2:1}"), 100, 4); }) == ErrorCode::CeilingExceeded);
}

TEST_CASE("oracle agrees with exhaustive pair enumeration") {
    SUBCASE("F2") { check_oracle_against_pairs(Ring::parse("F2"), "M<2,3>", 7, box(Ring::parse("F2"), 0, 1), 0); }
    SUBCASE("F3") { check_oracle_against_pairs(Ring::parse("F3"), "M<2,5>", 6, box(Ring::parse("F3"), 0, 2), 0); }
    SUBCASE("Z/4") { check_oracle_against_pairs(Ring::parse("Z/4"), "M<2,3>", 4, box(Ring::parse("Z/4"), 0, 3), 0); }
    SUBCASE("Z box") { check_oracle_against_pairs(Ring::integers(), "M<2,3>", 4, box(Ring::integers(), -2, 2), 2); }
}

TEST_CASE("oracle finds planted factorizations over Z") {
    Rng rng(1);
    const Ring z = Ring::integers();
    std::size_t planted = 0;
    for (const char* text : {"M<2,3>", "M<3,5>"}) {
        const auto m = NumericalMonoid::parse(text);
        const auto members = m.members_up_to(6);
        auto random_element = [&] {
            MonoidElement::Terms t;
            const auto n = rng.uniform(1, 3);
            for (std::uint64_t j = 0; j < n; ++j)
                t.insert_or_assign(members[rng.uniform(0, members.size() - 1)],
                                   RingElement::from_integer(z, static_cast<long long>(rng.uniform(0, 6)) - 3));
            return MonoidElement(z, m, std::move(t));
        };
        for (int i = 0; i < 300; ++i) {
            const auto g = random_element(), h = random_element();
            if (g.is_zero() || h.is_zero() || is_unit(g) || is_unit(h)) continue;
            const auto f = g * h;
            bool in_box = f.max_exponent() <= 12;
            for (const auto& [e, c] : f.terms()) in_box = in_box && abs(c.integer()) <= 6;
            if (!in_box) continue;
            CAPTURE(f.to_string());
            CHECK_FALSE(irreducible_oracle(f, 12, 6));
            ++planted;
        }
    }
    CHECK(planted > 200);
}
