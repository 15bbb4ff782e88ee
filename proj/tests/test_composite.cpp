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

#include "polycomp/composite.hpp"
#include "polycomp/error.hpp"
#include "polycomp/random.hpp"

using namespace polycomp;

namespace {

CompositeElement C(const char* text) { return CompositeElement::parse(text); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Protocol;
}

Polynomial product(const std::vector<CompositeElement>& xs) {
    Polynomial acc = Polynomial::constant(RingElement::one(xs.front().tower().top()));
    for (const auto& x : xs) acc = acc * x.poly();
    return acc;
}

std::vector<CompositeElement> nonunits_up_to(const Tower& t, std::size_t degree) {
    std::vector<CompositeElement> out;
    for (std::size_t d = 1; d <= degree; ++d) {
        auto more = elements_of_degree(t, d);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

}  // namespace

TEST_CASE("membership") {
    const Tower t = Tower::parse("F2<F4");
    const Ring f4 = t.top();
    CHECK(contains(t, Polynomial::parse("F4:[1,t]")));
    CHECK_FALSE(contains(t, Polynomial::parse("F4:[t]")));
    CHECK_FALSE(contains(Tower::parse("F2<F2<F4"), Polynomial::parse("F4:[1,t]")));
    CHECK(contains(Tower::parse("F2<F2<F4"), Polynomial::parse("F4:[1,1,t]")));
    CHECK(code_of([] { (void)C("F2<F4:[t]"); }) == ErrorCode::NotMember);
    CHECK(t.to_string() == "F2<F4");
    (void)f4;
}

TEST_CASE("units") {
    CHECK(is_unit(C("F2<F4:[1]")));
    CHECK_FALSE(is_unit(C("F2<F4:[0,1]")));
    CHECK(is_unit(C("Z/4<Z/4:[1,2]")));
    CHECK_FALSE(is_unit(C("Z/4<Z/4:[2,1]")));
    CHECK(is_nilpotent(C("Z/4<Z/4:[2,2]")));
}

TEST_CASE("irreducibility examples") {
    CHECK(is_irreducible(C("F2<F4:[0,t]")));
    CHECK_FALSE(is_irreducible(C("F2<F4:[0,0,1]")));
    CHECK(is_irreducible(C("F2<F4:[1,t]")));
    CHECK(factor_search_oracle(C("F2<F4:[0,0,1]")));
    CHECK_FALSE(factor_search_oracle(C("F2<F4:[0,t]")));
    CHECK(code_of([] { (void)factor_search_oracle(C("F2<F4:[1]")); }) == ErrorCode::Precondition);
    // An atom of the two-level composite that splits in F4[X].
    CHECK(is_irreducible(C("F2<F2<F4:[0,0,t]")));
    CHECK_FALSE(is_irreducible(Polynomial::parse("F4:[0,0,t]").monic()));
}

TEST_CASE("irreducibility agrees with exhaustive factor search") {
    for (const char* tower : {"F2<F4", "F3<F9", "F2<F2<F4", "F3<F3<F9"}) {
        CAPTURE(tower);
        const Tower t = Tower::parse(tower);
        const std::size_t max_deg = *t.top().size() <= 4 ? 3 : 2;
        for (const auto& f : nonunits_up_to(t, max_deg)) {
            CAPTURE(f.to_string());
            CHECK(is_irreducible(f) == !factor_search_oracle(f));
        }
    }
}

TEST_CASE("atomization examples") {
    const auto x2 = atomize(C("F2<F4:[0,0,1]"));
    REQUIRE(x2.size() == 2);
    for (const auto& a : x2) CHECK(a.degree() == 1);
    CHECK(product(x2) == C("F2<F4:[0,0,1]").poly());
    // The lowest coefficients of the two atoms multiply to 1.
    CHECK((x2[0].poly().coeff(1) * x2[1].poly().coeff(1)).is_one());

    const auto tx = atomize(C("F2<F4:[0,t]"));
    REQUIRE(tx.size() == 1);
    CHECK(tx[0] == C("F2<F4:[0,t]"));

    const auto x_1x = atomize(C("F2<F4:[0,1,1]"));
    REQUIRE(x_1x.size() == 2);
    CHECK(x_1x[0] == C("F2<F4:[0,1]"));
    CHECK(x_1x[1] == C("F2<F4:[1,1]"));
}

TEST_CASE("atoms are irreducible and reassemble exactly") {
    Rng rng(21);
    for (const char* tower : {"F2<F4", "F3<F9", "F2<F2<F4"}) {
        CAPTURE(tower);
        const Tower t = Tower::parse(tower);
        for (int i = 0; i < 150; ++i) {
            const auto deg = static_cast<std::size_t>(rng.uniform(1, 5));
            std::vector<RingElement> c;
            for (std::size_t j = 0; j <= deg; ++j) {
                const auto& choices = t.admissible(j);
                c.push_back(choices[rng.uniform(j == deg ? 1 : 0, choices.size() - 1)]);
            }
            const CompositeElement f(t, Polynomial(t.top(), std::move(c)));
            CAPTURE(f.to_string());
            const auto atoms = atomize(f);
            CHECK(product(atoms) == f.poly());
            bool seen_constant = false;
            for (const auto& a : atoms) {
                CHECK(is_irreducible(a));
                const bool zero_const = a.poly().constant_term().is_zero();
                if (!zero_const) seen_constant = true;
                if (t.n() == 1) CHECK(!(zero_const && seen_constant));
            }
        }
    }
}

TEST_CASE("quotient map is a surjective homomorphism onto A0") {
    CHECK(quotient_eval(C("F2<F4:[1,t]")).is_one());
    CHECK(quotient_eval(C("F2<F4:[0]")).is_zero());
    Rng rng(8);
    const Tower t = Tower::parse("F3<F9");
    const auto all = nonunits_up_to(t, 2);
    std::set<std::uint64_t> hit;
    for (int i = 0; i < 500; ++i) {
        const auto& f = all[rng.uniform(0, all.size() - 1)];
        const auto& g = all[rng.uniform(0, all.size() - 1)];
        CHECK(quotient_eval(f * g) == quotient_eval(f) * quotient_eval(g));
        CHECK(quotient_eval(f + g) == quotient_eval(f) + quotient_eval(g));
        hit.insert(quotient_eval(f).code());
    }
    CHECK(hit.size() == 3);
    CHECK(quotient_eval(C("F3<F9:[2,t]")).ring() == Ring::parse("F3"));
}

TEST_CASE("divisor chains") {
    const auto x3 = divisor_chain(C("F2<F4:[0,0,0,1]"), 10);
    CHECK(x3.terminated);
    REQUIRE(x3.chain.size() == 3);
    CHECK(x3.chain.back().degree() == 1);
    CHECK(x3.chain.back().poly().constant_term().is_zero());
    const auto lin = divisor_chain(C("F2<F4:[1,1]"), 10);
    CHECK(lin.terminated);
    CHECK(lin.chain.size() == 1);
    CHECK(code_of([] { (void)divisor_chain(C("F2<F4:[1]"), 5); }) == ErrorCode::Precondition);
}

TEST_CASE("ceilings are enforced") {
    CHECK(code_of([] { (void)factor_search_oracle(C("F2<F4:[1,1,1,1,1,1]")); }) == ErrorCode::CeilingExceeded);
    CHECK(code_of([] { (void)factor_search_oracle(C("F2<F16:[0,1,1]")); }) == ErrorCode::CeilingExceeded);
    CHECK(code_of([] { (void)is_irreducible(C("Z/4<Z/4:[0,1]")); }) == ErrorCode::Unsupported);
}
