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

#include <tuple>

#include "polycomp/error.hpp"
#include "polycomp/poly.hpp"
#include "polycomp/random.hpp"

using namespace polycomp;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

// Reducibility by multiplying out every pair of monic polynomials whose
// degrees add up to deg f. Shares no code path with trial division.
bool brute_reducible(const Polynomial& f) {
    const Polynomial m = f.monic();
    const auto deg = static_cast<unsigned>(f.degree());
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        for (const auto& g : monic_polynomials(f.ring(), d)) {
            for (const auto& h : monic_polynomials(f.ring(), deg - d)) {
                if (g * h == m) return true;
            }
        }
    }
    return false;
}

// Every polynomial of degree <= bound over a finite ring, by counting in base |R|.
std::vector<Polynomial> all_polys(Ring r, unsigned bound) {
    const auto elems = elements(r);
    std::vector<Polynomial> out;
    std::vector<std::size_t> idx(bound + 1, 0);
    while (true) {
        std::vector<RingElement> c;
        for (auto i : idx) c.push_back(elems[i]);
        out.emplace_back(r, std::move(c));
        std::size_t pos = 0;
        while (pos <= bound && ++idx[pos] == elems.size()) idx[pos++] = 0;
        if (pos > bound) break;
    }
    return out;
}

}  // namespace

TEST_CASE("text round trip and canonical order") {
    CHECK(P("F5:[1,0,2]").to_string() == "F5:[1,0,2]");
    CHECK(P("F5:[1,0,2,0,0]").degree() == 2);
    CHECK(P("Z/4:[0]").is_zero());
    CHECK(P("F4:[t,1]").to_string() == "F4:[t,1]");
    CHECK(P("F2:[1,1]") < P("F2:[0,0,1]"));
    CHECK(P("F2:[0,1]") < P("F2:[1,1]"));
}

TEST_CASE("unit criterion") {
    CHECK(is_unit(P("Z/4:[1,2]")));
    CHECK(is_unit(P("F5:[1]")));
    CHECK_FALSE(is_unit(P("Z/6:[1,2]")));
    CHECK_FALSE(inverse_search(P("Z/6:[1,2]"), 6).has_value());
}

TEST_CASE("nilpotent criterion") {
    CHECK(is_nilpotent(P("Z/4:[2,2]")));
    CHECK_FALSE(is_nilpotent(P("F3:[0,1]")));
    CHECK(is_nilpotent(P("Z/12:[0,0,6]")));
}

TEST_CASE("irreducibility by trial division") {
    CHECK(is_irreducible(P("F2:[1,1,1]")));
    CHECK_FALSE(is_irreducible(P("F2:[1,0,1]")));
    CHECK(is_irreducible(P("F5:[0,1]")));
    try {
        (void)is_irreducible(P("Z/4:[1,1]"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Unsupported);
    }
}

TEST_CASE("factorization examples") {
    const auto f1 = factor(P("F2:[0,1,1]"));
    CHECK(f1.to_string() == "unit=1 [0,1]^1 [1,1]^1");
    const auto f2 = factor(P("F5:[0,0,2]"));
    CHECK(f2.to_string() == "unit=2 [0,1]^2");
    const auto f3 = factor(P("F2:[1,0,1,0,1]"));
    CHECK(f3.to_string() == "unit=1 [1,1,1]^2");
}

TEST_CASE("inverse search examples") {
    CHECK(inverse_search(P("Z/4:[1,2]"), 4) == P("Z/4:[1,2]"));
    CHECK_FALSE(inverse_search(P("F3:[0,1]"), 4).has_value());
    CHECK(inverse_search(P("Z/4:[3]"), 0) == P("Z/4:[3]"));
}

TEST_CASE("irreducibility matches pair multiplication and factor count over small fields") {
    for (const char* name : {"F2", "F3", "F4", "F5", "F7", "F8", "F9"}) {
        CAPTURE(name);
        const Ring r = Ring::parse(name);
        const unsigned max_deg = *r.size() <= 4 ? 4 : 3;
        for (unsigned d = 1; d <= max_deg; ++d) {
            for (const auto& f : monic_polynomials(r, d)) {
                CAPTURE(f.to_string());
                const bool irr = is_irreducible(f);
                CHECK(irr == !brute_reducible(f));
                const auto fac = factor(f);
                CHECK(irr == (fac.factors.size() == 1 && fac.factors[0].second == 1));
                CHECK(fac.expand() == f);
                for (const auto& [g, m] : fac.factors) CHECK(is_irreducible(g));
            }
        }
    }
}

TEST_CASE("factorization reassembles non-monic inputs") {
    Rng rng(3);
    const Ring r = Ring::parse("F9");
    const auto elems = elements(r);
    for (int i = 0; i < 200; ++i) {
        std::vector<RingElement> c;
        const auto deg = rng.uniform(1, 5);
        for (std::uint64_t j = 0; j <= deg; ++j) c.push_back(elems[rng.uniform(j == deg ? 1 : 0, elems.size() - 1)]);
        const Polynomial f(r, std::move(c));
        CHECK(factor(f).expand() == f);
    }
}

TEST_CASE("unit criterion agrees with exhaustive inverse search over Z/n") {
    // (ring, degree of f, degree of the candidate inverses). An inverse of
    // 1 + N with N^k = 0 has degree at most (k - 1) deg N.
    const std::tuple<const char*, unsigned, unsigned> cases[] = {{"Z/4", 2, 2}, {"Z/6", 2, 1}, {"Z/8", 1, 2}, {"Z/9", 2, 2}};
    for (const auto& [name, fdeg, gdeg] : cases) {
        CAPTURE(name);
        const auto candidates = all_polys(Ring::parse(name), gdeg);
        for (const auto& f : all_polys(Ring::parse(name), fdeg)) {
            CAPTURE(f.to_string());
            bool found = false;
            for (const auto& g : candidates) {
                if ((f * g) == Polynomial::constant(RingElement::one(f.ring()))) {
                    found = true;
                    break;
                }
            }
            CHECK(is_unit(f) == found);
            CHECK(inverse_search(f, 4).has_value() == found);
        }
    }
}

TEST_CASE("degrees add over domains") {
    Rng rng(9);
    for (const char* name : {"Z", "F7", "F9"}) {
        const Ring r = Ring::parse(name);
        for (int i = 0; i < 100; ++i) {
            std::vector<RingElement> a, b;
            const auto da = rng.uniform(0, 4), db = rng.uniform(0, 4);
            for (std::uint64_t j = 0; j <= da; ++j) a.push_back(RingElement::from_integer(r, rng.uniform(1, 6)));
            for (std::uint64_t j = 0; j <= db; ++j) b.push_back(RingElement::from_integer(r, rng.uniform(1, 6)));
            const Polynomial f(r, a), g(r, b);
            if (f.is_zero() || g.is_zero()) continue;
            CHECK((f * g).degree() == f.degree() + g.degree());
        }
    }
}

TEST_CASE("division identity") {
    Rng rng(5);
    const Ring r = Ring::parse("F7");
    for (int i = 0; i < 200; ++i) {
        std::vector<RingElement> a, b;
        for (std::uint64_t j = 0; j <= rng.uniform(0, 6); ++j) a.push_back(RingElement::from_code(r, rng.uniform(0, 6)));
        for (std::uint64_t j = 0; j <= rng.uniform(0, 3); ++j) b.push_back(RingElement::from_code(r, rng.uniform(1, 6)));
        const Polynomial f(r, a), g(r, b);
        const auto [q, rem] = divmod(f, g);
        CHECK(q * g + rem == f);
        CHECK(rem.degree() < g.degree());
    }
}
