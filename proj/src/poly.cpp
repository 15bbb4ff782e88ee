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

#include "polycomp/poly.hpp"

#include <algorithm>

#include "polycomp/error.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

namespace {

constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 24;

void require_finite_field(const Polynomial& f, const char* op) {
    require(f.ring().is_field() && f.ring().is_finite(), ErrorCode::Unsupported,
            std::string(op) + " needs a finite field, got " + f.ring().to_string());
}

std::uint64_t candidate_count(Ring ring, unsigned degree) {
    const std::uint64_t q = *ring.size();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        if (count > kMaxCandidates / q) fail(ErrorCode::CeilingExceeded, "trial-division ceiling exceeded");
        count *= q;
    }
    return count;
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<RingElement> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (!(c.ring() == ring_)) fail(ErrorCode::RingMismatch, "coefficient not in " + ring_.to_string());
    }
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_integers(Ring ring, std::initializer_list<long long> coeffs) {
    std::vector<RingElement> c;
    for (long long v : coeffs) c.push_back(RingElement::from_integer(ring, v));
    return Polynomial(ring, std::move(c));
}

Polynomial Polynomial::constant(const RingElement& c) { return Polynomial(c.ring(), {c}); }

Polynomial Polynomial::monomial(const RingElement& c, std::size_t degree) {
    std::vector<RingElement> coeffs(degree + 1, RingElement::zero(c.ring()));
    coeffs[degree] = c;
    return Polynomial(c.ring(), std::move(coeffs));
}

Polynomial Polynomial::parse(std::string_view raw) {
    const std::string text = strip(raw);
    const auto bracket = text.find('[');
    if (bracket == std::string::npos || bracket == 0 || text[bracket - 1] != ':') {
        fail(ErrorCode::Parse, "expected RING:[c0,c1,...], got '" + text + "'");
    }
    return parse_coefficients(Ring::parse(text.substr(0, bracket - 1)), text.substr(bracket));
}

Polynomial Polynomial::parse_coefficients(Ring ring, std::string_view list) {
    const std::string inner = strip(unwrap(strip(list), '[', ']'));
    std::vector<RingElement> coeffs;
    if (!inner.empty()) {
        for (const auto& tok : split_top_level(inner, ',')) coeffs.push_back(RingElement::parse(ring, tok));
    }
    return Polynomial(ring, std::move(coeffs));
}

RingElement Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : RingElement::zero(ring_);
}

Polynomial Polynomial::monic() const {
    require(!is_zero(), ErrorCode::InvalidArgument, "zero polynomial has no monic form");
    return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const RingElement& c) const {
    std::vector<RingElement> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return Polynomial(ring_, std::move(out));
}

RingElement Polynomial::evaluate(const RingElement& x) const {
    RingElement acc = RingElement::zero(ring_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string Polynomial::coefficients_string() const {
    std::string out = "[";
    if (coeffs_.empty()) out += "0";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].to_string();
    }
    return out + "]";
}

std::string Polynomial::to_string() const { return ring_.short_name() + ":" + coefficients_string(); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_)) fail(ErrorCode::RingMismatch, "polynomials over different rings");
    std::vector<RingElement> out;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
    return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a) {
    std::vector<RingElement> out;
    for (const auto& c : a.coeffs_) out.push_back(-c);
    return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_)) fail(ErrorCode::RingMismatch, "polynomials over different rings");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<RingElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingElement::zero(a.ring_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(a.ring_, std::move(out));
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    require(!b.is_zero(), ErrorCode::InvalidArgument, "division by zero polynomial");
    if (!(a.ring() == b.ring())) fail(ErrorCode::RingMismatch, "polynomials over different rings");
    const RingElement lead_inv = b.leading().inverse();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<RingElement> rem(a.coefficients().begin(), a.coefficients().end());
    if (rem.size() <= db) return {Polynomial(a.ring()), a};
    std::vector<RingElement> quot(rem.size() - db, RingElement::zero(a.ring()));
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        const RingElement c = rem[i] * lead_inv;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coefficients()[j];
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
    return {Polynomial(a.ring(), std::move(quot)), Polynomial(a.ring(), std::move(rem))};
}

std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

bool is_unit(const Polynomial& f) {
    if (f.is_zero() || !f.constant_term().is_unit()) return false;
    for (std::size_t i = 1; i < f.coefficients().size(); ++i) {
        if (!f.coefficients()[i].is_nilpotent()) return false;
    }
    return true;
}

bool is_nilpotent(const Polynomial& f) {
    return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                       [](const RingElement& c) { return c.is_nilpotent(); });
}

std::vector<Polynomial> monic_polynomials(Ring ring, unsigned degree) {
    const std::uint64_t q = *ring.size();
    const std::uint64_t count = candidate_count(ring, degree);
    std::vector<Polynomial> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<RingElement> c;
        c.reserve(degree + 1);
        std::uint64_t rest = code;
        for (unsigned i = 0; i < degree; ++i) {
            c.push_back(RingElement::from_code(ring, rest % q));
            rest /= q;
        }
        c.push_back(RingElement::one(ring));
        out.emplace_back(ring, std::move(c));
    }
    return out;
}

bool is_irreducible(const Polynomial& f) {
    require_finite_field(f, "irreducibility test");
    require(f.degree() >= 1, ErrorCode::Precondition, "irreducibility test needs degree >= 1");
    const auto half = static_cast<unsigned>(f.degree() / 2);
    std::uint64_t total = 0;
    for (unsigned d = 1; d <= half; ++d) {
        total += candidate_count(f.ring(), d);
        if (total > kMaxCandidates) fail(ErrorCode::CeilingExceeded, "trial-division ceiling exceeded");
    }
    for (unsigned d = 1; d <= half; ++d) {
        for (const auto& g : monic_polynomials(f.ring(), d)) {
            if (divmod(f, g).remainder.is_zero()) return false;
        }
    }
    return true;
}

Factorization factor(const Polynomial& f) {
    require_finite_field(f, "factorization");
    require(!f.is_zero(), ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
    Factorization out{f.leading(), {}};
    Polynomial rest = f.monic();
    for (unsigned d = 1; 2 * static_cast<std::ptrdiff_t>(d) <= rest.degree(); ++d) {
        for (const auto& g : monic_polynomials(f.ring(), d)) {
            unsigned mult = 0;
            while (auto q = exact_quotient(rest, g)) {
                rest = std::move(*q);
                ++mult;
            }
            if (mult > 0) out.factors.emplace_back(g, mult);
            if (2 * static_cast<std::ptrdiff_t>(d) > rest.degree()) break;
        }
    }
    // Whatever survives has no factor of degree <= deg/2, so it is irreducible.
    if (rest.degree() >= 1) {
        auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const auto& p) { return p.first == rest; });
        if (it != out.factors.end()) {
            ++it->second;
        } else {
            out.factors.emplace_back(rest, 1);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Polynomial Factorization::expand() const {
    Polynomial acc = Polynomial::constant(unit);
    for (const auto& [g, m] : factors) {
        for (unsigned i = 0; i < m; ++i) acc = acc * g;
    }
    return acc;
}

std::string Factorization::to_string() const {
    std::string out = "unit=" + unit.to_string();
    for (const auto& [g, m] : factors) out += " " + g.coefficients_string() + "^" + std::to_string(m);
    return out;
}

namespace {

struct InverseSearch {
    const std::vector<RingElement>& f;
    const std::vector<RingElement>& ring_elems;
    unsigned bound;
    std::vector<RingElement> g;

    RingElement product_coeff(std::size_t k) const {
        RingElement acc = RingElement::zero(f.front().ring());
        for (std::size_t j = 0; j < g.size() && j <= k; ++j) {
            if (k - j < f.size()) acc += f[k - j] * g[j];
        }
        return acc;
    }

    bool run() {
        const std::size_t k = g.size();
        if (k == bound + 1) {
            for (std::size_t m = k; m < f.size() + bound; ++m) {
                if (!product_coeff(m).is_zero()) return false;
            }
            return true;
        }
        const bool want_one = (k == 0);
        for (const auto& c : ring_elems) {
            g.push_back(c);
            const RingElement pk = product_coeff(k);
            if (want_one ? pk.is_one() : pk.is_zero()) {
                if (run()) return true;
            }
            g.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<Polynomial> inverse_search(const Polynomial& f, unsigned degree_bound) {
    require(f.ring().is_finite(), ErrorCode::Unsupported, "inverse search needs a finite ring");
    require(degree_bound <= 8, ErrorCode::InvalidArgument, "inverse search degree bound must be <= 8");
    if (f.is_zero()) return std::nullopt;
    const std::vector<RingElement> fc(f.coefficients().begin(), f.coefficients().end());
    const auto elems = elements(f.ring());
    InverseSearch search{fc, elems, degree_bound, {}};
    if (!search.run()) return std::nullopt;
    return Polynomial(f.ring(), std::move(search.g));
}

}  // namespace polycomp
