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

#include "polycomp/monoid_domain.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "polycomp/error.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

namespace {
constexpr std::uint64_t kMaxGenerator = 1 << 12;
constexpr std::uint64_t kMaxExponentBound = 64;
constexpr std::uint64_t kMaxCoeffBound = 1000;
constexpr std::uint64_t kMaxPairCandidates = 4096;
}  // namespace

struct NumericalMonoid::Impl {
    std::vector<std::uint64_t> generators;
    std::uint64_t gcd = 0;
    std::vector<bool> table;  // membership for 0..table.size()-1
    std::string text;

    bool member(std::uint64_t m) const {
        if (m < table.size()) return table[m];
        return gcd != 0 && m % gcd == 0;
    }
};

NumericalMonoid::NumericalMonoid(std::vector<std::uint64_t> generators) {
    require(!generators.empty(), ErrorCode::InvalidArgument, "a numerical monoid needs at least one generator");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (auto g : generators) {
        require(g > 0, ErrorCode::InvalidArgument, "monoid generators must be positive");
        require(g <= kMaxGenerator, ErrorCode::CeilingExceeded, "monoid generator too large");
    }
    auto impl = std::make_shared<Impl>();
    impl->generators = generators;
    for (auto g : generators) impl->gcd = polycomp::gcd(impl->gcd, g);
    // Past d * a_min * a_max every multiple of the gcd d is a member.
    const std::uint64_t limit = generators.front() * generators.back() + 1;
    impl->table.assign(limit, false);
    impl->table[0] = true;
    for (std::uint64_t m = 1; m < limit; ++m) {
        for (auto g : generators) {
            if (g <= m && impl->table[m - g]) {
                impl->table[m] = true;
                break;
            }
        }
    }
    impl->text = "M<";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) impl->text += ',';
        impl->text += std::to_string(generators[i]);
    }
    impl->text += '>';
    impl_ = std::move(impl);
}

NumericalMonoid NumericalMonoid::parse(std::string_view raw) {
    const std::string text = strip(raw);
    require(text.starts_with("M<") && text.ends_with(">"), ErrorCode::Parse, "expected M<g1,g2,...>, got '" + text + "'");
    std::vector<std::uint64_t> gens;
    for (const auto& tok : split_top_level(text.substr(2, text.size() - 3), ',')) gens.push_back(parse_u64(tok));
    return NumericalMonoid(std::move(gens));
}

const std::vector<std::uint64_t>& NumericalMonoid::generators() const { return impl_->generators; }

bool NumericalMonoid::contains(std::int64_t m) const {
    require(m >= 0, ErrorCode::InvalidArgument, "monoid membership is defined for m >= 0");
    return impl_->member(static_cast<std::uint64_t>(m));
}

bool NumericalMonoid::is_atom(std::uint64_t m) const {
    if (m == 0 || !impl_->member(m)) return false;
    for (std::uint64_t a = 1; a <= m / 2; ++a) {
        if (impl_->member(a) && impl_->member(m - a)) return false;
    }
    return true;
}

std::vector<std::uint64_t> NumericalMonoid::members_up_to(std::uint64_t bound) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m <= bound; ++m) {
        if (impl_->member(m)) out.push_back(m);
    }
    return out;
}

std::string NumericalMonoid::to_string() const { return impl_->text; }

// ---------------------------------------------------------------------------

MonoidElement::MonoidElement(Ring ring, NumericalMonoid monoid, Terms terms)
    : ring_(ring), monoid_(std::move(monoid)), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [e, c] : terms_) {
        if (!(c.ring() == ring_)) fail(ErrorCode::RingMismatch, "coefficient not in " + ring_.to_string());
        if (!monoid_.contains(static_cast<std::int64_t>(e))) {
            fail(ErrorCode::NotMember, "exponent " + std::to_string(e) + " is not in " + monoid_.to_string());
        }
    }
}

MonoidElement MonoidElement::monomial(const RingElement& c, NumericalMonoid monoid, std::uint64_t exponent) {
    return MonoidElement(c.ring(), std::move(monoid), Terms{{exponent, c}});
}

MonoidElement MonoidElement::parse(std::string_view raw) {
    const auto parts = split_top_level(strip(raw), ':');
    require(parts.size() == 3, ErrorCode::Parse, "expected RING:M<...>:{e:c,...}, got '" + std::string(raw) + "'");
    const Ring ring = Ring::parse(parts[0]);
    NumericalMonoid monoid = NumericalMonoid::parse(parts[1]);
    const std::string inner = strip(unwrap(parts[2], '{', '}'));
    Terms terms;
    if (!inner.empty()) {
        for (const auto& item : split_top_level(inner, ',')) {
            const auto kv = split_top_level(item, ':');
            require(kv.size() == 2, ErrorCode::Parse, "expected exponent:coefficient, got '" + item + "'");
            const std::uint64_t e = parse_u64(kv[0]);
            const RingElement c = RingElement::parse(ring, kv[1]);
            auto [it, inserted] = terms.emplace(e, c);
            if (!inserted) it->second += c;
        }
    }
    return MonoidElement(ring, std::move(monoid), std::move(terms));
}

RingElement MonoidElement::coeff(std::uint64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

std::uint64_t MonoidElement::min_exponent() const {
    require(!is_zero(), ErrorCode::InvalidArgument, "zero has no exponents");
    return terms_.begin()->first;
}

std::uint64_t MonoidElement::max_exponent() const {
    require(!is_zero(), ErrorCode::InvalidArgument, "zero has no exponents");
    return terms_.rbegin()->first;
}

std::string MonoidElement::to_string() const {
    std::string out = ring_.short_name() + ":" + monoid_.to_string() + ":{";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(e) + ":" + c.to_string();
    }
    return out + "}";
}

namespace {
void check_compatible(const MonoidElement& a, const MonoidElement& b) {
    if (!(a.ring() == b.ring()) || !(a.monoid() == b.monoid())) {
        fail(ErrorCode::RingMismatch, "monoid domain mismatch: " + a.to_string() + " vs " + b.to_string());
    }
}
}  // namespace

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
    check_compatible(a, b);
    MonoidElement::Terms out = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = out.emplace(e, c);
        if (!inserted) it->second += c;
    }
    return MonoidElement(a.ring_, a.monoid_, std::move(out));
}

MonoidElement operator-(const MonoidElement& a) {
    MonoidElement::Terms out;
    for (const auto& [e, c] : a.terms_) out.emplace(e, -c);
    return MonoidElement(a.ring_, a.monoid_, std::move(out));
}

MonoidElement operator-(const MonoidElement& a, const MonoidElement& b) { return a + (-b); }

MonoidElement operator*(const MonoidElement& a, const MonoidElement& b) {
    check_compatible(a, b);
    MonoidElement::Terms out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            const RingElement c = ca * cb;
            auto [it, inserted] = out.emplace(ea + eb, c);
            if (!inserted) it->second += c;
        }
    }
    return MonoidElement(a.ring_, a.monoid_, std::move(out));
}

bool is_unit(const MonoidElement& f) {
    if (f.is_zero()) return false;
    const auto& terms = f.terms();
    auto zero_term = terms.find(0);
    if (zero_term == terms.end() || !zero_term->second.is_unit()) return false;
    return std::all_of(std::next(terms.begin()), terms.end(), [](const auto& kv) { return kv.second.is_nilpotent(); });
}

bool is_nilpotent(const MonoidElement& f) {
    return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& kv) { return kv.second.is_nilpotent(); });
}

bool is_prime_element(const RingElement& p) {
    switch (p.ring().kind()) {
        case RingKind::Integers: return is_prime(BigInt(abs(p.integer())));
        case RingKind::IntegersMod: {
            if (p.is_zero()) return false;
            return is_prime(gcd(p.code(), p.ring().characteristic()));
        }
        default: return false;
    }
}

CertifiedIrreducible build_irreducible_from_primes(Ring ring, const NumericalMonoid& monoid,
                                                   const std::vector<BigInt>& primes,
                                                   const std::vector<std::uint64_t>& exponents) {
    require(!ring.is_field(), ErrorCode::Unsupported,
            ring.to_string() + " is a field and has no prime elements; the construction needs B with primes");
    require(!primes.empty(), ErrorCode::Precondition, "need r >= 2: at least one prime p_1");
    require(exponents.size() == primes.size() + 1, ErrorCode::Precondition,
            "need exactly r exponents m_1..m_r for r-1 primes");
    std::vector<std::string> cert;
    const std::size_t r = exponents.size();
    for (std::size_t i = 0; i < r; ++i) {
        require(monoid.contains(static_cast<std::int64_t>(exponents[i])), ErrorCode::Precondition,
                "m_" + std::to_string(i + 1) + "=" + std::to_string(exponents[i]) + " is not in " + monoid.to_string());
    }
    const std::set<std::uint64_t> distinct(exponents.begin(), exponents.end());
    require(distinct.size() == r, ErrorCode::Precondition, "exponents m_1..m_r must be distinct");
    const std::uint64_t m1 = exponents[0];
    require(monoid.is_atom(m1), ErrorCode::Precondition,
            "m_1=" + std::to_string(m1) + " is not an atom of " + monoid.to_string());
    cert.push_back("m_1=" + std::to_string(m1) + " is an atom of " + monoid.to_string());
    for (std::size_t i = 1; i < r; ++i) {
        const std::uint64_t mi = exponents[i];
        const bool in_shift = mi >= m1 && monoid.contains(static_cast<std::int64_t>(mi - m1));
        require(!in_shift, ErrorCode::Precondition,
                "m_" + std::to_string(i + 1) + "=" + std::to_string(mi) + " lies in m_1+" + monoid.to_string());
        cert.push_back("m_" + std::to_string(i + 1) + "=" + std::to_string(mi) + " is not in m_1+M");
    }
    MonoidElement::Terms terms;
    terms.emplace(m1, -RingElement::one(ring));
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const RingElement p = RingElement::from_integer(ring, primes[i]);
        require(is_prime_element(p), ErrorCode::Precondition,
                "p_" + std::to_string(i + 1) + "=" + to_string(primes[i]) + " is not prime in " + ring.to_string());
        cert.push_back("p_" + std::to_string(i + 1) + "=" + p.to_string() + " is prime in " + ring.to_string());
        const bool last = (i + 1 == primes.size());
        terms.emplace(exponents[i + 1], last ? p : -p);
    }
    return {MonoidElement(ring, monoid, std::move(terms)), std::move(cert)};
}

namespace {

std::optional<RingElement> exact_divide(const RingElement& num, const RingElement& den) {
    if (num.ring().kind() == RingKind::Integers) {
        const BigInt& n = num.integer();
        const BigInt& d = den.integer();
        if (n % d != 0) return std::nullopt;
        return RingElement::from_integer(num.ring(), n / d);
    }
    return num * den.inverse();
}

// Bottom-up search for f = g h over a domain. Positions are offsets from the
// lowest exponents: g has exponents t..t+lg, h has s..s+lh, and the product
// coefficient at fmin+i involves g[0..i] and h[0..i].
class DomainSearch {
   public:
    DomainSearch(const MonoidElement& f, std::uint64_t exponent_bound, std::uint64_t coeff_bound)
        : f_(f), ring_(f.ring()), bound_(exponent_bound), coeff_bound_(coeff_bound) {
        if (ring_.kind() == RingKind::Integers) {
            for (std::int64_t v = -static_cast<std::int64_t>(coeff_bound); v <= static_cast<std::int64_t>(coeff_bound); ++v) {
                box_.push_back(RingElement::from_integer(ring_, v));
            }
        } else {
            box_ = elements(ring_);
        }
    }

    bool find() {
        const std::uint64_t fmin = f_.min_exponent(), fmax = f_.max_exponent();
        const auto& M = f_.monoid();
        for (std::uint64_t t = 0; t <= std::min(fmin, bound_); ++t) {
            if (!M.contains(static_cast<std::int64_t>(t)) || !M.contains(static_cast<std::int64_t>(fmin - t))) continue;
            if (fmin - t > bound_) continue;
            for (std::uint64_t top = t; top <= std::min(fmax, bound_); ++top) {
                if (!M.contains(static_cast<std::int64_t>(top)) || !M.contains(static_cast<std::int64_t>(fmax - top))) continue;
                if (fmax - top > bound_ || fmax - top < fmin - t) continue;
                t_ = t;
                s_ = fmin - t;
                lg_ = top - t;
                lh_ = (fmax - top) - s_;
                span_ = fmax - fmin;
                g_.clear();
                h_.clear();
                if (step(0)) return true;
            }
        }
        return false;
    }

   private:
    bool in_box(const RingElement& c) const {
        if (ring_.kind() != RingKind::Integers) return true;
        return abs(c.integer()) <= coeff_bound_;
    }

    bool allowed_g(std::size_t i) const { return f_.monoid().contains(static_cast<std::int64_t>(t_ + i)); }
    bool allowed_h(std::size_t i) const { return f_.monoid().contains(static_cast<std::int64_t>(s_ + i)); }

    // Product coefficient at fmin+i without the g[0]*h[i] term.
    RingElement partial(std::size_t i) const {
        RingElement acc = RingElement::zero(ring_);
        for (std::size_t j = 1; j <= i && j < g_.size(); ++j) {
            if (i - j < h_.size()) acc += g_[j] * h_[i - j];
        }
        return acc;
    }

    // Solve for the h coefficient at offset i once g[0..min(i, lg)] is fixed.
    bool solve_h_coeff(std::size_t i) {
        const RingElement target = f_.coeff(f_.min_exponent() + i) - partial(i);
        if (i <= lh_) {
            auto hi = exact_divide(target, g_[0]);
            if (!hi || !in_box(*hi)) return false;
            if (!hi->is_zero() && !allowed_h(i)) return false;
            if ((i == 0 || i == lh_) && hi->is_zero()) return false;
            h_.push_back(*hi);
            return true;
        }
        return target.is_zero();
    }

    bool step(std::size_t i) {
        if (i > span_) return accept();
        if (i <= lg_) {
            const bool edge = (i == 0 || i == lg_);
            for (const auto& c : box_) {
                if (edge && c.is_zero()) continue;
                if (!c.is_zero() && !allowed_g(i)) continue;
                g_.push_back(c);
                const std::size_t h_size = h_.size();
                if (solve_h_coeff(i) && step(i + 1)) return true;
                h_.resize(h_size, RingElement::zero(ring_));
                g_.pop_back();
            }
            return false;
        }
        const std::size_t h_size = h_.size();
        if (solve_h_coeff(i) && step(i + 1)) return true;
        h_.resize(h_size, RingElement::zero(ring_));
        return false;
    }

    bool accept() const {
        const bool g_unit = (t_ == 0 && lg_ == 0 && g_[0].is_unit());
        const bool h_unit = (s_ == 0 && lh_ == 0 && h_[0].is_unit());
        return !g_unit && !h_unit;
    }

    const MonoidElement& f_;
    Ring ring_;
    std::uint64_t bound_;
    std::uint64_t coeff_bound_;
    std::vector<RingElement> box_;
    std::uint64_t t_ = 0, s_ = 0, lg_ = 0, lh_ = 0, span_ = 0;
    std::vector<RingElement> g_, h_;
};

std::vector<MonoidElement> all_candidates(const MonoidElement& f, std::uint64_t exponent_bound) {
    const auto exps = f.monoid().members_up_to(exponent_bound);
    const auto elems = elements(f.ring());
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        require(count <= kMaxPairCandidates / elems.size(), ErrorCode::CeilingExceeded,
                "pairwise search space too large");
        count *= elems.size();
    }
    std::vector<MonoidElement> out;
    for (std::uint64_t code = 0; code < count; ++code) {
        MonoidElement::Terms terms;
        std::uint64_t rest = code;
        for (auto e : exps) {
            terms.emplace(e, elems[rest % elems.size()]);
            rest /= elems.size();
        }
        out.emplace_back(f.ring(), f.monoid(), std::move(terms));
    }
    return out;
}

}  // namespace

bool irreducible_oracle(const MonoidElement& f, std::uint64_t exponent_bound, std::uint64_t coeff_bound) {
    require(!f.is_zero(), ErrorCode::Precondition, "irreducibility is undefined for zero");
    require(!is_unit(f), ErrorCode::Precondition, "irreducibility is undefined for units");
    require(exponent_bound <= kMaxExponentBound, ErrorCode::CeilingExceeded, "exponent bound above 64");
    if (f.ring().kind() == RingKind::Integers) {
        require(coeff_bound >= 1 && coeff_bound <= kMaxCoeffBound, ErrorCode::CeilingExceeded,
                "coefficient bound must be in [1, 1000]");
    }
    if (f.ring().is_domain()) {
        if (f.ring().is_finite()) {
            require(*f.ring().size() <= 256, ErrorCode::CeilingExceeded, "coefficient ring too large to enumerate");
        }
        return !DomainSearch(f, exponent_bound, coeff_bound).find();
    }
    const auto candidates = all_candidates(f, exponent_bound);
    for (const auto& g : candidates) {
        if (g.is_zero() || is_unit(g)) continue;
        for (const auto& h : candidates) {
            if (h.is_zero() || is_unit(h)) continue;
            if (g * h == f) return false;
        }
    }
    return true;
}

}  // namespace polycomp
