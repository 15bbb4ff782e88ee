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

#include "polycomp/composite.hpp"

#include <algorithm>

#include "polycomp/error.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

namespace {
constexpr std::uint64_t kOracleMaxField = 9;
constexpr std::ptrdiff_t kOracleMaxDegree = 4;
constexpr std::uint64_t kMaxAdmissibleTable = std::uint64_t{1} << 16;
}  // namespace

struct Tower::Impl {
    std::vector<Ring> levels;
    Ring top;
    std::vector<FieldEmbedding> into_top;
    std::vector<std::vector<RingElement>> admissible;  // per level, then B last
    bool fields_mode = false;
};

Tower::Tower(std::vector<Ring> levels, Ring top) {
    require(!levels.empty(), ErrorCode::InvalidArgument, "a tower needs at least one level below the top");
    auto impl = std::make_shared<Impl>(Impl{levels, top, {}, {}, false});
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) (void)FieldEmbedding(levels[i], levels[i + 1]);
    for (Ring r : levels) impl->into_top.emplace_back(r, top);
    impl->fields_mode = top.is_field() && std::all_of(levels.begin(), levels.end(), [](Ring r) { return r.is_field(); });
    if (top.is_finite() && *top.size() <= kMaxAdmissibleTable) {
        const auto all = elements(top);
        for (const auto& emb : impl->into_top) {
            std::vector<RingElement> allowed;
            for (const auto& b : all) {
                if (emb.contains(b)) allowed.push_back(b);
            }
            impl->admissible.push_back(std::move(allowed));
        }
        impl->admissible.push_back(all);
    }
    impl_ = std::move(impl);
}

Tower Tower::parse(std::string_view text) {
    std::vector<Ring> rings;
    std::string cur;
    for (char c : strip(text)) {
        if (c == '<') {
            rings.push_back(Ring::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    rings.push_back(Ring::parse(cur));
    require(rings.size() >= 2, ErrorCode::Parse, "tower needs the form A0<...<B");
    const Ring top = rings.back();
    rings.pop_back();
    return Tower(std::move(rings), top);
}

const std::vector<Ring>& Tower::levels() const { return impl_->levels; }
Ring Tower::top() const { return impl_->top; }
bool Tower::fields_mode() const { return impl_->fields_mode; }

Ring Tower::level_for(std::size_t i) const { return i < n() ? impl_->levels[i] : impl_->top; }

std::optional<RingElement> Tower::preimage(std::size_t i, const RingElement& b) const {
    if (i >= n()) return b;
    return impl_->into_top[i].preimage(b);
}

RingElement Tower::embed(std::size_t i, const RingElement& a) const {
    if (i >= n()) return a;
    return impl_->into_top[i].apply(a);
}

const std::vector<RingElement>& Tower::admissible(std::size_t i) const {
    require(!impl_->admissible.empty(), ErrorCode::Unsupported, "tower is not small enough to enumerate");
    return impl_->admissible[std::min(i, n())];
}

std::string Tower::to_string() const {
    std::string out;
    for (Ring r : impl_->levels) out += r.short_name() + "<";
    return out + impl_->top.short_name();
}

bool operator==(const Tower& a, const Tower& b) {
    return a.impl_ == b.impl_ || (a.impl_->levels == b.impl_->levels && a.impl_->top == b.impl_->top);
}

bool contains(const Tower& tower, const Polynomial& f) {
    if (!(f.ring() == tower.top())) return false;
    const std::size_t limit = std::min<std::size_t>(tower.n(), f.coefficients().size());
    for (std::size_t i = 0; i < limit; ++i) {
        if (!tower.admits(i, f.coefficients()[i])) return false;
    }
    return true;
}

CompositeElement::CompositeElement(Tower tower, Polynomial f) : tower_(std::move(tower)), poly_(std::move(f)) {
    if (!(poly_.ring() == tower_.top())) {
        fail(ErrorCode::RingMismatch, "polynomial over " + poly_.ring().to_string() + " but tower top is " +
                                          tower_.top().to_string());
    }
    if (!contains(tower_, poly_)) {
        fail(ErrorCode::NotMember, poly_.coefficients_string() + " is not in " + tower_.to_string());
    }
}

CompositeElement CompositeElement::parse(std::string_view raw) {
    const std::string text = strip(raw);
    const auto bracket = text.find('[');
    if (bracket == std::string::npos || bracket == 0 || text[bracket - 1] != ':') {
        fail(ErrorCode::Parse, "expected TOWER:[c0,c1,...], got '" + text + "'");
    }
    Tower tower = Tower::parse(text.substr(0, bracket - 1));
    Polynomial f = Polynomial::parse_coefficients(tower.top(), text.substr(bracket));
    return CompositeElement(std::move(tower), std::move(f));
}

std::string CompositeElement::to_string() const { return tower_.to_string() + ":" + poly_.coefficients_string(); }

namespace {
void check_same_tower(const CompositeElement& a, const CompositeElement& b) {
    if (!(a.tower() == b.tower())) fail(ErrorCode::RingMismatch, "elements of different composites");
}
}  // namespace

CompositeElement operator+(const CompositeElement& a, const CompositeElement& b) {
    check_same_tower(a, b);
    return CompositeElement(a.tower_, a.poly_ + b.poly_);
}

CompositeElement operator-(const CompositeElement& a, const CompositeElement& b) {
    check_same_tower(a, b);
    return CompositeElement(a.tower_, a.poly_ - b.poly_);
}

CompositeElement operator*(const CompositeElement& a, const CompositeElement& b) {
    check_same_tower(a, b);
    return CompositeElement(a.tower_, a.poly_ * b.poly_);
}

bool is_unit(const CompositeElement& f) {
    if (f.is_zero()) return false;
    const auto a0 = f.tower().preimage(0, f.poly().constant_term());
    if (!a0 || !a0->is_unit()) return false;
    const auto coeffs = f.poly().coefficients();
    return std::all_of(coeffs.begin() + 1, coeffs.end(), [](const RingElement& c) { return c.is_nilpotent(); });
}

bool is_nilpotent(const CompositeElement& f) { return is_nilpotent(f.poly()); }

namespace {

void require_fields(const CompositeElement& f, const char* op) {
    require(f.tower().fields_mode(), ErrorCode::Unsupported, std::string(op) + " needs a tower of fields");
}

void require_nonzero_nonunit(const CompositeElement& f, const char* op) {
    require(!f.is_zero(), ErrorCode::Precondition, std::string(op) + " is undefined for zero");
    require(!is_unit(f), ErrorCode::Precondition, std::string(op) + " is undefined for units");
}

void require_oracle_size(const CompositeElement& f) {
    require(f.tower().top().is_finite() && *f.tower().top().size() <= kOracleMaxField, ErrorCode::CeilingExceeded,
            "exhaustive search needs |B| <= 9");
    require(f.degree() <= kOracleMaxDegree, ErrorCode::CeilingExceeded, "exhaustive search needs degree <= 4");
}

// Every monic divisor of f in B[X] with 1 <= degree < deg f, built from the
// irreducible factorization.
std::vector<Polynomial> proper_monic_divisors(const Polynomial& f) {
    const Factorization fac = factor(f);
    std::vector<Polynomial> out{Polynomial::constant(RingElement::one(f.ring()))};
    for (const auto& [g, m] : fac.factors) {
        std::vector<Polynomial> next;
        for (const auto& d : out) {
            Polynomial power = d;
            for (unsigned e = 0; e <= m; ++e) {
                next.push_back(power);
                power = power * g;
            }
        }
        out = std::move(next);
    }
    std::erase_if(out, [&](const Polynomial& d) { return d.degree() < 1 || d.degree() >= f.degree(); });
    std::sort(out.begin(), out.end());
    return out;
}

// A factorization f = g h with g, h nonunits of T_n, if any exists. Over a
// field tower every such pair is c*d, c^{-1}*(f/d) for a monic divisor d of f
// in B[X] and a nonzero scalar c.
std::optional<std::pair<CompositeElement, CompositeElement>> find_split(const CompositeElement& f) {
    const Tower& tower = f.tower();
    const auto scalars = elements(tower.top());
    for (const auto& d : proper_monic_divisors(f.poly())) {
        const Polynomial h = *exact_quotient(f.poly(), d);
        for (const auto& c : scalars) {
            if (c.is_zero()) continue;
            Polynomial g1 = d.scaled(c);
            Polynomial h1 = h.scaled(c.inverse());
            if (contains(tower, g1) && contains(tower, h1)) {
                return std::make_pair(CompositeElement(tower, std::move(g1)), CompositeElement(tower, std::move(h1)));
            }
        }
    }
    return std::nullopt;
}

bool has_zero_constant(const CompositeElement& f) { return f.poly().constant_term().is_zero(); }

}  // namespace

bool is_irreducible(const CompositeElement& f) {
    require_fields(f, "irreducibility test");
    require_nonzero_nonunit(f, "irreducibility test");
    if (f.tower().n() == 1) return is_irreducible(f.poly());
    return !find_split(f).has_value();
}

std::vector<CompositeElement> elements_of_degree(const Tower& tower, std::size_t degree) {
    std::vector<const std::vector<RingElement>*> choices;
    for (std::size_t i = 0; i <= degree; ++i) choices.push_back(&tower.admissible(i));
    std::vector<std::size_t> idx(degree + 1, 0);
    std::vector<CompositeElement> out;
    // Leading coefficient must be nonzero; the zero element has code 0 and sits first.
    if (choices[degree]->size() < 2) return out;
    idx[degree] = 1;
    while (true) {
        std::vector<RingElement> coeffs;
        coeffs.reserve(degree + 1);
        for (std::size_t i = 0; i <= degree; ++i) coeffs.push_back((*choices[i])[idx[i]]);
        out.emplace_back(tower, Polynomial(tower.top(), std::move(coeffs)));
        std::size_t pos = 0;
        while (pos <= degree) {
            if (++idx[pos] < choices[pos]->size()) break;
            idx[pos] = (pos == degree) ? 1 : 0;
            ++pos;
        }
        if (pos > degree) break;
    }
    return out;
}

bool factor_search_oracle(const CompositeElement& f) {
    require_fields(f, "factor search");
    require_nonzero_nonunit(f, "factor search");
    require_oracle_size(f);
    const auto deg = static_cast<std::size_t>(f.degree());
    const RingElement f_lead = f.poly().leading();
    const RingElement f_const = f.poly().constant_term();
    for (std::size_t dg = 1; 2 * dg <= deg; ++dg) {
        const auto gs = elements_of_degree(f.tower(), dg);
        const auto hs = elements_of_degree(f.tower(), deg - dg);
        for (const auto& g : gs) {
            for (const auto& h : hs) {
                // Cheap necessary conditions before the full product.
                if (!(g.poly().leading() * h.poly().leading() == f_lead)) continue;
                if (!(g.poly().constant_term() * h.poly().constant_term() == f_const)) continue;
                if (g.poly() * h.poly() == f.poly()) return true;
            }
        }
    }
    return false;
}

std::vector<CompositeElement> atomize(const CompositeElement& f) {
    require_fields(f, "atomization");
    require_nonzero_nonunit(f, "atomization");
    const Tower& tower = f.tower();
    const Ring B = tower.top();

    if (tower.n() >= 2) {
        std::vector<CompositeElement> pending{f}, atoms;
        while (!pending.empty()) {
            CompositeElement g = pending.back();
            pending.pop_back();
            if (auto split = find_split(g)) {
                pending.push_back(split->second);
                pending.push_back(split->first);
            } else {
                atoms.push_back(std::move(g));
            }
        }
        std::stable_partition(atoms.begin(), atoms.end(), has_zero_constant);
        return atoms;
    }

    const auto coeffs = f.poly().coefficients();
    std::size_t r = 0;
    while (coeffs[r].is_zero()) ++r;
    const Polynomial u(B, std::vector<RingElement>(coeffs.begin() + static_cast<std::ptrdiff_t>(r), coeffs.end()));
    const RingElement a = u.constant_term();

    std::vector<Polynomial> unit_constant;
    if (u.degree() >= 1) {
        for (const auto& [p, m] : factor(u).factors) {
            const Polynomial q = p.scaled(p.constant_term().inverse());
            for (unsigned i = 0; i < m; ++i) unit_constant.push_back(q);
        }
        std::sort(unit_constant.begin(), unit_constant.end());
    }

    std::vector<CompositeElement> atoms;
    const Polynomial x = Polynomial::x(B);
    for (std::size_t i = 0; i < r; ++i) {
        atoms.emplace_back(tower, i == 0 ? x.scaled(a) : x);
    }
    for (std::size_t i = 0; i < unit_constant.size(); ++i) {
        atoms.emplace_back(tower, (r == 0 && i == 0) ? unit_constant[i].scaled(a) : unit_constant[i]);
    }
    return atoms;
}

RingElement quotient_eval(const CompositeElement& f) {
    auto a0 = f.tower().preimage(0, f.poly().constant_term());
    // Membership was checked at construction.
    return *a0;
}

DivisorChain divisor_chain(const CompositeElement& f, std::size_t max_steps) {
    require_fields(f, "divisor chain");
    require_nonzero_nonunit(f, "divisor chain");
    require_oracle_size(f);
    require(max_steps >= 1, ErrorCode::InvalidArgument, "max_steps must be >= 1");
    DivisorChain out{{f}, false};
    while (true) {
        const CompositeElement& cur = out.chain.back();
        std::optional<CompositeElement> next;
        for (std::ptrdiff_t d = cur.degree() - 1; d >= 1 && !next; --d) {
            for (const auto& g : elements_of_degree(cur.tower(), static_cast<std::size_t>(d))) {
                auto h = exact_quotient(cur.poly(), g.poly());
                if (h && contains(cur.tower(), *h)) {
                    next = g;
                    break;
                }
            }
        }
        if (!next) {
            out.terminated = true;
            break;
        }
        if (out.chain.size() >= max_steps) break;
        out.chain.push_back(std::move(*next));
    }
    return out;
}

}  // namespace polycomp
