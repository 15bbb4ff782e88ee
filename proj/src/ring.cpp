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

#include "polycomp/ring.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "polycomp/error.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

namespace {

constexpr std::uint64_t kMaxFiniteRingSize = std::uint64_t{1} << 32;
constexpr std::uint64_t kMaxTableSize = 256;
constexpr std::uint64_t kMaxTrialDivisors = std::uint64_t{1} << 24;

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Coeffs poly_rem_monic(Coeffs a, const Coeffs& b, std::uint64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - mul_mod(lead, b[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

bool is_irreducible_over_prime_field(const Coeffs& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k <= 1) return k == 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            if (count > kMaxTrialDivisors / p) {
                fail(ErrorCode::CeilingExceeded, "modulus irreducibility check exceeds trial-division ceiling");
            }
            count *= p;
        }
        Coeffs g(d + 1);
        g[d] = 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            if (poly_rem_monic(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q >= kMaxFiniteRingSize / p + 1) fail(ErrorCode::CeilingExceeded, "finite ring too large");
        q *= p;
    }
    if (q >= kMaxFiniteRingSize) fail(ErrorCode::CeilingExceeded, "finite ring too large");
    return q;
}

}  // namespace

class RingDescriptor {
   public:
    RingKind kind = RingKind::Integers;
    std::uint64_t n = 0;  // characteristic / modulus
    unsigned k = 1;
    std::uint64_t q = 0;  // size, 0 for Z
    Coeffs modulus{0, 1};
    bool default_modulus = true;
    unsigned nil_bound = 1;
    std::string text;
    std::string short_text;
    std::vector<std::uint32_t> add_tab, mul_tab, inv_tab;

    Coeffs decode(std::uint64_t code) const {
        Coeffs c(k);
        for (unsigned i = 0; i < k; ++i) {
            c[i] = code % n;
            code /= n;
        }
        return c;
    }

    std::uint64_t encode(const Coeffs& c) const {
        std::uint64_t code = 0;
        for (std::size_t i = c.size(); i-- > 0;) code = code * n + c[i];
        return code;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (kind != RingKind::ExtensionField) return (a + b) % n;
        if (!add_tab.empty()) return add_tab[a * q + b];
        std::uint64_t out = 0, scale = 1;
        for (unsigned i = 0; i < k; ++i) {
            out += ((a % n + b % n) % n) * scale;
            a /= n;
            b /= n;
            scale *= n;
        }
        return out;
    }

    std::uint64_t neg(std::uint64_t a) const {
        if (kind != RingKind::ExtensionField) return (n - a) % n;
        std::uint64_t out = 0, scale = 1;
        for (unsigned i = 0; i < k; ++i) {
            out += ((n - a % n) % n) * scale;
            a /= n;
            scale *= n;
        }
        return out;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (kind != RingKind::ExtensionField) return mul_mod(a, b, n);
        if (!mul_tab.empty()) return mul_tab[a * q + b];
        const Coeffs x = decode(a), y = decode(b);
        Coeffs prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
            for (unsigned j = 0; j < k; ++j) {
                prod[i + j] = (prod[i + j] + mul_mod(x[i], y[j], n)) % n;
            }
        }
        Coeffs r = poly_rem_monic(std::move(prod), modulus, n);
        r.resize(k, 0);
        return encode(r);
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (kind != RingKind::ExtensionField) return inverse_mod(a, n);
        if (!inv_tab.empty()) return inv_tab[a];
        std::uint64_t result = 1, base = a, e = q - 2;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    void build_tables() {
        if (kind != RingKind::ExtensionField || q > kMaxTableSize) return;
        std::vector<std::uint32_t> at(q * q), mt(q * q), it(q, 0);
        for (std::uint64_t a = 0; a < q; ++a) {
            for (std::uint64_t b = 0; b < q; ++b) {
                at[a * q + b] = static_cast<std::uint32_t>(add(a, b));
                mt[a * q + b] = static_cast<std::uint32_t>(mul(a, b));
            }
        }
        for (std::uint64_t a = 1; a < q; ++a) {
            for (std::uint64_t b = 1; b < q; ++b) {
                if (mt[a * q + b] == 1) it[a] = static_cast<std::uint32_t>(b);
            }
        }
        add_tab = std::move(at);
        mul_tab = std::move(mt);
        inv_tab = std::move(it);
    }
};

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, std::unique_ptr<RingDescriptor>>& registry() {
    static std::map<std::string, std::unique_ptr<RingDescriptor>> r;
    return r;
}

const RingDescriptor* intern(std::unique_ptr<RingDescriptor> d) {
    std::lock_guard lock(registry_mutex());
    auto& reg = registry();
    auto it = reg.find(d->text);
    if (it != reg.end()) return it->second.get();
    const RingDescriptor* raw = d.get();
    reg.emplace(d->text, std::move(d));
    return raw;
}

Coeffs default_modulus(std::uint64_t p, unsigned k) {
    const std::uint64_t count = checked_pow(p, k);
    Coeffs f(k + 1, 0);
    f[k] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = c % p;
            c /= p;
        }
        if (is_irreducible_over_prime_field(f, p)) return f;
    }
    fail(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace

std::string format_poly_in(std::span<const std::uint64_t> coeffs, char var) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const std::uint64_t c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += var;
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Ring Ring::integers() {
    auto d = std::make_unique<RingDescriptor>();
    d->kind = RingKind::Integers;
    d->text = d->short_text = "Z";
    return Ring(intern(std::move(d)));
}

Ring Ring::integers_mod(std::uint64_t n) {
    require(n >= 2, ErrorCode::InvalidArgument, "Z/n requires n >= 2");
    require(n < kMaxFiniteRingSize, ErrorCode::CeilingExceeded, "Z/n modulus must be below 2^32");
    auto d = std::make_unique<RingDescriptor>();
    d->kind = RingKind::IntegersMod;
    d->n = d->q = n;
    unsigned bound = 1;
    for (auto [prime, e] : factor_trial(n)) bound = std::max(bound, e);
    d->nil_bound = bound;
    d->text = d->short_text = "Z/" + std::to_string(n);
    return Ring(intern(std::move(d)));
}

Ring Ring::prime_field(std::uint64_t p) {
    require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    require(p < kMaxFiniteRingSize, ErrorCode::CeilingExceeded, "prime field characteristic must be below 2^32");
    auto d = std::make_unique<RingDescriptor>();
    d->kind = RingKind::PrimeField;
    d->n = d->q = p;
    d->text = d->short_text = "F" + std::to_string(p);
    return Ring(intern(std::move(d)));
}

Ring Ring::extension_field(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    require(modulus.size() >= 2, ErrorCode::InvalidArgument, "extension modulus must have degree >= 1");
    require(modulus.back() == 1, ErrorCode::InvalidArgument, "extension modulus must be monic");
    for (auto c : modulus) require(c < p, ErrorCode::InvalidArgument, "modulus coefficient out of range");
    const unsigned k = static_cast<unsigned>(modulus.size() - 1);
    const std::uint64_t q = checked_pow(p, k);
    require(is_irreducible_over_prime_field(modulus, p), ErrorCode::InvalidArgument,
            "modulus " + format_poly_in(modulus, 't') + " is reducible over F" + std::to_string(p));
    auto d = std::make_unique<RingDescriptor>();
    d->kind = RingKind::ExtensionField;
    d->n = p;
    d->k = k;
    d->q = q;
    d->default_modulus = (modulus == default_modulus(p, k));
    d->modulus = std::move(modulus);
    d->text = "F(" + std::to_string(q) + ")=F" + std::to_string(p) + "[t]/(" + format_poly_in(d->modulus, 't') + ")";
    d->short_text = d->default_modulus ? "F" + std::to_string(q) : d->text;
    {
        std::lock_guard lock(registry_mutex());
        auto it = registry().find(d->text);
        if (it != registry().end()) return Ring(it->second.get());
    }
    d->build_tables();
    return Ring(intern(std::move(d)));
}

Ring Ring::galois_field(std::uint64_t q) {
    require(q >= 2, ErrorCode::InvalidArgument, "field size must be >= 2");
    auto factors = factor_trial(q);
    require(factors.size() == 1, ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    auto [p, k] = factors.front();
    if (k == 1) return prime_field(p);
    return extension_field(p, default_modulus(p, k));
}

Ring Ring::parse(std::string_view raw) {
    const std::string text = strip(raw);
    if (text == "Z") return integers();
    if (text.starts_with("Z/")) return integers_mod(parse_u64(text.substr(2)));
    if (text.starts_with("F(")) {
        const auto close = text.find(")=F");
        const auto bracket = text.find("[t]/(");
        if (close == std::string::npos || bracket == std::string::npos || text.back() != ')') {
            fail(ErrorCode::Parse, "bad field descriptor '" + text + "'");
        }
        const std::uint64_t q = parse_u64(text.substr(2, close - 2));
        const std::uint64_t p = parse_u64(text.substr(close + 3, bracket - close - 3));
        require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        const auto poly = parse_poly_in(text.substr(bracket + 5, text.size() - bracket - 6), 't');
        Coeffs modulus;
        for (const auto& c : poly) modulus.push_back(static_cast<std::uint64_t>(mod_floor(c, BigInt(p))));
        trim(modulus);
        Ring r = extension_field(p, std::move(modulus));
        require(r.size() == q, ErrorCode::Parse, "field size does not match modulus degree in '" + text + "'");
        return r;
    }
    if (text.starts_with("F") && text.size() > 1) return galois_field(parse_u64(text.substr(1)));
    fail(ErrorCode::Parse, "unknown ring '" + text + "'");
}

RingKind Ring::kind() const { return d_->kind; }
std::uint64_t Ring::characteristic() const { return d_->n; }
unsigned Ring::degree() const { return d_->k; }
std::optional<std::uint64_t> Ring::size() const {
    if (d_->kind == RingKind::Integers) return std::nullopt;
    return d_->q;
}
const std::vector<std::uint64_t>& Ring::modulus_poly() const { return d_->modulus; }
bool Ring::has_default_modulus() const { return d_->default_modulus; }
bool Ring::is_field() const { return d_->kind == RingKind::PrimeField || d_->kind == RingKind::ExtensionField; }
bool Ring::is_finite() const { return d_->kind != RingKind::Integers; }
bool Ring::is_domain() const {
    return d_->kind != RingKind::IntegersMod || is_prime(d_->n);
}
unsigned Ring::nilpotency_bound() const { return d_->nil_bound; }
std::string Ring::to_string() const { return d_->text; }
std::string Ring::short_name() const { return d_->short_text; }

// ---------------------------------------------------------------------------

RingElement RingElement::zero(Ring ring) { return from_integer(ring, 0); }
RingElement RingElement::one(Ring ring) { return from_integer(ring, 1); }

RingElement RingElement::from_integer(Ring ring, const BigInt& value) {
    if (ring.kind() == RingKind::Integers) return RingElement(ring, value);
    const auto r = static_cast<std::uint64_t>(mod_floor(value, BigInt(ring.characteristic())));
    return RingElement(ring, r);
}

RingElement RingElement::from_code(Ring ring, std::uint64_t code) {
    require(ring.is_finite(), ErrorCode::Unsupported, "element codes exist only for finite rings");
    require(code < *ring.size(), ErrorCode::OutOfRange,
            "code " + std::to_string(code) + " out of range for " + ring.to_string());
    return RingElement(ring, code);
}

RingElement RingElement::from_coefficients(Ring ring, std::span<const std::uint64_t> coeffs) {
    require(ring.kind() == RingKind::ExtensionField, ErrorCode::Unsupported, "coefficient vectors need an extension field");
    require(coeffs.size() <= ring.degree(), ErrorCode::InvalidArgument, "too many coefficients for " + ring.to_string());
    Coeffs c(coeffs.begin(), coeffs.end());
    for (auto& x : c) x %= ring.characteristic();
    c.resize(ring.degree(), 0);
    return RingElement(ring, ring.descriptor().encode(c));
}

RingElement RingElement::parse(Ring ring, std::string_view raw) {
    const std::string text = strip(raw);
    if (ring.kind() != RingKind::ExtensionField) return from_integer(ring, parse_bigint(text));
    const auto poly = parse_poly_in(text, 't');
    const RingDescriptor& d = ring.descriptor();
    // Reduce modulo the field modulus so any representative is accepted.
    Coeffs c;
    for (const auto& x : poly) c.push_back(static_cast<std::uint64_t>(mod_floor(x, BigInt(d.n))));
    c = poly_rem_monic(std::move(c), d.modulus, d.n);
    c.resize(d.k, 0);
    return RingElement(ring, d.encode(c));
}

bool RingElement::is_zero() const {
    if (const auto* b = std::get_if<BigInt>(&value_)) return *b == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool RingElement::is_one() const {
    if (const auto* b = std::get_if<BigInt>(&value_)) return *b == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

std::uint64_t RingElement::code() const {
    require(ring_.is_finite(), ErrorCode::Unsupported, "element codes exist only for finite rings");
    return std::get<std::uint64_t>(value_);
}

const BigInt& RingElement::integer() const {
    require(ring_.kind() == RingKind::Integers, ErrorCode::Unsupported, "not an integer element");
    return std::get<BigInt>(value_);
}

std::vector<std::uint64_t> RingElement::coefficients() const {
    if (ring_.kind() == RingKind::ExtensionField) return ring_.descriptor().decode(code());
    return {static_cast<std::uint64_t>(code())};
}

bool RingElement::is_unit() const {
    switch (ring_.kind()) {
        case RingKind::Integers: return abs(integer()) == 1;
        case RingKind::IntegersMod: return gcd(code(), ring_.characteristic()) == 1;
        default: return !is_zero();
    }
}

RingElement RingElement::inverse() const {
    if (!is_unit()) fail(ErrorCode::NotInvertible, to_string() + " is not a unit in " + ring_.to_string());
    if (ring_.kind() == RingKind::Integers) return *this;
    return RingElement(ring_, ring_.descriptor().inv(code()));
}

bool RingElement::is_nilpotent() const {
    if (!ring_.is_finite() || ring_.is_field()) return is_zero();
    return pow(ring_.nilpotency_bound()).is_zero();
}

RingElement RingElement::pow(std::uint64_t exponent) const {
    RingElement result = one(ring_), base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string RingElement::to_string() const {
    if (const auto* b = std::get_if<BigInt>(&value_)) return polycomp::to_string(*b);
    if (ring_.kind() == RingKind::ExtensionField) {
        const auto c = coefficients();
        return format_poly_in(c, 't');
    }
    return std::to_string(std::get<std::uint64_t>(value_));
}

namespace {
void check_same(const RingElement& x, const RingElement& y) {
    if (!(x.ring() == y.ring())) {
        fail(ErrorCode::RingMismatch, "ring mismatch: " + x.ring().to_string() + " vs " + y.ring().to_string());
    }
}
}  // namespace

RingElement operator+(const RingElement& x, const RingElement& y) {
    check_same(x, y);
    if (x.ring_.kind() == RingKind::Integers) return RingElement(x.ring_, BigInt(x.integer() + y.integer()));
    return RingElement(x.ring_, x.ring_.descriptor().add(x.code(), y.code()));
}

RingElement operator-(const RingElement& x) {
    if (x.ring_.kind() == RingKind::Integers) return RingElement(x.ring_, BigInt(-x.integer()));
    return RingElement(x.ring_, x.ring_.descriptor().neg(x.code()));
}

RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }

RingElement operator*(const RingElement& x, const RingElement& y) {
    check_same(x, y);
    if (x.ring_.kind() == RingKind::Integers) return RingElement(x.ring_, BigInt(x.integer() * y.integer()));
    return RingElement(x.ring_, x.ring_.descriptor().mul(x.code(), y.code()));
}

std::strong_ordering operator<=>(const RingElement& x, const RingElement& y) {
    if (!(x.ring_ == y.ring_)) return x.ring_.to_string() <=> y.ring_.to_string();
    if (x.ring_.kind() == RingKind::Integers) {
        const int c = x.integer().compare(y.integer());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    return x.code() <=> y.code();
}

std::vector<RingElement> elements(Ring ring) {
    require(ring.is_finite(), ErrorCode::Unsupported, ring.to_string() + " is not finite");
    require(*ring.size() <= (std::uint64_t{1} << 24), ErrorCode::CeilingExceeded, "ring too large to enumerate");
    std::vector<RingElement> out;
    out.reserve(*ring.size());
    for (std::uint64_t c = 0; c < *ring.size(); ++c) out.push_back(RingElement::from_code(ring, c));
    return out;
}

// ---------------------------------------------------------------------------

FieldEmbedding::FieldEmbedding(Ring source, Ring target) : source_(source), target_(target) {
    if (source == target) {
        identity_ = true;
        return;
    }
    const bool fields = source.is_field() && target.is_field();
    if (!fields || source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) {
        fail(ErrorCode::Unsupported, "no embedding " + source.to_string() + " -> " + target.to_string());
    }
    const std::uint64_t src_size = *source.size();
    require(src_size <= (std::uint64_t{1} << 20), ErrorCode::CeilingExceeded, "subfield too large to tabulate");
    image_.resize(src_size);
    if (source.kind() == RingKind::PrimeField) {
        for (std::uint64_t c = 0; c < src_size; ++c) image_[c] = c;  // constants keep their code
    } else {
        // Send t to the root of the source modulus with the smallest code in the target.
        const auto& m = source.modulus_poly();
        std::optional<RingElement> root;
        for (std::uint64_t r = 0; r < *target.size() && !root; ++r) {
            const RingElement x = RingElement::from_code(target, r);
            RingElement acc = RingElement::zero(target);
            for (std::size_t i = m.size(); i-- > 0;) acc = acc * x + RingElement::from_integer(target, m[i]);
            if (acc.is_zero()) root = x;
        }
        require(root.has_value(), ErrorCode::Unsupported, "modulus has no root in target field");
        const RingDescriptor& sd = source.descriptor();
        for (std::uint64_t c = 0; c < src_size; ++c) {
            const Coeffs cs = sd.decode(c);
            RingElement acc = RingElement::zero(target);
            for (std::size_t i = cs.size(); i-- > 0;) acc = acc * *root + RingElement::from_integer(target, cs[i]);
            image_[c] = acc.code();
        }
    }
    for (std::uint64_t c = 0; c < src_size; ++c) preimage_.emplace(image_[c], c);
}

RingElement FieldEmbedding::apply(const RingElement& x) const {
    if (!(x.ring() == source_)) fail(ErrorCode::RingMismatch, "element is not in " + source_.to_string());
    if (identity_) return x;
    return RingElement::from_code(target_, image_[x.code()]);
}

std::optional<RingElement> FieldEmbedding::preimage(const RingElement& y) const {
    if (!(y.ring() == target_)) fail(ErrorCode::RingMismatch, "element is not in " + target_.to_string());
    if (identity_) return y;
    auto it = preimage_.find(y.code());
    if (it == preimage_.end()) return std::nullopt;
    return RingElement::from_code(source_, it->second);
}

RingElement subfield_embed(const RingElement& x, Ring target) { return FieldEmbedding(x.ring(), target).apply(x); }

}  // namespace polycomp
