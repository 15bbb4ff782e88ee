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

#include "polycomp/cipher_system.hpp"

#include <cctype>

#include "polycomp/bigint.hpp"
#include "polycomp/error.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

namespace {
constexpr std::size_t kMaxArity = 1 << 16;
}  // namespace

struct CipherSystem::Node {
    enum class Kind { Affine, Sum, Product } kind;
    std::uint64_t s = 0;
    std::uint64_t a = 1, b = 0, a_inv = 1;
    std::shared_ptr<const Node> left, right;
    std::size_t arity = 1;
    std::string text;
};

CipherSystem CipherSystem::affine(std::uint64_t a, std::uint64_t b, std::uint64_t s) {
    require(s >= 2, ErrorCode::InvalidArgument, "cipher alphabet must have at least 2 letters");
    require(a < s && b < s, ErrorCode::OutOfRange, "affine parameters must be below the alphabet size");
    require(gcd(a, s) == 1, ErrorCode::NotInvertible,
            "A(" + std::to_string(a) + "," + std::to_string(b) + ") is not invertible mod " + std::to_string(s));
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Affine;
    node->s = s;
    node->a = a;
    node->b = b;
    node->a_inv = inverse_mod(a, s);
    node->text = "A(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return CipherSystem(std::move(node));
}

namespace {

void check_same_alphabet(const CipherSystem& x, const CipherSystem& y) {
    require(x.alphabet() == y.alphabet(), ErrorCode::InvalidArgument,
            "alphabet mismatch: " + std::to_string(x.alphabet()) + " vs " + std::to_string(y.alphabet()));
}

}  // namespace

CipherSystem cipher_sum(const CipherSystem& first, const CipherSystem& second) {
    check_same_alphabet(first, second);
    require(first.arity() <= kMaxArity / second.arity(), ErrorCode::CeilingExceeded, "cipher arity above 2^16");
    auto node = std::make_shared<CipherSystem::Node>();
    node->kind = CipherSystem::Node::Kind::Sum;
    node->s = first.alphabet();
    node->left = first.node_;
    node->right = second.node_;
    node->arity = first.arity() * second.arity();
    node->text = "(" + first.to_string() + "+" + second.to_string() + ")";
    return CipherSystem(std::move(node));
}

CipherSystem cipher_product(const CipherSystem& left, const CipherSystem& right) {
    check_same_alphabet(left, right);
    require(left.arity() + right.arity() <= kMaxArity, ErrorCode::CeilingExceeded, "cipher arity above 2^16");
    auto node = std::make_shared<CipherSystem::Node>();
    node->kind = CipherSystem::Node::Kind::Product;
    node->s = left.alphabet();
    node->left = left.node_;
    node->right = right.node_;
    node->arity = left.arity() + right.arity();
    node->text = "(" + left.to_string() + "*" + right.to_string() + ")";
    return CipherSystem(std::move(node));
}

std::uint64_t CipherSystem::alphabet() const { return node_->s; }
std::size_t CipherSystem::arity() const { return node_->arity; }
std::string CipherSystem::to_string() const { return node_->text; }

std::vector<std::uint64_t> CipherSystem::encrypt(std::uint64_t x) const {
    std::vector<std::uint64_t> out;
    out.reserve(arity());
    encrypt_into(x, out);
    return out;
}

void CipherSystem::encrypt_into(std::uint64_t x, std::vector<std::uint64_t>& out) const {
    require(x < alphabet(), ErrorCode::OutOfRange,
            "letter " + std::to_string(x) + " is outside [0, " + std::to_string(alphabet()) + ")");
    const Node& n = *node_;
    switch (n.kind) {
        case Node::Kind::Affine: out.push_back((mul_mod(n.a, x, n.s) + n.b) % n.s); return;
        case Node::Kind::Product:
            CipherSystem(n.left).encrypt_into(x, out);
            CipherSystem(n.right).encrypt_into(x, out);
            return;
        case Node::Kind::Sum: {
            const CipherSystem second(n.right);
            for (auto y : CipherSystem(n.left).encrypt(x)) second.encrypt_into(y, out);
            return;
        }
    }
}

std::uint64_t CipherSystem::decrypt(std::span<const std::uint64_t> letters) const {
    require(letters.size() == arity(), ErrorCode::InvalidArgument,
            "expected " + std::to_string(arity()) + " letters, got " + std::to_string(letters.size()));
    const Node& n = *node_;
    switch (n.kind) {
        case Node::Kind::Affine: {
            const std::uint64_t y = letters[0];
            require(y < n.s, ErrorCode::OutOfRange, "letter " + std::to_string(y) + " outside the alphabet");
            return mul_mod((y + n.s - n.b) % n.s, n.a_inv, n.s);
        }
        case Node::Kind::Product: {
            const CipherSystem left(n.left), right(n.right);
            const std::uint64_t x = left.decrypt(letters.first(left.arity()));
            const std::uint64_t check = right.decrypt(letters.subspan(left.arity()));
            require(x == check, ErrorCode::InvalidArgument, "the two halves of a product ciphertext disagree");
            return x;
        }
        case Node::Kind::Sum: {
            const CipherSystem first(n.left), second(n.right);
            std::vector<std::uint64_t> middle;
            middle.reserve(first.arity());
            for (std::size_t i = 0; i < first.arity(); ++i) {
                middle.push_back(second.decrypt(letters.subspan(i * second.arity(), second.arity())));
            }
            return first.decrypt(middle);
        }
    }
    fail(ErrorCode::InvalidArgument, "corrupt cipher system");
}

namespace {

// expr := term ('+' term)* ; term := factor ('*' factor)* ;
// factor := 'A(' a ',' b ')' | '(' expr ')'
class SystemParser {
   public:
    SystemParser(std::string_view text, std::uint64_t s) : s_(s) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
        }
    }

    CipherSystem run() {
        CipherSystem out = expr();
        if (pos_ != text_.size()) error("trailing input");
        return out;
    }

   private:
    [[noreturn]] void error(const std::string& why) const {
        fail(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in cipher system '" + text_ + "'");
    }
    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) error(std::string("expected '") + c + "'");
    }
    std::uint64_t number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("expected a number");
        return parse_u64(std::string_view(text_).substr(start, pos_ - start));
    }
    CipherSystem expr() {
        CipherSystem acc = term();
        while (eat('+')) acc = cipher_sum(acc, term());
        return acc;
    }
    CipherSystem term() {
        CipherSystem acc = factor();
        while (eat('*')) acc = cipher_product(acc, factor());
        return acc;
    }
    CipherSystem factor() {
        if (eat('A')) {
            expect('(');
            const std::uint64_t a = number();
            expect(',');
            const std::uint64_t b = number();
            expect(')');
            return CipherSystem::affine(a, b, s_);
        }
        if (eat('(')) {
            CipherSystem inner = expr();
            expect(')');
            return inner;
        }
        error("expected A(a,b) or '('");
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::uint64_t s_;
};

CipherSystem random_affine(Rng& rng, std::uint64_t s) {
    std::uint64_t a;
    do {
        a = rng.uniform(1, s - 1);
    } while (gcd(a, s) != 1);
    return CipherSystem::affine(a, rng.uniform(0, s - 1), s);
}

}  // namespace

CipherSystem CipherSystem::parse(std::string_view text, std::uint64_t s) { return SystemParser(text, s).run(); }

CipherSystem random_cipher_system(Rng& rng, std::uint64_t s, unsigned max_depth) {
    if (max_depth == 0 || rng.uniform(0, 2) == 0) return random_affine(rng, s);
    CipherSystem left = random_cipher_system(rng, s, max_depth - 1);
    CipherSystem right = random_cipher_system(rng, s, max_depth - 1);
    return rng.coin() ? cipher_sum(left, right) : cipher_product(left, right);
}

// ---------------------------------------------------------------------------

CipherPolynomial::CipherPolynomial(std::vector<CipherSystem> coeffs) : coeffs_(std::move(coeffs)) {
    require(!coeffs_.empty(), ErrorCode::InvalidArgument, "cipher polynomial needs at least one coefficient");
    for (const auto& c : coeffs_) check_same_alphabet(coeffs_.front(), c);
}

CipherPolynomial CipherPolynomial::parse(std::string_view raw) {
    const std::string text = strip(raw);
    const auto colon = text.find(':');
    require(colon != std::string::npos, ErrorCode::Parse, "expected s:[S0,S1,...], got '" + text + "'");
    const std::uint64_t s = parse_u64(std::string_view(text).substr(0, colon));
    const std::string body = strip(std::string_view(text).substr(colon + 1));
    std::vector<CipherSystem> coeffs;
    for (const auto& item : split_top_level(unwrap(body, '[', ']'), ',')) {
        coeffs.push_back(CipherSystem::parse(item, s));
    }
    return CipherPolynomial(std::move(coeffs));
}

std::size_t CipherPolynomial::ciphertext_length(std::size_t length) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < length; ++i) total += coeffs_[i % coeffs_.size()].arity();
    return total;
}

std::vector<std::uint64_t> CipherPolynomial::encrypt(std::span<const std::uint64_t> letters) const {
    std::vector<std::uint64_t> out;
    out.reserve(ciphertext_length(letters.size()));
    for (std::size_t i = 0; i < letters.size(); ++i) coeffs_[i % coeffs_.size()].encrypt_into(letters[i], out);
    return out;
}

std::vector<std::uint64_t> CipherPolynomial::decrypt(std::span<const std::uint64_t> letters) const {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < letters.size()) {
        const CipherSystem& c = coeffs_[out.size() % coeffs_.size()];
        require(pos + c.arity() <= letters.size(), ErrorCode::InvalidArgument,
                "ciphertext ends inside a letter: " + std::to_string(letters.size() - pos) + " left, need " +
                    std::to_string(c.arity()));
        out.push_back(c.decrypt(letters.subspan(pos, c.arity())));
        pos += c.arity();
    }
    return out;
}

std::string CipherPolynomial::to_string() const {
    std::string out = std::to_string(alphabet()) + ":[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].to_string();
    }
    return out + "]";
}

CipherPolynomial cipher_poly_mul(const CipherPolynomial& f, const CipherPolynomial& g, bool strict) {
    require(f.alphabet() == g.alphabet(), ErrorCode::InvalidArgument,
            "alphabet mismatch: " + std::to_string(f.alphabet()) + " vs " + std::to_string(g.alphabet()));
    if (strict) {
        require(f.degree() >= 2, ErrorCode::Precondition, "strict mode needs deg f = n-1 >= 2");
        require(g.degree() >= 1 && g.degree() + 1 <= f.degree(), ErrorCode::Precondition,
                "strict mode needs 1 <= deg g <= deg f - 1");
    }
    const std::size_t m = f.degree() + g.degree();
    std::vector<CipherSystem> out;
    out.reserve(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        const std::size_t lo = k > g.degree() ? k - g.degree() : 0;
        const std::size_t hi = std::min(k, f.degree());
        CipherSystem acc = cipher_product(f.coeffs()[lo], g.coeffs()[k - lo]);
        for (std::size_t i = lo + 1; i <= hi; ++i) acc = cipher_sum(acc, cipher_product(f.coeffs()[i], g.coeffs()[k - i]));
        out.push_back(acc);
    }
    return CipherPolynomial(std::move(out));
}

CipherPolynomial random_affine_polynomial(Rng& rng, std::uint64_t s, std::size_t degree) {
    std::vector<CipherSystem> coeffs;
    for (std::size_t i = 0; i <= degree; ++i) coeffs.push_back(random_affine(rng, s));
    return CipherPolynomial(std::move(coeffs));
}

}  // namespace polycomp
