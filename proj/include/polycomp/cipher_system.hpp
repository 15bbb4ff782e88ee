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

/**
 * @file cipher_system.hpp
 * @brief Letter ciphers that compose, and polynomials whose coefficients are ciphers.
 *
 * A CipherSystem maps one letter of Z/s to a fixed number of letters (its
 * arity). Leaves are affine maps x -> a x + b. Two systems combine by
 *
 *   sum      S + T : x -> T applied to every letter of S(x)   arity |S| |T|
 *   product  S * T : x -> S(x) followed by T(x)              arity |S| + |T|
 *
 * Text form: `A(a,b)`, `(S+T)`, `(S*T)`; the parser gives * precedence over +
 * and associates both to the left.
 *
 * A CipherPolynomial C_0 + C_1 X + ... + C_m X^m encrypts letter i of every
 * block of m + 1 letters with C_i. Its text form is `26:[A(1,1),A(3,0)]`.
 */

#ifndef POLYCOMP_CIPHER_SYSTEM_HPP
#define POLYCOMP_CIPHER_SYSTEM_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/random.hpp"

namespace polycomp {

class CipherSystem {
   public:
    /// Requires a, b < s and gcd(a, s) = 1.
    static CipherSystem affine(std::uint64_t a, std::uint64_t b, std::uint64_t s);
    static CipherSystem identity(std::uint64_t s) { return affine(1, 0, s); }
    static CipherSystem parse(std::string_view text, std::uint64_t s);

    std::uint64_t alphabet() const;
    std::size_t arity() const;

    std::vector<std::uint64_t> encrypt(std::uint64_t x) const;
    void encrypt_into(std::uint64_t x, std::vector<std::uint64_t>& out) const;
    /// Takes exactly arity() letters; throws InvalidArgument when the parts of
    /// a product disagree.
    std::uint64_t decrypt(std::span<const std::uint64_t> letters) const;

    std::string to_string() const;

    friend bool operator==(const CipherSystem& a, const CipherSystem& b) {
        return a.alphabet() == b.alphabet() && a.to_string() == b.to_string();
    }

    friend CipherSystem cipher_sum(const CipherSystem& first, const CipherSystem& second);
    friend CipherSystem cipher_product(const CipherSystem& left, const CipherSystem& right);

   private:
    struct Node;
    explicit CipherSystem(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Composition: apply `first`, then `second` to every output letter.
CipherSystem cipher_sum(const CipherSystem& first, const CipherSystem& second);
/// Concatenation of both outputs.
CipherSystem cipher_product(const CipherSystem& left, const CipherSystem& right);

/// Random tree of sums and products over affine leaves, of depth <= max_depth.
CipherSystem random_cipher_system(Rng& rng, std::uint64_t s, unsigned max_depth);

class CipherPolynomial {
   public:
    /// Non-empty, all over one alphabet.
    explicit CipherPolynomial(std::vector<CipherSystem> coeffs);
    static CipherPolynomial parse(std::string_view text);

    std::uint64_t alphabet() const { return coeffs_.front().alphabet(); }
    std::size_t degree() const { return coeffs_.size() - 1; }
    std::size_t block_length() const { return coeffs_.size(); }
    const std::vector<CipherSystem>& coeffs() const { return coeffs_; }
    /// Output letters produced for a plaintext of `length` letters.
    std::size_t ciphertext_length(std::size_t length) const;

    /// Letters are values in [0, s). A final partial block is allowed.
    std::vector<std::uint64_t> encrypt(std::span<const std::uint64_t> letters) const;
    /// Consumes arity(C_i) letters for position i of each block.
    std::vector<std::uint64_t> decrypt(std::span<const std::uint64_t> letters) const;

    std::string to_string() const;
    friend bool operator==(const CipherPolynomial& a, const CipherPolynomial& b) { return a.coeffs_ == b.coeffs_; }

   private:
    std::vector<CipherSystem> coeffs_;
};

/// The key fg: coefficient m is the sum, in ascending i, of the products
/// A_i * B_{m-i}. With `strict` the degrees must satisfy deg f >= 2 and
/// 1 <= deg g <= deg f - 1, i.e. deg f = n - 1 and deg g = n - k for some
/// 2 <= k <= n - 1.
CipherPolynomial cipher_poly_mul(const CipherPolynomial& f, const CipherPolynomial& g, bool strict = false);

/// Random polynomial of the given degree with affine coefficients.
CipherPolynomial random_affine_polynomial(Rng& rng, std::uint64_t s, std::size_t degree);

}  // namespace polycomp

#endif  // POLYCOMP_CIPHER_SYSTEM_HPP
