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
 * @file composite.hpp
 * @brief Polynomial composites T_n = A_0 + A_1 X + ... + A_{n-1} X^{n-1} + X^n B[X].
 *
 * A Tower records the chain A_0 ⊂ A_1 ⊂ ... ⊂ A_{n-1} ⊂ B together with the
 * embedding of every level into B. With n = 1 this is the composite
 * T = A + X B[X]. A CompositeElement is a polynomial over B whose coefficient
 * of X^i lies in the image of A_i for i < n; the constructor rejects anything
 * else, so every CompositeElement is a member of T_n by construction.
 *
 * Irreducibility, atomization and the divisor-chain probe need a tower of
 * fields. Unit and nilpotent tests accept any tower.
 *
 * Text formats: tower `F2<F4`, `F2<F2<F4`; element `F2<F4:[1,t]`.
 */

#ifndef POLYCOMP_COMPOSITE_HPP
#define POLYCOMP_COMPOSITE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/poly.hpp"
#include "polycomp/ring.hpp"

namespace polycomp {

class Tower {
   public:
    Tower(std::vector<Ring> levels, Ring top);
    static Tower parse(std::string_view text);

    const std::vector<Ring>& levels() const;
    Ring top() const;
    /// Number of constrained low-degree positions.
    std::size_t n() const { return levels().size(); }
    /// All levels and the top ring are fields.
    bool fields_mode() const;

    /// Ring the coefficient of X^i must come from.
    Ring level_for(std::size_t i) const;
    /// Preimage in level_for(i) of a coefficient from B, if it lies in the image.
    std::optional<RingElement> preimage(std::size_t i, const RingElement& b) const;
    bool admits(std::size_t i, const RingElement& b) const { return preimage(i, b).has_value(); }
    RingElement embed(std::size_t i, const RingElement& a) const;
    /// Finite towers: every element of B allowed at position i, in code order.
    const std::vector<RingElement>& admissible(std::size_t i) const;

    std::string to_string() const;

    friend bool operator==(const Tower& a, const Tower& b);

   private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

bool contains(const Tower& tower, const Polynomial& f);

class CompositeElement {
   public:
    /// Throws NotMember if `f` violates a level constraint.
    CompositeElement(Tower tower, Polynomial f);
    static CompositeElement parse(std::string_view text);

    const Tower& tower() const { return tower_; }
    const Polynomial& poly() const { return poly_; }
    std::ptrdiff_t degree() const { return poly_.degree(); }
    bool is_zero() const { return poly_.is_zero(); }

    std::string to_string() const;

    friend CompositeElement operator+(const CompositeElement& a, const CompositeElement& b);
    friend CompositeElement operator-(const CompositeElement& a, const CompositeElement& b);
    friend CompositeElement operator*(const CompositeElement& a, const CompositeElement& b);
    friend bool operator==(const CompositeElement& a, const CompositeElement& b) {
        return a.tower_ == b.tower_ && a.poly_ == b.poly_;
    }

   private:
    Tower tower_;
    Polynomial poly_;
};

/// Constant term is a unit of A_0 and all higher coefficients are nilpotent.
/// In a tower of fields this means a nonzero constant of A_0.
bool is_unit(const CompositeElement& f);
/// Every coefficient is nilpotent.
bool is_nilpotent(const CompositeElement& f);

/// Tower of fields; f nonzero and not a unit.
///
/// For T = A + X B[X] this is the criterion f ∈ Irr B[X] (f(0) ∈ A holds by
/// construction). For n >= 2 membership plus irreducibility in B[X] is not
/// enough (t X^2 is an atom of F2 + F2 X + X^2 F4[X] although it splits in
/// F4[X]), so the test there searches the B[X]-factorizations of f for one
/// that can be rescaled into T_n.
bool is_irreducible(const CompositeElement& f);

/// Independent check: does f = g h hold for some nonunits g, h of T_n?
/// Enumerates coefficient tuples of g and h directly. Needs a tower of
/// fields with |B| <= 9 and deg f <= 4.
bool factor_search_oracle(const CompositeElement& f);

/// Factorization into atoms whose product is exactly f.
///
/// For n = 1 the result follows the normal form a X^r (1 + X g(X)): r atoms of
/// shape a X come first (the first one carries f's lowest nonzero coefficient
/// when r >= 1), then the atoms with constant term in A, each 1 + X q(X) with
/// 1 + X q(X) irreducible in B[X]. When r = 0 the constant f(0) ∈ A is folded
/// into the first of those. For n >= 2 atoms are found by repeatedly splitting
/// with the same search is_irreducible uses.
std::vector<CompositeElement> atomize(const CompositeElement& f);

/// f(0) as an element of A_0: the quotient map T_n -> T_n/(X) ≅ A_0.
RingElement quotient_eval(const CompositeElement& f);

struct DivisorChain {
    /// f = f_0, f_1 | f_0, f_2 | f_1, ... each a proper divisor of the previous.
    std::vector<CompositeElement> chain;
    /// The last element has no proper divisor in T_n (it is an atom).
    bool terminated = false;
};

/// Greedy chain of proper divisors, each step taking a proper divisor of
/// largest degree found by exhaustive search. Ceilings as for the oracle.
DivisorChain divisor_chain(const CompositeElement& f, std::size_t max_steps);

/// Every element of T_n with exactly the given degree (finite towers).
std::vector<CompositeElement> elements_of_degree(const Tower& tower, std::size_t degree);

}  // namespace polycomp

#endif  // POLYCOMP_COMPOSITE_HPP
