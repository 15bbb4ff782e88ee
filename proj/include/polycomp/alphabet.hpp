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
 * @file alphabet.hpp
 * @brief Letter/value codec with an unbounded set of representatives.
 *
 * Symbol i of an alphabet of length c is represented by every value i + c k
 * with k >= 0. A picker chooses k for each position of the text; decoding
 * reduces modulo c. Symbols are arbitrary non-empty UTF-8 strings and text is
 * split by greedy longest match.
 */

#ifndef POLYCOMP_ALPHABET_HPP
#define POLYCOMP_ALPHABET_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polycomp {

class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> symbols);
    /// A through Z.
    static Alphabet latin();
    /// One symbol per line; blank lines and a trailing newline are ignored.
    static Alphabet from_file(const std::string& path);

    std::uint64_t cycle() const { return symbols_.size(); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    bool has_prime_length() const { return prime_length_; }
    /// Throws InvalidArgument when the symbol is unknown.
    std::uint64_t index_of(std::string_view symbol) const;
    /// Splits text into symbols; throws InvalidArgument on an unknown character.
    std::vector<std::uint64_t> indices(std::string_view text) const;
    /// Default representative ceiling, cycle * 2^16.
    std::uint64_t default_ceiling() const { return cycle() << 16; }

   private:
    std::vector<std::string> symbols_;
    std::size_t longest_ = 0;
    bool prime_length_ = false;
};

/// Returns k for the symbol at `position` with index `letter`.
using RepresentativePicker = std::function<std::uint64_t(std::size_t position, std::uint64_t letter)>;

RepresentativePicker zero_picker();
/// Uses ks[position]; throws InvalidArgument when the text is longer than ks.
RepresentativePicker sequence_picker(std::vector<std::uint64_t> ks);
/// Draws k uniformly from [0, max_k] with a generator seeded by `seed`.
RepresentativePicker random_picker(std::uint64_t seed, std::uint64_t max_k);

/// value_i = index_i + cycle * k_i. Every value must stay below `ceiling`
/// (0 selects the default); otherwise OutOfRange.
std::vector<std::uint64_t> encode(std::string_view text, const Alphabet& alphabet, const RepresentativePicker& picker,
                                  std::uint64_t ceiling = 0);
std::string decode(std::span<const std::uint64_t> values, const Alphabet& alphabet);

}  // namespace polycomp

#endif  // POLYCOMP_ALPHABET_HPP
