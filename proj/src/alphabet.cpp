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

#include "polycomp/alphabet.hpp"

#include <fstream>
#include <memory>
#include <set>

#include "polycomp/bigint.hpp"
#include "polycomp/error.hpp"
#include "polycomp/random.hpp"

namespace polycomp {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    require(!symbols_.empty(), ErrorCode::InvalidArgument, "alphabet is empty");
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        require(!s.empty(), ErrorCode::InvalidArgument, "alphabet symbols must be non-empty");
        require(seen.insert(s).second, ErrorCode::InvalidArgument, "duplicate alphabet symbol '" + s + "'");
        longest_ = std::max(longest_, s.size());
    }
    prime_length_ = is_prime(static_cast<std::uint64_t>(symbols_.size()));
}

Alphabet Alphabet::latin() {
    std::vector<std::string> symbols;
    for (char c = 'A'; c <= 'Z'; ++c) symbols.emplace_back(1, c);
    return Alphabet(std::move(symbols));
}

Alphabet Alphabet::from_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::InvalidArgument, "cannot read alphabet file '" + path + "'");
    std::vector<std::string> symbols;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) symbols.push_back(line);
    }
    return Alphabet(std::move(symbols));
}

std::uint64_t Alphabet::index_of(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == symbol) return i;
    }
    fail(ErrorCode::InvalidArgument, "symbol '" + std::string(symbol) + "' is not in the alphabet");
}

std::vector<std::uint64_t> Alphabet::indices(std::string_view text) const {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t best_len = 0;
        std::uint64_t best = 0;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            const auto& s = symbols_[i];
            if (s.size() > best_len && text.substr(pos, s.size()) == s) {
                best_len = s.size();
                best = i;
            }
        }
        if (best_len == 0) {
            fail(ErrorCode::InvalidArgument,
                 "character at byte " + std::to_string(pos) + " ('" + std::string(text.substr(pos, 1)) +
                     "') is not in the alphabet");
        }
        out.push_back(best);
        pos += best_len;
    }
    return out;
}

RepresentativePicker zero_picker() {
    return [](std::size_t, std::uint64_t) -> std::uint64_t { return 0; };
}

RepresentativePicker sequence_picker(std::vector<std::uint64_t> ks) {
    return [ks = std::move(ks)](std::size_t position, std::uint64_t) -> std::uint64_t {
        require(position < ks.size(), ErrorCode::InvalidArgument,
                "representative sequence has " + std::to_string(ks.size()) + " entries, text is longer");
        return ks[position];
    };
}

RepresentativePicker random_picker(std::uint64_t seed, std::uint64_t max_k) {
    auto rng = std::make_shared<Rng>(seed);
    return [rng, max_k](std::size_t, std::uint64_t) -> std::uint64_t { return rng->uniform(0, max_k); };
}

std::vector<std::uint64_t> encode(std::string_view text, const Alphabet& alphabet, const RepresentativePicker& picker,
                                  std::uint64_t ceiling) {
    if (ceiling == 0) ceiling = alphabet.default_ceiling();
    require(ceiling >= alphabet.cycle(), ErrorCode::InvalidArgument, "ceiling is below the alphabet length");
    const auto idx = alphabet.indices(text);
    std::vector<std::uint64_t> out;
    out.reserve(idx.size());
    const std::uint64_t c = alphabet.cycle();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const std::uint64_t k = picker(i, idx[i]);
        require(k <= (ceiling - 1 - idx[i]) / c, ErrorCode::OutOfRange,
                "representative k=" + std::to_string(k) + " at position " + std::to_string(i) +
                    " exceeds the ceiling " + std::to_string(ceiling));
        out.push_back(idx[i] + c * k);
    }
    return out;
}

std::string decode(std::span<const std::uint64_t> values, const Alphabet& alphabet) {
    std::string out;
    for (auto v : values) out += alphabet.symbols()[v % alphabet.cycle()];
    return out;
}

}  // namespace polycomp
