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

// Small parsing helpers shared by the text formats.

#ifndef POLYCOMP_TEXT_HPP
#define POLYCOMP_TEXT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/bigint.hpp"

namespace polycomp {

std::string strip(std::string_view s);
std::uint64_t parse_u64(std::string_view s);
/// Splits on `sep` at bracket depth zero; ()[]{} count as brackets.
std::vector<std::string> split_top_level(std::string_view s, char sep);
/// Parses a sum of terms like `2t^2+t-1` into little-endian integer coefficients.
std::vector<BigInt> parse_poly_in(std::string_view s, char var);
/// Contents of a delimited group such as `[...]` after checking the delimiters.
std::string_view unwrap(std::string_view s, char open, char close);

/// A versioned one-line record such as `rsa-ideal v1 N=(33) E=(3)`.
struct Record {
    std::string tag;
    std::map<std::string, std::string> fields;

    /// Throws Parse when the field is absent.
    const std::string& at(const std::string& key) const;
    bool has(const std::string& key) const { return fields.count(key) != 0; }
};

/// Parses `<tag> v1 KEY=VALUE ...`; throws Parse on a wrong tag or version.
Record parse_record(std::string_view line, std::string_view expected_tag);

}  // namespace polycomp

#endif  // POLYCOMP_TEXT_HPP
