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

#include "polycomp/text.hpp"

#include <cctype>

#include "polycomp/error.hpp"

namespace polycomp {

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::uint64_t parse_u64(std::string_view s) {
    const std::string t = strip(s);
    if (t.empty() || t.size() > 19) fail(ErrorCode::Parse, "bad unsigned integer '" + t + "'");
    std::uint64_t v = 0;
    for (char c : t) {
        if (c < '0' || c > '9') fail(ErrorCode::Parse, "bad unsigned integer '" + t + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

std::string_view unwrap(std::string_view s, char open, char close) {
    if (s.size() < 2 || s.front() != open || s.back() != close) {
        fail(ErrorCode::Parse, "expected " + std::string(1, open) + "..." + std::string(1, close) + " in '" +
                                   std::string(s) + "'");
    }
    return s.substr(1, s.size() - 2);
}

std::vector<BigInt> parse_poly_in(std::string_view raw, char var) {
    std::string s;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) fail(ErrorCode::Parse, "empty polynomial");
    std::vector<BigInt> coeffs;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        BigInt c = 1;
        const bool has_number = j > i;
        if (has_number) c = parse_bigint(s.substr(i, j - i));
        i = j;
        if (i < s.size() && s[i] == '*') ++i;
        std::size_t power = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) fail(ErrorCode::Parse, "missing exponent in '" + s + "'");
                power = static_cast<std::size_t>(parse_u64(s.substr(i, k - i)));
                i = k;
            }
        } else if (!has_number) {
            fail(ErrorCode::Parse, "bad polynomial term in '" + s + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') fail(ErrorCode::Parse, "unexpected character in '" + s + "'");
        if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
        coeffs[power] += sign * c;
    }
    return coeffs;
}

const std::string& Record::at(const std::string& key) const {
    auto it = fields.find(key);
    if (it == fields.end()) fail(ErrorCode::Parse, tag + " record has no " + key + " field");
    return it->second;
}

Record parse_record(std::string_view line, std::string_view expected_tag) {
    std::vector<std::string> words;
    for (const auto& w : split_top_level(strip(line), ' ')) {
        if (!w.empty()) words.push_back(w);
    }
    if (words.size() < 2 || words[0] != expected_tag) {
        fail(ErrorCode::Parse, "expected a '" + std::string(expected_tag) + "' record, got '" + std::string(line) + "'");
    }
    if (words[1] != "v1") fail(ErrorCode::Parse, "unsupported " + words[0] + " record version '" + words[1] + "'");
    Record rec{words[0], {}};
    for (std::size_t i = 2; i < words.size(); ++i) {
        const auto eq = words[i].find('=');
        if (eq == std::string::npos || eq == 0) fail(ErrorCode::Parse, "bad record field '" + words[i] + "'");
        if (!rec.fields.emplace(words[i].substr(0, eq), words[i].substr(eq + 1)).second) {
            fail(ErrorCode::Parse, "duplicate record field '" + words[i].substr(0, eq) + "'");
        }
    }
    return rec;
}

}  // namespace polycomp
