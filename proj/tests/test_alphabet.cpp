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

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "polycomp/alphabet.hpp"
#include "polycomp/error.hpp"
#include "polycomp/random.hpp"

using namespace polycomp;

namespace {

using Values = std::vector<std::uint64_t>;

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Protocol;
}

}  // namespace

TEST_CASE("encoding examples") {
    const auto a = Alphabet::latin();
    CHECK(a.cycle() == 26);
    CHECK_FALSE(a.has_prime_length());
    CHECK(encode("ABACAB", a, zero_picker()) == Values{0, 1, 0, 2, 0, 1});
    CHECK(encode("ABACAB", a, sequence_picker({0, 0, 1, 2, 1, 2})) == Values{0, 1, 26, 54, 26, 53});
    CHECK(encode("", a, zero_picker()).empty());
    CHECK(code_of([&] { (void)encode("AbC", a, zero_picker()); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { (void)encode("ABC", a, sequence_picker({1, 2})); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { (void)encode("A", a, sequence_picker({5}), 100); }) == ErrorCode::OutOfRange);
}

TEST_CASE("decoding examples") {
    const auto a = Alphabet::latin();
    const Values v{0, 1, 26, 54, 26, 53};
    CHECK(decode(v, a) == "ABACAB");
    const Values z{25};
    CHECK(decode(z, a) == "Z");
    const Values wrap{52};
    CHECK(decode(wrap, a) == "A");
}

TEST_CASE("round trip for random pickers and texts") {
    Rng rng(11);
    const std::vector<Alphabet> alphabets{Alphabet::latin(), Alphabet({"a", "b", "c", "d", "e"}),
                                          Alphabet({"x", "yz", "é", "w"})};
    for (const auto& a : alphabets) {
        for (int i = 0; i < 200; ++i) {
            std::string text;
            std::vector<std::uint64_t> idx;
            const auto len = rng.uniform(0, 20);
            for (std::uint64_t j = 0; j < len; ++j) {
                idx.push_back(rng.uniform(0, a.cycle() - 1));
                text += a.symbols()[idx.back()];
            }
            const auto values = encode(text, a, random_picker(rng.next(), 1000));
            REQUIRE(values.size() == idx.size());
            for (std::size_t j = 0; j < values.size(); ++j) CHECK(values[j] % a.cycle() == idx[j]);
            CHECK(decode(values, a) == text);
        }
    }
}

TEST_CASE("alphabet construction") {
    CHECK(Alphabet({"a", "b", "c"}).has_prime_length());
    CHECK(code_of([] { (void)Alphabet({}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)Alphabet({"a", "a"}); }) == ErrorCode::InvalidArgument);
    CHECK(Alphabet::latin().default_ceiling() == 26u << 16);

    const std::string path = "alphabet_test_symbols.txt";
    {
        std::ofstream out(path);
        out << "α\nβ\n\nγ\n";
    }
    const auto greek = Alphabet::from_file(path);
    std::remove(path.c_str());
    CHECK(greek.cycle() == 3);
    CHECK(greek.index_of("γ") == 2);
    CHECK(encode("γα", greek, zero_picker()) == Values{2, 0});
}
