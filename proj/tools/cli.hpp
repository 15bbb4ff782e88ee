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

// Command-line dispatcher, kept separate from main() so tests can drive it.

#ifndef POLYCOMP_TOOLS_CLI_HPP
#define POLYCOMP_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polycomp::cli {

/// Exit codes: 0 success, 1 domain error (`ERR:<code>: ...` on err), 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Example {
    std::string command;  ///< Arguments after the program name.
    std::string expected;  ///< Exact stdout, without the final newline.
};

/// The examples listed under --help, each executed verbatim by the golden test.
const std::vector<Example>& examples();

}  // namespace polycomp::cli

#endif  // POLYCOMP_TOOLS_CLI_HPP
