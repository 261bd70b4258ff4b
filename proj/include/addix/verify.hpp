/*
   Copyright 2026 The addix Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ADDIX_VERIFY_HPP
#define ADDIX_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace addix::verify {

struct Options {
    std::uint64_t seed = 20240607;
    /// Fields larger than this are skipped and listed in the result detail.
    std::uint64_t max_q = std::uint64_t{1} << 20;
};

struct Result {
    int id = 0;
    std::string name;
    bool passed = false;
    std::uint64_t cases = 0;
    double seconds = 0;
    std::string detail;
    /// Informational findings that do not affect `passed`.
    std::vector<std::string> events;
};

constexpr int kCriteria = 10;

Result run_criterion(int id, const Options& opts);

/// "all" or a comma-separated list of criterion numbers.
std::vector<Result> run_suite(const std::string& suite, const Options& opts);

}  // namespace addix::verify

#endif
