/*
   Copyright 2026 The semiart Authors

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

// Structural checks run against one poset, with a JSON report.

#ifndef SEMIART_VERIFY_HPP
#define SEMIART_VERIFY_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "semiart/poset.hpp"
#include "semiart/ring.hpp"

namespace semiart {

struct VerifyConfig {
  std::uint32_t base = 3;     // dense evaluation base
  std::uint32_t prime = 5;
  std::uint32_t budget = 2;   // digits of generator block indices stay below this
  std::uint64_t seed = 1;
  int samples = 200;          // random pairs, triples and elements per sampled check
  int witness_samples = 50;   // random elements per socle step
  int max_upper_sets = 12;    // poset size bound for subset enumeration
  std::size_t ideal_bound = 512;       // formal algebra dimension for brute-force ideals
  std::size_t regularity_bound = 600;  // formal algebra dimension for linear solves
  std::set<std::string> only;          // empty runs every check
  bool parallel = true;
};

enum class CheckStatus { pass, fail, skipped };

struct CheckRecord {
  std::string check;
  std::string claim;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json witness;  // null unless something failed or was skipped
  double elapsed_ms = 0;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  // 0 all passed, 1 some check failed, 3 nothing failed but something was skipped.
  int exit_code() const;
  nlohmann::json to_json() const;
};

// Number of generators at this digit budget, i.e. the formal algebra dimension.
std::size_t generator_count(const RingContext& ctx, std::uint32_t budget);

std::vector<std::string> check_names();
VerifyReport verify_poset(const PolarizedPoset& poset, const VerifyConfig& config);

nlohmann::json analyze_poset(const PolarizedPoset& poset, int max_upper_sets = 12);

std::string status_name(CheckStatus s);

}  // namespace semiart

#endif  // SEMIART_VERIFY_HPP
