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

#ifndef SEMIART_TESTS_FIXTURES_HPP
#define SEMIART_TESTS_FIXTURES_HPP

#include "semiart/poset.hpp"

namespace fixtures {

using semiart::PolarizedPoset;

inline PolarizedPoset diamond() {
  return PolarizedPoset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}, {});
}

inline PolarizedPoset chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int k = 0; k < n; ++k) {
    names.push_back("c" + std::to_string(k));
    if (k) rel.emplace_back(names[k - 1], names[k]);
  }
  return PolarizedPoset::from_relations(names, rel, {});
}

inline PolarizedPoset antichain(int n) {
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back("x" + std::to_string(k));
  return PolarizedPoset::from_relations(names, {}, {});
}

// a < c, b < c.
inline PolarizedPoset vee() {
  return PolarizedPoset::from_relations({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}, {});
}

// Five-point truncation of the two-component example: U0 < V, U1 < W, U2 < W.
inline PolarizedPoset two_components() {
  return PolarizedPoset::from_relations({"V", "W", "U0", "U1", "U2"}, {{"U0", "V"}, {"U1", "W"}, {"U2", "W"}}, {});
}

}  // namespace fixtures

#endif  // SEMIART_TESTS_FIXTURES_HPP
