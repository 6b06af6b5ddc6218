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

#ifndef SEMIART_POSET_HPP
#define SEMIART_POSET_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace semiart {

class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Subsets of a poset are bit masks over element indices.
using Mask = std::uint64_t;
constexpr int kMaxElements = 64;

inline bool contains(Mask m, int i) { return (m >> i) & 1u; }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
std::vector<int> members(Mask m);

struct ChainClass {
  int owner = -1;
  Mask below = 0;            // common trace of the member chains on {<= owner}
  std::vector<int> chains;   // indices into maximal_chains(), increasing
};

// A finite poset I with a distinguished lower subset I' (the polar part).
// Immutable once built.
class PolarizedPoset {
 public:
  static PolarizedPoset from_relations(const std::vector<std::string>& elements,
                                       const std::vector<std::pair<std::string, std::string>>& pairs,
                                       const std::vector<std::string>& polar);
  static PolarizedPoset from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;
  Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }

  bool leq(int i, int j) const { return contains(up_[i], j); }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }
  Mask up(int i) const { return up_[i]; }      // {i <=}
  Mask down(int i) const { return down_[i]; }  // {<= i}
  Mask polar() const { return polar_; }
  Mask maximal() const { return maximal_; }
  Mask minimal() const { return minimal_; }
  bool is_maximal(int i) const { return contains(maximal_, i); }

  // Iterated minimal elements of what is left; they partition I.
  const std::vector<Mask>& layers() const { return layers_; }
  int xi() const { return static_cast<int>(layers_.size()); }
  int lambda_min(int i) const { return lambda_.at(i); }
  int lambda_canonical(int i) const { return lambda_.at(i) + 1; }
  // Union of the first alpha layers.
  Mask lower_part(int alpha) const;

  // Maximal chains in canonical order; the position is the chain index chi.
  const std::vector<Mask>& maximal_chains() const { return chains_; }
  int beth() const { return static_cast<int>(chains_.size()); }
  int chain_index(Mask chain) const;  // -1 when not a maximal chain

  // Classes of maximal chains through i under agreement on {<= i},
  // ordered by their least chain index.
  const std::vector<ChainClass>& chain_classes(int i) const { return classes_.at(i); }
  int class_of(int i, int chain) const;  // -1 when the chain misses i
  // (A' n {<=i}) u (chain n {i<=}) for a chain of class A.
  int class_transport(int i, int from_class, int to_class, int chain) const;

  bool is_lower(Mask s) const;
  bool is_upper(Mask s) const;
  Mask up_closure(Mask s) const;
  Mask down_closure(Mask s) const;
  // Layers of the induced subposet on s.
  std::vector<Mask> layers_of(Mask s) const;
  bool layer_restriction_check(Mask lower) const;

  std::vector<Mask> connected_components() const;
  bool is_chain() const;
  bool is_antichain() const;
  bool is_forest_of_chains() const;

  Mask max_of(Mask s) const;
  bool is_finitely_sheltered(Mask s) const;

  std::vector<Mask> upper_sets(int bound = 12) const;
  std::vector<Mask> lower_sets(int bound = 12) const;

  // Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  std::string hasse_dot(const std::string& graph_name = "poset") const;

  Mask parse_subset(const std::vector<std::string>& names) const;
  std::vector<std::string> subset_names(Mask m) const;

 private:
  void finish();

  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  Mask polar_ = 0;
  Mask maximal_ = 0;
  Mask minimal_ = 0;
  std::vector<Mask> layers_;
  std::vector<int> lambda_;
  std::vector<Mask> chains_;
  std::map<Mask, int> chain_index_;
  std::vector<std::vector<ChainClass>> classes_;
  std::vector<std::vector<int>> class_of_;  // [i][chain]
};

// True when the map i -> image[i] is an order isomorphism from a onto b.
bool is_order_isomorphism(const PolarizedPoset& a, const PolarizedPoset& b,
                          const std::vector<int>& image);
bool order_isomorphic(const PolarizedPoset& a, const PolarizedPoset& b);

}  // namespace semiart

#endif  // SEMIART_POSET_HPP
