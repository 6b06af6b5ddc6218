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

#ifndef SEMIART_INDEXING_HPP
#define SEMIART_INDEXING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "semiart/ordinal.hpp"
#include "semiart/poset.hpp"

namespace semiart {

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The index set X = B^(xi+1) * beth for B = w (base 0 here) or a natural n.
struct IndexSpace {
  std::uint32_t base = 0;  // 0 means w
  int xi = 0;
  int beth = 1;

  static IndexSpace omega(int xi, int beth) { return {0, xi, beth}; }
  static IndexSpace finite(std::uint32_t n, int xi, int beth);

  bool is_omega() const { return base == 0; }
  Ordinal base_ordinal() const { return is_omega() ? Ordinal::omega() : Ordinal(base); }
  Ordinal pow(int alpha) const;  // B^alpha
  Ordinal extent() const;
  // Number of blocks at level alpha, B^(xi+1-alpha) * beth.
  Ordinal blocks_at(int alpha) const;

  // x = B^alpha * q + r with r < B^alpha.
  std::pair<Ordinal, Ordinal> split(const Ordinal& x, int alpha) const;
};

// X_{level, block} = [B^level * block, B^level * block + B^level).
struct Interval {
  int level = 0;
  Ordinal block;
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval& a, const Interval& b) {
    if (a.level != b.level) return a.level <=> b.level;
    return a.block <=> b.block;
  }
};

bool interval_contains_point(const IndexSpace& s, const Interval& iv, const Ordinal& x);
// True when a is inside b.
bool interval_within(const IndexSpace& s, const Interval& a, const Interval& b);
bool intervals_meet(const IndexSpace& s, const Interval& a, const Interval& b);

// Children of an interval at a finer level: X_{level, offset + mu} for
// mu < bound. In base w the family is infinite and kept in this lazy form.
struct Refinement {
  int level = 0;
  Ordinal offset;
  Ordinal bound;
  Interval child(const Ordinal& mu) const;
  // Concrete list; only for a finite base.
  std::vector<Interval> list() const;
};

Refinement refine(const IndexSpace& s, const Interval& iv, int finer_level);

// Maximal chains, chain classes and the transport maps g, k, t for a poset.
// Always exact in base w.
class ChainAtlas {
 public:
  explicit ChainAtlas(PolarizedPoset poset);

  const PolarizedPoset& poset() const { return poset_; }
  const IndexSpace& space() const { return space_; }
  int level(int i) const { return poset_.lambda_canonical(i); }
  int exponent(int i) const { return space_.xi + 1 - level(i); }  // e = xi + 1 - lambda(i)
  int class_count(int i) const { return static_cast<int>(poset_.chain_classes(i).size()); }
  const ChainClass& chain_class(int i, int a) const { return poset_.chain_classes(i).at(a); }
  int representative_class(int) const { return 0; }

  // g_{to,from}: chain index in class from -> chain index in class to.
  int g(int i, int to, int from, int chi) const { return poset_.class_transport(i, from, to, chi); }

  // Class a owns lambda when lambda = B^e * chi + sigma with chi in class a.
  bool in_lambda(int i, int a, const Ordinal& lambda) const;
  // Chain index carried by a level-lambda(i) block index (its top digit).
  int chain_of_block(int i, const Ordinal& lambda) const;

  Ordinal k_rep(int i, const Ordinal& lambda) const;
  Ordinal k_rep_inv(int i, const Ordinal& mu) const;
  Ordinal k(int i, int a, const Ordinal& lambda) const;
  Ordinal k_inv(int i, int a, const Ordinal& mu) const;
  // k_{to,from}: Lambda_from -> Lambda_to, changing only the top digit.
  Ordinal k_transport(int i, int to, int from, const Ordinal& lambda) const;

  Ordinal t(int i, int a, const Ordinal& x) const;
  Ordinal t_inv(int i, int a, const Ordinal& y) const;
  Ordinal t_transport(int i, int to, int from, const Ordinal& x) const;

  // Y(i): the preimages of Y under every t_A, one interval per class.
  std::vector<Interval> y_of(int i, const Interval& y) const;

  // Chain carrying a point of X.
  int chain_of_point(const Ordinal& x) const;
  bool point_in_xi(int i, const Ordinal& x) const;

  nlohmann::json dump() const;

 private:
  PolarizedPoset poset_;
  IndexSpace space_;
  std::vector<std::vector<int>> rank_in_class_;  // [i][chain]
};

// Largest coefficient among exponents below top; 0 for 0.
std::uint64_t max_low_digit(const Ordinal& a, std::uint32_t top);
// Value of a in base n when every coefficient below exponent top is < n.
std::optional<std::uint64_t> evaluate_at_base(const Ordinal& a, std::uint32_t n, std::uint32_t top);

}  // namespace semiart

#endif  // SEMIART_INDEXING_HPP
