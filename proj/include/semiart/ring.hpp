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

#ifndef SEMIART_RING_HPP
#define SEMIART_RING_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "semiart/blockmatrix.hpp"
#include "semiart/indexing.hpp"
#include "semiart/poset.hpp"

namespace semiart {

// A nonzero product between incomparable components: the block calculus or
// the atlas is broken.
class AttributionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class RingContext {
 public:
  RingContext(PolarizedPoset poset, std::uint32_t prime = 5);

  const PolarizedPoset& poset() const { return atlas_.poset(); }
  const ChainAtlas& atlas() const { return atlas_; }
  const PrimeField& field() const { return field_; }
  int size() const { return poset().size(); }
  // Level of the blocks making up component i: lambda(i), or xi+1 when i is maximal.
  int part_level(int i) const;

 private:
  ChainAtlas atlas_;
  PrimeField field_;
};

// Element of D_I: one block sum per component plus a multiple of 1. Since I
// is finite, 1 is the sum of the identities of the maximal components, and
// normalize() folds the scalar into them.
struct RingElement {
  std::vector<BlockSum> parts;
  std::uint32_t unit_scalar = 0;

  static RingElement zero(const RingContext& ctx);
  Mask support() const;
  bool is_zero() const;
  BlockSum total(const PrimeField& f) const;  // sum of all parts
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement normalize(const RingContext& ctx, RingElement x);
RingElement add(const RingContext& ctx, const RingElement& x, const RingElement& y);
RingElement sub(const RingContext& ctx, const RingElement& x, const RingElement& y);
RingElement scale(const RingContext& ctx, const RingElement& x, std::uint32_t d);
// Block products of components i and j go to min(i, j); incomparable
// components must multiply to zero.
RingElement mul(const RingContext& ctx, const RingElement& x, const RingElement& y);

// psi_i(d * e_{lambda,mu}) with lambda, mu in target coordinates.
RingElement gen_unit(const RingContext& ctx, int i, const Ordinal& lambda, const Ordinal& mu, std::uint32_t d = 1);
// Same generator addressed by block indices of the representative class.
RingElement gen_unit_local(const RingContext& ctx, int i, const Ordinal& lambda0, const Ordinal& mu0,
                           std::uint32_t d = 1);
RingElement gen_eYi(const RingContext& ctx, int i, const Interval& y);
RingElement gen_max(const RingContext& ctx, int m);
RingElement one(const RingContext& ctx);
// u_i: e_{Y(i)} for the first block of the representative class, or e_{X_i}
// for maximal i.
RingElement u_element(const RingContext& ctx, int i);

// Block indices of the representative class of i whose digits below the top
// are < budget.
std::vector<Ordinal> local_blocks(const RingContext& ctx, int i, std::uint32_t budget);

struct Generator {
  int component = -1;
  Ordinal row;  // representative-class coordinates; unused for maximal components
  Ordinal col;
  RingElement element;
};
// All matrix-unit generators with digits < budget, then one per maximal element.
std::vector<Generator> generator_family(const RingContext& ctx, std::uint32_t budget);

struct LocalEntry {
  Ordinal row;
  Ordinal col;
  std::uint32_t scalar;
};
// Coordinates of a block sum as an element of H_i; nullopt when it is not of
// that shape. Maximal components decode to a single entry with zero indices.
std::optional<std::vector<LocalEntry>> decode_component(const RingContext& ctx, int i, const BlockSum& part);
bool in_component(const RingContext& ctx, int i, const BlockSum& part);

RingElement random_element(const RingContext& ctx, const std::vector<Generator>& gens, Mask allowed,
                           int max_terms, std::mt19937_64& rng);

nlohmann::json element_json(const RingContext& ctx, const RingElement& x);

// H_{I \ upper}.
struct IdealHandle {
  Mask upper = 0;
};
IdealHandle ideal_of_upper(const RingContext& ctx, Mask upper);
bool membership(const RingContext& ctx, const IdealHandle& h, const RingElement& x);
// Products of H_{I \ s}-generators with every generator, on both sides, stay in
// H_{I \ s}. Accepts any subset s.
bool subset_closure_check(const RingContext& ctx, Mask s, const std::vector<Generator>& gens);
bool ideal_closure_check(const RingContext& ctx, const IdealHandle& h, const std::vector<Generator>& gens);

// phi_{K,J}: D_{I,J} -> D_{I,K} for upper K inside upper J.
RingElement quotient_projection(const RingContext& ctx, Mask k, Mask j, const RingElement& x);

// [H_{I_1}, ..., H_{I_xi}] as handles of their upper complements.
std::vector<IdealHandle> socle_chain(const RingContext& ctx);

struct Point {
  Ordinal x;
  Ordinal y;
  std::uint32_t value;
};
// A position where the matrix of s is nonzero; s must be nonzero.
Point nonzero_entry(const BlockSum& s);

// An idempotent e of the bottom layer of j with a * e != 0, for nonzero a
// supported on j.
RingElement essential_witness(const RingContext& ctx, Mask j, const RingElement& a);

// Components h whose generators act trivially on the simple module U_i.
Mask annihilator_components(const RingContext& ctx, int i, const std::vector<Generator>& gens);
bool annihilator_check(const RingContext& ctx, int i, const RingElement& x);
// Whether x kills U_i, decided by acting on u_i H_i.
bool acts_trivially(const RingContext& ctx, int i, const RingElement& x, const std::vector<Generator>& gens);
// The simple modules U_i ordered by inclusion of annihilators.
PolarizedPoset simp_poset(const RingContext& ctx, const std::vector<Generator>& gens);

struct LatticeReport {
  bool ok = true;
  int ideals = 0;
  std::string detail;
};
LatticeReport lattice_anti_isomorphism_check(const RingContext& ctx, const std::vector<Generator>& gens,
                                             int bound = 12);

std::vector<RingElement> component_idempotents(const RingContext& ctx);
bool is_central(const RingContext& ctx, const RingElement& e, const std::vector<Generator>& gens);

struct WellBehavedReport {
  bool well_behaved = true;
  std::vector<int> heights;  // h(U_i) read off the socle chain
  std::string detail;
};
WellBehavedReport well_behaved_report(const RingContext& ctx);

}  // namespace semiart

#endif  // SEMIART_RING_HPP
