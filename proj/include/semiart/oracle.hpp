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

#ifndef SEMIART_ORACLE_HPP
#define SEMIART_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "semiart/blockmatrix.hpp"
#include "semiart/ring.hpp"

namespace semiart {

// Concrete matrices of size n^(xi+1) * beth over GF(p).
class DenseModel {
 public:
  DenseModel(const RingContext& ctx, std::uint32_t base);

  const IndexSpace& space() const { return space_; }
  std::uint64_t dimension() const { return dim_; }
  SparseMatrix evaluate(const RingElement& x) const;
  SparseMatrix evaluate(const BlockSum& x) const;

 private:
  const RingContext* ctx_;
  IndexSpace space_;
  std::uint64_t dim_;
};

// dense(x * y) == dense(x) * dense(y); throws IndexError on a digit >= n.
bool validate_hom(const DenseModel& model, const RingContext& ctx, const RingElement& x, const RingElement& y);

using SparseVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (index, nonzero value), sorted
using Coords = std::vector<std::uint32_t>;                              // dense coordinates

// The subalgebra spanned by the matrix-unit generators with digits < budget
// and the identities of the maximal components, with structure constants
// taken from ring multiplication.
class FormalAlgebra {
 public:
  FormalAlgebra(const RingContext& ctx, std::uint32_t budget);

  const RingContext& context() const { return *ctx_; }
  std::size_t dimension() const { return basis_.size(); }
  std::uint32_t prime() const { return ctx_->field().p; }
  const Generator& basis(std::size_t k) const { return basis_[k]; }
  int component(std::size_t k) const { return basis_[k].component; }
  // Product of basis elements a and b.
  const SparseVec& product(std::size_t a, std::size_t b) const { return table_[a * dimension() + b]; }

  Coords mul(const Coords& x, const Coords& y) const;
  Coords add(const Coords& x, const Coords& y) const;
  Coords one() const;
  Coords zero() const { return Coords(dimension(), 0); }
  RingElement to_element(const Coords& x) const;
  std::optional<Coords> from_element(const RingElement& x) const;
  Coords random(std::mt19937_64& rng, int max_terms) const;

 private:
  const RingContext* ctx_;
  std::vector<Generator> basis_;
  std::vector<std::map<std::pair<Ordinal, Ordinal>, std::uint32_t>> index_;  // per component
  std::vector<SparseVec> table_;
};

// x with a*x*a == a, by an exact linear solve over GF(p).
std::optional<Coords> quasi_inverse(const FormalAlgebra& alg, const Coords& a);

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search for a unit u with a*u*a == a. Needs p = 2 and dimension <= 12.
bool unit_regular_spot_check(const FormalAlgebra& alg, const Coords& a);

struct UnitRegularSweep {
  std::size_t elements = 0;
  std::size_t units = 0;
  std::optional<Coords> counterexample;
};
// Runs the spot check on every element of the algebra.
UnitRegularSweep unit_regular_sweep(const FormalAlgebra& alg);

// Subspace in reduced row echelon form: rows sorted by pivot.
using Subspace = std::vector<SparseVec>;

// Two-sided ideal generated by one element, in reduced echelon form.
Subspace principal_ideal(const FormalAlgebra& alg, const SparseVec& generator);
// The ideals generated by single basis elements, closed under sums, with 0.
std::vector<Subspace> ideal_lattice_bruteforce(const FormalAlgebra& alg, std::size_t bound = 512);
// Span of the basis elements whose component lies outside upper.
Subspace handle_subspace(const FormalAlgebra& alg, Mask upper);

}  // namespace semiart

#endif  // SEMIART_ORACLE_HPP
