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

#ifndef SEMIART_BLOCKMATRIX_HPP
#define SEMIART_BLOCKMATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "semiart/indexing.hpp"
#include "semiart/ordinal.hpp"

namespace semiart {

// Arithmetic in GF(p).
struct PrimeField {
  std::uint32_t p = 5;
  explicit PrimeField(std::uint32_t prime = 5);
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return (p - a) % p; }
  std::uint32_t inv(std::uint32_t a) const;
};

bool is_prime(std::uint64_t n);

// scalar * e_{X_{level,row}, X_{level,col}}: the entry at
// (B^level*row + rho, B^level*col + rho) is scalar for every rho < B^level.
struct PlacedBlock {
  int level = 0;
  Ordinal row;
  Ordinal col;
  std::uint32_t scalar = 1;
  friend bool operator==(const PlacedBlock&, const PlacedBlock&) = default;
};

std::optional<PlacedBlock> mul_blocks(const PlacedBlock& a, const PlacedBlock& b, const PrimeField& f);

// Finite sum of placed blocks, sorted by (level, row, col) with distinct
// positions and nonzero scalars.
class BlockSum {
 public:
  BlockSum() = default;
  explicit BlockSum(PlacedBlock b);
  static BlockSum from_blocks(std::vector<PlacedBlock> blocks, const PrimeField& f);

  const std::vector<PlacedBlock>& blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }
  std::size_t size() const { return blocks_.size(); }
  friend bool operator==(const BlockSum&, const BlockSum&) = default;

  nlohmann::json to_json() const;
  static BlockSum from_json(const nlohmann::json& j, const PrimeField& f);

 private:
  std::vector<PlacedBlock> blocks_;
};

BlockSum add(const BlockSum& a, const BlockSum& b, const PrimeField& f);
BlockSum sub(const BlockSum& a, const BlockSum& b, const PrimeField& f);
BlockSum scale(const BlockSum& a, std::uint32_t d, const PrimeField& f);
BlockSum mul(const BlockSum& a, const BlockSum& b, const PrimeField& f);

// phi_alpha(d * e_{lambda,mu}).
BlockSum phi(const IndexSpace& s, int alpha, const Ordinal& lambda, const Ordinal& mu, std::uint32_t d,
             const PrimeField& f);
// psi_i(d * e_{lambda,mu}) at level lambda(i): one block per chain class.
BlockSum psi(const ChainAtlas& atlas, int i, const Ordinal& lambda, const Ordinal& mu, std::uint32_t d,
             const PrimeField& f);

// Sparse square matrix over GF(p); rows hold (col, value) sorted by col.
struct SparseMatrix {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows;

  explicit SparseMatrix(std::size_t dim = 0) : n(dim), rows(dim) {}
  std::uint32_t at(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
  std::string to_csv() const;
};

SparseMatrix sparse_add(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& f);
SparseMatrix sparse_mul(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& f);
SparseMatrix sparse_identity(std::size_t n);

// Realize a block sum over the finite base of s. Throws IndexError when a
// digit below the top position is >= the base.
SparseMatrix evaluate_dense(const IndexSpace& s, const BlockSum& x, const PrimeField& f);
// Largest digit below the top position over every block index.
std::uint64_t max_digit(const IndexSpace& omega_space, const BlockSum& x);

}  // namespace semiart

#endif  // SEMIART_BLOCKMATRIX_HPP
