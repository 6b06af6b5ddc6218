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

#include "semiart/blockmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace semiart {

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("field size " + std::to_string(prime) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p == 0) throw std::domain_error("zero has no inverse");
  std::uint32_t r = 1;
  std::uint32_t b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// x = w^k * high + low with low < w^k.
bool high_equals(const Ordinal& x, std::uint32_t k, const Ordinal& target) {
  const auto& xt = x.terms();
  const auto& tt = target.terms();
  std::size_t n = 0;
  while (n < xt.size() && xt[n].exp >= k) ++n;
  if (n != tt.size()) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (xt[j].exp - k != tt[j].exp || xt[j].coef != tt[j].coef) return false;
  return true;
}

// w^k * head + (terms of x below w^k).
Ordinal graft(const Ordinal& head, std::uint32_t k, const Ordinal& x) {
  Ordinal::Terms out;
  for (const auto& t : head.terms()) out.push_back({t.exp + k, t.coef});
  for (const auto& t : x.terms())
    if (t.exp < k) out.push_back(t);
  return Ordinal::from_terms(std::move(out));
}

bool position_less(const PlacedBlock& a, const PlacedBlock& b) {
  if (a.level != b.level) return a.level < b.level;
  if (auto c = a.row <=> b.row; c != 0) return c < 0;
  return a.col < b.col;
}

bool same_position(const PlacedBlock& a, const PlacedBlock& b) {
  return a.level == b.level && a.row == b.row && a.col == b.col;
}

}  // namespace

std::optional<PlacedBlock> mul_blocks(const PlacedBlock& a, const PlacedBlock& b, const PrimeField& f) {
  std::uint32_t d = f.mul(a.scalar, b.scalar);
  if (d == 0) return std::nullopt;
  if (a.level >= b.level) {
    auto k = static_cast<std::uint32_t>(a.level - b.level);
    if (!high_equals(b.row, k, a.col)) return std::nullopt;
    return PlacedBlock{b.level, graft(a.row, k, b.row), b.col, d};
  }
  auto k = static_cast<std::uint32_t>(b.level - a.level);
  if (!high_equals(a.col, k, b.row)) return std::nullopt;
  return PlacedBlock{a.level, a.row, graft(b.col, k, a.col), d};
}

BlockSum::BlockSum(PlacedBlock b) {
  if (b.scalar != 0) blocks_.push_back(std::move(b));
}

BlockSum BlockSum::from_blocks(std::vector<PlacedBlock> blocks, const PrimeField& f) {
  std::sort(blocks.begin(), blocks.end(), position_less);
  BlockSum out;
  for (auto& b : blocks) {
    b.scalar %= f.p;
    if (!out.blocks_.empty() && same_position(out.blocks_.back(), b)) {
      auto& last = out.blocks_.back();
      last.scalar = f.add(last.scalar, b.scalar);
      if (last.scalar == 0) out.blocks_.pop_back();
    } else if (b.scalar != 0) {
      out.blocks_.push_back(std::move(b));
    }
  }
  return out;
}

nlohmann::json BlockSum::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : blocks_)
    arr.push_back({{"level", b.level}, {"row", b.row.str()}, {"col", b.col.str()}, {"scalar", b.scalar}});
  return arr;
}

BlockSum BlockSum::from_json(const nlohmann::json& j, const PrimeField& f) {
  std::vector<PlacedBlock> blocks;
  for (const auto& r : j)
    blocks.push_back({r.at("level").get<int>(), Ordinal::parse(r.at("row").get<std::string>()),
                      Ordinal::parse(r.at("col").get<std::string>()), r.at("scalar").get<std::uint32_t>()});
  return from_blocks(std::move(blocks), f);
}

BlockSum add(const BlockSum& a, const BlockSum& b, const PrimeField& f) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  std::vector<PlacedBlock> all = a.blocks();
  all.insert(all.end(), b.blocks().begin(), b.blocks().end());
  return BlockSum::from_blocks(std::move(all), f);
}

BlockSum scale(const BlockSum& a, std::uint32_t d, const PrimeField& f) {
  std::vector<PlacedBlock> out = a.blocks();
  for (auto& b : out) b.scalar = f.mul(b.scalar, d);
  return BlockSum::from_blocks(std::move(out), f);
}

BlockSum sub(const BlockSum& a, const BlockSum& b, const PrimeField& f) {
  return add(a, scale(b, f.neg(1), f), f);
}

BlockSum mul(const BlockSum& a, const BlockSum& b, const PrimeField& f) {
  std::vector<PlacedBlock> out;
  for (const auto& x : a.blocks())
    for (const auto& y : b.blocks())
      if (auto z = mul_blocks(x, y, f)) out.push_back(std::move(*z));
  return BlockSum::from_blocks(std::move(out), f);
}

BlockSum phi(const IndexSpace& s, int alpha, const Ordinal& lambda, const Ordinal& mu, std::uint32_t d,
             const PrimeField& f) {
  if (alpha < 0 || alpha > s.xi + 1) throw IndexError("level out of range");
  Ordinal bound = s.blocks_at(alpha);
  if (lambda >= bound || mu >= bound) throw IndexError("block index out of range for level");
  return BlockSum(PlacedBlock{alpha, lambda, mu, d % f.p});
}

BlockSum psi(const ChainAtlas& atlas, int i, const Ordinal& lambda, const Ordinal& mu, std::uint32_t d,
             const PrimeField& f) {
  int level = atlas.level(i);
  Ordinal bound = atlas.space().blocks_at(level);
  if (lambda >= bound || mu >= bound) throw IndexError("block index out of range for level");
  std::vector<PlacedBlock> blocks;
  for (int a = 0; a < atlas.class_count(i); ++a)
    blocks.push_back({level, atlas.k_inv(i, a, lambda), atlas.k_inv(i, a, mu), d});
  return BlockSum::from_blocks(std::move(blocks), f);
}

std::uint32_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), std::pair<std::uint32_t, std::uint32_t>(c, 0));
  return it != row.end() && it->first == c ? it->second : 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

std::string SparseMatrix::to_csv() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t k = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (c) os << ',';
      if (k < rows[r].size() && rows[r][k].first == c)
        os << rows[r][k++].second;
      else
        os << 0;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

void compress(std::vector<std::pair<std::uint32_t, std::uint32_t>>& row, const PrimeField& f) {
  std::sort(row.begin(), row.end());
  std::size_t w = 0;
  for (std::size_t k = 0; k < row.size();) {
    std::uint32_t c = row[k].first;
    std::uint32_t v = 0;
    for (; k < row.size() && row[k].first == c; ++k) v = f.add(v, row[k].second);
    if (v) row[w++] = {c, v};
  }
  row.resize(w);
}

}  // namespace

SparseMatrix sparse_add(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& f) {
  SparseMatrix out(a.n);
  for (std::size_t r = 0; r < a.n; ++r) {
    out.rows[r] = a.rows[r];
    out.rows[r].insert(out.rows[r].end(), b.rows[r].begin(), b.rows[r].end());
    compress(out.rows[r], f);
  }
  return out;
}

SparseMatrix sparse_mul(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& f) {
  SparseMatrix out(a.n);
  for (std::size_t r = 0; r < a.n; ++r) {
    auto& row = out.rows[r];
    for (auto [k, v] : a.rows[r])
      for (auto [c, w] : b.rows[k]) row.emplace_back(c, f.mul(v, w));
    compress(row, f);
  }
  return out;
}

SparseMatrix sparse_identity(std::size_t n) {
  SparseMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) out.rows[r].emplace_back(static_cast<std::uint32_t>(r), 1);
  return out;
}

SparseMatrix evaluate_dense(const IndexSpace& s, const BlockSum& x, const PrimeField& f) {
  if (s.is_omega()) throw IndexError("dense evaluation needs a finite base");
  std::uint64_t N = s.extent().to_natural();
  SparseMatrix out(N);
  for (const auto& b : x.blocks()) {
    auto top = static_cast<std::uint32_t>(s.xi + 1 - b.level);
    auto r = evaluate_at_base(b.row, s.base, top);
    auto c = evaluate_at_base(b.col, s.base, top);
    if (!r || !c) throw IndexError("block digit not below base " + std::to_string(s.base));
    std::uint64_t width = s.pow(b.level).to_natural();
    if ((*r + 1) * width > N || (*c + 1) * width > N) throw IndexError("block outside the index space");
    for (std::uint64_t rho = 0; rho < width; ++rho)
      out.rows[*r * width + rho].emplace_back(static_cast<std::uint32_t>(*c * width + rho), b.scalar % f.p);
  }
  for (auto& row : out.rows) compress(row, f);
  return out;
}

std::uint64_t max_digit(const IndexSpace& s, const BlockSum& x) {
  std::uint64_t m = 0;
  for (const auto& b : x.blocks()) {
    auto top = static_cast<std::uint32_t>(s.xi + 1 - b.level);
    m = std::max({m, max_low_digit(b.row, top), max_low_digit(b.col, top)});
  }
  return m;
}

}  // namespace semiart
