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

#include "semiart/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace semiart {

DenseModel::DenseModel(const RingContext& ctx, std::uint32_t base)
    : ctx_(&ctx),
      space_(IndexSpace::finite(base, ctx.atlas().space().xi, ctx.atlas().space().beth)),
      dim_(space_.extent().to_natural()) {}

SparseMatrix DenseModel::evaluate(const RingElement& x) const {
  return evaluate(normalize(*ctx_, x).total(ctx_->field()));
}

SparseMatrix DenseModel::evaluate(const BlockSum& x) const { return evaluate_dense(space_, x, ctx_->field()); }

bool validate_hom(const DenseModel& model, const RingContext& ctx, const RingElement& x, const RingElement& y) {
  SparseMatrix lhs = model.evaluate(mul(ctx, x, y));
  SparseMatrix rhs = sparse_mul(model.evaluate(x), model.evaluate(y), ctx.field());
  return lhs == rhs;
}

namespace {

void axpy(Coords& acc, const SparseVec& v, std::uint32_t s, const PrimeField& f) {
  for (auto [k, c] : v) acc[k] = f.add(acc[k], f.mul(s, c));
}

SparseVec to_sparse(const Coords& x) {
  SparseVec v;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k]) v.emplace_back(static_cast<std::uint32_t>(k), x[k]);
  return v;
}

}  // namespace

FormalAlgebra::FormalAlgebra(const RingContext& ctx, std::uint32_t budget)
    : ctx_(&ctx), basis_(generator_family(ctx, budget)), index_(ctx.size()) {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    index_[basis_[k].component][{basis_[k].row, basis_[k].col}] = static_cast<std::uint32_t>(k);
  std::size_t n = basis_.size();
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto c = from_element(semiart::mul(ctx, basis_[a].element, basis_[b].element));
      if (!c) throw std::logic_error("truncated algebra is not closed under multiplication");
      table_[a * n + b] = to_sparse(*c);
    }
}

Coords FormalAlgebra::mul(const Coords& x, const Coords& y) const {
  const PrimeField& f = ctx_->field();
  Coords out = zero();
  std::size_t n = dimension();
  SparseVec ys = to_sparse(y);
  for (std::size_t a = 0; a < n; ++a) {
    if (!x[a]) continue;
    for (auto [b, yb] : ys) axpy(out, table_[a * n + b], f.mul(x[a], yb), f);
  }
  return out;
}

Coords FormalAlgebra::add(const Coords& x, const Coords& y) const {
  Coords out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = ctx_->field().add(x[k], y[k]);
  return out;
}

Coords FormalAlgebra::one() const {
  Coords out = zero();
  for (std::size_t k = 0; k < dimension(); ++k)
    if (ctx_->poset().is_maximal(basis_[k].component)) out[k] = 1;
  return out;
}

RingElement FormalAlgebra::to_element(const Coords& x) const {
  RingElement out = RingElement::zero(*ctx_);
  for (std::size_t k = 0; k < dimension(); ++k)
    if (x[k]) out = semiart::add(*ctx_, out, semiart::scale(*ctx_, basis_[k].element, x[k]));
  return out;
}

std::optional<Coords> FormalAlgebra::from_element(const RingElement& x) const {
  RingElement a = normalize(*ctx_, x);
  Coords out = zero();
  for (int i : members(a.support())) {
    auto entries = decode_component(*ctx_, i, a.parts[i]);
    if (!entries) return std::nullopt;
    for (const auto& e : *entries) {
      auto it = index_[i].find({e.row, e.col});
      if (it == index_[i].end()) return std::nullopt;
      out[it->second] = e.scalar;
    }
  }
  return out;
}

Coords FormalAlgebra::random(std::mt19937_64& rng, int max_terms) const {
  std::uniform_int_distribution<int> terms(1, std::max(1, max_terms));
  std::uniform_int_distribution<std::size_t> pick(0, dimension() - 1);
  std::uniform_int_distribution<std::uint32_t> scalar(1, prime() - 1);
  Coords out = zero();
  for (int t = terms(rng); t > 0; --t) out[pick(rng)] = scalar(rng);
  return out;
}

std::optional<Coords> quasi_inverse(const FormalAlgebra& alg, const Coords& a) {
  const PrimeField& f = alg.context().field();
  std::size_t n = alg.dimension();
  // Column k of the system is a * b_k * a.
  std::vector<Coords> rows(n, Coords(n + 1, 0));
  SparseVec as = to_sparse(a);
  for (std::size_t k = 0; k < n; ++k) {
    Coords ab = alg.zero();
    for (auto [j, aj] : as) axpy(ab, alg.product(j, k), aj, f);
    Coords col = alg.mul(ab, a);
    for (std::size_t r = 0; r < n; ++r) rows[r][k] = col[r];
  }
  for (std::size_t r = 0; r < n; ++r) rows[r][n] = a[r];
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t p = rank;
    while (p < n && rows[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(rows[p], rows[rank]);
    std::uint32_t inv = f.inv(rows[rank][c]);
    for (std::size_t k = c; k <= n; ++k) rows[rank][k] = f.mul(rows[rank][k], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::uint32_t s = rows[r][c];
      for (std::size_t k = c; k <= n; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(s, rows[rank][k]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < n; ++r)
    if (rows[r][n] != 0) return std::nullopt;
  Coords x = alg.zero();
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rows[r][n];
  return x;
}

namespace {

// GF(2) arithmetic on algebras of dimension <= 12 with elements as bit masks.
struct BitAlgebra {
  std::size_t n;
  std::vector<std::uint32_t> table;  // product of basis a and b

  explicit BitAlgebra(const FormalAlgebra& alg) : n(alg.dimension()), table(n * n, 0) {
    if (alg.prime() != 2) throw BoundExceeded("unit-regular spot check needs p = 2");
    if (n > 12) throw BoundExceeded("unit-regular spot check needs dimension <= 12");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (auto [k, v] : alg.product(a, b))
          if (v & 1) table[a * n + b] |= 1u << k;
  }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t out = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!((x >> a) & 1)) continue;
      for (std::size_t b = 0; b < n; ++b)
        if ((y >> b) & 1) out ^= table[a * n + b];
    }
    return out;
  }

  bool is_unit(std::uint32_t u) const {
    // Left multiplication by u is injective.
    std::vector<std::uint32_t> cols;
    for (std::size_t k = 0; k < n; ++k) cols.push_back(mul(u, 1u << k));
    std::size_t rank = 0;
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t p = rank;
      while (p < cols.size() && !((cols[p] >> b) & 1)) ++p;
      if (p == cols.size()) continue;
      std::swap(cols[p], cols[rank]);
      for (std::size_t r = 0; r < cols.size(); ++r)
        if (r != rank && ((cols[r] >> b) & 1)) cols[r] ^= cols[rank];
      ++rank;
    }
    return rank == n;
  }

  std::vector<std::uint32_t> units() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 0; u < (1u << n); ++u)
      if (is_unit(u)) out.push_back(u);
    return out;
  }

  bool has_unit_inner(std::uint32_t a, const std::vector<std::uint32_t>& units) const {
    std::vector<std::uint32_t> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = mul(mul(a, 1u << k), a);
    for (std::uint32_t u : units) {
      std::uint32_t v = 0;
      for (std::size_t k = 0; k < n; ++k)
        if ((u >> k) & 1) v ^= col[k];
      if (v == a) return true;
    }
    return false;
  }
};

std::uint32_t to_bits(const Coords& a) {
  std::uint32_t m = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & 1) m |= 1u << k;
  return m;
}

}  // namespace

bool unit_regular_spot_check(const FormalAlgebra& alg, const Coords& a) {
  BitAlgebra b(alg);
  return b.has_unit_inner(to_bits(a), b.units());
}

UnitRegularSweep unit_regular_sweep(const FormalAlgebra& alg) {
  BitAlgebra b(alg);
  auto units = b.units();
  UnitRegularSweep out;
  out.units = units.size();
  for (std::uint32_t a = 0; a < (1u << b.n); ++a) {
    ++out.elements;
    if (!b.has_unit_inner(a, units)) {
      Coords c(b.n, 0);
      for (std::size_t k = 0; k < b.n; ++k) c[k] = (a >> k) & 1;
      out.counterexample = c;
      break;
    }
  }
  return out;
}

namespace {

// Row echelon basis keyed by leading index; leading coefficients are 1.
class Echelon {
 public:
  explicit Echelon(const PrimeField& f) : f_(f) {}

  // Adds v to the span; returns false when v was already in it.
  bool insert(SparseVec v) {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) break;
      v = combine(v, it->second, f_.neg(v.front().second));
    }
    if (v.empty()) return false;
    std::uint32_t inv = f_.inv(v.front().second);
    for (auto& e : v) e.second = f_.mul(e.second, inv);
    rows_.emplace(v.front().first, std::move(v));
    return true;
  }

  Subspace rref() const {
    std::map<std::uint32_t, SparseVec> rows = rows_;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      for (auto jt = rows.begin(); jt->first != it->first; ++jt) {
        SparseVec& r = jt->second;
        auto pos = std::lower_bound(r.begin(), r.end(), std::pair<std::uint32_t, std::uint32_t>(it->first, 0));
        if (pos != r.end() && pos->first == it->first) r = combine(r, it->second, f_.neg(pos->second));
      }
    }
    Subspace out;
    for (auto& [k, r] : rows) out.push_back(r);
    return out;
  }

 private:
  SparseVec combine(const SparseVec& a, const SparseVec& b, std::uint32_t s) const {
    SparseVec out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        std::uint32_t v = f_.mul(s, b[j].second);
        if (v) out.emplace_back(b[j].first, v);
        ++j;
      } else {
        std::uint32_t v = f_.add(a[i].second, f_.mul(s, b[j].second));
        if (v) out.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  const PrimeField& f_;
  std::map<std::uint32_t, SparseVec> rows_;
};

SparseVec sparse_mul_basis(const FormalAlgebra& alg, const SparseVec& w, std::size_t k, bool left) {
  const PrimeField& f = alg.context().field();
  SparseVec acc;
  for (auto [j, wj] : w)
    for (auto [c, v] : left ? alg.product(k, j) : alg.product(j, k)) acc.emplace_back(c, f.mul(wj, v));
  std::sort(acc.begin(), acc.end());
  SparseVec out;
  for (auto [c, v] : acc) {
    if (!out.empty() && out.back().first == c) {
      out.back().second = f.add(out.back().second, v);
      if (!out.back().second) out.pop_back();
    } else if (v) {
      out.emplace_back(c, v);
    }
  }
  return out;
}

}  // namespace

Subspace principal_ideal(const FormalAlgebra& alg, const SparseVec& generator) {
  const PrimeField& f = alg.context().field();
  std::size_t n = alg.dimension();
  Echelon ech(f);
  std::deque<SparseVec> work;
  if (ech.insert(generator)) work.push_back(generator);
  while (!work.empty()) {
    SparseVec w = std::move(work.front());
    work.pop_front();
    for (std::size_t k = 0; k < n; ++k)
      for (bool left : {true, false}) {
        SparseVec p = sparse_mul_basis(alg, w, k, left);
        if (!p.empty() && ech.insert(p)) work.push_back(std::move(p));
      }
  }
  return ech.rref();
}

std::vector<Subspace> ideal_lattice_bruteforce(const FormalAlgebra& alg, std::size_t bound) {
  if (alg.dimension() > bound) throw BoundExceeded("ideal enumeration limited to dimension " + std::to_string(bound));
  const PrimeField& f = alg.context().field();
  std::set<Subspace> lattice;
  lattice.insert(Subspace{});
  for (std::size_t b = 0; b < alg.dimension(); ++b)
    lattice.insert(principal_ideal(alg, {{static_cast<std::uint32_t>(b), 1}}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subspace> current(lattice.begin(), lattice.end());
    for (std::size_t x = 0; x < current.size(); ++x)
      for (std::size_t y = x + 1; y < current.size(); ++y) {
        Echelon ech(f);
        for (const auto& r : current[x]) ech.insert(r);
        for (const auto& r : current[y]) ech.insert(r);
        if (lattice.insert(ech.rref()).second) grew = true;
      }
  }
  return {lattice.begin(), lattice.end()};
}

Subspace handle_subspace(const FormalAlgebra& alg, Mask upper) {
  Subspace out;
  for (std::size_t k = 0; k < alg.dimension(); ++k)
    if (!contains(upper, alg.component(k))) out.push_back({{static_cast<std::uint32_t>(k), 1}});
  return out;
}

}  // namespace semiart
