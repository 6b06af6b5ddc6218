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

#include <random>

#include <gtest/gtest.h>

#include "semiart/blockmatrix.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_blocks.hpp"

using semiart::BlockSum;
using semiart::IndexSpace;
using semiart::Ordinal;
using semiart::PlacedBlock;
using semiart::PrimeField;

namespace {

Ordinal P(const char* s) { return Ordinal::parse(s); }
const PrimeField F5(5);

oracle::Dense naive(const BlockSum& s, std::uint32_t n, int xi, int beth) {
  return oracle::naive_dense(s, n, xi, beth, F5.p);
}

TEST(PrimeFieldTest, Arithmetic) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.neg(3), 4u);
  EXPECT_EQ(f.sub(2, 5), 4u);
}

TEST(BlockProduct, MatrixUnitComposition) {
  PlacedBlock yz{1, 2, 3, 2}, zw{1, 3, 4, 3}, other{1, 5, 4, 1};
  auto r = semiart::mul_blocks(yz, zw, F5);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (PlacedBlock{1, 2, 4, 1}));
  EXPECT_FALSE(semiart::mul_blocks(yz, other, F5));
}

TEST(BlockProduct, CoarseTimesFine) {
  // Base 2, xi = 1, two chains: natural index 3 at level 1 has digits (1, 1).
  PlacedBlock a{2, 0, 0, 2}, b{1, 1, P("w + 1"), 4};
  auto r = semiart::mul_blocks(a, b, F5);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (PlacedBlock{1, 1, P("w + 1"), 3}));
  auto da = naive(BlockSum(a), 2, 1, 2), db = naive(BlockSum(b), 2, 1, 2);
  EXPECT_EQ(naive(BlockSum(*r), 2, 1, 2), oracle::dense_mul(da, db, 5));
  // Fine times coarse: column 1 at level 1 sits inside level-2 block 0.
  PlacedBlock c{1, P("w + 1"), 1, 1};
  auto r2 = semiart::mul_blocks(c, a, F5);
  ASSERT_TRUE(r2);
  EXPECT_EQ(*r2, (PlacedBlock{1, P("w + 1"), 1, 2}));
  EXPECT_EQ(naive(BlockSum(*r2), 2, 1, 2), oracle::dense_mul(naive(BlockSum(c), 2, 1, 2), da, 5));
  EXPECT_FALSE(semiart::mul_blocks(c, PlacedBlock{2, 1, 0, 1}, F5));
  auto r3 = semiart::mul_blocks(PlacedBlock{1, P("w + 1"), 1, 1}, PlacedBlock{2, 0, 1, 1}, F5);
  ASSERT_TRUE(r3);
  EXPECT_EQ(*r3, (PlacedBlock{1, P("w + 1"), P("w + 1"), 1}));
}

TEST(BlockSumTest, NormalForm) {
  std::vector<PlacedBlock> blocks{{1, 2, 3, 2}, {0, 1, 1, 1}, {1, 2, 3, 3}, {2, 0, 0, 4}};
  auto s = BlockSum::from_blocks(blocks, F5);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.blocks()[0], (PlacedBlock{0, 1, 1, 1}));
  EXPECT_EQ(s.blocks()[1], (PlacedBlock{2, 0, 0, 4}));
  std::mt19937_64 rng(41);
  for (int k = 0; k < 20; ++k) {
    std::shuffle(blocks.begin(), blocks.end(), rng);
    EXPECT_EQ(BlockSum::from_blocks(blocks, F5), s);
  }
  EXPECT_TRUE(BlockSum::from_blocks({{1, 0, 0, 5}}, F5).is_zero());
}

TEST(BlockSumTest, JsonAndCsv) {
  std::mt19937_64 rng(42);
  auto s = oracle::random_block_sum(rng, 2, 2, 3, F5, 5);
  EXPECT_EQ(BlockSum::from_json(s.to_json(), F5), s);
  auto m = semiart::evaluate_dense(IndexSpace::finite(2, 0, 1), BlockSum(PlacedBlock{0, 1, 0, 3}), F5);
  EXPECT_EQ(m.to_csv(), "0,0\n3,0\n");
}

TEST(BlockSumTest, RingLaws) {
  std::mt19937_64 rng(43);
  const int xi = 2, beth = 2;
  const std::uint32_t n = 3;
  for (int k = 0; k < 300; ++k) {
    auto a = oracle::random_block_sum(rng, xi, beth, n, F5, 4);
    auto b = oracle::random_block_sum(rng, xi, beth, n, F5, 4);
    auto c = oracle::random_block_sum(rng, xi, beth, n, F5, 4);
    EXPECT_TRUE(mul(a, BlockSum(), F5).is_zero());
    EXPECT_EQ(mul(add(a, b, F5), c, F5), add(mul(a, c, F5), mul(b, c, F5), F5));
    EXPECT_EQ(mul(c, add(a, b, F5), F5), add(mul(c, a, F5), mul(c, b, F5), F5));
    auto left = mul(mul(a, b, F5), c, F5);
    auto right = mul(a, mul(b, c, F5), F5);
    EXPECT_EQ(left, right);
    if (k < 30) {
      auto da = naive(a, n, xi, beth), db = naive(b, n, xi, beth), dc = naive(c, n, xi, beth);
      EXPECT_EQ(naive(left, n, xi, beth), oracle::dense_mul(oracle::dense_mul(da, db, 5), dc, 5));
    }
    EXPECT_TRUE(sub(a, a, F5).is_zero());
    EXPECT_EQ(scale(a, 2, F5), add(a, a, F5));
  }
}

TEST(DenseEvaluation, Basics) {
  auto s = IndexSpace::finite(2, 1, 2);
  auto id = semiart::evaluate_dense(s, BlockSum::from_blocks({{2, 0, 0, 1}, {2, 1, 1, 1}}, F5), F5);
  EXPECT_EQ(id, semiart::sparse_identity(8));
  auto unit = semiart::evaluate_dense(s, BlockSum(PlacedBlock{0, P("w + 1"), P("w^2 + 1"), 2}), F5);
  EXPECT_EQ(unit.nonzeros(), 1u);
  EXPECT_EQ(unit.at(3, 5), 2u);
  EXPECT_THROW(semiart::evaluate_dense(s, BlockSum(PlacedBlock{1, 2, 0, 1}), F5), semiart::IndexError);
}

TEST(DenseEvaluation, MatchesNaiveAndIsMultiplicative) {
  std::mt19937_64 rng(44);
  for (auto [xi, beth] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{2, 3}}) {
    auto s = IndexSpace::finite(3, xi, beth);
    for (int k = 0; k < 170; ++k) {
      auto a = oracle::random_block_sum(rng, xi, beth, 3, F5, 4);
      auto b = oracle::random_block_sum(rng, xi, beth, 3, F5, 4);
      auto da = semiart::evaluate_dense(s, a, F5);
      auto db = semiart::evaluate_dense(s, b, F5);
      EXPECT_EQ(semiart::evaluate_dense(s, mul(a, b, F5), F5), semiart::sparse_mul(da, db, F5));
      EXPECT_EQ(semiart::evaluate_dense(s, add(a, b, F5), F5), semiart::sparse_add(da, db, F5));
      if (k < 20) {
        EXPECT_EQ(oracle::to_dense(da), naive(a, 3, xi, beth));
        EXPECT_EQ(oracle::to_dense(semiart::evaluate_dense(s, mul(a, b, F5), F5)),
                  oracle::dense_mul(naive(a, 3, xi, beth), naive(b, 3, xi, beth), 5));
      }
    }
  }
}

TEST(DenseEvaluation, CoarseIdempotentIsSumOfRefinements) {
  auto s = IndexSpace::finite(2, 2, 2);
  auto w = IndexSpace::omega(2, 2);
  for (int level = 1; level <= 3; ++level)
    for (std::uint64_t b = 0; b < s.blocks_at(level).to_natural(); ++b) {
      // Rewrite the natural block index with omega digits.
      auto d = semiart::digits(b, 2, static_cast<std::uint32_t>(3 - level));
      Ordinal::Terms t;
      if (!d.head.is_zero()) t.push_back({static_cast<std::uint32_t>(3 - level), d.head.to_natural()});
      for (std::size_t k = 0; k < d.digits.size(); ++k)
        if (!d.digits[k].is_zero())
          t.push_back({static_cast<std::uint32_t>(d.digits.size() - 1 - k), d.digits[k].to_natural()});
      Ordinal block = Ordinal::from_terms(t);
      auto coarse = semiart::evaluate_dense(s, BlockSum(PlacedBlock{level, block, block, 1}), F5);
      for (int finer = 0; finer < level; ++finer) {
        auto r = semiart::refine(w, {level, block}, finer);
        std::vector<PlacedBlock> kids;
        std::uint64_t count = 1;
        for (int k = 0; k < level - finer; ++k) count *= 2;
        for (std::uint64_t mu = 0; mu < count; ++mu) {
          auto dm = semiart::digits(mu, 2, static_cast<std::uint32_t>(level - finer));
          Ordinal::Terms low;
          for (std::size_t k = 0; k < dm.digits.size(); ++k)
            if (!dm.digits[k].is_zero())
              low.push_back({static_cast<std::uint32_t>(dm.digits.size() - 1 - k), dm.digits[k].to_natural()});
          auto kid = r.child(Ordinal::from_terms(low));
          kids.push_back({finer, kid.block, kid.block, 1});
        }
        auto sum = semiart::evaluate_dense(s, BlockSum::from_blocks(kids, F5), F5);
        EXPECT_EQ(sum, coarse);
        // Distinct children are orthogonal.
        for (std::size_t u = 0; u < kids.size(); ++u)
          for (std::size_t v = 0; v < kids.size(); ++v)
            if (u != v) EXPECT_FALSE(semiart::mul_blocks(kids[u], kids[v], F5));
      }
    }
}

TEST(Embeddings, PhiIsMultiplicative) {
  auto s = IndexSpace::omega(2, 2);
  std::mt19937_64 rng(45);
  for (int alpha = 0; alpha <= 3; ++alpha)
    for (int k = 0; k < 50; ++k) {
      int e = 3 - alpha;
      auto l = oracle::random_block_index(rng, e, 2, 3);
      auto m = oracle::random_block_index(rng, e, 2, 3);
      auto v = oracle::random_block_index(rng, e, 2, 3);
      EXPECT_EQ(mul(phi(s, alpha, l, m, 2, F5), phi(s, alpha, m, v, 3, F5), F5), phi(s, alpha, l, v, 1, F5));
      if (m != v) EXPECT_TRUE(mul(phi(s, alpha, l, m, 1, F5), phi(s, alpha, v, l, 1, F5), F5).is_zero());
      EXPECT_EQ(phi(s, alpha, l, l, 1, F5), BlockSum(PlacedBlock{alpha, l, l, 1}));
    }
  EXPECT_THROW(phi(s, 1, P("w^2*2"), 0, 1, F5), semiart::IndexError);
  EXPECT_THROW(phi(s, 4, 0, 0, 1, F5), semiart::IndexError);
}

TEST(Embeddings, PsiIsMultiplicative) {
  std::mt19937_64 rng(46);
  for (const auto& p : oracle::all_posets_up_to(4)) {
    semiart::ChainAtlas at(p);
    for (int i = 0; i < p.size(); ++i) {
      int e = at.exponent(i);
      for (int k = 0; k < 10; ++k) {
        auto l = oracle::random_block_index(rng, e, at.space().beth, 3);
        auto m = oracle::random_block_index(rng, e, at.space().beth, 3);
        auto v = oracle::random_block_index(rng, e, at.space().beth, 3);
        auto pl = psi(at, i, l, m, 2, F5);
        EXPECT_EQ(pl.size(), static_cast<std::size_t>(at.class_count(i)));
        EXPECT_EQ(mul(pl, psi(at, i, m, v, 3, F5), F5), psi(at, i, l, v, 1, F5));
        if (m != v) EXPECT_TRUE(mul(pl, psi(at, i, v, l, 1, F5), F5).is_zero());
      }
    }
  }
}

TEST(Embeddings, PsiDiagonalsAreOrthogonalIdempotents) {
  semiart::ChainAtlas at(fixtures::diamond());
  for (int i = 0; i < 4; ++i) {
    std::vector<BlockSum> es;
    for (std::uint64_t top = 0; top < 2; ++top)
      for (std::uint64_t low = 0; low < 3; ++low) {
        Ordinal mu = add(Ordinal::omega_pow(static_cast<std::uint32_t>(at.exponent(i)), top), low);
        es.push_back(psi(at, i, mu, mu, 1, F5));
      }
    for (std::size_t u = 0; u < es.size(); ++u)
      for (std::size_t v = 0; v < es.size(); ++v) {
        auto pr = mul(es[u], es[v], F5);
        if (u == v)
          EXPECT_EQ(pr, es[u]);
        else
          EXPECT_TRUE(pr.is_zero());
      }
    // Each e_Y(i) is the sum of its per-class blocks, matching y_of.
    auto y = at.y_of(i, {at.level(i), 1});
    auto e1 = psi(at, i, 1, 1, 1, F5);
    ASSERT_EQ(e1.size(), y.size());
    for (const auto& iv : y) {
      bool found = false;
      for (const auto& b : e1.blocks()) found = found || (b.row == iv.block && b.col == iv.block && b.level == iv.level);
      EXPECT_TRUE(found);
    }
  }
}

// e_{X_A} e_{Y(i)} psi_j(e_{V,W}) e_{X_A} is a single block at level lambda(i).
void check_sandwich(const semiart::PolarizedPoset& p) {
  semiart::ChainAtlas at(p);
  std::mt19937_64 rng(47);
  int xi = at.space().xi;
  int dense_checked = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (!p.leq(i, j)) continue;
      for (int a = 0; a < at.class_count(i); ++a) {
        std::vector<PlacedBlock> xa;
        for (int chi : at.chain_class(i, a).chains) xa.push_back({xi + 1, chi, chi, 1});
        auto ea = BlockSum::from_blocks(xa, F5);
        for (int k = 0; k < 30; ++k) {
          auto y = oracle::random_block_index(rng, at.exponent(i), at.space().beth, 2);
          auto v = oracle::random_block_index(rng, at.exponent(j), at.space().beth, 2);
          auto w = oracle::random_block_index(rng, at.exponent(j), at.space().beth, 2);
          auto prod = mul(mul(mul(ea, psi(at, i, y, y, 1, F5), F5), psi(at, j, v, w, 1, F5), F5), ea, F5);
          EXPECT_LE(prod.size(), 1u);
          for (const auto& b : prod.blocks()) EXPECT_EQ(b.level, at.level(i));
          auto f = IndexSpace::finite(3, xi, at.space().beth);
          std::vector<BlockSum> parts{ea, psi(at, i, y, y, 1, F5), psi(at, j, v, w, 1, F5)};
          bool fits = true;
          for (const auto& part : parts) fits = fits && semiart::max_digit(at.space(), part) < 3;
          if (!fits) continue;
          ++dense_checked;
          auto lhs = semiart::evaluate_dense(f, prod, F5);
          auto rhs = semiart::sparse_mul(
              semiart::sparse_mul(semiart::sparse_mul(semiart::evaluate_dense(f, ea, F5),
                                                      semiart::evaluate_dense(f, psi(at, i, y, y, 1, F5), F5), F5),
                                  semiart::evaluate_dense(f, psi(at, j, v, w, 1, F5), F5), F5),
              semiart::evaluate_dense(f, ea, F5), F5);
          EXPECT_EQ(lhs, rhs);
        }
      }
    }
  EXPECT_GT(dense_checked, 0);
}

TEST(Embeddings, SandwichIsOneBlock) {
  check_sandwich(fixtures::diamond());
  check_sandwich(fixtures::chain(2));
}

}  // namespace
