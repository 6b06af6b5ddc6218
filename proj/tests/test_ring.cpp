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

#include "semiart/oracle.hpp"
#include "semiart/ring.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using semiart::Generator;
using semiart::Mask;
using semiart::Ordinal;
using semiart::RingContext;
using semiart::RingElement;

namespace {

Ordinal P(const char* s) { return Ordinal::parse(s); }

int idx(const RingContext& ctx, const char* name) { return ctx.poset().index_of(name); }

TEST(RingGenerators, Identities) {
  RingContext ctx(fixtures::diamond());
  for (int i : {idx(ctx, "a"), idx(ctx, "b"), idx(ctx, "c")}) {
    auto e = semiart::gen_eYi(ctx, i, {ctx.atlas().level(i), P("w + 1")});
    EXPECT_EQ(mul(ctx, e, e), e);
    EXPECT_EQ(e.support(), semiart::bit(i));
  }
  auto v = fixtures::two_components();
  RingContext c2(v);
  auto V = semiart::gen_max(c2, idx(c2, "V"));
  auto W = semiart::gen_max(c2, idx(c2, "W"));
  EXPECT_TRUE(mul(c2, V, W).is_zero());
  EXPECT_EQ(mul(c2, V, V), V);
  EXPECT_EQ(semiart::one(c2), add(c2, V, W));
  EXPECT_THROW(semiart::gen_max(c2, idx(c2, "U0")), std::invalid_argument);
  EXPECT_THROW(semiart::gen_unit(c2, idx(c2, "V"), 0, 0), std::invalid_argument);
  EXPECT_THROW(semiart::gen_eYi(ctx, 0, {0, 0}), semiart::IndexError);
}

TEST(RingGenerators, OneIsTwoSidedIdentity) {
  std::mt19937_64 rng(51);
  for (const auto& p : {fixtures::diamond(), fixtures::vee(), fixtures::two_components(), fixtures::chain(3)}) {
    RingContext ctx(p);
    auto gens = semiart::generator_family(ctx, 2);
    auto one = semiart::one(ctx);
    RingElement sum = RingElement::zero(ctx);
    for (int m : semiart::members(p.maximal())) sum = add(ctx, sum, semiart::gen_max(ctx, m));
    EXPECT_EQ(one, sum);
    for (int k = 0; k < 100; ++k) {
      auto x = semiart::random_element(ctx, gens, p.all(), 4, rng);
      EXPECT_EQ(mul(ctx, one, x), semiart::normalize(ctx, x));
      EXPECT_EQ(mul(ctx, x, one), semiart::normalize(ctx, x));
    }
  }
}

TEST(RingGenerators, UnitScalarFoldsIntoMaximalParts) {
  RingContext ctx(fixtures::diamond());
  RingElement x = RingElement::zero(ctx);
  x.unit_scalar = 3;
  auto y = semiart::normalize(ctx, x);
  EXPECT_EQ(y.unit_scalar, 0u);
  EXPECT_EQ(y, semiart::scale(ctx, semiart::one(ctx), 3));
}

TEST(RingGenerators, FamilySizes) {
  RingContext ctx(fixtures::diamond());
  // a: one class of two chains, exponent 3; b, c: one chain each, exponent 2.
  EXPECT_EQ(semiart::generator_family(ctx, 2).size(), 16u * 16u + 4u * 4u * 2u + 1u);
  EXPECT_EQ(semiart::local_blocks(ctx, idx(ctx, "a"), 2).size(), 16u);
}

TEST(RingGenerators, DecodeRoundTrip) {
  for (const auto& p : oracle::all_posets_up_to(4)) {
    RingContext ctx(p);
    for (const auto& g : semiart::generator_family(ctx, 2)) {
      auto dec = semiart::decode_component(ctx, g.component, g.element.parts[g.component]);
      ASSERT_TRUE(dec);
      ASSERT_EQ(dec->size(), 1u);
      if (!p.is_maximal(g.component)) {
        EXPECT_EQ((*dec)[0].row, g.row);
        EXPECT_EQ((*dec)[0].col, g.col);
      }
    }
  }
  RingContext ctx(fixtures::diamond());
  semiart::BlockSum junk(semiart::PlacedBlock{1, 0, 0, 1});
  EXPECT_FALSE(semiart::in_component(ctx, idx(ctx, "b"), junk));
}

TEST(RingProducts, IncomparableComponentsAnnihilate) {
  RingContext ctx(fixtures::diamond());
  auto lb = semiart::local_blocks(ctx, idx(ctx, "b"), 2);
  auto lc = semiart::local_blocks(ctx, idx(ctx, "c"), 2);
  auto b = semiart::gen_unit_local(ctx, idx(ctx, "b"), lb[0], lb[1]);
  auto c = semiart::gen_unit_local(ctx, idx(ctx, "c"), lc[0], lc[0]);
  EXPECT_TRUE(mul(ctx, b, c).is_zero());
  EXPECT_TRUE(mul(ctx, c, b).is_zero());
}

TEST(RingProducts, IdempotentTimesCoarserUnit) {
  RingContext ctx(fixtures::diamond());
  int a = idx(ctx, "a"), b = idx(ctx, "b");
  auto ub = semiart::gen_unit_local(ctx, b, P("w"), 1);
  auto e = semiart::gen_eYi(ctx, a, {ctx.atlas().level(a), ctx.atlas().k_rep(a, P("w^2"))});
  auto prod = mul(ctx, e, ub);
  EXPECT_FALSE(prod.is_zero());
  EXPECT_EQ(prod.support(), semiart::bit(a));
  EXPECT_TRUE(semiart::in_component(ctx, a, prod.parts[a]));
}

// Products of generators land in the lower component and are never all
// zero against a comparable component.
void check_products(const semiart::PolarizedPoset& p) {
  RingContext ctx(p);
  auto gens = semiart::generator_family(ctx, 2);
  for (const auto& g : gens)
    for (const auto& h : gens) {
      int i = g.component, j = h.component;
      RingElement gh = mul(ctx, g.element, h.element);
      if (!p.comparable(i, j)) {
        EXPECT_TRUE(gh.is_zero());
        continue;
      }
      int low = p.leq(i, j) ? i : j;
      EXPECT_TRUE(semiart::is_subset(gh.support(), semiart::bit(low)));
      if (!gh.is_zero()) EXPECT_TRUE(semiart::in_component(ctx, low, gh.parts[low]));
    }
  // 0 != H_i a for every generator a of a component j >= i.
  for (const auto& a : gens)
    for (int i = 0; i < p.size(); ++i) {
      if (!p.leq(i, a.component)) continue;
      bool left = false, right = false;
      for (const auto& h : gens) {
        if (h.component != i) continue;
        left = left || !mul(ctx, h.element, a.element).is_zero();
        right = right || !mul(ctx, a.element, h.element).is_zero();
      }
      EXPECT_TRUE(left && right) << p.name(i) << " vs " << p.name(a.component);
    }
}

TEST(RingProducts, AttributionOnSmallPosets) {
  for (const auto& p : oracle::all_posets_up_to(4)) check_products(p);
}

TEST(RingProducts, UnitsFactorThroughAnyDiagonalIdempotent) {
  for (const auto& p : {fixtures::diamond(), fixtures::vee(), fixtures::chain(3)}) {
    RingContext ctx(p);
    std::mt19937_64 rng(52);
    for (int i = 0; i < p.size(); ++i) {
      if (p.is_maximal(i)) continue;
      auto blocks = semiart::local_blocks(ctx, i, 2);
      for (int k = 0; k < 40; ++k) {
        Ordinal l = ctx.atlas().k_rep(i, blocks[rng() % blocks.size()]);
        Ordinal m = ctx.atlas().k_rep(i, blocks[rng() % blocks.size()]);
        Ordinal y = ctx.atlas().k_rep(i, blocks[rng() % blocks.size()]);
        auto lhs = semiart::gen_unit(ctx, i, l, m, 3);
        auto rhs = mul(ctx,
                       mul(ctx, semiart::gen_unit(ctx, i, l, y, 3), semiart::gen_eYi(ctx, i, {ctx.atlas().level(i), y})),
                       semiart::gen_unit(ctx, i, y, m));
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(RingIdeals, HandlesAndMembership) {
  RingContext ctx(fixtures::diamond());
  const auto& p = ctx.poset();
  auto gens = semiart::generator_family(ctx, 2);
  auto whole = semiart::ideal_of_upper(ctx, 0);
  auto zero = semiart::ideal_of_upper(ctx, p.all());
  EXPECT_TRUE(semiart::membership(ctx, whole, semiart::one(ctx)));
  EXPECT_FALSE(semiart::membership(ctx, zero, semiart::one(ctx)));
  EXPECT_TRUE(semiart::membership(ctx, zero, RingElement::zero(ctx)));
  EXPECT_THROW(semiart::ideal_of_upper(ctx, p.parse_subset({"a"})), std::invalid_argument);
  EXPECT_TRUE(semiart::ideal_closure_check(ctx, semiart::ideal_of_upper(ctx, p.parse_subset({"d"})), gens));
  EXPECT_FALSE(semiart::subset_closure_check(ctx, p.parse_subset({"a"}), gens));

  RingContext two(fixtures::chain(2));
  auto g2 = semiart::generator_family(two, 2);
  EXPECT_FALSE(semiart::subset_closure_check(two, two.poset().parse_subset({"c0"}), g2));
  EXPECT_TRUE(semiart::subset_closure_check(two, two.poset().parse_subset({"c1"}), g2));
}

TEST(RingIdeals, ClosureExactlyForUpperSubsets) {
  for (const auto& p : oracle::all_posets_up_to(4)) {
    RingContext ctx(p);
    auto gens = semiart::generator_family(ctx, 2);
    for (Mask s = 0; s <= p.all(); ++s) EXPECT_EQ(semiart::subset_closure_check(ctx, s, gens), p.is_upper(s));
  }
}

TEST(RingIdeals, QuotientProjection) {
  RingContext ctx(fixtures::diamond());
  const auto& p = ctx.poset();
  auto gens = semiart::generator_family(ctx, 2);
  std::mt19937_64 rng(53);
  Mask J = p.all(), K = p.parse_subset({"b", "c", "d"});
  for (int k = 0; k < 200; ++k) {
    auto x = semiart::random_element(ctx, gens, J, 4, rng);
    auto y = semiart::random_element(ctx, gens, J, 4, rng);
    EXPECT_EQ(semiart::quotient_projection(ctx, K, J, mul(ctx, x, y)),
              mul(ctx, semiart::quotient_projection(ctx, K, J, x), semiart::quotient_projection(ctx, K, J, y)));
    EXPECT_EQ(semiart::quotient_projection(ctx, J, J, x), semiart::normalize(ctx, x));
  }
  auto kernel = semiart::random_element(ctx, gens, p.parse_subset({"a"}), 3, rng);
  EXPECT_TRUE(semiart::quotient_projection(ctx, K, J, kernel).is_zero());
  EXPECT_THROW(semiart::quotient_projection(ctx, J, K, kernel), std::invalid_argument);
}

TEST(RingSocle, Examples) {
  RingContext anti(fixtures::antichain(3));
  auto s1 = semiart::socle_chain(anti);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ(s1[0].upper, 0u);
  RingContext ch(fixtures::chain(3));
  auto s3 = semiart::socle_chain(ch);
  ASSERT_EQ(s3.size(), 3u);
  EXPECT_EQ(s3[0].upper, ch.poset().parse_subset({"c1", "c2"}));
  EXPECT_EQ(s3[1].upper, ch.poset().parse_subset({"c2"}));
  EXPECT_EQ(s3[2].upper, 0u);
  RingContext d(fixtures::diamond());
  auto sd = semiart::socle_chain(d);
  ASSERT_EQ(sd.size(), 3u);
  EXPECT_EQ(d.poset().all() & ~sd[0].upper, d.poset().parse_subset({"a"}));
  EXPECT_EQ(d.poset().all() & ~sd[1].upper, d.poset().parse_subset({"a", "b", "c"}));
  EXPECT_EQ(sd[2].upper, 0u);
}

void check_witness(const RingContext& ctx, Mask j, const RingElement& a) {
  auto e = semiart::essential_witness(ctx, j, a);
  EXPECT_EQ(mul(ctx, e, e), e);
  EXPECT_TRUE(semiart::is_subset(e.support(), ctx.poset().layers_of(j).front()));
  auto ae = mul(ctx, a, e);
  EXPECT_FALSE(ae.is_zero());
}

TEST(RingEssential, Examples) {
  RingContext two(fixtures::chain(2));
  auto top = semiart::gen_max(two, 1);
  auto e = semiart::essential_witness(two, two.poset().all(), top);
  EXPECT_EQ(e.support(), semiart::bit(0));
  EXPECT_FALSE(mul(two, top, e).is_zero());
  // The dense image agrees.
  semiart::DenseModel model(two, 3);
  EXPECT_FALSE(model.evaluate(mul(two, top, e)).is_zero());

  RingContext d(fixtures::diamond());
  auto gens = semiart::generator_family(d, 2);
  std::mt19937_64 rng(54);
  Mask all = d.poset().all();
  for (int k = 0; k < 50; ++k) check_witness(d, all, semiart::random_element(d, gens, all, 5, rng));
  auto low = semiart::random_element(d, gens, d.poset().parse_subset({"a"}), 3, rng);
  check_witness(d, all, low);
  // Inside the quotient by the socle: J = {b, c, d}.
  Mask J = d.poset().parse_subset({"b", "c", "d"});
  for (int k = 0; k < 20; ++k) check_witness(d, J, semiart::random_element(d, gens, J, 4, rng));
  EXPECT_THROW(semiart::essential_witness(d, all, RingElement::zero(d)), std::invalid_argument);
}

TEST(RingSimples, AnnihilatorExamples) {
  RingContext d(fixtures::diamond());
  int a = idx(d, "a"), b = idx(d, "b"), c = idx(d, "c");
  auto gens = semiart::generator_family(d, 2);
  auto lc = semiart::local_blocks(d, c, 2);
  auto lb = semiart::local_blocks(d, b, 2);
  auto xc = semiart::gen_unit_local(d, c, lc[0], lc[1]);
  EXPECT_TRUE(semiart::annihilator_check(d, b, xc));
  EXPECT_TRUE(semiart::acts_trivially(d, b, xc, gens));
  auto xa = semiart::gen_unit_local(d, a, 0, 1);
  EXPECT_TRUE(semiart::annihilator_check(d, b, xa));
  EXPECT_TRUE(semiart::acts_trivially(d, b, xa, gens));
  auto xb = semiart::gen_unit_local(d, b, lb[0], lb[0]);
  EXPECT_FALSE(semiart::annihilator_check(d, b, xb));
  EXPECT_FALSE(semiart::acts_trivially(d, b, xb, gens));
  EXPECT_FALSE(semiart::annihilator_check(d, a, semiart::one(d)));
}

TEST(RingSimples, OperationalAnnihilatorsMatchUpperComplements) {
  for (const auto& p : oracle::all_posets_up_to(4)) {
    RingContext ctx(p);
    auto gens = semiart::generator_family(ctx, 2);
    for (int i = 0; i < p.size(); ++i) EXPECT_EQ(semiart::annihilator_components(ctx, i, gens), p.all() & ~p.up(i));
    auto simp = semiart::simp_poset(ctx, gens);
    EXPECT_TRUE(semiart::order_isomorphic(simp, p));
    std::vector<int> image(p.size());
    for (int i = 0; i < p.size(); ++i) image[i] = i;
    EXPECT_TRUE(semiart::is_order_isomorphism(p, simp, image));
  }
}

TEST(RingLattice, Counts) {
  for (auto [p, count] : {std::pair{fixtures::antichain(3), 8}, std::pair{fixtures::chain(3), 4},
                          std::pair{fixtures::diamond(), 6}}) {
    RingContext ctx(p);
    auto rep = semiart::lattice_anti_isomorphism_check(ctx, semiart::generator_family(ctx, 2));
    EXPECT_TRUE(rep.ok) << rep.detail;
    EXPECT_EQ(rep.ideals, count);
  }
}

TEST(RingCentral, ComponentIdempotents) {
  RingContext ctx(fixtures::two_components());
  auto gens = semiart::generator_family(ctx, 2);
  auto es = semiart::component_idempotents(ctx);
  ASSERT_EQ(es.size(), 2u);
  EXPECT_TRUE(mul(ctx, es[0], es[1]).is_zero());
  EXPECT_TRUE(mul(ctx, es[1], es[0]).is_zero());
  EXPECT_EQ(mul(ctx, es[0], es[0]), es[0]);
  EXPECT_EQ(add(ctx, es[0], es[1]), semiart::one(ctx));
  for (const auto& e : es) EXPECT_TRUE(semiart::is_central(ctx, e, gens));
  EXPECT_FALSE(semiart::is_central(ctx, semiart::u_element(ctx, idx(ctx, "U1")), gens));
  RingContext d(fixtures::diamond());
  auto ed = semiart::component_idempotents(d);
  ASSERT_EQ(ed.size(), 1u);
  EXPECT_EQ(ed[0], semiart::one(d));
}

TEST(RingCentral, AllSmallPosets) {
  for (const auto& p : oracle::all_posets_up_to(5)) {
    RingContext ctx(p);
    auto gens = semiart::generator_family(ctx, 1);
    RingElement sum = RingElement::zero(ctx);
    for (const auto& e : semiart::component_idempotents(ctx)) {
      EXPECT_TRUE(semiart::is_central(ctx, e, gens));
      sum = add(ctx, sum, e);
    }
    EXPECT_EQ(sum, semiart::one(ctx));
  }
}

TEST(RingWellBehaved, HeightsMatchLengths) {
  for (const auto& p : oracle::all_posets_up_to(5)) {
    RingContext ctx(p);
    auto rep = semiart::well_behaved_report(ctx);
    EXPECT_TRUE(rep.well_behaved) << rep.detail;
    for (int i = 0; i < p.size(); ++i) EXPECT_EQ(rep.heights[i], p.lambda_canonical(i));
  }
}

TEST(RingJson, ElementDump) {
  RingContext ctx(fixtures::chain(2));
  auto j = semiart::element_json(ctx, semiart::one(ctx));
  EXPECT_TRUE(j["parts"].contains("c1"));
  EXPECT_EQ(j["parts"]["c1"][0]["scalar"], 1);
}

}  // namespace
