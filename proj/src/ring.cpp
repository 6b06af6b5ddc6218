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

#include "semiart/ring.hpp"

#include <algorithm>
#include <sstream>

namespace semiart {

RingContext::RingContext(PolarizedPoset poset, std::uint32_t prime)
    : atlas_(std::move(poset)), field_(prime) {}

int RingContext::part_level(int i) const {
  return poset().is_maximal(i) ? atlas_.space().xi + 1 : atlas_.level(i);
}

RingElement RingElement::zero(const RingContext& ctx) {
  RingElement x;
  x.parts.resize(ctx.size());
  return x;
}

Mask RingElement::support() const {
  Mask m = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!parts[i].is_zero()) m |= bit(static_cast<int>(i));
  return m;
}

bool RingElement::is_zero() const { return support() == 0 && unit_scalar == 0; }

BlockSum RingElement::total(const PrimeField& f) const {
  std::vector<PlacedBlock> all;
  for (const auto& p : parts) all.insert(all.end(), p.blocks().begin(), p.blocks().end());
  return BlockSum::from_blocks(std::move(all), f);
}

namespace {

BlockSum max_identity(const RingContext& ctx, int m, std::uint32_t d) {
  std::vector<PlacedBlock> blocks;
  int top = ctx.atlas().space().xi + 1;
  const auto& chains = ctx.poset().maximal_chains();
  for (int c = 0; c < static_cast<int>(chains.size()); ++c)
    if (contains(chains[c], m)) blocks.push_back({top, Ordinal(c), Ordinal(c), d});
  return BlockSum::from_blocks(std::move(blocks), ctx.field());
}

}  // namespace

RingElement normalize(const RingContext& ctx, RingElement x) {
  if (x.parts.size() != static_cast<std::size_t>(ctx.size())) x.parts.resize(ctx.size());
  std::uint32_t d = x.unit_scalar % ctx.field().p;
  x.unit_scalar = 0;
  if (d == 0) return x;
  for (int m : members(ctx.poset().maximal()))
    x.parts[m] = add(x.parts[m], max_identity(ctx, m, d), ctx.field());
  return x;
}

RingElement add(const RingContext& ctx, const RingElement& x, const RingElement& y) {
  RingElement a = normalize(ctx, x);
  RingElement b = normalize(ctx, y);
  for (int i = 0; i < ctx.size(); ++i) a.parts[i] = add(a.parts[i], b.parts[i], ctx.field());
  return a;
}

RingElement scale(const RingContext& ctx, const RingElement& x, std::uint32_t d) {
  RingElement a = normalize(ctx, x);
  for (auto& p : a.parts) p = scale(p, d, ctx.field());
  return a;
}

RingElement sub(const RingContext& ctx, const RingElement& x, const RingElement& y) {
  return add(ctx, x, scale(ctx, y, ctx.field().neg(1)));
}

RingElement mul(const RingContext& ctx, const RingElement& x, const RingElement& y) {
  RingElement a = normalize(ctx, x);
  RingElement b = normalize(ctx, y);
  RingElement out = RingElement::zero(ctx);
  const auto& P = ctx.poset();
  for (int i : members(a.support())) {
    for (int j : members(b.support())) {
      BlockSum prod = mul(a.parts[i], b.parts[j], ctx.field());
      if (!P.comparable(i, j)) {
        if (!prod.is_zero())
          throw AttributionError("nonzero product between incomparable components " + P.name(i) + " and " +
                                 P.name(j));
        continue;
      }
      int target = P.leq(i, j) ? i : j;
      out.parts[target] = add(out.parts[target], prod, ctx.field());
    }
  }
  return out;
}

RingElement gen_unit(const RingContext& ctx, int i, const Ordinal& lambda, const Ordinal& mu, std::uint32_t d) {
  if (ctx.poset().is_maximal(i))
    throw std::invalid_argument("matrix-unit generators need a non-maximal element, got " + ctx.poset().name(i));
  RingElement x = RingElement::zero(ctx);
  x.parts[i] = psi(ctx.atlas(), i, lambda, mu, d, ctx.field());
  return x;
}

RingElement gen_unit_local(const RingContext& ctx, int i, const Ordinal& lambda0, const Ordinal& mu0,
                           std::uint32_t d) {
  return gen_unit(ctx, i, ctx.atlas().k_rep(i, lambda0), ctx.atlas().k_rep(i, mu0), d);
}

RingElement gen_eYi(const RingContext& ctx, int i, const Interval& y) {
  if (y.level != ctx.atlas().level(i)) throw IndexError("Y must sit at level lambda(i)");
  return gen_unit(ctx, i, y.block, y.block, 1);
}

RingElement gen_max(const RingContext& ctx, int m) {
  if (!ctx.poset().is_maximal(m))
    throw std::invalid_argument("gen_max needs a maximal element, got " + ctx.poset().name(m));
  RingElement x = RingElement::zero(ctx);
  x.parts[m] = max_identity(ctx, m, 1);
  return x;
}

RingElement one(const RingContext& ctx) {
  RingElement x = RingElement::zero(ctx);
  x.unit_scalar = 1;
  return normalize(ctx, x);
}

RingElement u_element(const RingContext& ctx, int i) {
  if (ctx.poset().is_maximal(i)) return gen_max(ctx, i);
  auto e = static_cast<std::uint32_t>(ctx.atlas().exponent(i));
  Ordinal first = Ordinal::omega_pow(e, static_cast<std::uint64_t>(ctx.atlas().chain_class(i, 0).chains.front()));
  return gen_unit_local(ctx, i, first, first);
}

std::vector<Ordinal> local_blocks(const RingContext& ctx, int i, std::uint32_t budget) {
  auto e = static_cast<std::uint32_t>(ctx.atlas().exponent(i));
  std::vector<Ordinal> out;
  for (int chi : ctx.atlas().chain_class(i, 0).chains) {
    std::vector<std::uint32_t> digit(e, 0);
    while (true) {
      Ordinal::Terms t;
      if (chi) t.push_back({e, static_cast<std::uint64_t>(chi)});
      for (std::uint32_t k = 0; k < e; ++k)
        if (digit[k]) t.push_back({e - 1 - k, digit[k]});
      out.push_back(Ordinal::from_terms(std::move(t)));
      std::uint32_t pos = e;
      while (pos > 0 && ++digit[pos - 1] == budget) digit[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

std::vector<Generator> generator_family(const RingContext& ctx, std::uint32_t budget) {
  std::vector<Generator> out;
  for (int i = 0; i < ctx.size(); ++i) {
    if (ctx.poset().is_maximal(i)) continue;
    std::vector<Ordinal> blocks = local_blocks(ctx, i, budget);
    for (const auto& r : blocks)
      for (const auto& c : blocks) out.push_back({i, r, c, gen_unit_local(ctx, i, r, c)});
  }
  for (int m : members(ctx.poset().maximal())) out.push_back({m, Ordinal(), Ordinal(), gen_max(ctx, m)});
  return out;
}

std::optional<std::vector<LocalEntry>> decode_component(const RingContext& ctx, int i, const BlockSum& part) {
  std::vector<LocalEntry> entries;
  if (part.is_zero()) return entries;
  const auto& atlas = ctx.atlas();
  if (ctx.poset().is_maximal(i)) {
    std::uint32_t d = part.blocks().front().scalar;
    if (part == max_identity(ctx, i, d)) return std::vector<LocalEntry>{{Ordinal(), Ordinal(), d}};
    return std::nullopt;
  }
  int level = atlas.level(i);
  std::vector<PlacedBlock> rebuilt;
  for (const auto& b : part.blocks()) {
    if (b.level != level) return std::nullopt;
    if (!atlas.in_lambda(i, 0, b.row)) continue;
    if (!atlas.in_lambda(i, 0, b.col)) return std::nullopt;
    entries.push_back({b.row, b.col, b.scalar});
    BlockSum image = psi(atlas, i, atlas.k_rep(i, b.row), atlas.k_rep(i, b.col), b.scalar, ctx.field());
    rebuilt.insert(rebuilt.end(), image.blocks().begin(), image.blocks().end());
  }
  if (BlockSum::from_blocks(std::move(rebuilt), ctx.field()) != part) return std::nullopt;
  return entries;
}

bool in_component(const RingContext& ctx, int i, const BlockSum& part) {
  return decode_component(ctx, i, part).has_value();
}

RingElement random_element(const RingContext& ctx, const std::vector<Generator>& gens, Mask allowed,
                           int max_terms, std::mt19937_64& rng) {
  std::vector<const Generator*> pool;
  for (const auto& g : gens)
    if (contains(allowed, g.component)) pool.push_back(&g);
  if (pool.empty()) throw std::invalid_argument("no generators in the allowed components");
  std::uniform_int_distribution<int> terms(1, std::max(1, max_terms));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::uint32_t> scalar(1, ctx.field().p - 1);
  while (true) {
    RingElement x = RingElement::zero(ctx);
    for (int t = terms(rng); t > 0; --t) x = add(ctx, x, scale(ctx, pool[pick(rng)]->element, scalar(rng)));
    if (!x.is_zero()) return x;
  }
}

nlohmann::json element_json(const RingContext& ctx, const RingElement& x) {
  RingElement a = normalize(ctx, x);
  nlohmann::json parts = nlohmann::json::object();
  for (int i : members(a.support())) parts[ctx.poset().name(i)] = a.parts[i].to_json();
  return {{"parts", parts}, {"unit_scalar", 0}};
}

IdealHandle ideal_of_upper(const RingContext& ctx, Mask upper) {
  if (!is_subset(upper, ctx.poset().all()) || !ctx.poset().is_upper(upper))
    throw std::invalid_argument("ideal handle needs an upper subset");
  return {upper};
}

bool membership(const RingContext& ctx, const IdealHandle& h, const RingElement& x) {
  return (normalize(ctx, x).support() & h.upper) == 0;
}

bool subset_closure_check(const RingContext& ctx, Mask s, const std::vector<Generator>& gens) {
  for (const auto& g : gens) {
    if (contains(s, g.component)) continue;
    for (const auto& h : gens) {
      if ((mul(ctx, g.element, h.element).support() & s) != 0) return false;
      if ((mul(ctx, h.element, g.element).support() & s) != 0) return false;
    }
  }
  return true;
}

bool ideal_closure_check(const RingContext& ctx, const IdealHandle& h, const std::vector<Generator>& gens) {
  return subset_closure_check(ctx, h.upper, gens);
}

RingElement quotient_projection(const RingContext& ctx, Mask k, Mask j, const RingElement& x) {
  const auto& P = ctx.poset();
  if (!P.is_upper(k) || !P.is_upper(j)) throw std::invalid_argument("projection needs upper subsets");
  if (!is_subset(k, j)) throw std::invalid_argument("projection needs K inside J");
  RingElement a = normalize(ctx, x);
  if (!is_subset(a.support(), j)) throw std::invalid_argument("element is not supported on J");
  for (int i = 0; i < ctx.size(); ++i)
    if (!contains(k, i)) a.parts[i] = BlockSum();
  return a;
}

std::vector<IdealHandle> socle_chain(const RingContext& ctx) {
  std::vector<IdealHandle> out;
  const auto& P = ctx.poset();
  for (int alpha = 1; alpha <= P.xi(); ++alpha) out.push_back({P.all() & ~P.lower_part(alpha)});
  return out;
}

Point nonzero_entry(const BlockSum& s) {
  if (s.is_zero()) throw std::invalid_argument("zero block sum has no nonzero entry");
  std::uint64_t big = 0;
  const PlacedBlock* top = &s.blocks().front();
  for (const auto& b : s.blocks()) {
    for (const auto& t : b.row.terms()) big = std::max(big, t.coef);
    for (const auto& t : b.col.terms()) big = std::max(big, t.coef);
    if (b.level > top->level) top = &b;
  }
  // Low digits larger than any digit in s keep the point out of every finer block.
  Ordinal::Terms rho;
  for (int k = top->level - 1; k >= 0; --k) rho.push_back({static_cast<std::uint32_t>(k), big + 1});
  Ordinal tail = Ordinal::from_terms(rho);
  auto L = static_cast<std::uint32_t>(top->level);
  return {add(shift_up(top->row, L), tail), add(shift_up(top->col, L), tail), top->scalar};
}

RingElement essential_witness(const RingContext& ctx, Mask j, const RingElement& a) {
  RingElement x = normalize(ctx, a);
  if (x.is_zero()) throw std::invalid_argument("essential witness needs a nonzero element");
  const auto& P = ctx.poset();
  const auto& atlas = ctx.atlas();
  if (!is_subset(x.support(), j)) throw std::invalid_argument("element is not supported on J");
  std::vector<Mask> lay = P.layers_of(j);
  BlockSum total = x.total(ctx.field());
  for (int i : members(lay.front())) {
    if (P.is_maximal(i)) {
      RingElement e = gen_max(ctx, i);
      if (!mul(ctx, x, e).is_zero()) return e;
      continue;
    }
    BlockSum region = max_identity(ctx, i, 1);
    BlockSum restricted = mul(total, region, ctx.field());
    if (restricted.is_zero()) continue;
    Point pt = nonzero_entry(restricted);
    Ordinal nu = atlas.space().split(pt.y, atlas.level(i)).first;
    int cls = P.class_of(i, atlas.chain_of_point(pt.y));
    Ordinal mu = atlas.k(i, cls, nu);
    RingElement e = gen_eYi(ctx, i, {atlas.level(i), mu});
    if (!mul(ctx, x, e).is_zero()) return e;
    throw std::logic_error("witness idempotent failed to detect the element");
  }
  throw std::logic_error("no bottom-layer idempotent detects the element");
}

bool acts_trivially(const RingContext& ctx, int i, const RingElement& x, const std::vector<Generator>& gens) {
  RingElement u = u_element(ctx, i);
  Mask below = ctx.poset().lower_part(ctx.atlas().level(i) - 1);
  for (const auto& h : gens) {
    if (h.component != i) continue;
    RingElement uh = mul(ctx, u, h.element);
    if (uh.is_zero()) continue;
    if (!is_subset(mul(ctx, uh, x).support(), below)) return false;
  }
  return true;
}

Mask annihilator_components(const RingContext& ctx, int i, const std::vector<Generator>& gens) {
  Mask out = 0;
  for (int j = 0; j < ctx.size(); ++j) {
    bool kills = true;
    for (const auto& g : gens)
      if (g.component == j && !acts_trivially(ctx, i, g.element, gens)) {
        kills = false;
        break;
      }
    if (kills) out |= bit(j);
  }
  return out;
}

bool annihilator_check(const RingContext& ctx, int i, const RingElement& x) {
  return membership(ctx, ideal_of_upper(ctx, ctx.poset().up(i)), x);
}

PolarizedPoset simp_poset(const RingContext& ctx, const std::vector<Generator>& gens) {
  int n = ctx.size();
  std::vector<Mask> r(n);
  for (int i = 0; i < n; ++i) r[i] = annihilator_components(ctx, i, gens);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("U_" + ctx.poset().name(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && is_subset(r[i], r[j])) rel.emplace_back(names[i], names[j]);
  return PolarizedPoset::from_relations(names, rel, {});
}

LatticeReport lattice_anti_isomorphism_check(const RingContext& ctx, const std::vector<Generator>& gens,
                                             int bound) {
  const auto& P = ctx.poset();
  std::vector<Mask> uppers = P.upper_sets(bound);
  int n = ctx.size();
  std::vector<Mask> r(n);
  for (int i = 0; i < n; ++i) r[i] = annihilator_components(ctx, i, gens);
  LatticeReport rep;
  rep.ideals = static_cast<int>(uppers.size());
  std::ostringstream why;
  for (Mask s : uppers) {
    Mask ideal = P.all() & ~s;  // components of H_{I \ S}
    Mask phi = 0;                // simples annihilated by the ideal
    for (int i = 0; i < n; ++i)
      if (is_subset(ideal, r[i])) phi |= bit(i);
    Mask psi_ideal = P.all();
    for (int i : members(s)) psi_ideal &= r[i];
    if (phi != s) {
      rep.ok = false;
      why << "simples of the quotient by H_{I\\S} differ from S=" << s << "; ";
    }
    if (psi_ideal != ideal) {
      rep.ok = false;
      why << "intersection of annihilators differs for S=" << s << "; ";
    }
  }
  for (Mask s : uppers)
    for (Mask t : uppers) {
      bool incl = is_subset(s, t);
      bool rev = is_subset(P.all() & ~t, P.all() & ~s);
      if (incl != rev) {
        rep.ok = false;
        why << "inclusion not reversed for " << s << "," << t << "; ";
      }
    }
  rep.detail = why.str();
  return rep;
}

std::vector<RingElement> component_idempotents(const RingContext& ctx) {
  std::vector<RingElement> out;
  for (Mask c : ctx.poset().connected_components()) {
    RingElement e = RingElement::zero(ctx);
    for (int m : members(c & ctx.poset().maximal())) e = add(ctx, e, gen_max(ctx, m));
    out.push_back(e);
  }
  return out;
}

bool is_central(const RingContext& ctx, const RingElement& e, const std::vector<Generator>& gens) {
  for (const auto& g : gens)
    if (mul(ctx, e, g.element) != mul(ctx, g.element, e)) return false;
  return true;
}

WellBehavedReport well_behaved_report(const RingContext& ctx) {
  WellBehavedReport rep;
  auto chain = socle_chain(ctx);
  std::ostringstream why;
  for (int i = 0; i < ctx.size(); ++i) {
    RingElement u = u_element(ctx, i);
    int h = 0;
    for (std::size_t a = 0; a < chain.size(); ++a)
      if (membership(ctx, chain[a], u)) {
        h = static_cast<int>(a) + 1;
        break;
      }
    rep.heights.push_back(h);
    if (h != ctx.atlas().level(i)) {
      rep.well_behaved = false;
      why << ctx.poset().name(i) << ": height " << h << " vs length " << ctx.atlas().level(i) << "; ";
    }
  }
  rep.detail = why.str();
  return rep;
}

}  // namespace semiart
