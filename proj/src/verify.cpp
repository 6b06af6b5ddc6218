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

#include "semiart/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>

#include "semiart/oracle.hpp"
#include "semiart/ring.hpp"

namespace semiart {

namespace {

using nlohmann::json;

}  // namespace

std::size_t generator_count(const RingContext& ctx, std::uint32_t budget) {
  std::size_t total = 0;
  for (int i = 0; i < ctx.size(); ++i) {
    if (ctx.poset().is_maximal(i)) {
      ++total;
      continue;
    }
    std::size_t side = ctx.atlas().chain_class(i, 0).chains.size();
    for (int k = 0; k < ctx.atlas().exponent(i); ++k) side *= budget;
    total += side * side;
  }
  return total;
}

namespace {

constexpr std::size_t kGeneratorBound = 6000;

struct Env {
  const PolarizedPoset& poset;
  const VerifyConfig& cfg;
  RingContext ctx;
  mutable std::once_flag gens_once;
  mutable std::optional<std::vector<Generator>> gens;
  mutable std::once_flag reach_once;
  mutable std::vector<Mask> reach_;

  Env(const PolarizedPoset& p, const VerifyConfig& c) : poset(p), cfg(c), ctx(p, c.prime) {}

  const std::vector<Generator>& generators() const {
    if (generator_count(ctx, cfg.budget) > kGeneratorBound)
      throw ResourceBound("generator family larger than " + std::to_string(kGeneratorBound));
    std::call_once(gens_once, [this] { gens = generator_family(ctx, cfg.budget); });
    return *gens;
  }

  // reach[c]: union of the supports of all generator products with a factor in H_c.
  // A subset S is closed exactly when reach[c] misses S for every c outside S.
  const std::vector<Mask>& reach() const {
    std::call_once(reach_once, [this] {
      const auto& g = generators();
      reach_.assign(ctx.size(), 0);
      for (const auto& a : g)
        for (const auto& b : g) {
          Mask sup = mul(ctx, a.element, b.element).support();
          reach_[a.component] |= sup;
          reach_[b.component] |= sup;
        }
    });
    return reach_;
  }

  bool closed(Mask s) const {
    for (int c = 0; c < ctx.size(); ++c)
      if (!contains(s, c) && (reach()[c] & s)) return false;
    return true;
  }

  std::mt19937_64 rng(std::size_t salt) const { return std::mt19937_64(cfg.seed * 1000003u + salt); }

  json names(Mask m) const { return poset.subset_names(m); }
  json element(const RingElement& x) const { return element_json(ctx, x); }
};

using CheckFn = std::function<json(const Env&)>;  // null on success, witness on failure

struct CheckEntry {
  std::string name;
  std::string claim;
  CheckFn run;
};

json check_layers(const Env& env) {
  const auto& p = env.poset;
  Mask seen = 0;
  for (std::size_t a = 0; a < p.layers().size(); ++a) {
    if (seen & p.layers()[a]) return {{"overlap_at_layer", a + 1}};
    seen |= p.layers()[a];
    for (int i : members(p.layers()[a]))
      if (p.lambda_min(i) != static_cast<int>(a)) return {{"element", p.name(i)}, {"lambda", p.lambda_min(i)}};
  }
  if (seen != p.all()) return {{"uncovered", env.names(p.all() & ~seen)}};
  for (int i = 0; i < p.size(); ++i)
    for (int a = 0; a < p.lambda_min(i); ++a)
      if (!(p.layers()[a] & p.down(i) & ~bit(i))) return {{"element", p.name(i)}, {"empty_layer_below", a + 1}};
  return nullptr;
}

json check_lower_filtration(const Env& env) {
  for (Mask s : env.poset.lower_sets(env.cfg.max_upper_sets))
    if (!env.poset.layer_restriction_check(s)) return {{"lower_subset", env.names(s)}};
  return nullptr;
}

json check_chain_classes(const Env& env) {
  const auto& p = env.poset;
  const auto& chains = p.maximal_chains();
  for (int i = 0; i < p.size(); ++i) {
    const auto& cls = p.chain_classes(i);
    std::vector<int> count(chains.size(), 0);
    for (const auto& c : cls)
      for (int chi : c.chains) {
        ++count[chi];
        if ((chains[chi] & p.down(i)) != c.below) return {{"element", p.name(i)}, {"chain", chi}};
      }
    for (std::size_t chi = 0; chi < chains.size(); ++chi)
      if (count[chi] != (contains(chains[chi], i) ? 1 : 0))
        return {{"element", p.name(i)}, {"chain", chi}, {"classes_containing", count[chi]}};
    int n = static_cast<int>(cls.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int chi : cls[a].chains) {
          int t = p.class_transport(i, a, b, chi);
          if (chains[t] != (cls[b].below | (chains[chi] & p.up(i))) || p.class_transport(i, b, a, t) != chi)
            return {{"element", p.name(i)}, {"from", a}, {"to", b}, {"chain", chi}};
          for (int c = 0; c < n; ++c)
            if (p.class_transport(i, b, c, t) != p.class_transport(i, a, c, chi))
              return {{"element", p.name(i)}, {"composition", {a, b, c}}, {"chain", chi}};
        }
  }
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (!p.less(i, j)) continue;
      for (const auto& a : p.chain_classes(i)) {
        std::set<int> as(a.chains.begin(), a.chains.end());
        bool found = false;
        for (const auto& b : p.chain_classes(j)) {
          bool inside = true;
          for (int chi : b.chains) inside = inside && as.count(chi);
          found = found || inside;
        }
        if (!found) return {{"lower", p.name(i)}, {"upper", p.name(j)}, {"class_below", env.names(a.below)}};
      }
    }
  return nullptr;
}

json check_comparable_meet(const Env& env) {
  // Points of X in chain chi are exactly [n^(xi+1) chi, n^(xi+1) (chi+1)), so
  // membership is constant on each chain slab.
  const auto& p = env.poset;
  IndexSpace f = IndexSpace::finite(env.cfg.base, p.xi(), p.beth());
  std::uint64_t slab = f.pow(p.xi() + 1).to_natural();
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      std::uint64_t shared = 0;
      for (Mask c : p.maximal_chains())
        if (contains(c, i) && contains(c, j)) shared += slab;
      if ((shared > 0) != p.comparable(i, j)) return {{"pair", {p.name(i), p.name(j)}}, {"shared_points", shared}};
    }
  for (Mask c : p.maximal_chains())
    if (std::popcount(c & p.maximal()) != 1) return {{"chain", env.names(c)}};
  return nullptr;
}

std::vector<Ordinal> target_blocks(const ChainAtlas& at, int i, std::uint32_t budget) {
  auto e = static_cast<std::uint32_t>(at.exponent(i));
  std::vector<Ordinal> out;
  for (int top = 0; top < at.space().beth; ++top) {
    std::vector<std::uint32_t> digit(e, 0);
    while (true) {
      Ordinal::Terms t;
      if (top) t.push_back({e, static_cast<std::uint64_t>(top)});
      for (std::uint32_t k = 0; k < e; ++k)
        if (digit[k]) t.push_back({e - 1 - k, digit[k]});
      out.push_back(Ordinal::from_terms(std::move(t)));
      std::uint32_t pos = e;
      while (pos > 0 && ++digit[pos - 1] == budget) digit[--pos] = 0;
      if (pos == 0) break;
    }
    if (out.size() > kGeneratorBound) throw ResourceBound("too many block indices to sweep");
  }
  return out;
}

json check_transport(const Env& env) {
  const auto& at = env.ctx.atlas();
  const auto& p = env.poset;
  auto rng = env.rng(5);
  for (int i = 0; i < p.size(); ++i) {
    auto targets = target_blocks(at, i, env.cfg.budget);
    for (int a = 0; a < at.class_count(i); ++a) {
      std::set<Ordinal> seen;
      for (const auto& mu : targets) {
        Ordinal lambda = at.k_inv(i, a, mu);
        if (!at.in_lambda(i, a, lambda) || at.k(i, a, lambda) != mu || !seen.insert(lambda).second)
          return {{"element", p.name(i)}, {"class", a}, {"target", mu.str()}};
        for (int b = 0; b < at.class_count(i); ++b)
          if (at.k(i, b, at.k_transport(i, b, a, lambda)) != mu)
            return {{"element", p.name(i)}, {"classes", {a, b}}, {"target", mu.str()}};
      }
      for (int r = 0; r < 10; ++r) {
        const auto& mu = targets[rng() % targets.size()];
        Ordinal y = add(shift_up(mu, static_cast<std::uint32_t>(at.level(i))), Ordinal(rng() % 5));
        Ordinal x = at.t_inv(i, a, y);
        if (at.t(i, a, x) != y) return {{"element", p.name(i)}, {"class", a}, {"point", y.str()}};
        for (int b = 0; b < at.class_count(i); ++b)
          if (at.t(i, b, at.t_transport(i, b, a, x)) != y)
            return {{"element", p.name(i)}, {"classes", {a, b}}, {"point", y.str()}};
      }
    }
  }
  return nullptr;
}

json check_preimage_nesting(const Env& env) {
  const auto& at = env.ctx.atlas();
  const auto& p = env.poset;
  const auto& s = at.space();
  std::vector<std::vector<std::vector<Interval>>> fam(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (const auto& mu : target_blocks(at, i, env.cfg.budget)) fam[i].push_back(at.y_of(i, {at.level(i), mu}));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (i == j || p.less(j, i)) continue;
      for (const auto& y : fam[i])
        for (const auto& z : fam[j]) {
          bool meet = false;
          for (const auto& a : y)
            for (const auto& b : z) meet = meet || intervals_meet(s, a, b);
          if (!meet) continue;
          if (!p.comparable(i, j))
            return {{"pair", {p.name(i), p.name(j)}}, {"Y", y.front().block.str()}, {"Z", z.front().block.str()}};
          for (const auto& a : y) {
            bool inside = false;
            for (const auto& b : z) inside = inside || interval_within(s, a, b);
            if (!inside)
              return {{"pair", {p.name(i), p.name(j)}}, {"Y", y.front().block.str()}, {"Z", z.front().block.str()}};
          }
        }
    }
  return nullptr;
}

json check_dense_hom(const Env& env) {
  const auto& gens = env.generators();
  DenseModel model(env.ctx, env.cfg.base);
  auto rng = env.rng(7);
  for (int k = 0; k < env.cfg.samples; ++k) {
    auto x = random_element(env.ctx, gens, env.poset.all(), 4, rng);
    auto y = random_element(env.ctx, gens, env.poset.all(), 4, rng);
    if (!validate_hom(model, env.ctx, x, y)) return {{"x", env.element(x)}, {"y", env.element(y)}};
  }
  return nullptr;
}

json check_associativity(const Env& env) {
  const auto& gens = env.generators();
  auto rng = env.rng(8);
  const auto& c = env.ctx;
  for (int k = 0; k < env.cfg.samples; ++k) {
    auto x = random_element(c, gens, env.poset.all(), 4, rng);
    auto y = random_element(c, gens, env.poset.all(), 4, rng);
    auto z = random_element(c, gens, env.poset.all(), 4, rng);
    if (mul(c, mul(c, x, y), z) != mul(c, x, mul(c, y, z)))
      return {{"x", env.element(x)}, {"y", env.element(y)}, {"z", env.element(z)}};
  }
  return nullptr;
}

json check_generator_products(const Env& env) {
  const auto& gens = env.generators();
  const auto& p = env.poset;
  const auto& c = env.ctx;
  int n = p.size();
  // left_hit[g][i]: some generator of H_i times g is nonzero.
  std::vector<Mask> left_hit(gens.size(), 0), right_hit(gens.size(), 0);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      int i = gens[a].component, j = gens[b].component;
      RingElement ab;
      try {
        ab = mul(c, gens[a].element, gens[b].element);
      } catch (const AttributionError& e) {
        return {{"pair", {p.name(i), p.name(j)}}, {"error", e.what()}};
      }
      if (ab.is_zero()) continue;
      int low = p.leq(i, j) ? i : j;
      if (ab.support() != bit(low) || !in_component(c, low, ab.parts[low]))
        return {{"pair", {p.name(i), p.name(j)}}, {"product", env.element(ab)}};
      right_hit[b] |= bit(i);
      left_hit[a] |= bit(j);
    }
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int i = 0; i < n; ++i) {
      if (!p.leq(i, gens[g].component)) continue;
      if (!contains(right_hit[g], i) || !contains(left_hit[g], i))
        return {{"component", p.name(i)}, {"annihilated", env.element(gens[g].element)}};
    }
  return nullptr;
}

json check_unit_factorization(const Env& env) {
  const auto& c = env.ctx;
  const auto& at = c.atlas();
  auto rng = env.rng(10);
  for (int i = 0; i < c.size(); ++i) {
    if (env.poset.is_maximal(i)) continue;
    auto blocks = local_blocks(c, i, env.cfg.budget);
    for (int k = 0; k < env.cfg.samples; ++k) {
      Ordinal l = at.k_rep(i, blocks[rng() % blocks.size()]);
      Ordinal m = at.k_rep(i, blocks[rng() % blocks.size()]);
      Ordinal y = at.k_rep(i, blocks[rng() % blocks.size()]);
      auto lhs = gen_unit(c, i, l, m);
      auto rhs = mul(c, mul(c, gen_unit(c, i, l, y), gen_eYi(c, i, {at.level(i), y})), gen_unit(c, i, y, m));
      if (lhs != rhs) return {{"element", env.poset.name(i)}, {"row", l.str()}, {"col", m.str()}, {"through", y.str()}};
    }
  }
  return nullptr;
}

json check_identity(const Env& env) {
  const auto& c = env.ctx;
  RingElement sum = RingElement::zero(c);
  for (int m : members(env.poset.maximal())) sum = add(c, sum, gen_max(c, m));
  RingElement u = one(c);
  if (sum != u) return {{"sum_of_maximal_identities", env.element(sum)}};
  for (const auto& g : env.generators())
    if (mul(c, u, g.element) != g.element || mul(c, g.element, u) != g.element)
      return {{"generator", env.element(g.element)}};
  return nullptr;
}

json check_upper_closure(const Env& env) {
  const auto& p = env.poset;
  if (p.size() > env.cfg.max_upper_sets) throw ResourceBound("subset sweep limited by --max-upper-sets");
  int failures = 0, non_upper = 0;
  for (Mask s = 0; s <= p.all(); ++s) {
    bool closed = env.closed(s);
    if (!p.is_upper(s)) ++non_upper;
    if (closed != p.is_upper(s)) return {{"subset", env.names(s)}, {"upper", p.is_upper(s)}, {"closed", closed}};
    if (!closed) ++failures;
  }
  if (non_upper > 0 && failures == 0) return {{"detail", "no non-upper subset failed closure"}};
  return nullptr;
}

json check_socle(const Env& env) {
  const auto& p = env.poset;
  const auto& c = env.ctx;
  const auto& gens = env.generators();
  auto chain = socle_chain(c);
  if (static_cast<int>(chain.size()) != p.xi()) return {{"steps", chain.size()}, {"layers", p.xi()}};
  auto rng = env.rng(13);
  for (int alpha = 0; alpha < p.xi(); ++alpha) {
    Mask below = p.lower_part(alpha + 1);
    if (chain[alpha].upper != (p.all() & ~below)) return {{"step", alpha + 1}, {"ideal", env.names(p.all() & ~chain[alpha].upper)}};
    if (!env.closed(chain[alpha].upper)) return {{"step", alpha + 1}, {"detail", "ideal not closed"}};
    // Quotient by the previous step: J = I minus the first alpha layers.
    Mask J = p.all() & ~p.lower_part(alpha);
    Mask K = p.all() & ~below;
    auto lay = p.layers_of(J);
    for (std::size_t b = 0; b < lay.size(); ++b)
      if (lay[b] != p.layers()[alpha + b]) return {{"step", alpha + 1}, {"detail", "quotient layers shifted wrongly"}};
    for (int k = 0; k < env.cfg.witness_samples; ++k) {
      auto a = random_element(c, gens, J, 4, rng);
      auto x = random_element(c, gens, J, 4, rng);
      if (quotient_projection(c, K, J, mul(c, a, x)) !=
          mul(c, quotient_projection(c, K, J, a), quotient_projection(c, K, J, x)))
        return {{"step", alpha + 1}, {"projection_not_multiplicative", env.element(a)}};
      if (!quotient_projection(c, K, J, a).is_zero() && membership(c, chain[alpha], a) &&
          (normalize(c, a).support() & ~below & J))
        return {{"step", alpha + 1}, {"kernel", env.element(a)}};
      auto e = essential_witness(c, J, a);
      if (mul(c, e, e) != e || !is_subset(e.support(), lay.front()) || mul(c, a, e).is_zero())
        return {{"step", alpha + 1}, {"element", env.element(a)}, {"witness", env.element(e)}};
    }
  }
  return nullptr;
}

json check_simp(const Env& env) {
  auto simp = simp_poset(env.ctx, env.generators());
  std::vector<int> identity(env.poset.size());
  for (int i = 0; i < env.poset.size(); ++i) identity[i] = i;
  if (!is_order_isomorphism(env.poset, simp, identity)) return {{"simp", simp.to_json()}};
  return nullptr;
}

json check_ideal_lattice(const Env& env) {
  auto rep = lattice_anti_isomorphism_check(env.ctx, env.generators(), env.cfg.max_upper_sets);
  if (!rep.ok) return {{"detail", rep.detail}};
  return nullptr;
}

json check_ideal_bruteforce(const Env& env) {
  if (generator_count(env.ctx, env.cfg.budget) > env.cfg.ideal_bound)
    throw BoundExceeded("formal algebra larger than the brute-force ideal bound");
  FormalAlgebra alg(env.ctx, env.cfg.budget);
  auto lattice = ideal_lattice_bruteforce(alg, env.cfg.ideal_bound);
  std::set<Subspace> handles;
  for (Mask s : env.poset.upper_sets(env.cfg.max_upper_sets)) handles.insert(handle_subspace(alg, s));
  if (std::set<Subspace>(lattice.begin(), lattice.end()) != handles)
    return {{"bruteforce_ideals", lattice.size()}, {"upper_sets", handles.size()}};
  return nullptr;
}

json check_regularity(const Env& env) {
  if (generator_count(env.ctx, env.cfg.budget) > env.cfg.regularity_bound)
    throw BoundExceeded("formal algebra larger than the regularity bound");
  FormalAlgebra alg(env.ctx, env.cfg.budget);
  auto rng = env.rng(17);
  for (int k = 0; k < env.cfg.samples; ++k) {
    Coords a = alg.random(rng, 1 + k % 8);
    auto x = quasi_inverse(alg, a);
    if (!x) return {{"element", env.element(alg.to_element(a))}};
    if (alg.mul(alg.mul(a, *x), a) != a) return {{"element", env.element(alg.to_element(a))}, {"detail", "solve"}};
  }
  return nullptr;
}

json check_unit_regular(const Env& env) {
  RingContext c2(env.poset, 2);
  if (generator_count(c2, 1) > 12) throw BoundExceeded("unit-regular sweep needs dimension <= 12");
  FormalAlgebra alg(c2, 1);
  auto sweep = unit_regular_sweep(alg);
  if (sweep.counterexample) return {{"element", element_json(c2, alg.to_element(*sweep.counterexample))}};
  return nullptr;
}

json check_central(const Env& env) {
  const auto& c = env.ctx;
  auto es = component_idempotents(c);
  if (es.size() != env.poset.connected_components().size()) return {{"idempotents", es.size()}};
  RingElement sum = RingElement::zero(c);
  for (std::size_t a = 0; a < es.size(); ++a) {
    sum = add(c, sum, es[a]);
    for (std::size_t b = 0; b < es.size(); ++b) {
      auto pr = mul(c, es[a], es[b]);
      if (a == b ? pr != es[a] : !pr.is_zero()) return {{"pair", {a, b}}};
    }
    if (!is_central(c, es[a], env.generators())) return {{"not_central", env.element(es[a])}};
  }
  if (sum != one(c)) return {{"sum", env.element(sum)}};
  return nullptr;
}

json check_well_behaved(const Env& env) {
  auto rep = well_behaved_report(env.ctx);
  if (!rep.well_behaved) return {{"heights", rep.heights}, {"detail", rep.detail}};
  return nullptr;
}

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> specs{
      {"layers", "layers partition I; lambda is the layer index; every earlier layer has an element below", check_layers},
      {"lower_filtration", "the filtration of a lower subset is the trace of the filtration of I", check_lower_filtration},
      {"chain_classes", "chain classes partition the chains through i; transports compose; classes refine upward", check_chain_classes},
      {"comparable_meet", "X_i and X_j meet iff i and j are comparable; maximal elements partition X", check_comparable_meet},
      {"transport", "k and t maps are bijections with exact inverses and compatible transports", check_transport},
      {"preimage_nesting", "Y(i), Z(j) are disjoint for incomparable i, j and nested for i < j when they meet", check_preimage_nesting},
      {"dense_homomorphism", "dense evaluation of a product equals the product of dense evaluations", check_dense_hom},
      {"associativity", "products of random elements associate in normal form", check_associativity},
      {"generator_products", "H_i H_j = 0 for incomparable i, j; 0 != H_i a inside H_i for a in H_j, i <= j", check_generator_products},
      {"unit_factorization", "every unit of H_i factors through any diagonal idempotent e_Y(i)", check_unit_factorization},
      {"identity", "1 is the sum of the identities of the maximal components", check_identity},
      {"upper_closure", "H_{I minus S} is an ideal exactly when S is an upper subset", check_upper_closure},
      {"socle_chain", "the socle chain is the layer chain; each socle is essential in its quotient", check_socle},
      {"simp_poset", "the simple modules ordered by annihilators reproduce I", check_simp},
      {"ideal_lattice", "upper subsets and ideals correspond with inclusion reversed", check_ideal_lattice},
      {"ideal_bruteforce", "brute-force ideal enumeration of the formal algebra matches the upper-set ideals", check_ideal_bruteforce},
      {"regularity", "a x a = a is solvable for random elements of the formal algebra", check_regularity},
      {"unit_regularity", "every element of the GF(2) formal algebra has a unit inner inverse", check_unit_regular},
      {"central_idempotents", "one central idempotent per connected component; orthogonal; summing to 1", check_central},
      {"well_behaved", "the socle height of each simple equals the canonical length", check_well_behaved},
  };
  return specs;
}

CheckRecord run_one(const CheckEntry& spec, const Env& env) {
  CheckRecord rec{spec.name, spec.claim, CheckStatus::pass, nullptr, 0};
  auto start = std::chrono::steady_clock::now();
  try {
    json w = spec.run(env);
    if (!w.is_null()) {
      rec.status = CheckStatus::fail;
      rec.witness = std::move(w);
    }
  } catch (const ResourceBound& e) {
    rec.status = CheckStatus::skipped;
    rec.witness = {{"reason", e.what()}};
  } catch (const BoundExceeded& e) {
    rec.status = CheckStatus::skipped;
    rec.witness = {{"reason", e.what()}};
  } catch (const std::exception& e) {
    rec.status = CheckStatus::fail;
    rec.witness = {{"exception", e.what()}};
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::pass) return false;
  return true;
}

int VerifyReport::exit_code() const {
  bool skipped = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return 1;
    skipped = skipped || c.status == CheckStatus::skipped;
  }
  return skipped ? 3 : 0;
}

json VerifyReport::to_json() const {
  json out = json::array();
  for (const auto& c : checks) {
    json r{{"check", c.check}, {"claim", c.claim}, {"status", status_name(c.status)}, {"elapsed_ms", c.elapsed_ms}};
    if (!c.witness.is_null()) r["witness"] = c.witness;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.name);
  return out;
}

VerifyReport verify_poset(const PolarizedPoset& poset, const VerifyConfig& config) {
  if (config.base < 2) throw std::invalid_argument("base must be at least 2");
  if (!is_prime(config.prime)) throw std::invalid_argument("prime must be prime");
  if (config.samples < 1 || config.witness_samples < 1) throw std::invalid_argument("sample counts must be positive");
  if (config.budget < 1 || config.budget > config.base)
    throw std::invalid_argument("digit budget must lie in [1, base] for faithful dense evaluation");
  for (const auto& name : config.only) {
    bool known = false;
    for (const auto& s : registry()) known = known || s.name == name;
    if (!known) throw std::invalid_argument("unknown check '" + name + "'");
  }
  Env env(poset, config);
  std::vector<const CheckEntry*> chosen;
  for (const auto& s : registry())
    if (config.only.empty() || config.only.count(s.name)) chosen.push_back(&s);
  VerifyReport rep;
  if (config.parallel) {
    std::vector<std::future<CheckRecord>> futures;
    for (const auto* s : chosen) futures.push_back(std::async(std::launch::async, run_one, std::cref(*s), std::cref(env)));
    for (auto& f : futures) rep.checks.push_back(f.get());
  } else {
    for (const auto* s : chosen) rep.checks.push_back(run_one(*s, env));
  }
  return rep;
}

json analyze_poset(const PolarizedPoset& p, int max_upper_sets) {
  json out;
  out["elements"] = p.names();
  out["polar"] = p.subset_names(p.polar());
  json layers = json::array();
  for (Mask l : p.layers()) layers.push_back(p.subset_names(l));
  out["layers"] = layers;
  out["xi"] = p.xi();
  json lambda = json::object();
  for (int i = 0; i < p.size(); ++i) lambda[p.name(i)] = {{"min", p.lambda_min(i)}, {"canonical", p.lambda_canonical(i)}};
  out["lambda"] = lambda;
  json chains = json::array();
  for (Mask c : p.maximal_chains()) chains.push_back(p.subset_names(c));
  out["maximal_chains"] = chains;
  out["beth"] = p.beth();
  json comps = json::array();
  for (Mask c : p.connected_components()) comps.push_back(p.subset_names(c));
  out["components"] = comps;
  out["maximal"] = p.subset_names(p.maximal());
  out["predicates"] = {{"is_chain", p.is_chain()},
                       {"is_antichain", p.is_antichain()},
                       {"is_forest_of_chains", p.is_forest_of_chains()},
                       {"connected", comps.size() == 1}};
  try {
    out["upper_sets"] = p.upper_sets(max_upper_sets).size();
  } catch (const ResourceBound&) {
    out["upper_sets"] = nullptr;
  }
  out["hasse_dot"] = p.hasse_dot();
  return out;
}

}  // namespace semiart
