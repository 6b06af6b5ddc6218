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

#include "semiart/indexing.hpp"

#include <string>

namespace semiart {

IndexSpace IndexSpace::finite(std::uint32_t n, int xi, int beth) {
  if (n < 2) throw IndexError("finite base must be at least 2");
  return {n, xi, beth};
}

Ordinal IndexSpace::pow(int alpha) const {
  if (is_omega()) return Ordinal::omega_pow(static_cast<std::uint32_t>(alpha));
  return power(Ordinal(base), Ordinal(static_cast<std::uint64_t>(alpha)));
}

Ordinal IndexSpace::extent() const { return multiply(pow(xi + 1), Ordinal(beth)); }

Ordinal IndexSpace::blocks_at(int alpha) const { return multiply(pow(xi + 1 - alpha), Ordinal(beth)); }

std::pair<Ordinal, Ordinal> IndexSpace::split(const Ordinal& x, int alpha) const {
  if (x >= extent()) throw IndexError("point " + x.str() + " lies outside the index space");
  return divide(x, pow(alpha));
}

bool interval_contains_point(const IndexSpace& s, const Interval& iv, const Ordinal& x) {
  return s.split(x, iv.level).first == iv.block;
}

bool interval_within(const IndexSpace& s, const Interval& a, const Interval& b) {
  if (a.level > b.level) return false;
  return divide(a.block, s.pow(b.level - a.level)).first == b.block;
}

bool intervals_meet(const IndexSpace& s, const Interval& a, const Interval& b) {
  return interval_within(s, a, b) || interval_within(s, b, a);
}

Interval Refinement::child(const Ordinal& mu) const {
  if (mu >= bound) throw IndexError("child index " + mu.str() + " out of range");
  return {level, add(offset, mu)};
}

std::vector<Interval> Refinement::list() const {
  if (!bound.is_finite()) throw IndexError("infinite refinement has no concrete list");
  std::vector<Interval> out;
  for (std::uint64_t k = 0; k < bound.to_natural(); ++k) out.push_back(child(Ordinal(k)));
  return out;
}

Refinement refine(const IndexSpace& s, const Interval& iv, int finer_level) {
  if (finer_level >= iv.level || finer_level < 0)
    throw IndexError("refinement level must be below the interval level");
  Ordinal stride = s.pow(iv.level - finer_level);
  return {finer_level, multiply(stride, iv.block), stride};
}

ChainAtlas::ChainAtlas(PolarizedPoset poset)
    : poset_(std::move(poset)), space_(IndexSpace::omega(poset_.xi(), poset_.beth())) {
  int n = poset_.size();
  rank_in_class_.assign(n, std::vector<int>(poset_.beth(), -1));
  for (int i = 0; i < n; ++i)
    for (const auto& cls : poset_.chain_classes(i))
      for (std::size_t r = 0; r < cls.chains.size(); ++r) rank_in_class_[i][cls.chains[r]] = static_cast<int>(r);
}

int ChainAtlas::chain_of_block(int i, const Ordinal& lambda) const {
  auto e = static_cast<std::uint32_t>(exponent(i));
  if (lambda.degree() > e || (lambda.degree() == e && lambda.coef(e) >= static_cast<std::uint64_t>(space_.beth)))
    throw IndexError("block index " + lambda.str() + " outside the level");
  return static_cast<int>(lambda.coef(e));
}

bool ChainAtlas::in_lambda(int i, int a, const Ordinal& lambda) const {
  int chi;
  try {
    chi = chain_of_block(i, lambda);
  } catch (const IndexError&) {
    return false;
  }
  return poset_.class_of(i, chi) == a;
}

namespace {

// Replace the coefficient of w^e (the top digit) by c.
Ordinal with_top(const Ordinal& lambda, std::uint32_t e, std::uint64_t c) {
  Ordinal::Terms out;
  if (c) out.push_back({e, c});
  for (const auto& t : lambda.terms())
    if (t.exp < e) out.push_back(t);
  return Ordinal::from_terms(std::move(out));
}

}  // namespace

Ordinal ChainAtlas::k_rep(int i, const Ordinal& lambda) const {
  if (!in_lambda(i, 0, lambda)) throw IndexError("block index not in the representative class");
  auto e = static_cast<std::uint32_t>(exponent(i));
  const auto& rep = chain_class(i, 0);
  std::uint64_t m = rep.chains.size();
  std::uint64_t c = rank_in_class_[i][chain_of_block(i, lambda)];
  std::uint64_t q = lambda.coef(e - 1);
  if (e == 1) q = lambda.coef(0);
  Ordinal rest = with_top(with_top(lambda, e, 0), e - 1, 0);
  if (e == 1) rest = Ordinal();
  std::uint64_t tt = q * m + c;
  std::uint64_t beth = space_.beth;
  Ordinal::Terms out;
  if (tt % beth) out.push_back({e, tt % beth});
  if (tt / beth) out.push_back({e - 1, tt / beth});
  for (const auto& term : rest.terms()) out.push_back(term);
  return Ordinal::from_terms(std::move(out));
}

Ordinal ChainAtlas::k_rep_inv(int i, const Ordinal& mu) const {
  auto e = static_cast<std::uint32_t>(exponent(i));
  const auto& rep = chain_class(i, 0);
  std::uint64_t m = rep.chains.size();
  std::uint64_t cp = chain_of_block(i, mu);
  std::uint64_t qp = mu.coef(e - 1);
  Ordinal rest = e == 1 ? Ordinal() : with_top(with_top(mu, e, 0), e - 1, 0);
  std::uint64_t tt = qp * static_cast<std::uint64_t>(space_.beth) + cp;
  std::uint64_t chi = rep.chains[tt % m];
  Ordinal::Terms out;
  out.push_back({e, chi});
  if (chi == 0) out.clear();
  if (tt / m) out.push_back({e - 1, tt / m});
  for (const auto& term : rest.terms()) out.push_back(term);
  return Ordinal::from_terms(std::move(out));
}

Ordinal ChainAtlas::k_transport(int i, int to, int from, const Ordinal& lambda) const {
  if (!in_lambda(i, from, lambda)) throw IndexError("block index not in the source class");
  auto e = static_cast<std::uint32_t>(exponent(i));
  int chi = chain_of_block(i, lambda);
  return with_top(lambda, e, static_cast<std::uint64_t>(g(i, to, from, chi)));
}

Ordinal ChainAtlas::k(int i, int a, const Ordinal& lambda) const {
  return k_rep(i, k_transport(i, 0, a, lambda));
}

Ordinal ChainAtlas::k_inv(int i, int a, const Ordinal& mu) const {
  return k_transport(i, a, 0, k_rep_inv(i, mu));
}

Ordinal ChainAtlas::t(int i, int a, const Ordinal& x) const {
  auto [lambda, rho] = space_.split(x, level(i));
  if (!in_lambda(i, a, lambda)) throw IndexError("point " + x.str() + " not in X_A");
  return add(shift_up(k(i, a, lambda), static_cast<std::uint32_t>(level(i))), rho);
}

Ordinal ChainAtlas::t_inv(int i, int a, const Ordinal& y) const {
  auto [mu, rho] = space_.split(y, level(i));
  return add(shift_up(k_inv(i, a, mu), static_cast<std::uint32_t>(level(i))), rho);
}

Ordinal ChainAtlas::t_transport(int i, int to, int from, const Ordinal& x) const {
  auto [lambda, rho] = space_.split(x, level(i));
  return add(shift_up(k_transport(i, to, from, lambda), static_cast<std::uint32_t>(level(i))), rho);
}

std::vector<Interval> ChainAtlas::y_of(int i, const Interval& y) const {
  if (y.level != level(i)) throw IndexError("Y must sit at level lambda(i)");
  std::vector<Interval> out;
  for (int a = 0; a < class_count(i); ++a) out.push_back({y.level, k_inv(i, a, y.block)});
  return out;
}

int ChainAtlas::chain_of_point(const Ordinal& x) const {
  return static_cast<int>(space_.split(x, space_.xi + 1).first.to_natural());
}

bool ChainAtlas::point_in_xi(int i, const Ordinal& x) const {
  return contains(poset_.maximal_chains()[chain_of_point(x)], i);
}

nlohmann::json ChainAtlas::dump() const {
  nlohmann::json j;
  j["xi"] = space_.xi;
  j["beth"] = space_.beth;
  nlohmann::json chains = nlohmann::json::array();
  for (Mask c : poset_.maximal_chains()) chains.push_back(poset_.subset_names(c));
  j["chains"] = chains;
  nlohmann::json elems = nlohmann::json::object();
  for (int i = 0; i < poset_.size(); ++i) {
    nlohmann::json e;
    e["level"] = level(i);
    nlohmann::json cls = nlohmann::json::array();
    for (int a = 0; a < class_count(i); ++a) {
      nlohmann::json c;
      c["below"] = poset_.subset_names(chain_class(i, a).below);
      c["chains"] = chain_class(i, a).chains;
      nlohmann::json gmap = nlohmann::json::array();
      for (int chi : chain_class(i, a).chains) gmap.push_back(g(i, 0, a, chi));
      c["g_to_representative"] = gmap;
      cls.push_back(c);
    }
    e["classes"] = cls;
    elems[poset_.name(i)] = e;
  }
  j["elements"] = elems;
  return j;
}

std::uint64_t max_low_digit(const Ordinal& a, std::uint32_t top) {
  std::uint64_t m = 0;
  for (const auto& t : a.terms())
    if (t.exp < top) m = std::max(m, t.coef);
  return m;
}

std::optional<std::uint64_t> evaluate_at_base(const Ordinal& a, std::uint32_t n, std::uint32_t top) {
  std::uint64_t v = 0;
  for (const auto& t : a.terms()) {
    if (t.exp > top) return std::nullopt;
    if (t.exp < top && t.coef >= n) return std::nullopt;
    std::uint64_t p = 1;
    for (std::uint32_t k = 0; k < t.exp; ++k) p *= n;
    v += t.coef * p;
  }
  return v;
}

}  // namespace semiart
