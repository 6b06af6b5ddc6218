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

#include "semiart/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace semiart {

std::vector<int> members(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

PolarizedPoset PolarizedPoset::from_relations(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::vector<std::string>& polar) {
  PolarizedPoset p;
  if (elements.empty()) throw PosetError("poset must be nonempty");
  if (elements.size() > kMaxElements)
    throw PosetError("at most " + std::to_string(kMaxElements) + " elements are supported");
  for (const auto& e : elements) {
    if (!p.index_.emplace(e, static_cast<int>(p.names_.size())).second)
      throw PosetError("duplicate element '" + e + "'");
    p.names_.push_back(e);
  }
  int n = p.size();
  p.up_.assign(n, 0);
  for (int i = 0; i < n; ++i) p.up_[i] = bit(i);
  for (const auto& [a, b] : pairs) {
    int i = p.index_of(a);
    int j = p.index_of(b);
    p.up_[i] |= bit(j);
  }
  // Transitive closure by repeated expansion.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask u = p.up_[i];
      for (int j : members(u)) u |= p.up_[j];
      if (u != p.up_[i]) {
        p.up_[i] = u;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j : members(p.up_[i]))
      if (j != i && contains(p.up_[j], i))
        throw PosetError("cycle detected between '" + p.names_[i] + "' and '" + p.names_[j] + "'");
  p.polar_ = p.parse_subset(polar);
  p.finish();
  if (!p.is_lower(p.polar_)) throw PosetError("polar part is not a lower subset");
  return p;
}

void PolarizedPoset::finish() {
  int n = size();
  down_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : members(up_[i])) down_[j] |= bit(i);
  maximal_ = minimal_ = 0;
  for (int i = 0; i < n; ++i) {
    if (up_[i] == bit(i)) maximal_ |= bit(i);
    if (down_[i] == bit(i)) minimal_ |= bit(i);
  }

  layers_ = layers_of(all());

  // Minimum length function: 0 on minimal elements, else sup of
  // lambda(j) + 1 over j < i. Evaluated in order of strict-down-set size.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(down_[a]) < std::popcount(down_[b]);
  });
  lambda_.assign(n, 0);
  for (int i : order)
    for (int j : members(down_[i] & ~bit(i))) lambda_[i] = std::max(lambda_[i], lambda_[j] + 1);

  // Maximal chains are the saturated paths from a minimal to a maximal element.
  std::vector<int> sorted(n);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    return std::tie(lambda_[a], names_[a]) < std::tie(lambda_[b], names_[b]);
  });
  std::vector<Mask> cover_up(n, 0);
  for (auto [i, j] : covers()) cover_up[i] |= bit(j);
  std::vector<Mask> found;
  std::function<void(int, Mask)> extend = [&](int top, Mask chain) {
    if (cover_up[top] == 0) {
      found.push_back(chain);
      return;
    }
    for (int j : sorted)
      if (contains(cover_up[top], j)) extend(j, chain | bit(j));
  };
  for (int i : sorted)
    if (contains(minimal_, i)) extend(i, bit(i));
  auto key = [&](Mask c) {
    std::vector<std::string> k = subset_names(c);
    std::sort(k.begin(), k.end());
    return k;
  };
  std::stable_sort(found.begin(), found.end(), [&](Mask a, Mask b) { return key(a) < key(b); });
  chains_ = std::move(found);
  chain_index_.clear();
  for (int c = 0; c < beth(); ++c) chain_index_[chains_[c]] = c;

  classes_.assign(n, {});
  class_of_.assign(n, std::vector<int>(beth(), -1));
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < beth(); ++c) {
      if (!contains(chains_[c], i)) continue;
      Mask below = chains_[c] & down_[i];
      auto it = std::find_if(classes_[i].begin(), classes_[i].end(),
                             [&](const ChainClass& a) { return a.below == below; });
      if (it == classes_[i].end()) {
        classes_[i].push_back({i, below, {}});
        it = classes_[i].end() - 1;
      }
      it->chains.push_back(c);
      class_of_[i][c] = static_cast<int>(it - classes_[i].begin());
    }
  }
}

PolarizedPoset PolarizedPoset::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw PosetError("poset JSON must be an object");
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> polar;
  try {
    elements = j.at("elements").get<std::vector<std::string>>();
    if (j.contains("relations")) {
      for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) throw PosetError("each relation must be a pair [a, b]");
        pairs.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
      }
    }
    if (j.contains("polar")) polar = j.at("polar").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw PosetError(std::string("bad poset JSON: ") + e.what());
  }
  return from_relations(elements, pairs, polar);
}

nlohmann::json PolarizedPoset::to_json() const {
  nlohmann::json rel = nlohmann::json::array();
  for (auto [i, j] : covers()) rel.push_back({names_[i], names_[j]});
  return {{"elements", names_}, {"relations", rel}, {"polar", subset_names(polar_)}};
}

int PolarizedPoset::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw PosetError("unknown element '" + name + "'");
  return it->second;
}

Mask PolarizedPoset::lower_part(int alpha) const {
  Mask m = 0;
  for (int k = 0; k < alpha && k < xi(); ++k) m |= layers_[k];
  return m;
}

int PolarizedPoset::chain_index(Mask chain) const {
  auto it = chain_index_.find(chain);
  return it == chain_index_.end() ? -1 : it->second;
}

int PolarizedPoset::class_of(int i, int chain) const { return class_of_.at(i).at(chain); }

int PolarizedPoset::class_transport(int i, int from_class, int to_class, int chain) const {
  const auto& cls = classes_.at(i);
  if (class_of(i, chain) != from_class)
    throw PosetError("chain " + std::to_string(chain) + " is not in the source class");
  Mask image = cls.at(to_class).below | (chains_[chain] & up_[i]);
  int c = chain_index(image);
  if (c < 0) throw std::logic_error("transported chain is not maximal");
  return c;
}

bool PolarizedPoset::is_lower(Mask s) const {
  for (int i : members(s))
    if (!is_subset(down_[i], s)) return false;
  return true;
}

bool PolarizedPoset::is_upper(Mask s) const {
  for (int i : members(s))
    if (!is_subset(up_[i], s)) return false;
  return true;
}

Mask PolarizedPoset::up_closure(Mask s) const {
  Mask r = 0;
  for (int i : members(s)) r |= up_[i];
  return r;
}

Mask PolarizedPoset::down_closure(Mask s) const {
  Mask r = 0;
  for (int i : members(s)) r |= down_[i];
  return r;
}

std::vector<Mask> PolarizedPoset::layers_of(Mask s) const {
  std::vector<Mask> out;
  Mask rest = s;
  while (rest) {
    Mask layer = 0;
    for (int i : members(rest))
      if ((down_[i] & rest) == bit(i)) layer |= bit(i);
    out.push_back(layer);
    rest &= ~layer;
  }
  return out;
}

bool PolarizedPoset::layer_restriction_check(Mask lower) const {
  if (!is_lower(lower)) throw PosetError("subset is not a lower subset");
  std::vector<Mask> own = layers_of(lower);
  Mask acc_own = 0;
  for (int alpha = 1; alpha <= xi(); ++alpha) {
    if (alpha <= static_cast<int>(own.size())) acc_own |= own[alpha - 1];
    if (acc_own != (lower & lower_part(alpha))) return false;
  }
  return true;
}

std::vector<Mask> PolarizedPoset::connected_components() const {
  int n = size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < n; ++i)
    for (int j : members(up_[i])) parent[find(i)] = find(j);
  std::map<int, Mask> groups;
  for (int i = 0; i < n; ++i) groups[find(i)] |= bit(i);
  std::vector<Mask> out;
  for (auto& [root, m] : groups) out.push_back(m);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

bool PolarizedPoset::is_chain() const {
  for (int i = 0; i < size(); ++i)
    if ((up_[i] | down_[i]) != all()) return false;
  return true;
}

bool PolarizedPoset::is_antichain() const {
  for (int i = 0; i < size(); ++i)
    if (up_[i] != bit(i)) return false;
  return true;
}

bool PolarizedPoset::is_forest_of_chains() const {
  for (Mask comp : connected_components())
    for (int i : members(comp))
      if (((up_[i] | down_[i]) & comp) != comp) return false;
  return true;
}

Mask PolarizedPoset::max_of(Mask s) const { return maximal_ & up_closure(s); }

bool PolarizedPoset::is_finitely_sheltered(Mask s) const {
  Mask mx = max_of(s);
  // max J is finite here; check J inside {<= max J} and max J inside J.
  return is_subset(s, down_closure(mx)) && is_subset(mx, s);
}

std::vector<Mask> PolarizedPoset::upper_sets(int bound) const {
  if (size() > bound)
    throw ResourceBound("upper-set enumeration limited to " + std::to_string(bound) + " elements");
  std::vector<Mask> out;
  for (Mask s = 0; s <= all(); ++s)
    if (is_upper(s)) out.push_back(s);
  return out;
}

std::vector<Mask> PolarizedPoset::lower_sets(int bound) const {
  if (size() > bound)
    throw ResourceBound("lower-set enumeration limited to " + std::to_string(bound) + " elements");
  std::vector<Mask> out;
  for (Mask s = 0; s <= all(); ++s)
    if (is_lower(s)) out.push_back(s);
  return out;
}

std::vector<std::pair<int, int>> PolarizedPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j : members(up_[i] & ~bit(i)))
      if ((up_[i] & down_[j]) == (bit(i) | bit(j))) out.emplace_back(i, j);
  return out;
}

std::string PolarizedPoset::hasse_dot(const std::string& graph_name) const {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (int i = 0; i < size(); ++i) {
    os << "  \"" << names_[i] << "\"";
    if (contains(polar_, i)) os << " [shape=box]";
    os << ";\n";
  }
  for (auto [i, j] : covers()) os << "  \"" << names_[i] << "\" -> \"" << names_[j] << "\";\n";
  os << "}\n";
  return os.str();
}

Mask PolarizedPoset::parse_subset(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& s : names) m |= bit(index_of(s));
  return m;
}

std::vector<std::string> PolarizedPoset::subset_names(Mask m) const {
  std::vector<std::string> out;
  for (int i : members(m)) out.push_back(names_[i]);
  return out;
}

bool is_order_isomorphism(const PolarizedPoset& a, const PolarizedPoset& b, const std::vector<int>& image) {
  if (a.size() != b.size() || static_cast<int>(image.size()) != a.size()) return false;
  Mask seen = 0;
  for (int x : image) {
    if (x < 0 || x >= b.size() || contains(seen, x)) return false;
    seen |= bit(x);
  }
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.leq(i, j) != b.leq(image[i], image[j])) return false;
  return true;
}

bool order_isomorphic(const PolarizedPoset& a, const PolarizedPoset& b) {
  int n = a.size();
  if (n != b.size()) return false;
  auto sig = [](const PolarizedPoset& p, int i) {
    return std::pair(std::popcount(p.up(i)), std::popcount(p.down(i)));
  };
  std::vector<int> image(n, -1);
  Mask used = 0;
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    for (int x = 0; x < n; ++x) {
      if (contains(used, x) || sig(a, i) != sig(b, x)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a.leq(i, j) == b.leq(x, image[j]) && a.leq(j, i) == b.leq(image[j], x);
      if (!ok) continue;
      image[i] = x;
      used |= bit(x);
      if (place(i + 1)) return true;
      used &= ~bit(x);
    }
    return false;
  };
  return place(0);
}

}  // namespace semiart
