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

#include "semiart/ordinal.hpp"

#include <charconv>

namespace semiart {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OrdinalError("coefficient overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OrdinalError("coefficient overflow");
  return r;
}

std::uint32_t checked_add32(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OrdinalError("exponent overflow");
  return r;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back({0, n});
}

Ordinal Ordinal::omega_pow(std::uint32_t e, std::uint64_t c) {
  Ordinal r;
  if (c != 0) r.terms_.push_back({e, c});
  return r;
}

Ordinal Ordinal::from_terms(Terms terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms[k].coef == 0) throw OrdinalError("zero coefficient in normal form");
    if (k > 0 && terms[k].exp >= terms[k - 1].exp)
      throw OrdinalError("exponents must strictly decrease");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

std::uint64_t Ordinal::coef(std::uint32_t e) const {
  for (const auto& t : terms_) {
    if (t.exp == e) return t.coef;
    if (t.exp < e) break;
  }
  return 0;
}

std::uint64_t Ordinal::to_natural() const {
  if (!is_finite()) throw OrdinalError("ordinal " + str() + " is not finite");
  return terms_.empty() ? 0 : terms_.front().coef;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].exp != y[k].exp) return x[k].exp <=> y[k].exp;
    if (x[k].coef != y[k].coef) return x[k].coef <=> y[k].coef;
  }
  return x.size() <=> y.size();
}

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exp == 0) {
      out += std::to_string(t.coef);
      continue;
    }
    out += "w";
    if (t.exp > 1) out += "^" + std::to_string(t.exp);
    if (t.coef > 1) out += "*" + std::to_string(t.coef);
  }
  return out;
}

namespace {

// Reads a positive decimal without sign or leading zeros.
bool read_positive(std::string_view& s, std::uint64_t& out) {
  if (s.empty() || s[0] < '1' || s[0] > '9') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc()) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

Ordinal Ordinal::parse(std::string_view text) {
  auto fail = [&]() -> Ordinal {
    throw OrdinalError("malformed ordinal '" + std::string(text) + "'");
  };
  if (text == "0") return Ordinal();
  std::string_view s = text;
  Terms terms;
  while (true) {
    Term t{0, 1};
    if (!s.empty() && s[0] == 'w') {
      s.remove_prefix(1);
      t.exp = 1;
      if (!s.empty() && s[0] == '^') {
        s.remove_prefix(1);
        std::uint64_t e;
        if (!read_positive(s, e) || e < 2 || e > UINT32_MAX) return fail();
        t.exp = static_cast<std::uint32_t>(e);
      }
      if (!s.empty() && s[0] == '*') {
        s.remove_prefix(1);
        if (!read_positive(s, t.coef) || t.coef < 2) return fail();
      }
    } else if (!read_positive(s, t.coef)) {
      return fail();
    }
    if (!terms.empty() && t.exp >= terms.back().exp) return fail();
    terms.push_back(t);
    if (s.empty()) break;
    if (s.substr(0, 3) != " + ") return fail();
    s.remove_prefix(3);
    if (terms.back().exp == 0) return fail();
  }
  return from_terms(std::move(terms));
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& bt = b.terms();
  std::uint32_t e = bt.front().exp;
  Ordinal::Terms out;
  std::uint64_t carry = 0;
  for (const auto& t : a.terms()) {
    if (t.exp > e) {
      out.push_back(t);
    } else {
      if (t.exp == e) carry = t.coef;
      break;
    }
  }
  out.push_back({e, checked_add(carry, bt.front().coef)});
  for (std::size_t k = 1; k < bt.size(); ++k) out.push_back(bt[k]);
  return Ordinal::from_terms(std::move(out));
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  if (a > b) throw OrdinalError("left_subtract requires a <= b, got " + a.str() + " > " + b.str());
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t k = 0;
  while (k < x.size() && x[k] == y[k]) ++k;
  Ordinal::Terms out;
  if (k < x.size() && x[k].exp == y[k].exp) {
    // a <= b forces x[k].coef < y[k].coef here
    out.push_back({y[k].exp, y[k].coef - x[k].coef});
    ++k;
  }
  for (; k < y.size(); ++k) out.push_back(y[k]);
  return Ordinal::from_terms(std::move(out));
}

Ordinal multiply(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const auto& at = a.terms();
  std::uint32_t e1 = at.front().exp;
  Ordinal::Terms out;
  for (const auto& t : b.terms()) {
    if (t.exp > 0) {
      out.push_back({checked_add32(e1, t.exp), t.coef});
    } else {
      out.push_back({e1, checked_mul(at.front().coef, t.coef)});
      for (std::size_t k = 1; k < at.size(); ++k) out.push_back(at[k]);
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal power(const Ordinal& base, const Ordinal& exp) {
  if (exp.is_zero()) return Ordinal(1);
  if (base.is_zero()) return Ordinal();
  if (base == Ordinal(1)) return base;
  if (exp.is_finite()) {
    std::uint64_t k = exp.to_natural();
    Ordinal result(1);
    Ordinal sq = base;
    while (k > 0) {
      if (k & 1) result = multiply(result, sq);
      k >>= 1;
      if (k > 0) sq = multiply(sq, sq);
    }
    return result;
  }
  if (!base.is_finite() || exp.degree() > 1)
    throw OrdinalError("power " + base.str() + "^(" + exp.str() + ") is outside the supported range");
  // n^(w*c + r) = w^c * n^r for a natural n >= 2
  std::uint64_t c = exp.coef(1);
  Ordinal tail = power(base, Ordinal(exp.coef(0)));
  if (c > UINT32_MAX) throw OrdinalError("exponent overflow");
  return Ordinal::omega_pow(static_cast<std::uint32_t>(c), tail.to_natural());
}

std::pair<Ordinal, Ordinal> divide(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) throw OrdinalError("division by zero");
  if (a < b) return {Ordinal(), a};
  const auto& bt = b.terms();
  std::uint32_t f = bt.front().exp;
  std::uint64_t d = bt.front().coef;
  Ordinal::Terms qt;
  Ordinal::Terms low;
  for (const auto& t : a.terms()) {
    if (t.exp > f)
      qt.push_back({t.exp - f, t.coef});
    else
      low.push_back(t);
  }
  Ordinal a_low = Ordinal::from_terms(low);
  std::uint64_t n = a_low.coef(f) / d;
  if (n > 0 && multiply(b, Ordinal(n)) > a_low) --n;
  Ordinal bn = multiply(b, Ordinal(n));
  if (n > 0) qt.push_back({0, n});
  return {Ordinal::from_terms(std::move(qt)), left_subtract(bn, a_low)};
}

DigitExpansion digits(const Ordinal& a, const Ordinal& base, std::uint32_t positions) {
  if (base < Ordinal(2)) throw OrdinalError("digit base must be at least 2");
  DigitExpansion out;
  auto [head, rem] = divide(a, power(base, Ordinal(positions)));
  out.head = std::move(head);
  for (std::uint32_t k = 1; k <= positions; ++k) {
    auto [q, r] = divide(rem, power(base, Ordinal(positions - k)));
    out.digits.push_back(std::move(q));
    rem = std::move(r);
  }
  return out;
}

Ordinal recompose(const DigitExpansion& d, const Ordinal& base) {
  auto n = static_cast<std::uint32_t>(d.digits.size());
  Ordinal r = multiply(power(base, Ordinal(n)), d.head);
  for (std::uint32_t k = 1; k <= n; ++k)
    r = add(r, multiply(power(base, Ordinal(n - k)), d.digits[k - 1]));
  return r;
}

OrdinalKind classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalKind::zero;
  return a.terms().back().exp > 0 ? OrdinalKind::limit : OrdinalKind::successor;
}

Ordinal shift_up(const Ordinal& a, std::uint32_t k) {
  Ordinal::Terms out = a.terms();
  for (auto& t : out) t.exp = checked_add32(t.exp, k);
  return Ordinal::from_terms(std::move(out));
}

}  // namespace semiart
