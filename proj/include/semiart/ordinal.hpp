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

#ifndef SEMIART_ORDINAL_HPP
#define SEMIART_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace semiart {

// Raised for arithmetic outside the supported range (transfinite exponents,
// coefficient overflow) and for malformed text.
class OrdinalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Term {
  std::uint32_t exp;
  std::uint64_t coef;
  friend bool operator==(const Term&, const Term&) = default;
};

enum class OrdinalKind { zero, successor, limit };

// Ordinal below w^w in Cantor normal form: sum of w^exp * coef with strictly
// decreasing exponents and positive coefficients. The empty sum is 0.
class Ordinal {
 public:
  using Terms = boost::container::small_vector<Term, 6>;

  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT: naturals convert implicitly
  static Ordinal omega_pow(std::uint32_t e, std::uint64_t c = 1);
  static Ordinal from_terms(Terms terms);  // validates the normal form
  static Ordinal omega() { return omega_pow(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const { return terms_.empty() || terms_.front().exp == 0; }
  // Leading exponent; 0 for the ordinal 0.
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().exp; }
  // Coefficient of w^e (0 when absent).
  std::uint64_t coef(std::uint32_t e) const;
  std::uint64_t to_natural() const;  // throws unless finite

  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  std::string str() const;
  static Ordinal parse(std::string_view text);

 private:
  Terms terms_;
};

Ordinal add(const Ordinal& a, const Ordinal& b);
// The unique r with add(a, r) == b; requires a <= b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);
Ordinal multiply(const Ordinal& a, const Ordinal& b);
// Finite base with any exponent below w^2, or any base with a natural
// exponent. 0^0 = 1.
Ordinal power(const Ordinal& base, const Ordinal& exp);
// Left division a = b*q + r with r < b.
std::pair<Ordinal, Ordinal> divide(const Ordinal& a, const Ordinal& b);

struct DigitExpansion {
  Ordinal head;
  std::vector<Ordinal> digits;  // most significant first
};
// a = base^n * head + sum_k base^(n-k) * digits[k-1], every digit < base.
DigitExpansion digits(const Ordinal& a, const Ordinal& base, std::uint32_t positions);
Ordinal recompose(const DigitExpansion& d, const Ordinal& base);

OrdinalKind classify(const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return multiply(a, b); }

// w^k * a, i.e. every exponent shifted up by k.
Ordinal shift_up(const Ordinal& a, std::uint32_t k);

}  // namespace semiart

#endif  // SEMIART_ORDINAL_HPP
