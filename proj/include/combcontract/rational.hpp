// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMBCONTRACT_RATIONAL_HPP_
#define COMBCONTRACT_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace combcontract {

// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
// Every decision in the library (equilibrium checks, budget feasibility,
// approximation guarantees) is made on Rationals; doubles only appear when
// a report asks for a decimal rendering.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  // Accepts "p/q", an integer "p", or a finite decimal such as "0.125".
  // Throws ContractError(kRationalParse) on malformed input or q = 0.
  static Rational parse(std::string_view text);

  // Always "p/q", including integers ("3/1") and zero ("0/1").
  std::string str() const;
  double toDouble() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool isZero() const { return sign() == 0; }
  bool isInteger() const { return value_.get_den() == 1; }

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  // Largest integer <= value.
  mpz_class floor() const;
  // Smallest integer >= value.
  mpz_class ceil() const;

  Rational abs() const;
  Rational inverse() const;  // throws on zero
  Rational pow(unsigned exponent) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

Rational fromInteger(const mpz_class& value);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace combcontract

#endif  // COMBCONTRACT_RATIONAL_HPP_
