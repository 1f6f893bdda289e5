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

#include "combcontract/rational.hpp"

#include <cctype>
#include <ostream>

#include "combcontract/errors.hpp"

namespace combcontract {
namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses an optionally signed decimal integer.
mpz_class parseInteger(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!allDigits(digits)) {
    fail(ErrorCode::kRationalParse,
         "malformed rational '" + std::string(whole) + "'");
  }
  mpz_class value(std::string(digits), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    fail(ErrorCode::kRationalParse, "zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    fail(ErrorCode::kRationalParse, "zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) fail(ErrorCode::kRationalParse, "empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parseInteger(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!allDigits(den_text)) {
      fail(ErrorCode::kRationalParse,
           "malformed rational '" + std::string(text) + "'");
    }
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) {
      fail(ErrorCode::kRationalParse,
           "zero denominator in '" + std::string(text) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((!int_part.empty() && !allDigits(int_part)) ||
        (!frac_part.empty() && !allDigits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      fail(ErrorCode::kRationalParse,
           "malformed rational '" + std::string(text) + "'");
    }
    const std::string digits =
        std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    mpq_class q(mpz_class(digits, 10), den);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
  }

  return Rational(mpq_class(parseInteger(text, text)));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

mpz_class Rational::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (isZero()) fail(ErrorCode::kInvalidArgument, "inverse of zero");
  mpq_class inv = 1 / value_;
  return Rational(std::move(inv));
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) fail(ErrorCode::kInvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  mpq_class neg = -value_;
  Rational out;
  out.value_ = std::move(neg);
  return out;
}

Rational fromInteger(const mpz_class& value) { return Rational(mpq_class(value)); }

const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace combcontract
