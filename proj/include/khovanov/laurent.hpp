#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace kh {

/// Integer Laurent polynomial in t (homological grading) and q (quantum
/// grading). Terms are keyed by (t-exponent, q-exponent); zero coefficients
/// are never stored, so structural equality is polynomial equality.
class LaurentPoly2 {
 public:
  using Coeff = std::int64_t;
  /// (r, m): the monomial t^r q^m.
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, Coeff>;

  LaurentPoly2() = default;

  static LaurentPoly2 monomial(Coeff c, int r, int m);
  static LaurentPoly2 constant(Coeff c) { return monomial(c, 0, 0); }
  static LaurentPoly2 t(int power = 1) { return monomial(1, power, 0); }
  static LaurentPoly2 q(int power = 1) { return monomial(1, 0, power); }

  Coeff coeff(int r, int m) const;
  void add_term(int r, int m, Coeff c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool all_coefficients_nonnegative() const;

  /// True when no term carries a nonzero power of t.
  bool is_t_free() const;

  int min_t() const;
  int max_t() const;
  int min_q() const;
  int max_q() const;

  /// Multiply by t^dr q^dm.
  LaurentPoly2 shifted(int dr, int dm) const;
  /// Substitute t -> t0 (t0 = +1 or -1) and collect by q-exponent.
  LaurentPoly2 eval_t(int t0) const;
  /// Substitute (t, q) -> (t^-1, q^-1).
  LaurentPoly2 inverted() const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(Coeff c);

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a) { return a *= -1; }
  friend LaurentPoly2 operator*(LaurentPoly2 a, Coeff c) { return a *= c; }
  friend LaurentPoly2 operator*(Coeff c, LaurentPoly2 a) { return a *= c; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  TermMap terms_;
};

/// Polynomials in q alone (the Kauffman bracket and its normalizations) use
/// the same representation with every t-exponent equal to zero.
using BracketPoly = LaurentPoly2;

LaurentPoly2 pow(const LaurentPoly2& base, unsigned exponent);

/// Exact division in Z[t^±1, q^±1]. Returns the quotient when
/// `divisor * quotient == dividend`, and nullopt otherwise.
std::optional<LaurentPoly2> divide(const LaurentPoly2& dividend, const LaurentPoly2& divisor);

/// Canonical ASCII rendering: terms in (r, m) order, each written as
/// `c*q^m*t^r` with unit coefficients and zero exponents elided, joined by
/// ` + ` / ` - `. The zero polynomial renders as `0`.
std::string to_string(const LaurentPoly2& p);

class PolyParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the canonical rendering. Also accepts either factor order and
/// parenthesised exponents such as `q^(-1)`.
LaurentPoly2 parse_poly(std::string_view text);

}  // namespace kh
