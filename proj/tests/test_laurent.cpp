#include <doctest.h>

#include <random>

#include "khovanov/graded_dimension.hpp"
#include "khovanov/laurent.hpp"

using namespace kh;

namespace {

LaurentPoly2 random_poly(std::mt19937_64& rng, int terms = 6) {
  std::uniform_int_distribution<int> exp(-6, 6), coef(-4, 4);
  LaurentPoly2 p;
  for (int i = 0; i < terms; ++i) p.add_term(exp(rng), exp(rng), coef(rng));
  return p;
}

}  // namespace

TEST_CASE("canonical rendering orders terms by (r, m) with q before t") {
  const auto kh = parse_poly("q + q^3 + q^5*t^2 + q^9*t^3");
  CHECK(to_string(kh) == "q + q^3 + q^5*t^2 + q^9*t^3");
  CHECK(to_string(LaurentPoly2::q(-1) + LaurentPoly2::q(1)) == "q^-1 + q");
  CHECK(to_string(LaurentPoly2::monomial(2, -2, -5)) == "2*q^-5*t^-2");
  CHECK(to_string(LaurentPoly2::monomial(-1, 0, 6) + LaurentPoly2::constant(1)) == "1 - q^6");
  CHECK(to_string(LaurentPoly2{}) == "0");
  CHECK(to_string(LaurentPoly2::t(1)) == "t");
}

TEST_CASE("parser accepts either factor order and parenthesised exponents") {
  CHECK(parse_poly("t^2*q^5") == LaurentPoly2::monomial(1, 2, 5));
  CHECK(parse_poly("q^(-1) + q") == parse_poly("q^-1 + q"));
  CHECK(parse_poly("-3*q^-2*t + 7") == LaurentPoly2::monomial(-3, 1, -2) + LaurentPoly2::constant(7));
  CHECK(parse_poly("0").is_zero());
  CHECK_THROWS_AS(parse_poly("q^"), PolyParseError);
  CHECK_THROWS_AS(parse_poly("x + 1"), PolyParseError);
  CHECK_THROWS_AS(parse_poly(""), PolyParseError);
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly2 p = LaurentPoly2::q(2);
  p.add_term(0, 2, -1);
  CHECK(p.is_zero());
  CHECK(p.size() == 0);
  CHECK((LaurentPoly2::q(3) - LaurentPoly2::q(3)) == LaurentPoly2{});
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly2{});
    CHECK(a * LaurentPoly2::constant(1) == a);
  }
}

TEST_CASE("exact division recovers the factor and rejects non-multiples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng, 3);
    if (b.is_zero()) continue;
    const auto q = divide(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  const auto circle = LaurentPoly2::q(1) + LaurentPoly2::q(-1);
  CHECK(!divide(LaurentPoly2::constant(1), circle).has_value());
  CHECK(*divide(parse_poly("q + q^3 + q^5 - q^9"), circle) == parse_poly("q^2 + q^6 - q^8"));
  CHECK_THROWS(divide(circle, LaurentPoly2{}));
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("substitutions") {
  const auto kh = parse_poly("q + q^3 + q^5*t^2 + q^9*t^3");
  CHECK(kh.eval_t(-1) == parse_poly("q + q^3 + q^5 - q^9"));
  CHECK(kh.eval_t(1) == parse_poly("q + q^3 + q^5 + q^9"));
  CHECK(kh.inverted() == parse_poly("q^-1 + q^-3 + q^-5*t^-2 + q^-9*t^-3"));
  CHECK(kh.inverted().inverted() == kh);
  CHECK(kh.shifted(1, -1) == parse_poly("t + q^2*t + q^4*t^3 + q^8*t^4"));
  CHECK(kh.min_t() == 0);
  CHECK(kh.max_t() == 3);
  CHECK(kh.min_q() == 1);
  CHECK(kh.max_q() == 9);
  CHECK(kh.all_coefficients_nonnegative());
  CHECK(!kh.is_t_free());
  CHECK(pow(LaurentPoly2::q(1) + LaurentPoly2::q(-1), 2) == parse_poly("q^-2 + 2 + q^2"));
  CHECK(pow(kh, 0) == LaurentPoly2::constant(1));
}

TEST_CASE("graded dimensions") {
  const auto v = GradedDimension::v_space();
  CHECK(v.to_poly() == parse_poly("q^-1 + q"));
  const auto vv = tensor(v, v);
  CHECK(vv[0] == 2);
  CHECK(vv[2] == 1);
  CHECK(vv[-2] == 1);
  CHECK(vv.total() == 4);
  CHECK(qdim_shift(v, 3).to_poly() == parse_poly("q^2 + q^4"));
  CHECK(GradedDimension{}.empty());
}
