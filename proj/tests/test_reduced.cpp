#include <doctest.h>

#include "khovanov/homology.hpp"
#include "khovanov/jones.hpp"
#include "khovanov/linkdata.hpp"
#include "khovanov/reduced.hpp"
#include "support/oracles.hpp"

using namespace kh;

namespace {

LaurentPoly2 kh_of(const std::string& name, Modulus m = {}) {
  return compute_kh(find_builtin(name)->diagram(), m).kh;
}

}  // namespace

TEST_CASE("trefoil: s = 2, Kh' = t^2 q^4") {
  const auto rf = extract_reduced(kh_of("3_1"));
  REQUIRE(rf);
  CHECK(rf->s == 2);
  CHECK(rf->kh_prime == LaurentPoly2::monomial(1, 2, 4));
  CHECK(rf->candidates == std::vector<int>{2});
  CHECK_FALSE(rf->ambiguous);
  CHECK(reconstruct(rf->s, rf->kh_prime) == parse_poly("q + q^3 + q^5*t^2 + q^9*t^3"));
  const auto thin = check_thin(*rf, 2);
  CHECK(thin.is_thin);
  CHECK(thin.offending_monomials.empty());
  CHECK(thin.s_equals_sigma == true);
}

TEST_CASE("7_7 matches the printed Kh'") {
  const auto rf = extract_reduced(kh_of("7_7"), 0);
  REQUIRE(rf);
  CHECK(rf->s == 0);
  CHECK(rf->kh_prime == parse_poly("q^-6*t^-3 + 2*q^-4*t^-2 + q^-2*t^-1 + 2 + 2*q^2*t + q^4*t^2 + q^6*t^3"));
  CHECK(render_compressed(rf->kh_prime) == "1^-3_-6 2^-2_-4 1^-1_-2 2^0_0 2^1_2 1^2_4 1^3_6");
  const auto thin = check_thin(*rf, 0);
  CHECK(thin.is_thin);
  CHECK(thin.s_equals_sigma == true);
  // Kh over F_2 was tabulated for knots up to seven crossings.
  CHECK(check_f2_form(kh_of("7_7", Modulus::from_int(2)), *rf));
}

TEST_CASE("10_100: s = sigma = -4 and the diagonal list 1 2 4 4 6 5 4 3 2 1") {
  const auto r = compute_kh(find_builtin("10_100")->diagram());
  const auto rf = extract_reduced(r.kh, -4);
  REQUIRE(rf);
  CHECK(rf->s == -4);
  const std::vector<std::int64_t> list{1, 2, 4, 4, 6, 5, 4, 3, 2, 1};
  LaurentPoly2 expected;
  for (int i = 0; i < 10; ++i) expected.add_term(i - 7, 2 * (i - 7), list[static_cast<std::size_t>(i)]);
  CHECK(rf->kh_prime == expected);
  const auto thin = check_thin(*rf, -4);
  CHECK(thin.is_thin);
  CHECK(thin.s_equals_sigma == true);
  CHECK(off_diagonal_entries(r.betti, rf->s).empty());
  // The printed bottom entry (r, m) = (-7, -19) is where the t q^2 reading
  // of the list puts it.
  CHECK(r.betti_at(-7, -19) == 1);
}

TEST_CASE("F_2 form") {
  const auto rf = extract_reduced(kh_of("3_1"));
  REQUIRE(rf);
  const auto kh2 = parse_poly("q + q^3 + q^5*t^2 + q^7*t^2 + q^7*t^3 + q^9*t^3");
  CHECK(check_f2_form(kh2, *rf));
  CHECK_FALSE(check_f2_form(kh2 + LaurentPoly2::monomial(1, 2, 7), *rf));
  CHECK_FALSE(check_f2_form(kh2 - LaurentPoly2::monomial(1, 3, 9), *rf));

  ReducedForm unknot;
  unknot.s = 0;
  CHECK(check_f2_form(parse_poly("q^-1 + q"), unknot));
  CHECK(reconstruct(0, {}) == parse_poly("q^-1 + q"));
}

TEST_CASE("unknot and non-conforming input") {
  const auto rf = extract_reduced(parse_poly("q^-1 + q"));
  REQUIRE(rf);
  CHECK(rf->s == 0);
  CHECK(rf->kh_prime.is_zero());
  CHECK_FALSE(extract_reduced(parse_poly("q^3")));
  CHECK_FALSE(extract_reduced(parse_poly("q + q^3 + q^5*t^2")));
  CHECK_FALSE(extract_reduced(LaurentPoly2{}));
  // Two-component links do not have the form.
  CHECK_FALSE(extract_reduced(parse_poly("1 + q^2 + q^4*t^2 + q^6*t^2")));
}

TEST_CASE("signature comparison modes") {
  const auto rf = extract_reduced(kh_of("5_1"));
  REQUIRE(rf);
  CHECK(rf->s == -4);
  CHECK(check_thin(*rf, 4).s_equals_sigma == false);
  CHECK(check_thin(*rf, 4, SigmaComparison::AbsoluteValue).s_equals_sigma == true);
  CHECK_FALSE(check_thin(*rf).s_equals_sigma.has_value());
}

TEST_CASE("thinness flags monomials off t q^2") {
  ReducedForm rf;
  rf.kh_prime = parse_poly("q^2*t + q^6*t^2 + 3*q^-8*t^-3");
  const auto rep = check_thin(rf);
  CHECK_FALSE(rep.is_thin);
  CHECK(rep.offending_monomials == std::vector<std::pair<int, int>>{{-3, -8}, {2, 6}});
}

TEST_CASE("extraction agrees with peeling, and s is never ambiguous over Q") {
  // Two admissible s would make q^(s-1)(1+q^2) - q^(s'-1)(1+q^2), which is
  // free of t, divisible by 1 + t q^4. So at most one candidate exists.
  for (const auto& rec : builtin_corpus()) {
    const auto kh = compute_kh(rec.diagram()).kh;
    const auto rf = extract_reduced(kh, rec.sigma);
    if (rec.diagram().components().size() > 1) continue;
    INFO(rec.name);
    REQUIRE(rf);
    CHECK(rf->candidates.size() == 1);
    CHECK(reconstruct(rf->s, rf->kh_prime) == kh);
    const auto peeled = kh::testing::peel_kh_prime(kh, rf->s);
    REQUIRE(peeled);
    CHECK(*peeled == rf->kh_prime);
  }
}

TEST_CASE("compressed notation") {
  CHECK(render_compressed(parse_poly("1 + q^2 + q^4*t^2 + q^6*t^2")) == "1^0_0 1^0_2 1^2_4 1^2_6");
  CHECK(render_compressed(kh_of("L2a1")) == "1^0_0 1^0_2 1^2_4 1^2_6");
  CHECK(render_compressed(kh_of("4^2_1")) == "1^-4_-12 1^-4_-10 1^-3_-10 1^-2_-6 1^0_-4 1^0_-2");
  CHECK(render_compressed({}).empty());
  CHECK(render_compressed(parse_poly("-2*q^-3*t")) == "-2^1_-3");
  const auto p = parse_poly("q^-6*t^-3 + 2*q^-4*t^-2 - 5*q^3*t + 7");
  CHECK(parse_compressed(render_compressed(p)) == p);
  CHECK(parse_compressed("") == LaurentPoly2{});
  CHECK_THROWS(parse_compressed("1^2"));
  CHECK_THROWS(parse_compressed("1^a_2"));
}

TEST_CASE("separations") {
  auto entry = [](const std::string& label, const LinkDiagram& d) {
    return SeparationEntry{label, compute_kh(d).kh, unnormalized_jones(d)};
  };
  const auto k51 = find_builtin("5_1")->diagram();
  const auto k10132 = find_builtin("10_132")->diagram();
  const auto k942 = find_builtin("9_42")->diagram();
  const auto k31 = find_builtin("3_1")->diagram();
  CHECK(find_separations({entry("5_1", k51), entry("10_132", k10132)}) ==
        std::vector<std::pair<std::string, std::string>>{{"5_1", "10_132"}});
  CHECK(find_separations({entry("9_42", k942), entry("mirror(9_42)", mirror(k942))}) ==
        std::vector<std::pair<std::string, std::string>>{{"9_42", "mirror(9_42)"}});
  CHECK(find_separations({entry("a", k31), entry("b", k31)}).empty());
  // Jones already tells the trefoil from its mirror.
  CHECK(find_separations({entry("3_1", k31), entry("mirror(3_1)", mirror(k31))}).empty());
}
