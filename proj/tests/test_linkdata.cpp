#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "khovanov/homology.hpp"
#include "khovanov/jones.hpp"
#include "khovanov/linkdata.hpp"

using namespace kh;

TEST_CASE("parsing a table") {
  const auto load = parse_table(R"(
# comment line
3_1 | X[1,5,2,4] X[5,3,6,2] X[3,1,4,6] | 2 | q + q^3 + q^5*t^2 + q^9*t^3 | | | published | rolfsen
unknot | X[1,2,2,1]   # trailing comment
k | X[1,5,2,4] X[5,3,6,2] X[3,1,4,6] | | | | q + q^3 + q^5 - q^9 | external: somebody's table ~mirror
)");
  REQUIRE(load.records.size() == 3);
  const auto& t = load.records[0];
  CHECK(t.name == "3_1");
  CHECK(t.sigma == 2);
  CHECK(t.expected.kh_q == parse_poly("q + q^3 + q^5*t^2 + q^9*t^3"));
  CHECK_FALSE(t.expected.kh_f2);
  CHECK(t.origin == Origin::Published);
  CHECK(t.numbering == "rolfsen");
  CHECK_FALSE(t.up_to_mirror);
  CHECK(load.records[1].origin == Origin::External);
  CHECK_FALSE(load.records[1].sigma);
  const auto& k = load.records[2];
  CHECK(k.origin == Origin::External);
  CHECK(k.origin_note == "somebody's table");
  CHECK(k.up_to_mirror);
  CHECK(k.expected.jones_hat == parse_poly("q + q^3 + q^5 - q^9"));
}

TEST_CASE("errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_table(text);
    } catch (const TableError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("a | X[1,2,2,1]\n\nb | X[1,2,2,1] | x\n") == 3);
  CHECK(line_of("a | X[1,2,2,1]\na | X[1,2,2,1]\n") == 2);
  CHECK(line_of("just a name\n") == 1);
  CHECK(line_of("a | X[1,2,2,1] | | q^^2\n") == 1);
  CHECK(line_of("a | X[1,2,2,1] | | | | | invented\n") == 1);
  CHECK(line_of("a | X[1,2,3]\n") == 1);
  CHECK(line_of("a|b|c|d|e|f|g|h|i\n") == 1);
}

TEST_CASE("lenient mode skips bad diagrams only") {
  const char* text = "good | X[1,2,2,1]\nbad | X[1,2,3,4]\nalso | X[2,1,1,2]\n";
  CHECK_THROWS_AS(parse_table(text), TableError);
  const auto load = parse_table(text, {.lenient = true});
  REQUIRE(load.records.size() == 2);
  CHECK(load.records[1].name == "also");
  REQUIRE(load.skipped.size() == 1);
  CHECK(load.skipped[0].rfind("line 2: bad", 0) == 0);
  // Malformed fields are never skipped.
  CHECK_THROWS_AS(parse_table("a | X[1,2,2,1] | nope\n", {.lenient = true}), TableError);
}

TEST_CASE("render and reload") {
  for (const auto& r : builtin_corpus()) {
    const auto again = parse_table(render_record(r));
    REQUIRE(again.records.size() == 1);
    const auto& b = again.records[0];
    CHECK(b.name == r.name);
    CHECK(b.pd == r.pd);
    CHECK(b.sigma == r.sigma);
    CHECK(b.expected.kh_q == r.expected.kh_q);
    CHECK(b.expected.jones_hat == r.expected.jones_hat);
    CHECK(b.origin == r.origin);
    CHECK(b.origin_note == r.origin_note);
    CHECK(b.numbering == r.numbering);
  }
}

TEST_CASE("loading from a file") {
  const std::string path = "test_linkdata_table.txt";
  {
    std::ofstream out(path);
    out << "3_1 | X[1,5,2,4] X[5,3,6,2] X[3,1,4,6]\n";
  }
  CHECK(load_table(path).records.size() == 1);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_table("no/such/file"), std::runtime_error);
}

TEST_CASE("builtin corpus contents") {
  const auto& c = builtin_corpus();
  CHECK(c.size() >= 9);
  for (const char* name : {"3_1", "6bar_2", "MillettUnknot", "L2a1", "5_1", "9_42", "10_100", "10_125", "10_132"})
    CHECK_MESSAGE(find_builtin(name) != nullptr, name);
  CHECK(find_builtin("nope") == nullptr);
  CHECK(find_builtin("5_1")->expected.kh_q ==
        parse_poly("q^-5 + q^-3 + q^-15*t^-5 + q^-11*t^-4 + q^-11*t^-3 + q^-7*t^-2"));
  const auto k = find_builtin("10_132")->expected.kh_q;
  REQUIRE(k);
  CHECK(k->terms().size() == 11);
  CHECK(k->coeff(-2, -5) == 2);
  CHECK(find_builtin("L2a1")->diagram().components().size() == 2);
}

TEST_CASE("every bundled expectation reproduces") {
  for (const auto& r : builtin_corpus()) {
    INFO(r.name);
    const auto d = r.diagram();
    const auto check = [&](const LaurentPoly2& got, const LaurentPoly2& want) {
      if (r.up_to_mirror)
        CHECK((got == want || got.inverted() == want));
      else
        CHECK(got == want);
    };
    if (r.expected.kh_q) check(compute_kh(d).kh, *r.expected.kh_q);
    if (r.expected.kh_f2) check(compute_kh(d, Modulus::from_int(2)).kh, *r.expected.kh_f2);
    if (r.expected.jones_hat) check(unnormalized_jones(d), *r.expected.jones_hat);
  }
}
