#include <doctest.h>

#include "fasla/io.hpp"
#include "generators.hpp"

using namespace fasla;

TEST_CASE("rational literals parse and normalize") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-7/2") == rat(-7, 2));
  CHECK(parse_rat("4/6") == rat(2, 3));
  CHECK(rat_str(parse_rat("4/6")) == "2/3");
  CHECK(rat_str(parse_rat("-0/5")) == "0");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
}

TEST_CASE("serialize-parse-serialize is byte-identical on the catalog") {
  for (const auto& entry : builtin_suite()) {
    const AlgebraFile f{entry.triple.algebra, entry.triple.omega, std::nullopt};
    const std::string s1 = dump_canonical(algebra_to_json(f));
    const AlgebraFile g = algebra_from_json(parse_text(s1));
    const std::string s2 = dump_canonical(algebra_to_json(g));
    CHECK(s1 == s2);
    CHECK(g.algebra == entry.triple.algebra);
    REQUIRE(g.omega.has_value());
    CHECK(g.omega->gram == entry.triple.omega.gram);
  }
}

TEST_CASE("readers accept non-reduced scalars and normalize them") {
  const std::string text = R"({
    "dim": 1,
    "field": "rational",
    "product": [[["2/4"]]],
    "omega": null,
    "labels": null
  })";
  const AlgebraFile f = algebra_from_json(parse_text(text));
  CHECK(f.algebra.product.at(0, 0, 0) == rat(1, 2));
  const std::string out = dump_canonical(algebra_to_json(f));
  CHECK(out.find("1/2") != std::string::npos);
  CHECK(out.find("2/4") == std::string::npos);
}

TEST_CASE("labels survive the round trip") {
  AlgebraFile f{dim2_family(Rat(1), Rat(0), Rat(0)).algebra, std::nullopt,
                std::vector<std::string>{"e", "d"}};
  const AlgebraFile g = algebra_from_json(parse_text(dump_canonical(algebra_to_json(f))));
  REQUIRE(g.labels.has_value());
  CHECK((*g.labels)[0] == "e");
  CHECK((*g.labels)[1] == "d");
}

TEST_CASE("malformed files are rejected with diagnostics") {
  CHECK_THROWS_AS(algebra_from_json(parse_text("[]")), ParseError);
  CHECK_THROWS_AS(algebra_from_json(parse_text(R"({"dim": 2})")), ParseError);
  CHECK_THROWS_AS(
      algebra_from_json(parse_text(R"({"dim": 2, "product": [[["1"]]]})")),
      ParseError);
  CHECK_THROWS_AS(
      algebra_from_json(parse_text(
          R"({"dim": 1, "product": [[["1"]]], "labels": ["a", "b"]})")),
      ParseError);
  // syntax errors carry line and column information
  try {
    parse_text("{\n  \"dim\": 2,\n  oops\n}");
    CHECK(false);
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
  }
}

TEST_CASE("plain numbers require the approximate mode") {
  const std::string text = R"({"dim": 1, "product": [[[0.5]]], "omega": null})";
  CHECK_THROWS_AS(algebra_from_json(parse_text(text)), ParseError);
  ParseOptions opt;
  opt.approx = true;
  const AlgebraFile f = algebra_from_json(parse_text(text), opt);
  CHECK(f.algebra.product.at(0, 0, 0) == rat(1, 2));
}

TEST_CASE("approximation recovers simple fractions") {
  CHECK(rat_from_double(0.5) == rat(1, 2));
  CHECK(rat_from_double(-2.0) == Rat(-2));
  CHECK(rat_from_double(1.0 / 3.0) == rat(1, 3));
  CHECK(rat_from_double(0.0) == Rat(0));
}

TEST_CASE("extension parameters round trip") {
  testgen::Rng rng(91);
  const auto instances = testgen::validated_extensions(92, 5);
  for (const auto& inst : instances) {
    const std::string s1 = dump_canonical(params_to_json(inst.params));
    const ExtensionParams p = params_from_json(parse_text(s1));
    CHECK(p == inst.params);
    CHECK(dump_canonical(params_to_json(p)) == s1);
  }
  (void)rng;
}

TEST_CASE("cotangent data round trips") {
  const auto data = testgen::validated_cotangent_data(93, 5);
  for (const CotangentData& d : data) {
    const std::string s1 = dump_canonical(cotangent_to_json(d));
    const CotangentData e = cotangent_from_json(parse_text(s1));
    CHECK(e == d);
    CHECK(dump_canonical(cotangent_to_json(e)) == s1);
  }
}

TEST_CASE("cochains round trip with their degree header") {
  testgen::Rng rng(94);
  for (std::size_t degree = 0; degree <= 3; ++degree) {
    Cochain c(degree, 2, 3);
    for (std::size_t q = 0; q < c.flat_size(); ++q) c.coeff(q) = rng.small();
    const std::string s1 = dump_canonical(cochain_to_json(c));
    const Cochain back = cochain_from_json(parse_text(s1));
    CHECK(back == c);
    CHECK(dump_canonical(cochain_to_json(back)) == s1);
  }
  // nesting depth must match the declared degree
  CHECK_THROWS_AS(
      cochain_from_json(parse_text(
          R"({"degree": 2, "base_dim": 1, "module_dim": 1, "coeffs": [["1"]]})")),
      ParseError);
}

TEST_CASE("reports serialize with witnesses") {
  Algebra a(2);
  a.product.at(1, 0, 0) = 1;
  a.product.at(0, 0, 1) = 1;
  const Json j = report_to_json(check_left_symmetric(a));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["check"] == "left-symmetric");
  CHECK(j[0]["passed"] == false);
  CHECK(j[0]["witness"].is_array());
  CHECK(j[0]["discrepancy"].is_string());
}
