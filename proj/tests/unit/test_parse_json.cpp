#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "liekms/catalog.hpp"
#include "liekms/errors.hpp"
#include "liekms/essential.hpp"
#include "liekms/json_io.hpp"
#include "liekms/parse.hpp"
#include "liekms/report_json.hpp"

using namespace liekms;

TEST_CASE("element expression parsing") {
  CatalogEntry gl2 = build_gl(2);
  CHECK(parse_element(gl2.algebra, "e11") == Element::basis(gl2.algebra, 0));

  CatalogEntry so12 = build_so(1, 2);
  Element sum = parse_element(so12.algebra, "m01 + m02");
  CHECK(sum.coords()[0] == Rational(1));
  CHECK(sum.coords()[1] == Rational(1));
  CHECK(sum.coords()[2] == Rational(0));

  CatalogEntry sl2 = build_sl(2);
  Element combo = parse_element(sl2.algebra, "2/3*f12 - e1");
  CHECK(combo.coords() == std::vector<Rational>{Rational(-1), Rational(2, 3), Rational(0)});

  // whitespace insensitivity and repeated labels
  CHECK(parse_element(so12.algebra, "  m01+1/2*m02  ") ==
        parse_element(so12.algebra, "m01 + 1/2 * m02"));
  CHECK(parse_element(so12.algebra, "m01 + m01") == Rational(2) * Element::basis(so12.algebra, 0));
  CHECK(parse_element(so12.algebra, "-m01") == -Element::basis(so12.algebra, 0));
}

TEST_CASE("element parse errors carry positions and names") {
  CatalogEntry so12 = build_so(1, 2);
  CHECK_THROWS_AS(parse_element(so12.algebra, ""), parse_error);
  CHECK_THROWS_AS(parse_element(so12.algebra, "   "), parse_error);
  CHECK_THROWS_AS(parse_element(so12.algebra, "m01 m02"), parse_error);
  CHECK_THROWS_AS(parse_element(so12.algebra, "2/3"), parse_error);
  CHECK_THROWS_AS(parse_element(so12.algebra, "m01 +"), parse_error);
  CHECK_THROWS_AS(parse_element(so12.algebra, "2/*m01"), parse_error);

  try {
    parse_element(so12.algebra, "m01 + bogus");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    CHECK(e.position() == 6);
  }
}

TEST_CASE("structure-constant json round trip is byte identical") {
  for (const char* spec : {"gl:2", "so:2,3", "su:2", "poincare:2"}) {
    CatalogEntry entry = build_from_spec(spec);
    INFO(spec);
    std::string first = algebra_to_json_string(*entry.algebra);
    AlgebraPtr reloaded = algebra_from_json(nlohmann::json::parse(first));
    std::string second = algebra_to_json_string(*reloaded);
    CHECK(first == second);
    CHECK(reloaded->dim() == entry.algebra->dim());
    CHECK(reloaded->basis_labels() == entry.algebra->basis_labels());
    CHECK(reloaded->brackets() == entry.algebra->brackets());
  }
}

TEST_CASE("json file save and load") {
  CatalogEntry so12 = build_so(1, 2);
  std::string path = "test_algebra_roundtrip.json";
  save_algebra_file(*so12.algebra, path);
  AlgebraPtr loaded = load_algebra_file(path);
  CHECK(loaded->brackets() == so12.algebra->brackets());
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_algebra_file("does_not_exist.json"), std::invalid_argument);
}

TEST_CASE("malformed algebra json is rejected") {
  nlohmann::json j = algebra_to_json(*build_gl(2).algebra);
  nlohmann::json bad = j;
  bad["brackets"][0]["i"] = 3;
  bad["brackets"][0]["j"] = 1;  // i >= j
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
  nlohmann::json missing = j;
  missing.erase("basis");
  CHECK_THROWS_AS(algebra_from_json(missing), std::invalid_argument);
}

TEST_CASE("report json shapes") {
  CatalogEntry so12 = build_so(1, 2);
  EssentialityReport r = is_essential(parse_element(so12.algebra, "m01"));
  nlohmann::json j = essentiality_to_json(r);
  CHECK(j["verdict"] == "essential");
  CHECK(j["diagonalizable"] == true);
  CHECK(j["crosscheck_dim"].is_null());
  CHECK(j["failure_reason"].is_null());
  CHECK(j["span_sum_dim"] == 3);
  REQUIRE(j["eigenvalues"].is_array());
  CHECK(j["eigenvalues"][0]["eigenvalue"] == "-1");
  CHECK(j["eigenvalues"][0]["alg_mult"] == 1);

  EssentialityReport rc = is_essential(parse_element(so12.algebra, "m01"), true);
  CHECK(essentiality_to_json(rc)["crosscheck_dim"] == 3);

  KillingReport k = killing_report(so12.algebra);
  nlohmann::json kj = killing_to_json(k);
  CHECK(kj["signature"]["n_pos"] == 2);
  CHECK(kj["matrix"][0][0].is_string());
}
