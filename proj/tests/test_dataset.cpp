#include <cstdlib>

#include "doctest.h"
#include "tfc/dataset.hpp"
#include "tfc/errors.hpp"

using namespace tfc;
using nlohmann::json;

TEST_CASE("Table 1 loads with exact rationals") {
  const auto rows = load_table1();
  REQUIRE(rows.size() == 22);
  CHECK(rows.front().m == 6);
  CHECK(rows.front().px == 28);
  CHECK(rows.back().m == 94);
  CHECK(rows.back().px == Rat(Int("62511752209"), Int("2480625")));
  std::vector<long> flagged;
  for (const auto& r : rows) {
    if (r.y_sign_erratum) flagged.push_back(r.m.get_si());
    CHECK(on_curve(r.p()));
    CHECK(on_curve(r.pprime()));
  }
  CHECK(flagged == std::vector<long>{22, 50, 92});
  CHECK(rows[4].pprime().y() == -rows[4].pprime_printed().y());
}

TEST_CASE("malformed datasets name the row") {
  const json bad_m = json::parse(R"({"rows":[{"m":"6","P":["28","80"],"Pprime":["-8","8"]},{"P":["1","2"]}]})");
  CHECK_THROWS_WITH_AS(parse_table1(bad_m), doctest::Contains("row 1"), ParseError);
  const json bad_num = json::parse(R"({"rows":[{"m":"6","P":["28.5","80"],"Pprime":["-8","8"]}]})");
  CHECK_THROWS_AS(parse_table1(bad_num), ParseError);
  const json bad_pair = json::parse(R"({"rows":[{"m":"6","P":["28"],"Pprime":["-8","8"]}]})");
  CHECK_THROWS_AS(parse_table1(bad_pair), ParseError);
  CHECK_THROWS_AS(parse_table1(json::array()), ParseError);
  CHECK_THROWS_AS(load_table1("/nonexistent/table1.json"), DataMissingError);
}

TEST_CASE("generator lists") {
  const json doc = json::parse(R"({"rows":[{"m":7,"P":["28","28"]},{"m":"6","P":["28","80"]}]})");
  const auto gens = parse_generators(doc);
  REQUIRE(gens.size() == 2);
  CHECK(on_curve(gens[0].point()));
  CHECK(generators_from(load_table1()).size() == 22);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("polynomial export round-trips with checksums") {
  const json doc = export_polynomials();
  const auto back = parse_polynomials(doc);
  const auto& cat = polynomial_catalog();
  REQUIRE(back.size() == cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(back[i].id == cat[i].id);
    CHECK(back[i].poly == cat[i].poly);
    CHECK(back[i].form.has_value() == cat[i].form.has_value());
    if (cat[i].form) CHECK(*back[i].form == *cat[i].form);
  }

  json tampered = doc;
  tampered["entries"][0]["coefficients_by_u_exponent"][0] = "2";
  CHECK_THROWS_WITH_AS(parse_polynomials(tampered), doctest::Contains("checksum"), ParseError);
  json reordered = doc;
  std::swap(reordered["entries"][0], reordered["entries"][1]);
  CHECK_THROWS_AS(parse_polynomials(reordered), ParseError);
  json future = doc;
  future["version"] = 99;
  CHECK_THROWS_AS(parse_polynomials(future), ParseError);
}

TEST_CASE("the shipped polynomial file matches the catalog") {
  CHECK(read_json_file(data_dir() / "polynomials.json") == export_polynomials());
  CHECK(load_polynomials().size() == polynomial_catalog().size());
}
