#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "tfc/arith.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tfc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("seq emits exact records that round-trip") {
  const Result r = run({"seq", "--m", "6", "--p", "28,80", "--n-max", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["records"].size() == 5);
  CHECK(doc["records"][0]["W"] == "21");
  CHECK(doc["records"][1]["primitive_divisor"] == "2");
  const tfc::Int m(doc["m"].get<std::string>());
  for (const auto& rec : doc["records"]) {
    auto I = [&](const char* k) { return tfc::parse_int(rec[k].get<std::string>()); };
    const tfc::Int a = I("A"), b = I("B"), c = I("C"), u = I("U"), v = I("V"), w = I("W");
    CHECK(u * u * u + v * v * v == m * w * w * w);
    CHECK(c * c == a * a * a - 432 * m * m * b * b * b * b * b * b);
  }
}

TEST_CASE("seq formats and the admissibility gate") {
  const Result csv = run({"seq", "--m", "6", "--p", "28,80", "--n-max", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,A,B,C,U,V,W,d,classification,primitive_divisor\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);

  const Result bad = run({"seq", "--m", "8", "--p", "28,80"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("cube-free") != std::string::npos);
  // 4 passes the gate; the point is then rejected for not lying on E.
  const Result four = run({"seq", "--m", "4", "--p", "28,80"});
  CHECK(four.code == 2);
  CHECK(four.err.find("not on") != std::string::npos);
  CHECK(run({"seq", "--m", "6", "--p", "28"}).code == 2);
  CHECK(run({"seq", "--m", "6", "--p", "28,80", "--format", "xml"}).code == 2);
  CHECK(run({"seq", "--m", "6"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("rational point input") {
  const Result r = run({"seq", "--m", "22", "--p", "553/9,4085/27", "--n-max", "2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["P"][0] == "553/9");
}

TEST_CASE("verify suites and exit codes") {
  const Result t = run({"verify", "table1"});
  CHECK(t.code == 0);
  CHECK(t.out.find("22 pass, 0 fail") != std::string::npos);
  const Result one = run({"verify", "table1", "--m", "22"});
  CHECK(one.code == 0);
  CHECK(one.out.find("1 pass, 0 fail") != std::string::npos);
  CHECK(one.out.find("erratum-applied m=22") != std::string::npos);
  CHECK(run({"verify", "table1", "--m", "7"}).code == 2);

  const Result e = run({"verify", "expupc", "--m", "6", "--n-max", "22"});
  CHECK(e.code == 0);
  CHECK(e.out.find("21 pass, 0 fail, 0 indeterminate") != std::string::npos);

  const Result d = run({"verify", "daylight", "--u-max", "100", "--format", "json"});
  CHECK(d.code == 0);
  const json dj = json::parse(d.out);
  CHECK(dj["findings"][0]["u"] == 2);
  CHECK(dj["findings"][0]["W2"] == "7");
  CHECK_FALSE(dj.contains("timings"));

  CHECK(run({"verify", "table1", "--data", "/nonexistent.json"}).code == 3);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "expupc", "--m", "7"}).code == 2);  // no Table 1 row, no --p
  CHECK(run({"verify", "rescale", "--m", "6", "--indices", "2,4"}).code == 2);
}

TEST_CASE("a failing verification exits 1") {
  const std::string path = std::string(TFC_TEST_DIR) + "/data/table1_typo.json";
  const Result r = run({"verify", "table1", "--data", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("1 fail") != std::string::npos);
}

TEST_CASE("budget exhaustion flags fields but exits 0") {
  const Result r = run({"seq", "--m", "6", "--p", "28,80", "--n-max", "5", "--trial-bound", "10", "--rho-iterations",
                        "1"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning: n=5: primitive divisor indeterminate") != std::string::npos);
  const json doc = json::parse(r.out);
  CHECK(doc["records"][4]["primitive_divisor"] == "indeterminate");
  CHECK_FALSE(doc["flags"].empty());
}

TEST_CASE("poly commands") {
  const Result n = run({"poly", "newton", "--id", "h51", "--p", "3"});
  CHECK(n.code == 0);
  CHECK(n.out.find("-1/4") != std::string::npos);

  const Result res = run({"poly", "resultant", "--id", "f4p,g43", "--format", "json"});
  CHECK(res.code == 0);
  const json rj = json::parse(res.out);
  CHECK(rj["factored"] == "3^16");
  CHECK(rj["exponent"] == 64);

  const Result s = run({"poly", "solve3k", "--id", "g3", "--kmax", "1", "--box", "1000", "--format", "json"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["solutions"].size() == 8);

  const Result inline_res = run({"poly", "resultant", "--coeffs", "1,1,1;1,0,0,2", "--var", "v"});
  CHECK(inline_res.out.find("= 9 u^6") != std::string::npos);

  CHECK(run({"poly", "resultant", "--coeffs", "1,x;1,2"}).code == 2);
  CHECK(run({"poly", "newton", "--id", "nope"}).code == 2);
  CHECK(run({"poly", "resultant", "--id", "g3"}).code == 2);
  CHECK(run({"poly", "solve3k", "--id", "h51"}).code == 2);
}

TEST_CASE("polynomial file input") {
  const std::string data = std::string(TFC_TEST_DIR) + "/../data/polynomials.json";
  const Result r = run({"poly", "bound", "--id", "g52", "--p", "3", "--data", data});
  CHECK(r.code == 0);
  CHECK(r.out.find("<= 4") != std::string::npos);
  const std::string tampered = std::string(TFC_TEST_DIR) + "/data/polynomials_tampered.json";
  CHECK(run({"poly", "bound", "--id", "g52", "--data", tampered}).code == 2);
  CHECK(run({"poly", "bound", "--id", "g52", "--data", "/nonexistent.json"}).code == 3);
}

TEST_CASE("height report") {
  const Result r = run({"height", "--m", "6", "--p", "28,80", "--multiples", "3", "--format", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["precision_bits"] == 256);
  CHECK(j["multiples"].size() == 3);
  CHECK(j["index_bound"].is_null());
  CHECK(std::abs(j["multiples"][0]["canonical"].get<double>() - 2.4440863217) < 1e-9);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::vector<std::string>> cmds = {
      {"seq", "--m", "15", "--p", "49,143", "--n-max", "8"},
      {"verify", "thesis", "--format", "json"},
      {"verify", "appendix"},
      {"poly", "solve3k", "--id", "g22", "--kmax", "5", "--box", "200"},
  };
  for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
}

TEST_CASE("help exits cleanly") {
  const Result h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}
