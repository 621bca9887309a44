#include "doctest.h"
#include "tfc/errors.hpp"
#include "tfc/verify.hpp"

using namespace tfc;

namespace {
CurvePoint gen(long m, const Rat& x, const Rat& y) { return CurvePoint::make(CurveId::make(Family::E, m), x, y); }
}  // namespace

TEST_CASE("Table 1 harness") {
  auto rows = load_table1();
  const VerifyReport r = verify_table1(rows);
  CHECK(r.count(Status::pass) == 22);
  CHECK(r.flags == std::vector<std::string>{"erratum-applied m=22", "erratum-applied m=50", "erratum-applied m=92"});

  SUBCASE("a transcription typo is caught") {
    rows[3].qx += 1;
    const VerifyReport bad = verify_table1(rows);
    CHECK(bad.failed());
    CHECK(bad.verdicts[3].status == Status::fail);
    CHECK(bad.verdicts[3].detail.find("residual") != std::string::npos);
  }
  SUBCASE("an unflagged sign error is reported as such") {
    rows[4].y_sign_erratum = false;
    const VerifyReport bad = verify_table1(rows);
    CHECK(bad.verdicts[4].status == Status::fail);
    CHECK(bad.verdicts[4].detail.find("-P") != std::string::npos);
  }
}

TEST_CASE("not a prime power, m = 6") {
  const VerifyReport r = verify_expupc(gen(6, 28, 80), 22);
  CHECK_FALSE(r.failed());
  CHECK_FALSE(r.has_indeterminate());
  CHECK(r.count(Status::pass) == 21);
  CHECK(r.verdicts.front().status == Status::info);
  CHECK(r.flags.empty());
}

TEST_CASE("appendix scan") {
  auto gens = generators_from(load_table1());
  const VerifyReport r = appendix_scan(gens, 22);
  CHECK(r.count(Status::pass) == 22);
  for (const auto& v : r.verdicts) CHECK(v.detail == "N0 = 1");

  gens.push_back({99, 400, 0, 0});
  gens.push_back({100, 16, 0, 0});
  gens.push_back({101, 7, 28, 28});
  const VerifyReport s = appendix_scan(gens, 22);
  CHECK(s.verdicts[22].detail.find("1..353") != std::string::npos);
  CHECK(s.verdicts[23].status == Status::fail);
  // 2P is integral on this curve: reported, not an error.
  CHECK(s.verdicts[24].status == Status::info);
  CHECK(s.verdicts[24].detail == "N0 = 2 (B_2 = 1)");
}

TEST_CASE("daylight search") {
  const DaylightResult d = daylight_search(100);
  REQUIRE_FALSE(d.findings.empty());
  CHECK(d.findings.front().u == 2);
  CHECK(d.findings.front().m == 9);
  CHECK(d.findings.front().w2 == 7);
  // u values from tests/oracle/eds_oracle.py.
  const std::vector<long> expected = {2,  3,  4,  7,  10, 11, 12, 15, 18, 24, 25, 26, 28, 29, 31, 33, 35, 38,
                                      39, 42, 43, 46, 49, 53, 56, 64, 67, 75, 81, 82, 87, 89, 91, 92, 94, 96};
  std::vector<long> got;
  for (const auto& f : d.findings) {
    got.push_back(f.u);
    CHECK(f.w2_prime);
    CHECK(f.group_law_agrees);
    CHECK(f.w2 == f.f);
  }
  CHECK(got == expected);
  CHECK(d.res_u.coefficient == 9);
  CHECK(d.res_v.coefficient == 9);
  CHECK_FALSE(d.report.failed());
  CHECK_THROWS_AS(daylight_search(1), ArgumentError);
}

TEST_CASE("rescaling to prime-power terms") {
  const RescaleResult r = rescale_demo(gen(6, 28, 80), {2, 3});
  REQUIRE(r.items.size() == 2);
  CHECK(r.items[0].w_prime == 4);
  CHECK(r.items[1].w_prime == 17);
  CHECK(r.M == Int(960540 / 4) * Int("112490043311709") / 17);
  CHECK(r.rescaled_m == 6 * r.M * r.M * r.M);
  CHECK_FALSE(r.report.failed());
  CHECK_THROWS_AS(rescale_demo(gen(6, 28, 80), {2, 4}), ArgumentError);
  CHECK_THROWS_AS(rescale_demo(gen(6, 28, 80), {}), ArgumentError);
}

TEST_CASE("thesis hypotheses") {
  const ThesisCheck a = thesis_hypothesis_check(gen(15, 49, 143), 22);
  CHECK(a.hypotheses());
  CHECK(a.prime_power_indices.empty());
  CHECK(a.report.verdicts.back().status == Status::pass);

  const ThesisCheck b = thesis_hypothesis_check(gen(20, 84, 648), 22);
  CHECK_FALSE(b.congruence);  // 20 = 2 mod 9
  CHECK(b.report.verdicts.back().status == Status::info);

  const ThesisCheck c = thesis_hypothesis_check(gen(6, 28, 80), 22);
  CHECK(c.congruence);  // 6 = -3 mod 9
  CHECK_FALSE(c.coprime_x);
}

TEST_CASE("sequence law harnesses") {
  const CurvePoint p = gen(20, 84, 648);
  CHECK(verify_cancellation(p, 12).count(Status::pass) == 12);
  CHECK_FALSE(verify_strong_divisibility(p, 12).failed());
  CHECK_FALSE(verify_valuation_laws(p, 24).failed());
}

TEST_CASE("reports serialize deterministically") {
  const VerifyReport r = verify_cancellation(gen(6, 28, 80), 5);
  const auto j = r.to_json();
  CHECK_FALSE(j.contains("timings"));
  CHECK(r.to_json(true).contains("timings"));
  CHECK(j["verdicts"].size() == 5);
  CHECK(j["summary"]["pass"] == 5);
  CHECK(j.dump() == verify_cancellation(gen(6, 28, 80), 5).to_json().dump());
  CHECK(r.to_table().find("5 pass, 0 fail") != std::string::npos);
  CHECK(brief(pow_int(10, 80)).find("(81 digits)") != std::string::npos);
}
