#pragma once

// Theorem-level harnesses. Each returns a VerifyReport whose verdicts are
// reproducible: budgets are fixed and no randomness is involved.

#include <string>
#include <vector>

#include "json.hpp"
#include "tfc/dataset.hpp"
#include "tfc/eds.hpp"
#include "tfc/polytools.hpp"

namespace tfc {

enum class Status { pass, fail, indeterminate, info };
std::string status_name(Status s);

struct Verdict {
  std::string index;  // what was checked, e.g. "n=4" or "m=22"
  Status status = Status::info;
  std::string detail;
};

struct VerifyReport {
  std::string subject;
  std::vector<Verdict> verdicts;
  std::vector<std::string> flags;
  double seconds = 0;

  std::size_t count(Status s) const;
  bool failed() const { return count(Status::fail) > 0; }
  bool has_indeterminate() const { return count(Status::indeterminate) > 0; }
  void add(std::string index, Status status, std::string detail);
  void flag(std::string f);
  // Timings are left out unless asked for so that output is byte-stable.
  nlohmann::json to_json(bool with_timing = false) const;
  std::string to_table() const;
};

// Decimal string, shortened to "head...tail (N digits)" past 60 digits.
std::string brief(const Int& n);

// P on E, P' on E' and sigma(P') = P for every row, exactly.
VerifyReport verify_table1(const std::vector<Table1Row>& rows);

// W_n is not a prime power for 2 <= n <= n_max. Each index is settled by a
// coprime witness or, failing that, a complete factorization; otherwise it
// is indeterminate. W_1 is reported for information only.
VerifyReport verify_expupc(const CurvePoint& p, long n_max = 22, const FactorBudget& budget = {});
VerifyReport verify_expupc(const Table1Row& row, long n_max = 22, const FactorBudget& budget = {});

// N_0 = largest n in [2, n_max] with B_n = 1, or 1 if there is none.
long appendix_index_bound(const Sequence& seq);
// Per generator: B_n > 1 for 2 <= n <= n_max. Rows with m not cube-free or
// m > 353 are rejected.
VerifyReport appendix_scan(const std::vector<GeneratorRow>& rows, long n_max = 22);

struct DaylightFinding {
  long u = 0;
  Int m;         // u^3 + (u-1)^3
  Int f;         // 3u^2 - 3u + 1
  Int w2;        // denominator of 2R, R = (u, u-1)
  bool w2_prime = false;
  bool group_law_agrees = false;  // closed doubling formula vs transport through E
};

struct DaylightResult {
  std::vector<DaylightFinding> findings;  // every u with f(u) prime and m cube-free
  HomogResultant res_u, res_v;            // of u^2 + uv + v^2 and 2u^3 + v^3
  VerifyReport report;
};

DaylightResult daylight_search(long u_max);

struct RescaleItem {
  long l = 0;
  Int w_l;      // W_l with its primitive prime removed
  Int p_l;      // smallest primitive prime of W_l (1 for l = 1)
  unsigned e_l = 0;
  Int w_prime;  // W'_l on the rescaled curve
  bool prime_power = false;
  bool matches_formula = false;  // W'_l = W_l / gcd(W_l, M)
};

struct RescaleResult {
  Int M;
  Int rescaled_m;  // m M^3
  std::vector<RescaleItem> items;
  VerifyReport report;
};

// Multiply the cubic by M^3, M = prod w_l over l in S, and confirm each W'_l
// is a prime power. Indices in S must be pairwise coprime.
RescaleResult rescale_demo(const CurvePoint& p, const std::vector<long>& indices, const FactorBudget& budget = {});

struct ThesisCheck {
  bool congruence = false;  // m = +-1, +-3, +-4 mod 9
  bool cube_free = false;
  bool coprime_x = false;   // gcd(numerator of x(P), m) = 1
  bool two_p_nonintegral = false;
  bool three_p_nonintegral = false;
  std::vector<long> prime_power_indices;  // 1 < n <= n_max with W_n a prime power
  bool hypotheses() const {
    return congruence && cube_free && coprime_x && two_p_nonintegral && three_p_nonintegral;
  }
  VerifyReport report;
};

ThesisCheck thesis_hypothesis_check(const CurvePoint& p, long n_max = 22, const FactorBudget& budget = {});

// Observed d_n against the predicted cancellation, n <= n_max.
VerifyReport verify_cancellation(const CurvePoint& p, long n_max = 12);
// gcd(W_r, W_n) = W_gcd(r,n) for 1 <= r, n <= r_max.
VerifyReport verify_strong_divisibility(const CurvePoint& p, long r_max = 12);
// Every valuation law on every (p, n, k) with nk <= nk_max: primes of 6mk
// one at a time, all other primes through the aggregate gcd form.
VerifyReport verify_valuation_laws(const CurvePoint& p, long nk_max = 24);

// Points from a Table 1 row after the on-curve checks; throws ArgumentError
// naming the row otherwise.
CurvePoint checked_generator(const Table1Row& row);

}  // namespace tfc
