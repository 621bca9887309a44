#include "tfc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "tfc/errors.hpp"
#include "tfc/poly_catalog.hpp"

namespace tfc {

using nlohmann::json;

namespace {

// Runs f(i) for i in [0, n) on a small pool; callers write into slot i so
// the merged order never depends on scheduling.
template <class F>
void parallel_for(std::size_t n, F f) {
  const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string nlabel(long n) { return "n=" + std::to_string(n); }
std::string mlabel(const Int& m) { return "m=" + to_string(m); }

void merge(VerifyReport& into, const VerifyReport& part) {
  into.verdicts.insert(into.verdicts.end(), part.verdicts.begin(), part.verdicts.end());
  for (const auto& f : part.flags) into.flag(f);
}

void require_e_point(const CurvePoint& p, const char* who) {
  if (p.curve().family() != Family::E) throw ArgumentError(std::string(who) + ": point must lie on E");
  if (!on_curve(p)) throw ArgumentError(std::string(who) + ": " + p.to_string() + " is not on " + p.curve().describe());
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::indeterminate:
      return "indeterminate";
    case Status::info:
      return "info";
  }
  return "?";
}

std::size_t VerifyReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [s](const Verdict& v) { return v.status == s; }));
}

void VerifyReport::add(std::string index, Status status, std::string detail) {
  verdicts.push_back({std::move(index), status, std::move(detail)});
}

void VerifyReport::flag(std::string f) {
  if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(std::move(f));
}

json VerifyReport::to_json(bool with_timing) const {
  json j;
  j["subject"] = subject;
  json vs = json::array();
  for (const auto& v : verdicts) vs.push_back({{"index", v.index}, {"status", status_name(v.status)}, {"detail", v.detail}});
  j["verdicts"] = std::move(vs);
  j["flags"] = flags;
  j["summary"] = {{"pass", count(Status::pass)},
                  {"fail", count(Status::fail)},
                  {"indeterminate", count(Status::indeterminate)},
                  {"info", count(Status::info)}};
  if (with_timing) j["timings"] = {{"seconds", seconds}};
  return j;
}

std::string VerifyReport::to_table() const {
  std::size_t w = 5;
  for (const auto& v : verdicts) w = std::max(w, v.index.size());
  std::ostringstream os;
  os << subject << "\n";
  for (const auto& v : verdicts) {
    os << "  " << v.index << std::string(w - v.index.size() + 2, ' ') << status_name(v.status);
    os << std::string(15 - status_name(v.status).size(), ' ') << v.detail << "\n";
  }
  for (const auto& f : flags) os << "  flag: " << f << "\n";
  os << "  " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, " << count(Status::indeterminate)
     << " indeterminate\n";
  return os.str();
}

std::string brief(const Int& n) {
  std::string s = to_string(n);
  const std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
  if (digits <= 60) return s;
  return s.substr(0, s.size() - digits + 12) + "..." + s.substr(s.size() - 12) + " (" + std::to_string(digits) +
         " digits)";
}

CurvePoint checked_generator(const Table1Row& row) {
  CurvePoint p = row.p();
  if (!on_curve(p)) throw ArgumentError("row " + std::to_string(row.index) + ": P is not on E");
  return p;
}

// ---- Table 1 ---------------------------------------------------------------

VerifyReport verify_table1(const std::vector<Table1Row>& rows) {
  Stopwatch clock;
  VerifyReport rep;
  rep.subject = "table1";
  std::vector<VerifyReport> parts(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const Table1Row& row = rows[i];
    VerifyReport& out = parts[i];
    const std::string idx = mlabel(row.m);
    try {
      const CurvePoint p = row.p();
      const CurvePoint printed = row.pprime_printed();
      if (!on_curve(p)) {
        out.add(idx, Status::fail, "P not on E, residual " + to_string(equation_residual(p)));
        return;
      }
      if (!on_curve(printed)) {
        out.add(idx, Status::fail, "P' not on E', residual " + to_string(equation_residual(printed)));
        return;
      }
      const CurvePoint image = sigma(printed);
      if (!row.y_sign_erratum) {
        if (image == p) {
          out.add(idx, Status::pass, "P on E, P' on E', sigma(P') = P");
        } else if (image == negate(p)) {
          out.add(idx, Status::fail, "sigma(P') = -P: sign of y(P') printed wrong");
        } else {
          out.add(idx, Status::fail,
                  "sigma(P') - P differs: dx = " + to_string(Rat(image.x() - p.x())) +
                      ", dy = " + to_string(Rat(image.y() - p.y())));
        }
        return;
      }
      const CurvePoint fixed = sigma(row.pprime());
      if (image == negate(p) && fixed == p) {
        out.add(idx, Status::pass, "printed P' maps to -P; with y(P') negated, sigma(P') = P");
        out.flag("erratum-applied " + idx);
      } else {
        out.add(idx, Status::fail, "row flagged as sign erratum but sigma(printed P') != -P");
      }
    } catch (const Error& e) {
      out.add(idx, Status::fail, e.what());
    }
  });
  for (const auto& part : parts) merge(rep, part);
  rep.seconds = clock.seconds();
  return rep;
}

// ---- not a prime power --------------------------------------------------------

VerifyReport verify_expupc(const CurvePoint& p, long n_max, const FactorBudget& budget) {
  Stopwatch clock;
  require_e_point(p, "verify_expupc");
  if (n_max < 2) throw ArgumentError("verify_expupc: n_max must be at least 2");
  VerifyReport rep;
  rep.subject = "expupc " + mlabel(p.curve().m()) + " P=" + p.to_string();
  if (sigma_preimages(p).empty()) rep.flag("P has no rational sigma-preimage; the isogeny hypothesis is not met");
  const Sequence seq(p, n_max);
  {
    const Classification c = classify_term(seq.W(1), budget);
    rep.add(nlabel(1), Status::info, "W_1 = " + brief(seq.W(1)) + " (" + c.to_string() + "), exempt");
  }
  std::vector<Verdict> slots(static_cast<std::size_t>(n_max - 1));
  std::vector<char> probable(slots.size(), 0);
  parallel_for(slots.size(), [&](std::size_t i) {
    const long n = static_cast<long>(i) + 2;
    Verdict& v = slots[i];
    v.index = nlabel(n);
    if (const auto w = coprime_factor_witness(seq, n)) {
      v.status = Status::pass;
      v.detail = "coprime witness f1 = " + brief(w->f1) + ", f2 = " + brief(w->f2);
      return;
    }
    const Classification c = classify_term(seq.W(n), budget);
    probable[i] = c.probable;
    if (c.is_prime_power()) {
      v.status = Status::fail;
      v.detail = "W_n = " + brief(seq.W(n)) + " is " + c.to_string();
    } else if (c.complete) {
      v.status = Status::pass;
      v.detail = "complete factorization: " + c.to_string();
    } else {
      v.status = Status::indeterminate;
      v.detail = "no coprime witness and factorization incomplete";
    }
  });
  rep.verdicts.insert(rep.verdicts.end(), slots.begin(), slots.end());
  if (std::any_of(probable.begin(), probable.end(), [](char c) { return c != 0; })) {
    rep.flag("some factorizations rely on probable primes");
  }
  rep.seconds = clock.seconds();
  return rep;
}

VerifyReport verify_expupc(const Table1Row& row, long n_max, const FactorBudget& budget) {
  return verify_expupc(checked_generator(row), n_max, budget);
}

// ---- appendix ----------------------------------------------------------------

long appendix_index_bound(const Sequence& seq) {
  long n0 = 1;
  for (long n = 2; n <= seq.n_max(); ++n) {
    if (seq.B(n) == 1) n0 = n;
  }
  return n0;
}

VerifyReport appendix_scan(const std::vector<GeneratorRow>& rows, long n_max) {
  Stopwatch clock;
  if (n_max < 2) throw ArgumentError("appendix_scan: n_max must be at least 2");
  VerifyReport rep;
  rep.subject = "appendix n<=" + std::to_string(n_max);
  std::vector<Verdict> slots(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const GeneratorRow& row = rows[i];
    Verdict& v = slots[i];
    v.index = mlabel(row.m) + " row " + std::to_string(row.index);
    try {
      if (row.m > 353 || row.m < 1) {
        v.status = Status::fail;
        v.detail = "rejected: m outside 1..353";
        return;
      }
      const CurvePoint p = row.point();
      if (!on_curve(p)) {
        v.status = Status::fail;
        v.detail = "rejected: P not on E";
        return;
      }
      const Sequence seq(p, n_max);
      const long n0 = appendix_index_bound(seq);
      v.status = n0 == 1 ? Status::pass : Status::info;
      v.detail = "N0 = " + std::to_string(n0);
      if (n0 > 1) v.detail += " (B_" + std::to_string(n0) + " = 1)";
    } catch (const InadmissibleError& e) {
      v.status = Status::fail;
      v.detail = std::string("rejected: ") + e.what();
    } catch (const Error& e) {
      v.status = Status::fail;
      v.detail = e.what();
    }
  });
  rep.verdicts = std::move(slots);
  rep.seconds = clock.seconds();
  return rep;
}

// ---- daylight ------------------------------------------------------------------

DaylightResult daylight_search(long u_max) {
  Stopwatch clock;
  if (u_max < 2) throw ArgumentError("daylight_search: u_max must be at least 2");
  DaylightResult out;
  out.report.subject = "daylight u<=" + std::to_string(u_max);

  out.res_u = homogeneous_resultant(catalog_form("dq"), catalog_form("dc"), Var::u);
  out.res_v = homogeneous_resultant(catalog_form("dq"), catalog_form("dc"), Var::v);
  const bool res_ok = out.res_u.coefficient == 9 && out.res_u.exponent == 6 && out.res_v.coefficient == 9 &&
                      out.res_v.exponent == 6;
  out.report.add("resultants", res_ok ? Status::pass : Status::fail,
                 "Res_u = " + to_string(out.res_u.coefficient) + " v^" + std::to_string(out.res_u.exponent) +
                     ", Res_v = " + to_string(out.res_v.coefficient) + " u^" + std::to_string(out.res_v.exponent));

  for (long u = 2; u <= u_max; ++u) {
    const Int ui = u, vi = u - 1;
    DaylightFinding f;
    f.u = u;
    f.f = 3 * ui * ui - 3 * ui + 1;
    if (!is_prime(f.f)) continue;
    f.m = ui * ui * ui + vi * vi * vi;
    if (!is_cube_free(f.m)) continue;
    const CurveId c = CurveId::make(Family::C, f.m);
    const CurvePoint r = CurvePoint::make(c, Rat(ui), Rat(vi));
    const CurvePoint closed = double_on_cubic(r);
    f.group_law_agrees = closed == mul(2, r);
    f.w2 = closed.x().get_den();
    f.w2_prime = is_prime(f.w2);
    const bool uncancelled = f.w2 == f.f && closed.y().get_den() == f.w2;
    const bool ok = f.group_law_agrees && uncancelled;
    out.report.add("u=" + std::to_string(u), ok ? Status::pass : Status::fail,
                   "m = " + to_string(f.m) + ", 2R = " + closed.to_string() + ", W_2 = " + to_string(f.w2) +
                       (f.w2_prime ? " prime" : " not prime"));
    out.findings.push_back(std::move(f));
  }
  out.report.seconds = clock.seconds();
  return out;
}

// ---- rescaling ---------------------------------------------------------------------

RescaleResult rescale_demo(const CurvePoint& p, const std::vector<long>& indices, const FactorBudget& budget) {
  Stopwatch clock;
  require_e_point(p, "rescale_demo");
  if (indices.empty()) throw ArgumentError("rescale_demo: empty index set");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1) throw ArgumentError("rescale_demo: indices must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(indices[i], indices[j]) != 1) {
        throw ArgumentError("rescale_demo: indices " + std::to_string(indices[j]) + " and " +
                            std::to_string(indices[i]) + " are not coprime");
      }
    }
  }
  RescaleResult out;
  out.report.subject = "rescale " + mlabel(p.curve().m());
  const long n_max = *std::max_element(indices.begin(), indices.end());
  const Sequence seq(p, n_max);

  out.M = 1;
  std::vector<RescaleItem> items;
  for (long l : indices) {
    RescaleItem it;
    it.l = l;
    it.w_l = 1;
    it.p_l = 1;
    if (l > 1) {
      const PrimitiveDivisor pd = w_primitive_divisor(seq, l, budget);
      if (!pd.smallest) {
        out.report.add("l=" + std::to_string(l), Status::indeterminate, "primitive prime not determined; skipped");
        continue;
      }
      it.p_l = *pd.smallest;
      it.e_l = static_cast<unsigned>(padic_ord(seq.W(l), it.p_l));
      it.w_l = seq.W(l) / pow_int(it.p_l, it.e_l);
    }
    out.M *= it.w_l;
    items.push_back(std::move(it));
  }
  out.rescaled_m = p.curve().m() * out.M * out.M * out.M;

  // (U, V) -> (M U, M V) carries U^3 + V^3 = m onto U^3 + V^3 = m M^3.
  const CurvePoint r = to_cubic(p);
  const CurveId big = CurveId::unchecked(Family::C, out.rescaled_m);
  const CurvePoint r2 = CurvePoint::make(big, Rat(r.x() * out.M), Rat(r.y() * out.M));
  const Sequence seq2(to_mordell(r2), n_max);

  for (auto& it : items) {
    it.w_prime = seq2.W(it.l);
    it.matches_formula = it.w_prime == seq.W(it.l) / gcd(seq.W(it.l), out.M);
    it.prime_power = it.w_prime > 1 && is_prime_power(it.w_prime).has_value();
    const std::string idx = "l=" + std::to_string(it.l);
    std::string detail = "W_l = " + brief(seq.W(it.l)) + ", W'_l = " + brief(it.w_prime);
    if (it.l == 1) {
      out.report.add(idx, it.matches_formula ? Status::info : Status::fail, detail + " (l = 1 contributes nothing)");
    } else if (it.prime_power && it.matches_formula) {
      out.report.add(idx, Status::pass,
                     detail + " = " + to_string(it.p_l) + "^" + std::to_string(it.e_l));
    } else {
      out.report.add(idx, Status::fail, detail + " is not the expected prime power");
    }
  }
  out.report.flag("M = " + brief(out.M));
  out.report.flag("rescaled m = " + brief(out.rescaled_m));
  out.items = std::move(items);
  out.report.seconds = clock.seconds();
  return out;
}

// ---- thesis hypotheses -----------------------------------------------------------

ThesisCheck thesis_hypothesis_check(const CurvePoint& p, long n_max, const FactorBudget& budget) {
  Stopwatch clock;
  require_e_point(p, "thesis_hypothesis_check");
  ThesisCheck out;
  VerifyReport& rep = out.report;
  const Int& m = p.curve().m();
  rep.subject = "thesis " + mlabel(m);
  Int r = m % 9;
  if (r < 0) r += 9;
  out.congruence = r == 1 || r == 8 || r == 3 || r == 6 || r == 4 || r == 5;
  out.cube_free = is_cube_free(m);
  out.coprime_x = gcd(p.x().get_num(), m) == 1;
  const Sequence seq(p, std::max<long>(n_max, 3));
  out.two_p_nonintegral = seq.B(2) > 1;
  out.three_p_nonintegral = seq.B(3) > 1;

  auto yes = [](bool b) { return b ? std::string("holds") : std::string("fails"); };
  rep.add("m mod 9", Status::info, to_string(r) + ": congruence " + yes(out.congruence));
  rep.add("cube-free", Status::info, yes(out.cube_free));
  rep.add("gcd(x(P), m) = 1", Status::info, yes(out.coprime_x));
  rep.add("2P not integral", Status::info, "B_2 = " + brief(seq.B(2)) + ": " + yes(out.two_p_nonintegral));
  rep.add("3P not integral", Status::info, "B_3 = " + brief(seq.B(3)) + ": " + yes(out.three_p_nonintegral));

  for (long n = 2; n <= n_max; ++n) {
    if (coprime_factor_witness(seq, n)) continue;
    if (classify_term(seq.W(n), budget).is_prime_power()) out.prime_power_indices.push_back(n);
  }
  std::string found = std::to_string(out.prime_power_indices.size()) + " prime-power terms for 1 < n <= " +
                      std::to_string(n_max);
  for (long n : out.prime_power_indices) found += " n=" + std::to_string(n);
  if (out.hypotheses()) {
    rep.add("conclusion", out.prime_power_indices.size() <= 1 ? Status::pass : Status::fail, found);
  } else {
    rep.add("conclusion", Status::info, "hypotheses not all met, theorem silent; " + found);
  }
  rep.seconds = clock.seconds();
  return out;
}

// ---- sequence laws ---------------------------------------------------------------

VerifyReport verify_cancellation(const CurvePoint& p, long n_max) {
  Stopwatch clock;
  require_e_point(p, "verify_cancellation");
  VerifyReport rep;
  const Int& m = p.curve().m();
  rep.subject = "cancellation " + mlabel(m);
  const Sequence seq(p, n_max);
  const Int bound = 72 * abs(m);
  for (long n = 1; n <= n_max; ++n) {
    const Int& d = seq.c_term(n).d;
    const Int pred = predicted_cancellation(seq.A(n), m);
    const bool divides = mpz_divisible_p(bound.get_mpz_t(), d.get_mpz_t()) != 0;
    rep.add(nlabel(n), d == pred && divides ? Status::pass : Status::fail,
            "d = " + to_string(d) + ", predicted " + to_string(pred) + (divides ? "" : ", does not divide 72m"));
  }
  rep.seconds = clock.seconds();
  return rep;
}

VerifyReport verify_strong_divisibility(const CurvePoint& p, long r_max) {
  Stopwatch clock;
  require_e_point(p, "verify_strong_divisibility");
  VerifyReport rep;
  rep.subject = "strongdiv " + mlabel(p.curve().m());
  const Sequence seq(p, r_max);
  long pairs = 0;
  for (long r = 1; r <= r_max; ++r) {
    for (long n = 1; n <= r_max; ++n) {
      ++pairs;
      if (!check_strong_divisibility(seq, r, n)) {
        rep.add("r=" + std::to_string(r) + " n=" + std::to_string(n), Status::fail, "gcd(W_r, W_n) != W_gcd(r,n)");
      }
    }
  }
  if (!rep.failed()) {
    rep.add("1<=r,n<=" + std::to_string(r_max), Status::pass, std::to_string(pairs) + " pairs hold");
  }
  rep.seconds = clock.seconds();
  return rep;
}

VerifyReport verify_valuation_laws(const CurvePoint& p, long nk_max) {
  Stopwatch clock;
  require_e_point(p, "verify_valuation_laws");
  VerifyReport rep;
  const Int& m = p.curve().m();
  rep.subject = "valuation " + mlabel(m);
  const Sequence seq(p, nk_max);
  std::size_t applied = 0, aggregate = 0;
  for (long n = 1; n <= nk_max; ++n) {
    for (long k = 1; n * k <= nk_max; ++k) {
      const std::string idx = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      for (const auto& pf : factor(Int(6 * abs(m) * k)).factors) {
        const ValuationReport vr = check_valuation_laws(seq, n, k, pf.prime);
        applied += vr.applied();
        for (const auto& c : vr.checks) {
          if (c.status == LawStatus::fails) {
            rep.add(idx + " p=" + to_string(pf.prime), Status::fail,
                    c.law + ": observed " + std::to_string(c.observed) + ", predicted " + std::to_string(c.predicted));
          }
        }
      }
      const ValuationReport agg = check_valuation_laws_all_large_primes(seq, n, k);
      aggregate += agg.applied();
      for (const auto& c : agg.checks) {
        if (c.status == LawStatus::fails) rep.add(idx + " p>3 large", Status::fail, c.law + " fails for " + c.detail);
      }
    }
  }
  if (!rep.failed()) {
    rep.add("nk<=" + std::to_string(nk_max), Status::pass,
            std::to_string(applied) + " per-prime checks (primes of 6mk), " + std::to_string(aggregate) +
                " aggregate checks (all other primes)");
  }
  rep.seconds = clock.seconds();
  return rep;
}

}  // namespace tfc
