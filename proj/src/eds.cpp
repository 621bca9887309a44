#include "tfc/eds.hpp"

#include <algorithm>
#include <numeric>

#include "tfc/errors.hpp"

namespace tfc {

namespace {

long ord(const Int& x, const Int& p) { return padic_ord(x, p); }

bool divides(const Int& p, const Int& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

LawCheck skipped(std::string law, std::string why) {
  LawCheck c;
  c.law = std::move(law);
  c.status = LawStatus::skipped;
  c.detail = std::move(why);
  return c;
}

LawCheck compare(std::string law, long observed, long predicted) {
  LawCheck c;
  c.law = std::move(law);
  c.observed = observed;
  c.predicted = predicted;
  c.status = observed == predicted ? LawStatus::holds : LawStatus::fails;
  return c;
}

// True iff for every prime of `part`, ord_p(whole) = ord_p(part).
bool exact_power_divides(const Int& part, const Int& whole) {
  if (!divides(part, whole)) return false;
  return gcd(Int(whole / part), part) == 1;
}

LawCheck aggregate(std::string law, bool ok, std::string detail) {
  LawCheck c;
  c.law = std::move(law);
  c.status = ok ? LawStatus::holds : LawStatus::fails;
  c.observed = ok ? 1 : 0;
  c.predicted = 1;
  c.detail = std::move(detail);
  return c;
}

void require_range(const Sequence& seq, long n) {
  if (n < 1 || n > seq.n_max()) {
    throw ArgumentError("index " + std::to_string(n) + " outside 1.." + std::to_string(seq.n_max()));
  }
}

}  // namespace

WTerm weierstrass_from_point(const CurvePoint& np, long n) {
  if (np.is_identity()) throw TorsionError(std::to_string(n) + "P is the identity");
  const Rat& x = np.x();
  const Rat& y = np.y();
  const Int& b2 = x.get_den();
  if (!mpz_perfect_square_p(b2.get_mpz_t())) {
    throw ArgumentError("denominator of x(nP) is not a square: " + np.to_string());
  }
  WTerm t;
  t.n = n;
  t.a = x.get_num();
  t.b = sqrt(b2);
  if (y.get_den() != t.b * t.b * t.b) throw ArgumentError("denominator of y(nP) is not B^3: " + np.to_string());
  t.c = y.get_num();
  return t;
}

CTerm cubic_from_weierstrass(const WTerm& t, const Int& m) {
  if (t.a == 0) throw SingularMapError("A_" + std::to_string(t.n) + " = 0: nP is outside the cubic chart");
  const Int b3 = t.b * t.b * t.b;
  const Int num_u = 36 * m * b3 + t.c;
  const Int num_v = 36 * m * b3 - t.c;
  const Int den = 6 * t.a * t.b;
  const Int d = gcd(num_v, den);
  if (gcd(num_u, den) != d) {
    throw std::logic_error("cancellation differs between U_n and V_n at n = " + std::to_string(t.n));
  }
  CTerm c;
  c.n = t.n;
  c.d = d;
  c.w = abs(den) / d;
  const int s = sgn(den);
  c.u = s * num_u / d;
  c.v = s * num_v / d;
  return c;
}

WTerm weierstrass_term(const CurvePoint& p, long n) {
  if (p.curve().family() != Family::E) throw ArgumentError("weierstrass_term: point must lie on E");
  if (n < 1) throw ArgumentError("weierstrass_term: n must be positive");
  return weierstrass_from_point(mul(n, p), n);
}

CTerm cubic_term(const CurvePoint& p, long n) {
  return cubic_from_weierstrass(weierstrass_term(p, n), p.curve().m());
}

Sequence::Sequence(const CurvePoint& p, long n_max) : p_(p) {
  if (p.curve().family() != Family::E) throw ArgumentError("Sequence: point must lie on E");
  if (p.is_identity()) throw TorsionError("Sequence: P is the identity");
  if (n_max < 1) throw ArgumentError("Sequence: n_max must be positive");
  terms_.reserve(static_cast<std::size_t>(n_max));
  CurvePoint q = p;
  for (long n = 1; n <= n_max; ++n) {
    if (n > 1) q = add(q, p);
    WTerm w = weierstrass_from_point(q, n);
    CTerm c = cubic_from_weierstrass(w, m());
    terms_.push_back({std::move(w), std::move(c)});
  }
}

const SequenceTerm& Sequence::operator[](long n) const {
  require_range(*this, n);
  return terms_[static_cast<std::size_t>(n - 1)];
}

std::vector<CTerm> w_sequence(const CurvePoint& p, long n_max) {
  Sequence seq(p, n_max);
  std::vector<CTerm> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) out.push_back(seq.c_term(n));
  return out;
}

Int predicted_cancellation(const Int& a_n, const Int& m) {
  if (a_n == 0) throw SingularMapError("predicted_cancellation: A_n = 0");
  Int d = 1;
  for (unsigned long p : {2UL, 3UL}) {
    if (mpz_divisible_ui_p(a_n.get_mpz_t(), p)) d *= pow_int(Int(p), static_cast<unsigned long>(ord(a_n, Int(p)) + 1));
  }
  const Factorization fm = factor(m);
  if (!fm.complete) throw PrecisionError("predicted_cancellation: could not factor m");
  for (const auto& [p, e] : fm.factors) {
    if (p > 3 && divides(p, a_n)) d *= pow_int(p, e);
  }
  return d;
}

Int predicted_cancellation(const CurvePoint& p, long n) {
  return predicted_cancellation(weierstrass_term(p, n).a, p.curve().m());
}

bool check_strong_divisibility(const Sequence& seq, long r, long n) {
  if (r < 1 || n < 1) throw ArgumentError("check_strong_divisibility: indices must be positive");
  const long g = std::gcd(r, n);
  return gcd(seq.W(r), seq.W(n)) == seq.W(g);
}

bool check_strong_divisibility(const CurvePoint& p, long r, long n) {
  return check_strong_divisibility(Sequence(p, std::max(r, n)), r, n);
}

bool ValuationReport::all_hold() const {
  return std::none_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.status == LawStatus::fails; });
}

std::size_t ValuationReport::applied() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const LawCheck& c) { return c.status != LawStatus::skipped; }));
}

ValuationReport check_valuation_laws(const Sequence& seq, long n, long k, const Int& p) {
  if (!is_prime(p)) throw ArgumentError("check_valuation_laws: " + to_string(p) + " is not prime");
  if (n < 1 || k < 1) throw ArgumentError("check_valuation_laws: n and k must be positive");
  require_range(seq, n);
  ValuationReport rep;
  rep.n = n;
  rep.k = k;
  rep.p = p;
  const Int& m = seq.m();
  const long nk = n * k;
  const bool nk_ok = nk <= seq.n_max();
  const bool p_big = p > 3;
  const bool p_div_a = divides(p, seq.A(n));
  const bool p_div_b = divides(p, seq.B(n));
  const bool p_div_w = divides(p, seq.W(n));
  const long ord_k = ord(Int(k), p);
  const long ord_m = ord(m, p);

  if (!p_div_w) {
    rep.checks.push_back(skipped("W_ord", "p does not divide W_n"));
  } else if (!nk_ok) {
    rep.checks.push_back(skipped("W_ord", "nk beyond computed range"));
  } else {
    rep.checks.push_back(compare("W_ord", ord(seq.W(nk), p), ord(seq.W(n), p) + ord_k));
  }

  if (!p_big || !p_div_a) {
    rep.checks.push_back(skipped("A_ord", "needs p > 3 and p | A_n"));
  } else if (k % 3 == 0) {
    rep.checks.push_back(skipped("A_ord", "needs 3 not dividing k"));
  } else if (!nk_ok) {
    rep.checks.push_back(skipped("A_ord", "nk beyond computed range"));
  } else {
    rep.checks.push_back(compare("A_ord", ord(seq.A(nk), p), ord(seq.A(n), p) + ord_k));
  }

  if (!p_div_b) {
    rep.checks.push_back(skipped("B_ord", "p does not divide B_n"));
  } else if (!nk_ok) {
    rep.checks.push_back(skipped("B_ord", "nk beyond computed range"));
  } else {
    rep.checks.push_back(compare("B_ord", ord(seq.B(nk), p), ord(seq.B(n), p) + ord_k));
  }

  if (!p_big || !p_div_a) {
    rep.checks.push_back(skipped("triple", "needs p > 3 and p | A_n"));
  } else if (3 * n > seq.n_max()) {
    rep.checks.push_back(skipped("triple", "3n beyond computed range"));
  } else {
    rep.checks.push_back(compare("triple", ord(seq.B(3 * n), p), ord(seq.A(n), p) - ord_m));
  }

  if (!p_big || !p_div_a) {
    rep.checks.push_back(skipped("alter", "needs p > 3 and p | A_n"));
  } else {
    rep.checks.push_back(compare("alter", ord(seq.W(n), p), ord(seq.A(n), p) - ord_m));
  }

  if (p_big || !p_div_w || p_div_a || p_div_b) {
    rep.checks.push_back(skipped("small_B", "needs p <= 3, p | W_n, p not dividing A_n B_n"));
  } else {
    const long np = n * mpz_get_si(p.get_mpz_t());
    if (np > seq.n_max()) {
      rep.checks.push_back(skipped("small_B", "np beyond computed range"));
    } else {
      rep.checks.push_back(compare("small_B", ord(seq.B(np), p), 1));
    }
  }
  return rep;
}

ValuationReport check_valuation_laws(const CurvePoint& pt, long n, long k, const Int& p) {
  return check_valuation_laws(Sequence(pt, std::max(3 * n, n * k)), n, k, p);
}

ValuationReport check_valuation_laws_all_large_primes(const Sequence& seq, long n, long k) {
  if (n < 1 || k < 1) throw ArgumentError("check_valuation_laws_all_large_primes: n and k must be positive");
  require_range(seq, n);
  ValuationReport rep;
  rep.n = n;
  rep.k = k;
  rep.p = 0;
  const Int small = 6 * abs(seq.m()) * k;
  const long nk = n * k;
  const std::string scope = "every prime not dividing 6mk";

  const Int w = coprime_part(seq.W(n), small);
  const Int b = coprime_part(seq.B(n), small);
  const Int a = coprime_part(seq.A(n), small);

  if (nk <= seq.n_max()) {
    rep.checks.push_back(aggregate("W_ord", exact_power_divides(w, seq.W(nk)), scope));
    rep.checks.push_back(aggregate("B_ord", exact_power_divides(b, seq.B(nk)), scope));
    if (k % 3 != 0) {
      rep.checks.push_back(aggregate("A_ord", exact_power_divides(a, seq.A(nk)), scope));
    } else {
      rep.checks.push_back(skipped("A_ord", "needs 3 not dividing k"));
    }
  } else {
    rep.checks.push_back(skipped("W_ord", "nk beyond computed range"));
    rep.checks.push_back(skipped("B_ord", "nk beyond computed range"));
    rep.checks.push_back(skipped("A_ord", "nk beyond computed range"));
  }
  if (3 * n <= seq.n_max()) {
    rep.checks.push_back(aggregate("triple", exact_power_divides(a, seq.B(3 * n)), scope));
  } else {
    rep.checks.push_back(skipped("triple", "3n beyond computed range"));
  }
  rep.checks.push_back(aggregate("alter", exact_power_divides(a, seq.W(n)), scope));
  return rep;
}

PrimitiveDivisor primitive_divisor(const std::vector<Int>& history, const FactorBudget& budget) {
  if (history.size() < 2) throw ArgumentError("primitive_divisor: needs n >= 2 (a history of earlier terms)");
  PrimitiveDivisor out;
  Int r = abs(history.back());
  if (r == 0) throw ArgumentError("primitive_divisor: zero term");
  for (std::size_t i = 0; i + 1 < history.size() && r > 1; ++i) {
    if (history[i] != 0) r = coprime_part(r, history[i]);
  }
  out.primitive_part = r;
  out.exists = r > 1;
  if (!out.exists) return out;

  // Every prime of r is primitive, so the least prime factor of r is the
  // answer.
  for (std::uint32_t p : small_primes()) {
    if (p > budget.trial_bound) break;
    if (mpz_cmp_ui(r.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    if (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      out.smallest = Int(p);
      return out;
    }
  }
  if (is_prime(r)) {
    out.smallest = r;
    return out;
  }
  const Factorization f = factor(r, budget);
  if (f.complete) out.smallest = f.factors.front().prime;
  return out;
}

namespace {
PrimitiveDivisor primitive_from(const Sequence& seq, long n, const FactorBudget& budget, bool use_a) {
  if (n < 2) throw ArgumentError("primitive divisor: n must be at least 2");
  require_range(seq, n);
  std::vector<Int> history;
  history.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) history.push_back(use_a ? seq.A(i) : seq.W(i));
  return primitive_divisor(history, budget);
}
}  // namespace

PrimitiveDivisor w_primitive_divisor(const Sequence& seq, long n, const FactorBudget& budget) {
  return primitive_from(seq, n, budget, false);
}

PrimitiveDivisor a_primitive_divisor(const Sequence& seq, long n, const FactorBudget& budget) {
  return primitive_from(seq, n, budget, true);
}

std::string Classification::to_string() const {
  switch (kind) {
    case Kind::unit:
      return "unit";
    case Kind::prime:
      return std::string(probable ? "probable_prime(" : "prime(") + tfc::to_string(prime) + ")";
    case Kind::prime_power:
      return "prime_power(" + tfc::to_string(prime) + "^" + std::to_string(exponent) + ")";
    case Kind::composite:
      return "composite(" + std::string(complete ? "" : ">=") + std::to_string(distinct_primes) + " distinct primes)";
  }
  return "?";
}

Classification classify_term(const Int& w, const FactorBudget& budget) {
  Classification c;
  if (abs(w) <= 1) return c;
  const Factorization f = factor(w, budget);
  c.complete = f.complete;
  c.probable = f.probable;
  if (f.complete) {
    c.distinct_primes = f.factors.size();
    if (f.factors.size() == 1) {
      c.prime = f.factors[0].prime;
      c.exponent = f.factors[0].exponent;
      c.kind = c.exponent == 1 ? Classification::Kind::prime : Classification::Kind::prime_power;
    } else {
      c.kind = Classification::Kind::composite;
    }
    return c;
  }
  // The unfactored cofactor is composite and not a prime power (perfect
  // powers are split into their roots before rho gives up), and it is
  // coprime to the listed primes, so |w| has at least two distinct primes.
  c.kind = Classification::Kind::composite;
  c.distinct_primes = std::max<std::size_t>(2, f.factors.size() + 1);
  return c;
}

std::optional<CoprimeWitness> coprime_factor_witness(const Sequence& seq, long n) {
  require_range(seq, n);
  const Int& b = seq.B(n);
  const Int& w = seq.W(n);
  if (b == 1) return std::nullopt;
  CoprimeWitness out;
  out.f1 = coprime_part(w, b);
  if (out.f1 == 1) return std::nullopt;
  out.f2 = w / out.f1;
  if (out.f2 == 1) return std::nullopt;
  return out;
}

std::optional<CoprimeWitness> coprime_factor_witness(const CurvePoint& p, long n) {
  return coprime_factor_witness(Sequence(p, n), n);
}

}  // namespace tfc
