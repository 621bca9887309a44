#include "tfc/heights.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "tfc/errors.hpp"

namespace tfc {

namespace {

constexpr mpfr_prec_t kBits = 256;
constexpr int kMaxDoublings = 60;

// Minimal RAII holder; only what the doubling chain needs.
struct Mp {
  mpfr_t v;
  Mp() { mpfr_init2(v, kBits); }
  explicit Mp(const Int& z) : Mp() { mpfr_set_z(v, z.get_mpz_t(), MPFR_RNDN); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  ~Mp() { mpfr_clear(v); }
  double get() const { return mpfr_get_d(v, MPFR_RNDN); }
};

double log_int(const Int& z) {
  Mp t(abs(z));
  mpfr_log(t.v, t.v, MPFR_RNDN);
  return t.get();
}

// One prime of 6m, tracked as a projective pair mod p^prec up to a unit.
struct LocalPair {
  Int p;
  Int x, z;
  long prec;
};

long val_mod(const Int& a, const Int& p, long prec) {
  if (a == 0) return prec;
  Int rest;
  return std::min<long>(prec, static_cast<long>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t())));
}

// Doubling on x: (X : Z) -> (X^4 - 8bXZ^3 : 4Z(X^3 + bZ^3)).
void phi_psi(const Int& x, const Int& z, const Int& b, Int& phi, Int& psi) {
  const Int z3 = z * z * z;
  const Int x3 = x * x * x;
  phi = x3 * x - 8 * b * x * z3;
  psi = 4 * z * (x3 + b * z3);
}

// Exponent of p in gcd(phi, psi) at the current pair, and the pair advanced.
long local_step(LocalPair& lp, const Int& b) {
  const Int mod = pow_int(lp.p, static_cast<unsigned long>(lp.prec));
  Int phi, psi;
  phi_psi(lp.x, lp.z, b, phi, psi);
  phi %= mod;
  psi %= mod;
  if (phi < 0) phi += mod;
  if (psi < 0) psi += mod;
  const long e = std::min(val_mod(phi, lp.p, lp.prec), val_mod(psi, lp.p, lp.prec));
  if (e >= lp.prec) throw PrecisionError("canonical_height: p-adic precision exhausted at p = " + to_string(lp.p));
  const Int pe = pow_int(lp.p, static_cast<unsigned long>(e));
  lp.prec -= e;
  const Int next_mod = pow_int(lp.p, static_cast<unsigned long>(lp.prec));
  lp.x = (phi / pe) % next_mod;
  lp.z = (psi / pe) % next_mod;
  return e;
}

void require_weierstrass_point(const CurvePoint& p, const char* who) {
  if (!p.curve().is_weierstrass()) throw ArgumentError(std::string(who) + ": point must lie on E or E'");
  if (p.is_identity()) throw TorsionError(std::string(who) + ": the identity has no finite height");
}

void require_nontorsion(const CurvePoint& p) {
  // Rational torsion has order at most 12.
  CurvePoint q = p;
  for (int n = 1; n <= 12; ++n) {
    if (q.is_identity()) throw TorsionError("canonical_height: " + p.to_string() + " is torsion");
    q = add(q, p);
  }
}

struct Chain {
  double h0 = 0;
  std::vector<double> steps;  // lambda_j - log g_j
};

// Terms of h(2^K P) / 4^K = h0 + sum_j steps[j] / 4^(j+1).
Chain doubling_chain(const CurvePoint& pt, int k, long digits) {
  const Int b = pt.curve().weierstrass_b();
  const Int x0 = pt.x().get_num();
  const Int z0 = pt.x().get_den();

  Chain out;
  const Int top = std::max<Int>(abs(x0), z0);
  out.h0 = log_int(top);

  std::vector<LocalPair> locals;
  {
    std::vector<Int> primes{2, 3};
    const Factorization fm = factor(pt.curve().m());
    if (!fm.complete) throw PrecisionError("canonical_height: could not factor m");
    for (const auto& f : fm.factors) {
      if (f.prime > 3) primes.push_back(f.prime);
    }
    for (const Int& p : primes) {
      const Int mod = pow_int(p, static_cast<unsigned long>(digits));
      Int xm = x0 % mod, zm = z0 % mod;
      if (xm < 0) xm += mod;
      locals.push_back({p, xm, zm, digits});
    }
  }

  Mp x, z, bb(b), phi, psi, t, u, scale;
  mpfr_set_z(x.v, x0.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(z.v, z0.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(scale.v, top.get_mpz_t(), MPFR_RNDN);
  mpfr_div(x.v, x.v, scale.v, MPFR_RNDN);
  mpfr_div(z.v, z.v, scale.v, MPFR_RNDN);

  for (int j = 0; j < k; ++j) {
    // phi = x^4 - 8 b x z^3
    mpfr_pow_ui(t.v, z.v, 3, MPFR_RNDN);
    mpfr_mul(u.v, t.v, bb.v, MPFR_RNDN);  // b z^3
    mpfr_mul(phi.v, u.v, x.v, MPFR_RNDN);
    mpfr_mul_ui(phi.v, phi.v, 8, MPFR_RNDN);
    mpfr_pow_ui(t.v, x.v, 4, MPFR_RNDN);
    mpfr_sub(phi.v, t.v, phi.v, MPFR_RNDN);
    // psi = 4 z (x^3 + b z^3)
    mpfr_pow_ui(t.v, x.v, 3, MPFR_RNDN);
    mpfr_add(t.v, t.v, u.v, MPFR_RNDN);
    mpfr_mul(psi.v, t.v, z.v, MPFR_RNDN);
    mpfr_mul_ui(psi.v, psi.v, 4, MPFR_RNDN);

    mpfr_abs(t.v, phi.v, MPFR_RNDN);
    mpfr_abs(u.v, psi.v, MPFR_RNDN);
    mpfr_max(scale.v, t.v, u.v, MPFR_RNDN);
    if (mpfr_zero_p(scale.v)) throw PrecisionError("canonical_height: doubling chain degenerated");
    mpfr_div(x.v, phi.v, scale.v, MPFR_RNDN);
    mpfr_div(z.v, psi.v, scale.v, MPFR_RNDN);
    mpfr_log(scale.v, scale.v, MPFR_RNDN);

    double log_g = 0;
    for (LocalPair& lp : locals) {
      const long e = local_step(lp, b);
      if (e > 0) log_g += static_cast<double>(e) * log_int(lp.p);
    }
    out.steps.push_back(scale.get() - log_g);
  }
  return out;
}

Chain doubling_chain_retry(const CurvePoint& pt, int k) {
  long digits = 24L * (k + 2);
  for (int attempt = 0;; ++attempt) {
    try {
      return doubling_chain(pt, k, digits);
    } catch (const PrecisionError&) {
      if (attempt >= 3) throw;
      digits *= 4;
    }
  }
}

}  // namespace

double naive_height(const CurvePoint& p) {
  require_weierstrass_point(p, "naive_height");
  const Rat& x = p.x();
  return log_int(std::max<Int>(abs(x.get_num()), x.get_den()));
}

GapBounds silverman_gap(const CurveId& curve) {
  const Int b = curve.weierstrass_b();
  const Int delta = -432 * b * b;
  const double hd = log_int(delta);
  return {-hd / 6.0 - 2.14, hd / 6.0 + 1.946};
}

HeightReport height_report(const CurvePoint& p, double tol) {
  require_weierstrass_point(p, "canonical_height");
  if (!(tol > 0)) throw ArgumentError("canonical_height: tol must be positive");
  if (tol < 1e-30) throw PrecisionError("canonical_height: tol below working precision");
  require_nontorsion(p);

  const GapBounds gap = silverman_gap(p.curve());
  const double spread = std::max(std::fabs(gap.lower), std::fabs(gap.upper));
  // Half of tol for the truncated tail, the rest absorbs rounding.
  int k = 0;
  while (spread / std::pow(4.0, k) >= tol / 2) {
    if (++k > kMaxDoublings) throw PrecisionError("canonical_height: too many doublings");
  }

  const Chain chain = doubling_chain_retry(p, k);
  long double sum = chain.h0;
  long double w = 1;
  for (double s : chain.steps) {
    w /= 4;
    sum += w * s;
  }

  HeightReport r;
  r.naive = naive_height(p);
  r.canonical = static_cast<double>(sum);
  r.gap_lower = gap.lower;
  r.gap_upper = gap.upper;
  r.precision = tol;
  r.doublings = k;
  return r;
}

double canonical_height(const CurvePoint& p, double tol) { return height_report(p, tol).canonical; }

std::vector<double> doubling_heights(const CurvePoint& p, int k_max) {
  require_weierstrass_point(p, "doubling_heights");
  if (k_max < 0 || k_max > kMaxDoublings) throw ArgumentError("doubling_heights: k_max out of range");
  require_nontorsion(p);
  const Chain chain = doubling_chain_retry(p, k_max);
  std::vector<double> out{chain.h0};
  long double h = chain.h0;
  for (double s : chain.steps) {
    h = 4 * h + s;
    out.push_back(static_cast<double>(h));
  }
  return out;
}

double height_lower_bound(const Int& m) {
  if (m < 1) throw ArgumentError("height_lower_bound: m must be positive");
  return log_int(m) / 81.0 - 0.039;
}

namespace {
double overall_rhs(const Int& m) {
  return 2.0 / 3.0 * log_int(m) + 0.5 * std::log(48.0) + 2.14 + log_int(8 * m);
}
}  // namespace

long bn_index_bound(const Int& m) {
  require_admissible(m);
  if (m < 1) throw ArgumentError("bn_index_bound: m must be positive");
  const double lead = height_lower_bound(m);
  if (lead <= 0) {
    throw BoundUnavailableError("bn_index_bound: (1/81) log m - 0.039 <= 0 for m = " + to_string(m) +
                                "; use the appendix scan");
  }
  const double rhs = overall_rhs(m);
  // The left side increases in n, so the answer is one less than the first
  // n where the inequality holds.
  auto holds = [&](long n) { return lead * static_cast<double>(n) * static_cast<double>(n) > rhs; };
  long n = std::max<long>(1, static_cast<long>(std::floor(std::sqrt(rhs / lead))) - 1);
  while (n > 1 && holds(n - 1)) --n;
  while (!holds(n)) ++n;
  return std::max<long>(1, n - 1);
}

bool appendix_height_bound(long n, const Int& m, double h_min) {
  if (n < 1) throw ArgumentError("appendix_height_bound: n must be positive");
  if (m < 1) throw ArgumentError("appendix_height_bound: m must be positive");
  return h_min * static_cast<double>(n) * static_cast<double>(n) > overall_rhs(m);
}

}  // namespace tfc
