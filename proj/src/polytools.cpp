#include "tfc/polytools.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "tfc/errors.hpp"

namespace tfc {

// ---- IntPoly ---------------------------------------------------------------

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const Int& IntPoly::lead() const {
  if (c_.empty()) throw ArgumentError("leading coefficient of the zero polynomial");
  return c_.back();
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& c : c_) g = gcd(g, c);
  return g;
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {
std::string monomial_term(const Int& c, bool first, const std::string& body) {
  std::string out;
  Int a = abs(c);
  if (c < 0) {
    out += first ? "-" : " - ";
  } else if (!first) {
    out += " + ";
  }
  if (body.empty()) return out + tfc::to_string(a);
  if (a != 1) out += tfc::to_string(a) + "*";
  return out + body;
}

std::string var_power(const std::string& var, long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}
}  // namespace

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Int& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    out += monomial_term(c, first, var_power(var, i));
    first = false;
  }
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<long>(i)) - b.coeff(static_cast<long>(i));
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const Int& s, const IntPoly& a) {
  std::vector<Int> c = a.c_;
  for (Int& x : c) x *= s;
  return IntPoly(std::move(c));
}

// ---- HomogPoly -------------------------------------------------------------

HomogPoly::HomogPoly(unsigned degree, std::vector<Int> coeffs) : d_(degree), c_(std::move(coeffs)) {
  if (c_.size() != static_cast<std::size_t>(degree) + 1) {
    throw ArgumentError("HomogPoly: expected " + std::to_string(degree + 1) + " coefficients, got " +
                        std::to_string(c_.size()));
  }
}

long HomogPoly::u_degree() const {
  for (long i = d_; i >= 0; --i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

long HomogPoly::v_degree() const {
  for (long i = 0; i <= static_cast<long>(d_); ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return static_cast<long>(d_) - i;
  }
  return -1;
}

bool HomogPoly::is_zero() const { return u_degree() < 0; }

Int HomogPoly::eval(const Int& u, const Int& v) const {
  Int r = 0, vp = 1;
  // Horner in u, carrying the matching power of v.
  for (long i = d_; i >= 0; --i) {
    r = r * u + c_[static_cast<std::size_t>(i)] * vp;
    vp *= v;
  }
  return r;
}

IntPoly HomogPoly::at_v1() const { return IntPoly(c_); }

IntPoly HomogPoly::at_u1() const { return IntPoly(std::vector<Int>(c_.rbegin(), c_.rend())); }

std::string HomogPoly::to_string() const {
  std::string out;
  bool first = true;
  for (long i = d_; i >= 0; --i) {
    const Int& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string body = var_power("u", i);
    const std::string vs = var_power("v", static_cast<long>(d_) - i);
    if (!vs.empty()) body += body.empty() ? vs : "*" + vs;
    out += monomial_term(c, first, body);
    first = false;
  }
  return first ? "0" : out;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return HomogPoly(a.d_ + b.d_, std::move(c));
}

HomogPoly operator*(const Int& s, const HomogPoly& a) {
  std::vector<Int> c = a.c_;
  for (Int& x : c) x *= s;
  return HomogPoly(a.d_, std::move(c));
}

// ---- resultants ------------------------------------------------------------

IntPoly taylor_shift(const IntPoly& f, const Int& a) {
  // Repeated synthetic division: O(d^2) exact operations.
  std::vector<Int> c = f.coeffs();
  const long n = static_cast<long>(c.size());
  for (long i = 0; i < n; ++i) {
    for (long j = n - 2; j >= i; --j) c[static_cast<std::size_t>(j)] += a * c[static_cast<std::size_t>(j + 1)];
  }
  return IntPoly(std::move(c));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ArgumentError("pseudo_remainder: division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Int> r = a.coeffs();
  const std::vector<Int>& bc = b.coeffs();
  const Int& lb = b.lead();
  const long db = b.degree();
  for (long k = a.degree(); k >= db; --k) {
    const Int lr = r[static_cast<std::size_t>(k)];
    for (Int& x : r) x *= lb;
    if (lr != 0) {
      for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= lr * bc[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(r));
}

namespace {
Int ipow(const Int& b, long e) { return pow_int(b, static_cast<unsigned long>(e)); }

IntPoly divide_exact(const IntPoly& f, const Int& d) {
  std::vector<Int> c = f.coeffs();
  for (Int& x : c) {
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) throw std::logic_error("subresultant: inexact division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(c));
}
}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ArgumentError("resultant: zero polynomial");
  if (f.degree() == 0) return ipow(f.lead(), g.degree());
  if (g.degree() == 0) return ipow(g.lead(), f.degree());

  IntPoly a = f, b = g;
  const Int ca = a.content(), cb = b.content();
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);
  const Int t = ipow(ca, g.degree()) * ipow(cb, f.degree());
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  Int gg = 1, h = 1;
  for (;;) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return 0;
    b = divide_exact(r, gg * ipow(h, delta));
    gg = a.lead();
    if (delta > 0) h = ipow(gg, delta) / ipow(h, delta - 1);
    if (b.degree() == 0) break;
  }
  h = ipow(b.lead(), a.degree()) / ipow(h, a.degree() - 1);
  return s * t * h;
}

Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ArgumentError("resultant: zero polynomial");
  const long n = f.degree(), m = g.degree();
  const long size = n + m;
  if (size == 0) return 1;
  std::vector<std::vector<Int>> mat(static_cast<std::size_t>(size), std::vector<Int>(static_cast<std::size_t>(size)));
  for (long r = 0; r < m; ++r) {
    for (long j = 0; j <= n; ++j) mat[r][r + j] = f.coeff(n - j);
  }
  for (long r = 0; r < n; ++r) {
    for (long j = 0; j <= m; ++j) mat[m + r][r + j] = g.coeff(m - j);
  }
  // Bareiss elimination.
  int sign = 1;
  Int prev = 1;
  for (long k = 0; k < size - 1; ++k) {
    if (mat[k][k] == 0) {
      long piv = k + 1;
      while (piv < size && mat[piv][k] == 0) ++piv;
      if (piv == size) return 0;
      std::swap(mat[k], mat[piv]);
      sign = -sign;
    }
    for (long i = k + 1; i < size; ++i) {
      for (long j = k + 1; j < size; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  return sign * mat[size - 1][size - 1];
}

HomogResultant homogeneous_resultant(const HomogPoly& f, const HomogPoly& g, Var eliminate) {
  if (f.is_zero() || g.is_zero()) throw ArgumentError("homogeneous_resultant: zero form");
  const IntPoly ff = eliminate == Var::u ? f.at_v1() : f.at_u1();
  const IntPoly gg = eliminate == Var::u ? g.at_v1() : g.at_u1();
  const long ef = ff.degree(), eg = gg.degree();
  const long df = f.degree(), dg = g.degree();
  HomogResultant r;
  r.coefficient = resultant(ff, gg);
  r.exponent = static_cast<unsigned>(df * eg + dg * ef - ef * eg);
  return r;
}

std::optional<unsigned> p_power_exponent(const Int& n, const Int& p) {
  if (n == 0) return std::nullopt;
  Int rest;
  const Int a = abs(n);
  const auto k = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (rest != 1) return std::nullopt;
  return static_cast<unsigned>(k);
}

bool resultant_pair_check(const HomogPoly& g1, const HomogPoly& g2, const Int& p) {
  if (!is_prime(p)) throw ArgumentError("resultant_pair_check: " + to_string(p) + " is not prime");
  return p_power_exponent(homogeneous_resultant(g1, g2, Var::u).coefficient, p).has_value() &&
         p_power_exponent(homogeneous_resultant(g1, g2, Var::v).coefficient, p).has_value();
}

// ---- Newton polygons -------------------------------------------------------

std::string NewtonPolygon::to_string() const {
  std::ostringstream os;
  os << "vertices";
  for (const auto& [x, y] : vertices) os << " (" << x << "," << y << ")";
  os << "; slopes";
  for (const auto& s : segments) os << " " << tfc::to_string(s.slope) << " x" << s.length();
  return os.str();
}

NewtonPolygon newton_polygon(const IntPoly& f, const Int& p) {
  if (f.is_zero()) throw ArgumentError("newton_polygon: zero polynomial");
  if (!is_prime(p)) throw ArgumentError("newton_polygon: " + to_string(p) + " is not prime");
  NewtonPolygon np;
  np.p = p;
  for (long i = 0; i <= f.degree(); ++i) {
    const Int& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0) np.points.emplace_back(i, padic_ord(c, p));
  }
  auto cross = [](const std::pair<long, long>& o, const std::pair<long, long>& a, const std::pair<long, long>& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  auto& hull = np.vertices;
  for (const auto& pt : np.points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    NewtonSegment s{hull[i].first, hull[i].second, hull[i + 1].first, hull[i + 1].second, Rat()};
    s.slope = make_rat(Int(s.y1 - s.y0), Int(s.x1 - s.x0));
    np.segments.push_back(s);
  }
  return np;
}

Rat valuation_bound(const HomogPoly& g, const Int& p) {
  const IntPoly h = taylor_shift(g.at_v1(), 1);
  if (h.degree() < 1) throw BoundUnavailableError("valuation_bound: form is constant in u");
  if (h.coeff(0) == 0) throw BoundUnavailableError("valuation_bound: g(1,1) = 0");
  const NewtonPolygon np = newton_polygon(h, p);
  Rat bound = padic_ord(h.lead(), p);
  for (const auto& s : np.segments) {
    if (!(s.slope > -1 && s.slope < 0)) {
      throw BoundUnavailableError("valuation_bound: slope " + to_string(s.slope) + " outside (-1, 0)");
    }
    bound += -s.slope * s.length();
  }
  return bound;
}

bool congruent_to_difference_power(const HomogPoly& g, const Int& p) {
  const unsigned d = g.degree();
  Int binom = 1;
  for (unsigned i = 0; i <= d; ++i) {
    // (u - v)^d = sum_i C(d,i) u^i (-v)^(d-i)
    const Int expected = ((d - i) % 2 == 0) ? binom : Int(-binom);
    if (!mpz_divisible_p(Int(g.coeffs()[i] - expected).get_mpz_t(), p.get_mpz_t())) return false;
    binom = binom * (d - i) / (i + 1);
  }
  return true;
}

// ---- searches ---------------------------------------------------------------

std::vector<PowerSolution> solve_power_of_p(const HomogPoly& g, const Int& p, unsigned k_max, long box,
                                            unsigned threads) {
  if (!is_prime(p)) throw ArgumentError("solve_power_of_p: " + to_string(p) + " is not prime");
  if (box < 2) throw ArgumentError("solve_power_of_p: box must be at least 2");
  if (g.is_zero()) throw ArgumentError("solve_power_of_p: zero form");
  const unsigned d = g.degree();
  const Int top = pow_int(p, k_max);
  const double top_d = top.get_d();
  std::vector<double> cd(d + 1), ca(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    cd[i] = g.coeffs()[i].get_d();
    ca[i] = std::fabs(cd[i]);
  }
  // Powers |t|^j and t^j for t in [-box, box].
  const std::size_t width = static_cast<std::size_t>(2 * box + 1);
  std::vector<double> pw(width * (d + 1));
  for (long t = -box; t <= box; ++t) {
    double x = 1;
    for (unsigned j = 0; j <= d; ++j) {
      pw[static_cast<std::size_t>(t + box) * (d + 1) + j] = x;
      x *= static_cast<double>(t);
    }
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, 64);
  std::atomic<long> next{-box};
  std::vector<std::vector<PowerSolution>> found(threads);
  auto worker = [&](unsigned id) {
    auto& out = found[id];
    for (long u = next++; u <= box; u = next++) {
      const double* pu = &pw[static_cast<std::size_t>(u + box) * (d + 1)];
      for (long v = -box; v <= box; ++v) {
        const double* pv = &pw[static_cast<std::size_t>(v + box) * (d + 1)];
        double val = 0, mag = 0;
        for (unsigned i = 0; i <= d; ++i) {
          const double mono = pu[i] * pv[d - i];
          val += cd[i] * mono;
          mag += ca[i] * std::fabs(mono);
        }
        // Rounding error of the float sum is far below 1e-12 * mag.
        if (std::fabs(val) > top_d + 1e-12 * mag + 1) continue;
        if (std::gcd(u, v) != 1) continue;
        const Int exact = g.eval(Int(u), Int(v));
        const auto k = p_power_exponent(exact, p);
        if (k && *k <= k_max) out.push_back({Int(u), Int(v), *k, sgn(exact)});
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
  for (auto& t : pool) t.join();

  std::vector<PowerSolution> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end(), [](const PowerSolution& a, const PowerSolution& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.sign != b.sign) return a.sign < b.sign;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return all;
}

CongruenceResult congruence_exclusion(const HomogPoly& g, const Int& p, unsigned threshold) {
  if (!is_prime(p)) throw ArgumentError("congruence_exclusion: " + to_string(p) + " is not prime");
  CongruenceResult res;
  res.applicable = congruent_to_difference_power(g, p);
  if (!res.applicable) return res;
  const Int mod_big = pow_int(p, threshold + 1);
  if (mod_big > 1 << 14) throw ArgumentError("congruence_exclusion: modulus too large for enumeration");
  const long mod = mod_big.get_si();
  const long pl = p.get_si();
  const unsigned d = g.degree();
  std::vector<long> c(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    Int r = g.coeffs()[i] % mod_big;
    if (r < 0) r += mod_big;
    c[i] = r.get_si();
  }
  std::vector<long> pu(d + 1), pv(d + 1);
  for (long u = 0; u < mod; ++u) {
    pu[0] = 1;
    for (unsigned j = 1; j <= d; ++j) pu[j] = pu[j - 1] * u % mod;
    for (long v = 0; v < mod; ++v) {
      if (u % pl == 0 && v % pl == 0) continue;
      pv[0] = 1;
      for (unsigned j = 1; j <= d; ++j) pv[j] = pv[j - 1] * v % mod;
      long s = 0;
      for (unsigned i = 0; i <= d; ++i) s = (s + c[i] * pu[i] % mod * pv[d - i]) % mod;
      if (s == 0) res.survivors.emplace_back(u, v);
    }
  }
  res.excluded = res.survivors.empty();
  return res;
}

}  // namespace tfc
