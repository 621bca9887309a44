#include "tfc/arith.hpp"

#include <algorithm>
#include <map>

#include "tfc/errors.hpp"

namespace tfc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 pow_mod(u64 a, u64 e, u64 n) {
  u64 r = 1;
  a %= n;
  while (e) {
    if (e & 1) r = mul_mod(r, a, n);
    a = mul_mod(a, a, n);
    e >>= 1;
  }
  return r;
}

// First 12 primes as witnesses: deterministic for n < 3.3 * 10^24.
bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool fits_u64(const Int& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Int& n) {
  // mpz_get_ui is only 64 bits on LP64, which is what we build for.
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(n.get_mpz_t());
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
Int brent_rho(const Int& n, unsigned long c, u64 max_iterations) {
  constexpr u64 kBatch = 128;
  Int y = 2, x, ys, q = 1, g = 1, tmp;
  u64 r = 1;
  u64 iterations = 0;
  auto step = [&](Int& v) {
    v = v * v + c;
    v %= n;
  };
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) step(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 lim = std::min(kBatch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        step(y);
        tmp = x - y;
        q = (q * abs(tmp)) % n;
      }
      g = gcd(q, n);
      k += lim;
      iterations += lim;
      if (iterations > max_iterations && g == 1) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    // Batch overshot: walk back one step at a time.
    do {
      step(ys);
      tmp = x - ys;
      g = gcd(abs(tmp), n);
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

void add_factor(std::map<Int, unsigned>& acc, const Int& p, unsigned e) {
  acc[p] += e;
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw ParseError("malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::string to_string(const Int& value) { return value.get_str(10); }
std::string to_string(const Rat& value) { return value.get_str(10); }

Int abs_int(const Int& x) { return abs(x); }

Int pow_int(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

long padic_ord(const Int& x, const Int& p) {
  if (x == 0) throw UndefinedValuationError("ord_p(0) is undefined");
  if (!is_prime(p)) throw ArgumentError("padic_ord: " + to_string(p) + " is not prime");
  Int rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long padic_ord(const Rat& x, const Int& p) {
  if (x == 0) throw UndefinedValuationError("ord_p(0) is undefined");
  return padic_ord(x.get_num(), p) - padic_ord(x.get_den(), p);
}

Primality primality(const Int& n) {
  if (n < 2) return Primality::composite;
  if (fits_u64(n)) return miller_rabin_u64(to_u64(n)) ? Primality::prime : Primality::composite;
  // GMP >= 6.2 runs BPSW followed by extra Miller-Rabin rounds.
  switch (mpz_probab_prime_p(n.get_mpz_t(), 24)) {
    case 0:
      return Primality::composite;
    case 2:
      return Primality::prime;
    default:
      return Primality::probable_prime;
  }
}

bool is_prime(const Int& n) { return primality(n) != Primality::composite; }

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 1'000'000;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<std::uint32_t> out;
    out.reserve(78'498);
    for (std::uint32_t i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::optional<PrimePower> is_prime_power(const Int& n) {
  Int a = abs(n);
  if (a <= 1) throw ArgumentError("is_prime_power: |n| must exceed 1");
  for (std::uint32_t p : small_primes()) {
    if (mpz_cmp_ui(a.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    if (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
      Int rest;
      const auto e = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), Int(p).get_mpz_t());
      if (rest == 1) return PrimePower{Int(p), static_cast<unsigned>(e)};
      return std::nullopt;
    }
  }
  // No prime factor below 10^6 (or a itself is small and prime), so any
  // root exponent k satisfies 10^6^k <= a.
  if (is_prime(a)) return PrimePower{a, 1};
  const std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  for (unsigned k = 2; k <= bits / 19 + 1; ++k) {
    Int root;
    if (mpz_root(root.get_mpz_t(), a.get_mpz_t(), k) != 0 && is_prime(root)) return PrimePower{root, k};
  }
  return std::nullopt;
}

Int Factorization::value() const {
  Int v = cofactor;
  for (const auto& f : factors) v *= pow_int(f.prime, f.exponent);
  return sign < 0 ? Int(-v) : v;
}

Factorization factor(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw ArgumentError("factor: zero has no factorization");
  Factorization out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  Int rem = abs(n);
  std::map<Int, unsigned> acc;

  for (std::uint32_t p : small_primes()) {
    if (p > budget.trial_bound) break;
    if (mpz_cmp_ui(rem.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      const auto e = mpz_remove(rem.get_mpz_t(), rem.get_mpz_t(), Int(p).get_mpz_t());
      add_factor(acc, Int(p), static_cast<unsigned>(e));
    }
  }

  Int leftover = 1;
  std::vector<std::pair<Int, unsigned>> work;
  if (rem > 1) work.emplace_back(rem, 1);
  while (!work.empty()) {
    auto [c, mult] = work.back();
    work.pop_back();
    const Primality pr = primality(c);
    if (pr != Primality::composite) {
      if (pr == Primality::probable_prime) out.probable = true;
      add_factor(acc, c, mult);
      continue;
    }
    if (mpz_perfect_power_p(c.get_mpz_t())) {
      const std::size_t bits = mpz_sizeinbase(c.get_mpz_t(), 2);
      bool split = false;
      for (unsigned k = static_cast<unsigned>(bits); k >= 2 && !split; --k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k) != 0) {
          work.emplace_back(root, mult * k);
          split = true;
        }
      }
      if (split) continue;
    }
    Int d = 0;
    for (unsigned attempt = 0; attempt < budget.rho_attempts && d == 0; ++attempt) {
      d = brent_rho(c, 1 + attempt, budget.rho_iterations);
    }
    if (d == 0) {
      leftover *= pow_int(c, mult);
      continue;
    }
    // The pieces need not be coprime; exponents are merged per prime.
    work.emplace_back(d, mult);
    work.emplace_back(Int(c / d), mult);
  }

  // Merge leftover with any found primes it still shares (cannot happen for
  // a correct split, but the listed primes must be coprime to the cofactor).
  for (auto& [p, e] : acc) {
    if (leftover > 1 && mpz_divisible_p(leftover.get_mpz_t(), p.get_mpz_t())) {
      e += static_cast<unsigned>(mpz_remove(leftover.get_mpz_t(), leftover.get_mpz_t(), p.get_mpz_t()));
    }
  }
  for (const auto& [p, e] : acc) out.factors.push_back({p, e});
  out.cofactor = leftover;
  out.complete = leftover == 1;
  return out;
}

Int coprime_part(Int n, const Int& with) {
  n = abs(n);
  if (n == 0) throw ArgumentError("coprime_part: zero");
  for (Int g = gcd(n, with); g != 1; g = gcd(n, g)) n /= g;
  return n;
}

bool is_cube_free(const Int& m) {
  if (m == 0) return false;
  const Factorization f = factor(m);
  for (const auto& pf : f.factors) {
    if (pf.exponent >= 3) return false;
  }
  if (f.complete) return true;
  // Cofactor has no prime below the trial bound; a cube of such a prime
  // can only hide in it if the cofactor is large enough to hold one.
  Int root;
  if (mpz_root(root.get_mpz_t(), f.cofactor.get_mpz_t(), 3) != 0) return false;
  if (f.cofactor < Int(1'000'000) * 1'000'000 * 1'000'000) return true;
  throw PrecisionError("is_cube_free: could not certify " + to_string(m));
}

}  // namespace tfc
