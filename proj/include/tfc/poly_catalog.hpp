#pragma once

// The explicit numerators, denominators and denominator factors of nR on
// the cubic for n = 2..5, as printed, plus the two forms behind the
// daylight construction. Forms are in (u, v) with coefficients indexed by
// the exponent of u.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfc/polytools.hpp"

namespace tfc {

struct CatalogEntry {
  std::string id;
  std::string role;
  std::optional<HomogPoly> form;  // absent for the univariate h entries
  IntPoly poly;                   // form(u, 1), or the univariate polynomial
};

const std::vector<CatalogEntry>& polynomial_catalog();
// Throws ArgumentError for an unknown id.
const CatalogEntry& catalog_entry(const std::string& id);
const HomogPoly& catalog_form(const std::string& id);

struct DenominatorSet {
  int n = 0;
  std::optional<HomogPoly> f;       // numerator of U_n
  std::optional<HomogPoly> fprime;  // numerator of V_n
  std::optional<HomogPoly> g;       // full denominator, when printed
  std::vector<std::string> factor_ids;
};

// n in 2..5; anything else throws ArgumentError (no symbolic generation).
DenominatorSet denominator_polys(int n);

struct IdentityCheck {
  int n = 0;
  unsigned samples = 0;
  unsigned agreed = 0;
  std::vector<std::string> failures;
  bool ok() const { return samples > 0 && agreed == samples; }
};

// Evaluates nR through the group law at integral points R = (u, v) on
// U^3 + V^3 = u^3 + v^3 and compares with the stored forms:
//   n = 3, 4: U_n / W_n = f/g and V_n / W_n = f'/g exactly;
//   n = 5:    g51(u,v) g52(u,v) = +-3^k W_5.
// Points come from a seeded generator, so the run is reproducible.
IdentityCheck check_multiplication_identity(int n, unsigned samples = 30, std::uint64_t seed = 20240601);

}  // namespace tfc
