#pragma once

#include <map>

#include "fasla/dynamics.hpp"

namespace fasla {

/// The two-dimensional family on basis (e, d): d.d = beta e - lambda d,
/// d.e = lambda e, e.d = (lambda - mu) e, omega(e, d) = 1. Requires
/// lambda = mu or lambda = mu/2; identical to extending the zero base.
FaslaTriple dim2_family(const Rat& beta, const Rat& lambda, const Rat& mu);

/// The even-dimensional family: extension of the abelian base
/// (K^{2n-2}, 0, standard form) by u = 0, z0 = x0 and D symplectic.
/// Requires D in sp, and lambda = mu or (lambda = mu/2 with x0 = 0).
FaslaTriple even_dim_family(std::size_t n, const Mat& D, const Rat& mu,
                            const Rat& lambda, const Rat& beta, const Vec& x0);

struct CatalogEntry {
  std::string name;
  FaslaTriple triple;
  std::map<std::string, std::string> expected;
  std::string note;
  /// Builder data kept for structural re-checks.
  std::optional<CotangentData> cotangent_data;
};

/// Re-runs the axioms and every expected annotation of the entry.
VerificationReport verify_catalog_entry(const CatalogEntry& entry);

/// The built-in instances: four two-dimensional representatives, two
/// even-dimensional ones, the plain cotangent of the nonabelian
/// two-dimensional algebra, and one twisted cotangent with a nonzero
/// symmetric cocycle. Every entry is re-verified before being returned.
std::vector<CatalogEntry> builtin_suite();

}  // namespace fasla
