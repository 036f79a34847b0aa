#pragma once

#include <optional>

#include "fasla/cohomology.hpp"

namespace fasla {

/// Data of a double extension over a base triple B: a Lie 1-cocycle u, a
/// matrix D with D+u symplectic, two base vectors and three scalars.
struct ExtensionParams {
  Mat u;
  Mat D;
  Vec x0;
  Vec z0;
  Rat beta = 0;
  Rat lambda = 0;
  Rat mu = 0;

  static ExtensionParams zero(std::size_t base_dim);
  bool operator==(const ExtensionParams& o) const;
};

/// Adjoint of M with respect to the form: G^{-1} M^T G.
Mat omega_adjoint(const Mat& m, const Mat& gram);

/// Decides every admissibility condition of the construction, one named
/// report line per condition.
VerificationReport validate_extension(const FaslaTriple& base,
                                      const ExtensionParams& p);

/// Builds the (2n+2)-dimensional triple on the basis (e, b_1..b_2n, d);
/// refuses to build when validation fails.
FaslaTriple double_extend(const FaslaTriple& base, const ExtensionParams& p);

/// Basis of the two-sided annihilator { e : L_e = R_e = 0 }; every nonzero
/// member spans a one-dimensional bilateral ideal with null product.
std::vector<Vec> find_degenerate_ideal_vectors(const FaslaTriple& t);

struct BilateralIdealCheck {
  bool ideal_is_bilateral = false;
  bool perp_is_bilateral = false;
};

/// Whether span{e} and its omega-orthogonal are bilateral ideals.
BilateralIdealCheck check_bilateral_ideal(const FaslaTriple& t, const Vec& e);

struct ReductionResult {
  FaslaTriple base;
  ExtensionParams params;
  /// Columns are (e, complement basis, d) in the original coordinates;
  /// conjugating the original triple by this matrix reproduces
  /// double_extend(base, params).
  Mat basis_change;
};

/// Inverse of double_extend along the hyperbolic pair (e, d); requires
/// span{e} and its orthogonal to be bilateral and omega(e, d) = 1.
ReductionResult reduce_by_ideal(const FaslaTriple& t, const Vec& e,
                                const Vec& d);

struct Decomposition {
  bool reached_zero = false;
  std::vector<ReductionResult> steps;
  std::optional<FaslaTriple> stuck;
  std::string note;
};

/// Greedy chain of reductions. Candidate directions are taken from the
/// two-sided annihilator, the kernels of L and R, and the standard basis,
/// each verified by check_bilateral_ideal before use; the first admissible
/// candidate in that order wins. Failure reports the stuck triple and is
/// not a proof that no reduction exists.
Decomposition decompose_to_zero(const FaslaTriple& t);

}  // namespace fasla
