#pragma once

#include <optional>

#include "fasla/cohomology.hpp"

namespace fasla {

/// Input of the twisted cotangent construction: a left-symmetric base, a
/// commutative companion product and a dual-valued 2-cochain with
/// f[i][j][k] = f(e_i, e_j)(e_k).
struct CotangentData {
  Algebra base;
  Tensor3 circ;
  Tensor3 f;

  static CotangentData plain(const Algebra& base);  // circ = 0, f = 0
  bool operator==(const CotangentData& o) const {
    return base == o.base && circ == o.circ && f == o.f;
  }
};

/// One named report line per admissibility condition: base left-symmetric,
/// circ commutative, the mixed compatibility of the two products, the dual
/// bimodule identities, the cocycle condition on f and the symmetry of f in
/// its last two arguments.
VerificationReport validate_cotangent(const CotangentData& d);

/// The 2n-dimensional triple on B* + B, duals first, with the blockwise
/// product and the pairing form; refuses to build when validation fails.
FaslaTriple twisted_cotangent(const CotangentData& d);

/// The circ = 0, f = 0 specialization. The product keeps both halves
/// parallel: B.B in B, B.B* in B*, B*.g = 0.
FaslaTriple hess_product(const Algebra& base);

struct LagrangianSplit {
  std::vector<Vec> ideal_basis;
  CotangentData data;
  /// Columns are (dual block, section block) in the original coordinates;
  /// conjugating the input by this matrix reproduces twisted_cotangent(data).
  Mat basis_change;
};

/// Searches for a Lagrangian bilateral ideal among a restricted, fully
/// deterministic candidate list (the leading half of the coordinates, the
/// annihilator span, and greedy isotropic sums of small ideal closures).
/// A nullopt result means "not found", never "nonexistent".
std::optional<LagrangianSplit> detect_lagrangian_ideal(const FaslaTriple& t);

/// Right multiplications of the built algebra at every basis vector,
/// cross-checked against the blockwise closed forms.
std::vector<Mat> cotangent_right_mults(const CotangentData& d);

}  // namespace fasla
