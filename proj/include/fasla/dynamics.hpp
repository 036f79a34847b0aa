#pragma once

#include "fasla/cotangent.hpp"
#include "fasla/double_extension.hpp"

namespace fasla {

/// Element (Q, F) of the affine symplectic group of (g, omega); F is
/// expected to preserve omega exactly.
struct AffineSymplecticElement {
  Vec translation;
  Mat linear;

  bool operator==(const AffineSymplecticElement& o) const {
    return translation == o.translation && linear == o.linear;
  }
};

struct CompletenessReport {
  bool unimodular = false;
  std::vector<Rat> traces_L;
  std::vector<Rat> traces_R;
  std::vector<Rat> traces_ad;
  /// Sampled falsifier: nilpotency of R at basis vectors and at seeded
  /// random vectors with entries in {-2..2}. The verdict itself is the
  /// linear trace criterion.
  bool right_mults_nilpotent = false;
  bool complete = false;
};

/// Geodesic completeness of the induced connection: complete iff the
/// algebra is unimodular; tr(L_x) = 0 is asserted on every basis vector.
CompletenessReport completeness(const FaslaTriple& t, unsigned long seed = 0,
                                std::size_t samples = 8);

/// The unique product with omega(x.y, z) = -omega(y, [x,z]); the result is
/// left-symmetric with commutator equal to the bracket, and is
/// omega-compatible exactly when the bracket is abelian (both asserted).
Algebra chu_connection(const Algebra& bracket, const SymplecticForm& omega);

/// Exact truncated exponential pair
///   Q = sum_{k>=1} (1/k!) L_x^{k-1}(x),  F = sum_{k>=0} (1/k!) L_x^k,
/// defined when L_x is nilpotent; otherwise throws NonNilpotentError with
/// the minimal polynomial of L_x as the witness.
AffineSymplecticElement etale_representation(const FaslaTriple& t, const Vec& x,
                                             std::size_t order_cap = 0);

/// F^T G F = G exactly.
bool symplectic_check(const AffineSymplecticElement& el,
                      const SymplecticForm& omega);

/// (Q_a + F_a Q_b, F_a F_b).
AffineSymplecticElement compose_affine(const AffineSymplecticElement& a,
                                       const AffineSymplecticElement& b);

/// Basis of { b : L_b = 0 and R_b = 0 }; each member generates the family
/// (t b, Id) of central translations in the representation.
std::vector<Vec> central_translations(const FaslaTriple& t);

/// Basis of { b : L_b = 0 }; each member generates a one-parameter family
/// of pure translations (t b, Id), central or not.
std::vector<Vec> translation_directions(const FaslaTriple& t);

struct BiinvariantReport {
  bool left_mults_anticommute = false;
  bool left_mults_square_zero = false;
  bool algebra_nilpotent = false;
  std::vector<std::size_t> power_dims;  // dims of g, g^2, g^3, ...
  bool has_central_translation = false;
  bool decomposes_to_zero = false;
  bool all() const {
    return left_mults_anticommute && left_mults_square_zero &&
           algebra_nilpotent && has_central_translation && decomposes_to_zero;
  }
};

/// Structure theory available when the product is associative; throws on
/// non-associative input.
BiinvariantReport biinvariant_analysis(const FaslaTriple& t);

struct CotangentCompletenessReport {
  /// R_a and L'_a nilpotent for all basis and sampled a in the base.
  bool base_side_nilpotent = false;
  /// Right multiplications of the built algebra nilpotent on basis and
  /// sampled vectors.
  bool built_side_nilpotent = false;
  bool sides_agree = false;
  bool base_complete = false;   // trace criterion on the base
  bool built_complete = false;  // trace criterion on the built algebra
};

/// The completeness equivalence for the twisted cotangent: both sides are
/// computed independently and compared.
CotangentCompletenessReport cotangent_completeness(const CotangentData& d,
                                                   unsigned long seed = 0,
                                                   std::size_t samples = 8);

/// Deterministic sample vectors with entries in {-2..2}.
std::vector<Vec> sample_vectors(std::size_t dim, std::size_t count,
                                unsigned long seed);

}  // namespace fasla
