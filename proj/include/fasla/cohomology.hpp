#pragma once

#include "fasla/verifier.hpp"

namespace fasla {

/// Bimodule over a left-symmetric algebra: matrices of the left action
/// x.v and the right action v#x, indexed by the base basis.
struct Bimodule {
  Algebra base;
  std::size_t module_dim = 0;
  std::vector<Mat> left_action;
  std::vector<Mat> right_action;

  /// Trivial actions on K^m.
  static Bimodule trivial(const Algebra& a, std::size_t m = 1);
  /// V = base, left action L, right action R.
  static Bimodule canonical(const Algebra& a);
  /// V = base*, x.b = -b o ad_x, b#y = b o R_y (the cotangent bimodule).
  static Bimodule coadjoint_dual(const Algebra& a);
  /// V = base*, left L*_x = -t(L_x), right t(L'_y) for a second product
  /// `circ`; the coefficient module of the twisted cotangent build.
  static Bimodule dual_pair(const Algebra& a, const Tensor3& circ);
};

/// p-linear map with values in the module, stored on basis tuples in
/// lexicographic order with the module index last. Degree 0 is a plain
/// module vector.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t degree, std::size_t n, std::size_t m);

  std::size_t degree() const { return degree_; }
  std::size_t base_dim() const { return n_; }
  std::size_t module_dim() const { return m_; }
  std::size_t flat_size() const { return coeffs_.size(); }

  Rat& coeff(std::size_t flat) { return coeffs_.at(flat); }
  const Rat& coeff(std::size_t flat) const { return coeffs_.at(flat); }

  /// Module value at a pure basis tuple (tuple.size() == degree).
  Vec value_at(const std::vector<std::size_t>& tuple) const;
  void set_value(const std::vector<std::size_t>& tuple, const Vec& v);

  Vec flatten() const;
  static Cochain from_flat(std::size_t degree, std::size_t n, std::size_t m,
                           const Vec& flat);

  bool is_zero() const;
  bool operator==(const Cochain& o) const;

 private:
  std::size_t tuple_offset(const std::vector<std::size_t>& tuple) const;
  std::size_t degree_ = 0, n_ = 0, m_ = 0;
  std::vector<Rat> coeffs_;
};

/// Highest input degree the differential accepts (delta_3 exists so that
/// delta_3 o delta_2 = 0 can be tested).
inline constexpr std::size_t kMaxDifferentialDegree = 3;

/// The four-sum differential of the left-symmetric cochain complex,
/// delta_p : C^p -> C^{p+1}. Empty index ranges vanish, so delta_0 = 0.
Cochain nijenhuis_differential(const Bimodule& b, const Cochain& f);

/// Matrix of delta_p in the lexicographic cochain bases, assembled column
/// by column on basis cochains.
Mat differential_matrix(const Bimodule& b, std::size_t p);

struct CohomologyDims {
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t cohomology = 0;
};

/// (dim Z^p, dim B^p, dim H^p); B^0 = {0} by convention.
CohomologyDims cohomology_dims(const Bimodule& b, std::size_t p);

/// Basis of { u : u([x,y]) = L_x u(y) - L_y u(x) }.
std::vector<Mat> lie_1cocycle_space(const FaslaTriple& t);

/// Matrix of z -> (x -> L_x z) into vec(u); its rank is dim B^1_L.
Mat lie_1coboundary_map(const FaslaTriple& t);

std::size_t lie_h1_dim(const FaslaTriple& t);

/// The scalar 2-cochain f(x,y) = omega(u(x), y).
Cochain cocycle_correspondence(const FaslaTriple& t, const Mat& u);

/// Decides whether (x,y) -> omega'((uD - Du - u^2 - lambda u)(x), y) is a
/// scalar 2-coboundary realized by x0. Two independent routes are computed
/// (column-space membership of the delta_1 matrix, and the commutator
/// identity [u,D] = u^2 + lambda u - R_{x0}); the result is their
/// conjunction.
bool omega_up_is_coboundary(const FaslaTriple& base, const Mat& u, const Mat& d,
                            const Rat& lambda, const Vec& x0);

struct OmegaUpRoutes {
  bool coboundary_membership = false;
  bool commutator_identity = false;
};
OmegaUpRoutes omega_up_routes(const FaslaTriple& base, const Mat& u,
                              const Mat& d, const Rat& lambda, const Vec& x0);

/// Representative-level map u -> theta(u), theta(u)(x)(y) =
/// omega(u(x),y) - omega(u(y),x). No quantitative claims are attached.
Mat theta_map(const FaslaTriple& t, const Mat& u);

}  // namespace fasla
