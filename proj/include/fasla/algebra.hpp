#pragma once

#include <vector>

#include "fasla/linalg.hpp"

namespace fasla {

/// Structure-constant 3-tensor: e_i . e_j = sum_k c[i][j][k] e_k.
class Tensor3 {
 public:
  Tensor3() : n_(0) {}
  explicit Tensor3(std::size_t n) : n_(n), c_(n * n * n, Rat(0)) {}

  std::size_t dim() const { return n_; }
  Rat& at(std::size_t i, std::size_t j, std::size_t k) {
    return c_.at((i * n_ + j) * n_ + k);
  }
  const Rat& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_.at((i * n_ + j) * n_ + k);
  }
  bool operator==(const Tensor3& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool is_zero() const;

 private:
  std::size_t n_;
  std::vector<Rat> c_;
};

/// Finite-dimensional nonassociative algebra over the rationals. No identity
/// is assumed at construction; left symmetry, Jacobi and so on are decided
/// by the verifier.
struct Algebra {
  Algebra() = default;
  explicit Algebra(std::size_t n) : dim(n), product(n) {}
  Algebra(std::size_t n, Tensor3 c) : dim(n), product(std::move(c)) {}

  std::size_t dim = 0;
  Tensor3 product;

  /// e_i . e_j as a coordinate vector.
  Vec basis_product(std::size_t i, std::size_t j) const;
  Vec mul(const Vec& x, const Vec& y) const;

  bool operator==(const Algebra& o) const {
    return dim == o.dim && product == o.product;
  }
};

/// Matrix of y -> x.y in the standard basis; linear in x.
Mat left_mult_matrix(const Algebra& a, const Vec& x);

/// Matrix of y -> y.x in the standard basis; linear in x.
Mat right_mult_matrix(const Algebra& a, const Vec& x);

Mat left_mult_basis(const Algebra& a, std::size_t i);
Mat right_mult_basis(const Algebra& a, std::size_t i);

/// The candidate Lie bracket [x,y] = x.y - y.x as an algebra.
Algebra commutator_algebra(const Algebra& a);

/// Skew bilinear form given by its Gram matrix, omega(x,y) = x^T G y.
struct SymplecticForm {
  SymplecticForm() = default;
  explicit SymplecticForm(Mat g) : gram(std::move(g)) {}

  Mat gram;

  std::size_t dim() const { return gram.rows(); }
  Rat eval(const Vec& x, const Vec& y) const;
  bool is_skew() const;
  bool operator==(const SymplecticForm& o) const { return gram == o.gram; }
};

/// Standard symplectic Gram matrix [[0, I], [-I, 0]] on dimension 2m.
SymplecticForm standard_symplectic(std::size_t half_dim);

/// An algebra-with-form pair; the FASLA axioms are decided by
/// verifier::check_fasla, not assumed here.
struct FaslaTriple {
  Algebra algebra;
  SymplecticForm omega;

  std::size_t dim() const { return algebra.dim; }
  bool operator==(const FaslaTriple& o) const {
    return algebra == o.algebra && omega == o.omega;
  }
};

/// Basis of { y : omega(x, y) = 0 for all x in span(subspace) }.
std::vector<Vec> omega_perp(const SymplecticForm& omega,
                            const std::vector<Vec>& subspace);

/// Basis of { v : L_v = 0 and R_v = 0 } (two-sided annihilator).
std::vector<Vec> two_sided_annihilator(const Algebra& a);
std::vector<Vec> left_kernel(const Algebra& a);   // { v : L_v = 0 }
std::vector<Vec> right_kernel(const Algebra& a);  // { v : R_v = 0 }

/// Rewrites the algebra in the basis given by the columns of P.
Algebra conjugate(const Algebra& a, const Mat& basis_columns);
SymplecticForm conjugate(const SymplecticForm& w, const Mat& basis_columns);
FaslaTriple conjugate(const FaslaTriple& t, const Mat& basis_columns);

}  // namespace fasla
