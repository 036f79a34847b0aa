#include "fasla/algebra.hpp"

namespace fasla {

bool Tensor3::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = product.at(i, j, k);
  return v;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim)
    throw DimensionError("algebra product: vector dimension mismatch");
  Vec z(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) {
        if (product.at(i, j, k) == 0) continue;
        z[k] += f * product.at(i, j, k);
      }
    }
  }
  return z;
}

Mat left_mult_matrix(const Algebra& a, const Vec& x) {
  if (x.size() != a.dim)
    throw DimensionError("left_mult_matrix: vector dimension mismatch");
  Mat m(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        m.at(k, j) += x[i] * a.product.at(i, j, k);
  }
  return m;
}

Mat right_mult_matrix(const Algebra& a, const Vec& x) {
  if (x.size() != a.dim)
    throw DimensionError("right_mult_matrix: vector dimension mismatch");
  Mat m(a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t k = 0; k < a.dim; ++k)
        m.at(k, i) += a.product.at(i, j, k) * x[j];
  }
  return m;
}

Mat left_mult_basis(const Algebra& a, std::size_t i) {
  return left_mult_matrix(a, Vec::unit(a.dim, i));
}

Mat right_mult_basis(const Algebra& a, std::size_t i) {
  return right_mult_matrix(a, Vec::unit(a.dim, i));
}

Algebra commutator_algebra(const Algebra& a) {
  Algebra b(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        b.product.at(i, j, k) = a.product.at(i, j, k) - a.product.at(j, i, k);
  return b;
}

Rat SymplecticForm::eval(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw DimensionError("form evaluation: vector dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (gram.at(i, j) == 0 || y[j] == 0) continue;
      s += x[i] * gram.at(i, j) * y[j];
    }
  }
  return s;
}

bool SymplecticForm::is_skew() const {
  if (!gram.is_square()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (gram.at(i, j) != -gram.at(j, i)) return false;
  return true;
}

SymplecticForm standard_symplectic(std::size_t m) {
  Mat g(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    g.at(i, m + i) = 1;
    g.at(m + i, i) = -1;
  }
  return SymplecticForm(std::move(g));
}

std::vector<Vec> omega_perp(const SymplecticForm& omega,
                            const std::vector<Vec>& subspace) {
  const std::size_t n = omega.dim();
  for (const Vec& x : subspace)
    if (x.size() != n) throw DimensionError("omega_perp: vector dimension mismatch");
  if (subspace.empty()) {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < n; ++i) full.push_back(Vec::unit(n, i));
    return full;
  }
  Mat rows(subspace.size(), n);
  for (std::size_t r = 0; r < subspace.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      Rat s(0);
      for (std::size_t i = 0; i < n; ++i) s += subspace[r][i] * omega.gram.at(i, j);
      rows.at(r, j) = s;
    }
  return nullspace(rows);
}

namespace {

// Rows of the linear system "L_v = 0" (and/or "R_v = 0") in the unknown v.
std::vector<Vec> kernel_of_multiplications(const Algebra& a, bool left,
                                           bool right) {
  const std::size_t n = a.dim;
  std::vector<Vec> rows;
  if (left) {
    // (v . e_j)_k = sum_i v_i c[i][j][k]
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = a.product.at(i, j, k);
        rows.push_back(std::move(row));
      }
  }
  if (right) {
    // (e_i . v)_k = sum_j c[i][j][k] v_j
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = a.product.at(i, j, k);
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < n; ++i) full.push_back(Vec::unit(n, i));
    return full;
  }
  return nullspace(Mat::from_rows(rows));
}

}  // namespace

std::vector<Vec> two_sided_annihilator(const Algebra& a) {
  return kernel_of_multiplications(a, true, true);
}

std::vector<Vec> left_kernel(const Algebra& a) {
  return kernel_of_multiplications(a, true, false);
}

std::vector<Vec> right_kernel(const Algebra& a) {
  return kernel_of_multiplications(a, false, true);
}

Algebra conjugate(const Algebra& a, const Mat& p) {
  if (p.rows() != a.dim || p.cols() != a.dim)
    throw DimensionError("conjugate: basis matrix shape mismatch");
  auto pinv = inverse(p);
  if (!pinv) throw ValidationError("conjugate: basis matrix is singular");
  Algebra b(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const Vec prod = *pinv * a.mul(p.col(i), p.col(j));
      for (std::size_t k = 0; k < a.dim; ++k) b.product.at(i, j, k) = prod[k];
    }
  return b;
}

SymplecticForm conjugate(const SymplecticForm& w, const Mat& p) {
  return SymplecticForm(p.transpose() * w.gram * p);
}

FaslaTriple conjugate(const FaslaTriple& t, const Mat& p) {
  return {conjugate(t.algebra, p), conjugate(t.omega, p)};
}

}  // namespace fasla
