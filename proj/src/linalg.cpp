#include "fasla/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace fasla {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw DimensionError(msg);
}

}  // namespace

bool Vec::is_zero() const {
  for (const Rat& x : e_)
    if (x != 0) return false;
  return true;
}

Vec Vec::operator+(const Vec& o) const {
  require(size() == o.size(), "vector size mismatch");
  Vec r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = e_[i] + o.e_[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  require(size() == o.size(), "vector size mismatch");
  Vec r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = e_[i] - o.e_[i];
  return r;
}

Vec Vec::operator-() const {
  Vec r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = -e_[i];
  return r;
}

Vec Vec::operator*(const Rat& s) const {
  Vec r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = e_[i] * s;
  return r;
}

Vec& Vec::operator+=(const Vec& o) {
  require(size() == o.size(), "vector size mismatch");
  for (std::size_t i = 0; i < size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Vec Vec::unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec operator*(const Rat& s, const Vec& v) { return v * s; }

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat(0, 0);
  Mat m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == m.rows(), "ragged column list");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols(), "ragged row list");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat Mat::trace() const {
  require(is_square(), "trace of non-square matrix");
  Rat t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const Rat& x : e_)
    if (x != 0) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  require(cols_ == o.rows_, "matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

Vec Mat::operator*(const Vec& v) const {
  require(cols_ == v.size(), "matrix-vector shape mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s(0);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) == 0 || v[j] == 0) continue;
      s += at(i, j) * v[j];
    }
    r[i] = s;
  }
  return r;
}

Mat Mat::operator*(const Rat& s) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Mat operator*(const Rat& s, const Mat& m) { return m * s; }

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << rat_str(v[i]);
  return os << ")";
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << rat_str(m.at(i, j));
  }
  return os << "]";
}

namespace {

struct Echelon {
  Mat m;  // row echelon with integral entries
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free elimination: rows are first scaled to integers, then reduced
// with the Bareiss update, which keeps every intermediate entry integral and
// bounds coefficient growth.
Echelon bareiss(Mat m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t i = 0; i < rows; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    if (l != 1) {
      const Rat s(l);
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) *= s;
    }
  }
  std::vector<std::size_t> pivots;
  Rat prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const Mat& m) { return bareiss(m).pivot_cols.size(); }

RrefResult rref(const Mat& m) {
  Echelon e = bareiss(m);
  Mat& a = e.m;
  const std::size_t cols = a.cols();
  for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
    const std::size_t c = e.pivot_cols[r];
    const Rat piv = a.at(r, c);
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) /= piv;
    for (std::size_t i = 0; i < r; ++i) {
      const Rat f = a.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
  }
  return {std::move(e.m), std::move(e.pivot_cols)};
}

std::vector<Vec> nullspace(const Mat& m) {
  const std::size_t cols = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
      v[r.pivot_cols[p]] = -r.m.at(p, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> inverse(const Mat& m) {
  require(m.is_square(), "inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Mat(0, 0);
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.pivot_cols.size() != n || r.pivot_cols[n - 1] != n - 1)
    return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  require(a.rows() == b.size(), "solve shape mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  for (std::size_t c : r.pivot_cols)
    if (c == a.cols()) return std::nullopt;  // inconsistent
  Vec x(a.cols());
  for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
    x[r.pivot_cols[p]] = r.m.at(p, a.cols());
  return x;
}

bool in_column_space(const Mat& a, const Vec& b) {
  return solve(a, b).has_value();
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  return in_column_space(Mat::from_columns(basis), v);
}

bool spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  for (const Vec& v : a)
    if (!in_span(b, v)) return false;
  for (const Vec& v : b)
    if (!in_span(a, v)) return false;
  return true;
}

Mat power(const Mat& m, std::size_t k) {
  require(m.is_square(), "power of non-square matrix");
  Mat r = Mat::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

bool is_nilpotent(const Mat& m) {
  require(m.is_square(), "nilpotency of non-square matrix");
  Mat p = Mat::identity(m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    p = p * m;
    if (p.is_zero()) return true;
  }
  return m.rows() == 0;
}

std::vector<Rat> minimal_polynomial(const Mat& m) {
  require(m.is_square(), "minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {Rat(1)};
  const std::size_t dim = n * n;
  auto flatten = [dim, n](const Mat& a) {
    Vec v(dim);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
    return v;
  };
  std::vector<Vec> powers{flatten(Mat::identity(n))};
  Mat p = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * m;
    const Vec vk = flatten(p);
    const Mat prev = Mat::from_columns(powers);
    if (auto coeffs = solve(prev, vk)) {
      // M^k = sum_i c_i M^i, so the minimal polynomial is t^k - sum c_i t^i.
      std::vector<Rat> poly(k + 1, Rat(0));
      poly[k] = 1;
      for (std::size_t i = 0; i < k; ++i) poly[i] = -(*coeffs)[i];
      return poly;
    }
    powers.push_back(vk);
  }
  throw Error("minimal polynomial search exceeded the dimension bound");
}

std::string polynomial_str(const std::vector<Rat>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = c.size(); d-- > 0;) {
    if (c[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0 || c[d] != 1) os << rat_str(c[d]);
    if (d > 0) {
      if (c[d] != 1) os << "*";
      os << "t";
      if (d > 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace fasla
