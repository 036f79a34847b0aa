#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "fasla/rational.hpp"

namespace fasla {

/// Dense exact-rational vector. Dimensions are checked on every operation.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : e_(n, Rat(0)) {}
  Vec(std::initializer_list<Rat> xs) : e_(xs) {}

  std::size_t size() const { return e_.size(); }
  Rat& operator[](std::size_t i) { return e_.at(i); }
  const Rat& operator[](std::size_t i) const { return e_.at(i); }

  bool is_zero() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec operator*(const Rat& s) const;
  Vec& operator+=(const Vec& o);
  bool operator==(const Vec& o) const { return e_ == o.e_; }

  static Vec unit(std::size_t n, std::size_t i);

 private:
  std::vector<Rat> e_;
};

Vec operator*(const Rat& s, const Vec& v);

/// Dense exact-rational matrix, row major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n);
  static Mat from_columns(const std::vector<Vec>& cols);
  static Mat from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return e_.at(i * cols_ + j); }
  const Rat& at(std::size_t i, std::size_t j) const {
    return e_.at(i * cols_ + j);
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Mat transpose() const;
  Rat trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator*(const Rat& s) const;
  bool operator==(const Mat& o) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

Mat operator*(const Rat& s, const Mat& m);

std::ostream& operator<<(std::ostream& os, const Vec& v);
std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Exact rank via fraction-free (Bareiss) elimination.
std::size_t rank(const Mat& m);

/// Canonical nullspace basis (from the reduced row echelon form, one basis
/// vector per free column, ordered by free column index).
std::vector<Vec> nullspace(const Mat& m);

struct RrefResult {
  Mat m;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

/// One exact solution of A x = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

bool in_column_space(const Mat& a, const Vec& b);

/// True when some member of `span` is outside the column span of `basis`.
bool spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b);
bool in_span(const std::vector<Vec>& basis, const Vec& v);

Mat power(const Mat& m, std::size_t k);

/// M^dim == 0, decided exactly.
bool is_nilpotent(const Mat& m);

/// Monic minimal polynomial, coefficients in ascending degree order.
std::vector<Rat> minimal_polynomial(const Mat& m);

std::string polynomial_str(const std::vector<Rat>& ascending_coeffs);

}  // namespace fasla
