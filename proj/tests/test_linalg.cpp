#include <doctest.h>

#include "fasla/linalg.hpp"
#include "generators.hpp"

using namespace fasla;

namespace {

// Independent oracle: plain rational Gaussian elimination, no Bareiss.
std::size_t naive_rank(Mat m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rat f = m.at(i, c) / m.at(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

Mat random_matrix(testgen::Rng& rng, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = rat(rng.pick(-4, 4), 1 + rng.pick(0, 2));
  return m;
}

}  // namespace

TEST_CASE("rank of identity and zero matrices") {
  CHECK(rank(Mat::identity(3)) == 3);
  CHECK(nullspace(Mat::identity(3)).empty());
  CHECK(rank(Mat(2, 5)) == 0);
  CHECK(nullspace(Mat(2, 5)).size() == 5);
}

TEST_CASE("rank-one matrix has the expected nullspace") {
  Mat m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(rank(m) == 1);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  // canonical basis vector is (-2, 1)
  CHECK(ns[0][0] == Rat(-2));
  CHECK(ns[0][1] == Rat(1));
}

TEST_CASE("bareiss rank agrees with naive elimination") {
  testgen::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng.pick(0, 5), cols = 1 + rng.pick(0, 5);
    const Mat m = random_matrix(rng, rows, cols);
    CHECK(rank(m) == naive_rank(m));
  }
}

TEST_CASE("rank plus nullity equals the column count") {
  testgen::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat m = random_matrix(rng, 1 + rng.pick(0, 4), 1 + rng.pick(0, 4));
    CHECK(rank(m) + nullspace(m).size() == m.cols());
    for (const Vec& v : nullspace(m)) CHECK((m * v).is_zero());
  }
}

TEST_CASE("inverse and solve") {
  testgen::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.pick(0, 3);
    const Mat m = random_matrix(rng, n, n);
    const auto inv = inverse(m);
    if (rank(m) < n) {
      CHECK(!inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Mat::identity(n));
    Vec b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = rng.small();
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);
  }
}

TEST_CASE("solve detects inconsistent systems") {
  Mat a(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  Vec b(2);
  b[0] = 1;
  b[1] = 2;
  CHECK(!solve(a, b).has_value());
  CHECK(!in_column_space(a, b));
  b[1] = 1;
  CHECK(in_column_space(a, b));
}

TEST_CASE("nilpotency and minimal polynomials") {
  Mat e(2, 2);
  e.at(0, 1) = 1;
  CHECK(is_nilpotent(e));
  const auto p = minimal_polynomial(e);  // t^2
  REQUIRE(p.size() == 3);
  CHECK(p[0] == 0);
  CHECK(p[1] == 0);
  CHECK(p[2] == 1);

  CHECK(!is_nilpotent(Mat::identity(2)));
  const auto q = minimal_polynomial(Mat::identity(3));  // t - 1
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Rat(-1));
  CHECK(q[1] == 1);
  CHECK(polynomial_str(q) == "t + -1");
}

TEST_CASE("minimal polynomial annihilates the matrix") {
  testgen::Rng rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + rng.pick(0, 3);
    const Mat m = random_matrix(rng, n, n);
    const auto p = minimal_polynomial(m);
    Mat acc(n, n);
    for (std::size_t d = 0; d < p.size(); ++d) acc = acc + power(m, d) * p[d];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("zero-dimensional edge cases") {
  CHECK(rank(Mat(0, 0)) == 0);
  CHECK(nullspace(Mat(0, 3)).size() == 3);
  CHECK(is_nilpotent(Mat(0, 0)));
  CHECK(inverse(Mat(0, 0)).has_value());
}
