#include <doctest.h>

#include "fasla/algebra.hpp"
#include "generators.hpp"

using namespace fasla;

namespace {

// basis (e, d): d.d = beta e
Algebra squaring_line(const Rat& beta) {
  Algebra a(2);
  a.product.at(1, 1, 0) = beta;
  return a;
}

Tensor3 random_tensor(testgen::Rng& rng, std::size_t n) {
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = rng.small();
  return t;
}

}  // namespace

TEST_CASE("left multiplication of the zero algebra vanishes") {
  const Algebra a(3);
  Vec x(3);
  x[0] = 5;
  x[2] = rat(-7, 3);
  CHECK(left_mult_matrix(a, x).is_zero());
  CHECK(right_mult_matrix(a, x).is_zero());
}

TEST_CASE("left multiplication of the squaring line") {
  const Algebra a = squaring_line(Rat(4));
  const Mat l = left_mult_matrix(a, Vec::unit(2, 1));  // L_d
  // d maps to 4e, e maps to 0
  CHECK(l * Vec::unit(2, 1) == Vec{Rat(4), Rat(0)});
  CHECK((l * Vec::unit(2, 0)).is_zero());
}

TEST_CASE("right multiplication matches the nonabelian family table") {
  // d.d = beta e - mu d, d.e = mu e, e.d = 0: R_d(d) = beta e - mu d, R_d(e) = 0
  const Rat beta = rat(3, 2), mu(2);
  const FaslaTriple t = dim2_family(beta, mu, mu);
  const Mat r = right_mult_matrix(t.algebra, Vec::unit(2, 1));
  CHECK(r * Vec::unit(2, 1) == Vec{beta, -mu});
  CHECK((r * Vec::unit(2, 0)).is_zero());
}

TEST_CASE("multiplication matrices agree with the tensor contraction") {
  testgen::Rng rng(21);
  const std::size_t n = 3;
  const Algebra a(n, random_tensor(rng, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec expected(n);
      for (std::size_t k = 0; k < n; ++k) expected[k] = a.product.at(i, j, k);
      CHECK(left_mult_matrix(a, Vec::unit(n, i)) * Vec::unit(n, j) == expected);
      CHECK(right_mult_matrix(a, Vec::unit(n, j)) * Vec::unit(n, i) == expected);
    }
}

TEST_CASE("multiplication matrices are linear in the vector argument") {
  testgen::Rng rng(22);
  const std::size_t n = 3;
  const Algebra a(n, random_tensor(rng, n));
  const Vec e1 = Vec::unit(n, 1), e2 = Vec::unit(n, 2);
  CHECK(left_mult_matrix(a, e1 + e2) ==
        left_mult_matrix(a, e1) + left_mult_matrix(a, e2));
  for (int trial = 0; trial < 10; ++trial) {
    Vec x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.small();
      y[i] = rng.small();
    }
    const Rat s = rng.small();
    CHECK(left_mult_matrix(a, x + s * y) ==
          left_mult_matrix(a, x) + left_mult_matrix(a, y) * s);
    CHECK(right_mult_matrix(a, x + s * y) ==
          right_mult_matrix(a, x) + right_mult_matrix(a, y) * s);
  }
}

TEST_CASE("commutator of a commutative product is zero") {
  testgen::Rng rng(23);
  Algebra a(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const Rat v = rng.small();
        a.product.at(i, j, k) = v;
        a.product.at(j, i, k) = v;
      }
  CHECK(commutator_algebra(a).product.is_zero());
}

TEST_CASE("commutator of the nonabelian family is [d,e] = mu e") {
  const Rat mu(3);
  const Algebra br = commutator_algebra(dim2_family(Rat(0), mu, mu).algebra);
  CHECK(br.basis_product(1, 0) == Vec{mu, Rat(0)});   // [d,e]
  CHECK(br.basis_product(0, 1) == Vec{-mu, Rat(0)});  // [e,d]
  CHECK(br.basis_product(0, 0).is_zero());
  CHECK(br.basis_product(1, 1).is_zero());
}

TEST_CASE("commutator tensor is antisymmetric") {
  testgen::Rng rng(24);
  const Algebra a(3, random_tensor(rng, 3));
  const Algebra br = commutator_algebra(a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(br.product.at(i, j, k) == -br.product.at(j, i, k));
}

TEST_CASE("orthogonal of the zero subspace is everything") {
  const SymplecticForm w = standard_symplectic(2);
  CHECK(omega_perp(w, {}).size() == 4);
}

TEST_CASE("a line is Lagrangian in dimension two") {
  const SymplecticForm w = standard_symplectic(1);
  const auto perp = omega_perp(w, {Vec::unit(2, 0)});
  REQUIRE(perp.size() == 1);
  CHECK(in_span(perp, Vec::unit(2, 0)));
}

TEST_CASE("the standard Lagrangian half-space is self-orthogonal") {
  const SymplecticForm w = standard_symplectic(2);
  const std::vector<Vec> half{Vec::unit(4, 0), Vec::unit(4, 1)};
  const auto perp = omega_perp(w, half);
  REQUIRE(perp.size() == 2);
  CHECK(spans_equal(perp, half));
}

TEST_CASE("double orthogonal returns the span") {
  testgen::Rng rng(25);
  const SymplecticForm w = standard_symplectic(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vec> sub;
    for (int q = 0; q < 2; ++q) {
      Vec v(4);
      for (std::size_t i = 0; i < 4; ++i) v[i] = rng.small();
      if (!v.is_zero()) sub.push_back(v);
    }
    if (sub.empty()) continue;
    const auto perp = omega_perp(w, sub);
    CHECK(perp.size() + rank(Mat::from_columns(sub)) == 4);
    const auto back = omega_perp(w, perp);
    for (const Vec& v : sub) CHECK(in_span(back, v));
    CHECK(back.size() == rank(Mat::from_columns(sub)));
  }
}

TEST_CASE("two-sided annihilator of the abelian algebra is everything") {
  CHECK(two_sided_annihilator(Algebra(3)).size() == 3);
}

TEST_CASE("conjugation by the identity is a no-op") {
  testgen::Rng rng(26);
  const Algebra a(3, random_tensor(rng, 3));
  CHECK(conjugate(a, Mat::identity(3)) == a);
}

TEST_CASE("conjugation transports products") {
  testgen::Rng rng(27);
  const std::size_t n = 3;
  const Algebra a(n, random_tensor(rng, n));
  Mat p(n, n);
  p.at(0, 0) = 1;
  p.at(1, 0) = 2;
  p.at(1, 1) = 1;
  p.at(2, 2) = rat(1, 3);
  const Algebra b = conjugate(a, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      CHECK(p * b.basis_product(i, j) == a.mul(p.col(i), p.col(j)));
}

TEST_CASE("dimension mismatches are rejected") {
  const Algebra a(2);
  CHECK_THROWS_AS(left_mult_matrix(a, Vec(3)), DimensionError);
  CHECK_THROWS_AS(right_mult_matrix(a, Vec(1)), DimensionError);
  const SymplecticForm w = standard_symplectic(1);
  CHECK_THROWS_AS(omega_perp(w, {Vec(3)}), DimensionError);
}
