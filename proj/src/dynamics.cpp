#include "fasla/dynamics.hpp"

#include <random>

namespace fasla {

std::vector<Vec> sample_vectors(std::size_t dim, std::size_t count,
                                unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> out;
  for (std::size_t s = 0; s < count; ++s) {
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i)
      v[i] = Rat(static_cast<long>(rng() % 5) - 2);
    out.push_back(std::move(v));
  }
  return out;
}

CompletenessReport completeness(const FaslaTriple& t, unsigned long seed,
                                std::size_t samples) {
  if (!check_fasla(t).all_passed())
    throw ValidationError("completeness: input does not satisfy the axioms");
  const std::size_t n = t.dim();
  CompletenessReport rep;
  rep.unimodular = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Mat l = left_mult_basis(t.algebra, i);
    const Mat r = right_mult_basis(t.algebra, i);
    rep.traces_L.push_back(l.trace());
    rep.traces_R.push_back(r.trace());
    rep.traces_ad.push_back(l.trace() - r.trace());
    if (rep.traces_ad.back() != 0) rep.unimodular = false;
    if (rep.traces_L.back() != 0)
      throw Error("completeness: tr(L_x) must vanish on a valid triple");
  }
  rep.complete = rep.unimodular;

  rep.right_mults_nilpotent = true;
  for (std::size_t i = 0; i < n && rep.right_mults_nilpotent; ++i)
    if (!is_nilpotent(right_mult_basis(t.algebra, i)))
      rep.right_mults_nilpotent = false;
  for (const Vec& v : sample_vectors(n, samples, seed)) {
    if (!rep.right_mults_nilpotent) break;
    if (!is_nilpotent(right_mult_matrix(t.algebra, v)))
      rep.right_mults_nilpotent = false;
  }
  if (rep.right_mults_nilpotent != rep.complete)
    throw Error("completeness: nilpotency sampling contradicts the verdict");
  return rep;
}

Algebra chu_connection(const Algebra& bracket, const SymplecticForm& omega) {
  const std::size_t n = bracket.dim;
  if (omega.dim() != n)
    throw DimensionError("chu_connection: form dimension mismatch");
  if (!check_jacobi(bracket).all_passed())
    throw ValidationError("chu_connection: input is not a Lie bracket");
  // for a genuine bracket the commutator doubles it, so compare directly
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (bracket.product.at(i, j, k) != -bracket.product.at(j, i, k))
          throw ValidationError("chu_connection: bracket is not antisymmetric");
  if (!check_nondegenerate(omega))
    throw ValidationError("chu_connection: degenerate form");
  if (!check_scalar_2cocycle(bracket, omega).all_passed())
    throw ValidationError("chu_connection: form is not a 2-cocycle");

  auto ginv = inverse(omega.gram);
  Algebra a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // solve omega(v, .) = -omega(e_j, [e_i, .]):  G^T v = c
      Vec c(n);
      for (std::size_t k = 0; k < n; ++k)
        c[k] = -omega.eval(Vec::unit(n, j), bracket.basis_product(i, k));
      const Vec v = -(*ginv * c);  // G^T = -G
      for (std::size_t k = 0; k < n; ++k) a.product.at(i, j, k) = v[k];
    }

  if (!check_left_symmetric(a).all_passed())
    throw Error("chu_connection: output is not left-symmetric");
  if (!(commutator_algebra(a) == bracket))
    throw Error("chu_connection: commutator does not match the bracket");
  const bool compatible = check_compatibility(a, omega).all_passed();
  const bool abelian = bracket.product.is_zero();
  if (compatible != abelian)
    throw Error("chu_connection: compatibility must match commutativity");
  return a;
}

AffineSymplecticElement etale_representation(const FaslaTriple& t, const Vec& x,
                                             std::size_t order_cap) {
  const std::size_t n = t.dim();
  if (x.size() != n)
    throw DimensionError("etale_representation: vector dimension mismatch");
  if (!check_fasla(t).all_passed())
    throw ValidationError("etale_representation: input does not satisfy the axioms");

  const Mat l = left_mult_matrix(t.algebra, x);
  if (!is_nilpotent(l)) {
    const std::string poly = polynomial_str(minimal_polynomial(l));
    throw NonNilpotentError(
        "etale_representation: L_x is not nilpotent (exact exponential "
        "undefined); minimal polynomial " + poly,
        poly);
  }

  // nilpotency index, at most n
  std::size_t index = 0;
  {
    Mat p = Mat::identity(n);
    while (!p.is_zero()) {
      p = p * l;
      ++index;
    }
  }
  if (order_cap != 0 && index > order_cap)
    throw Error("etale_representation: order cap below the nilpotency index");

  AffineSymplecticElement el{Vec(n), Mat(n, n)};
  Mat pw = Mat::identity(n);
  Rat kfact(1);
  el.linear = pw;  // k = 0 term of Exp
  for (std::size_t k = 1; k <= index; ++k) {
    kfact /= Rat(static_cast<long>(k));  // now 1/k!
    el.translation += kfact * (pw * x);  // (1/k!) L^{k-1} x
    pw = pw * l;
    if (k < index) el.linear = el.linear + kfact * pw;
  }
  return el;
}

bool symplectic_check(const AffineSymplecticElement& el,
                      const SymplecticForm& omega) {
  if (el.linear.rows() != omega.dim() || el.linear.cols() != omega.dim())
    throw DimensionError("symplectic_check: shape mismatch");
  return el.linear.transpose() * omega.gram * el.linear == omega.gram;
}

AffineSymplecticElement compose_affine(const AffineSymplecticElement& a,
                                       const AffineSymplecticElement& b) {
  if (a.linear.cols() != b.translation.size())
    throw DimensionError("compose_affine: shape mismatch");
  return {a.translation + a.linear * b.translation, a.linear * b.linear};
}

std::vector<Vec> central_translations(const FaslaTriple& t) {
  return two_sided_annihilator(t.algebra);
}

std::vector<Vec> translation_directions(const FaslaTriple& t) {
  return left_kernel(t.algebra);
}

BiinvariantReport biinvariant_analysis(const FaslaTriple& t) {
  if (!check_associative(t.algebra))
    throw ValidationError("biinvariant_analysis: product is not associative");
  const std::size_t n = t.dim();
  BiinvariantReport rep;

  rep.left_mults_anticommute = true;
  std::vector<Mat> lefts;
  for (std::size_t i = 0; i < n; ++i) lefts.push_back(left_mult_basis(t.algebra, i));
  for (std::size_t i = 0; i < n && rep.left_mults_anticommute; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(lefts[i] * lefts[j] + lefts[j] * lefts[i]).is_zero()) {
        rep.left_mults_anticommute = false;
        break;
      }
  rep.left_mults_square_zero = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!(lefts[i] * lefts[i]).is_zero()) {
      rep.left_mults_square_zero = false;
      break;
    }

  // descending chain of power ideals g, g^2, g^3, ...
  std::vector<Vec> cur;
  for (std::size_t i = 0; i < n; ++i) cur.push_back(Vec::unit(n, i));
  rep.power_dims.push_back(cur.size());
  while (!cur.empty()) {
    std::vector<Vec> next;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec ei = Vec::unit(n, i);
      for (const Vec& v : cur) {
        next.push_back(t.algebra.mul(ei, v));
        next.push_back(t.algebra.mul(v, ei));
      }
    }
    // canonical basis of the span
    std::vector<Vec> basis;
    if (!next.empty()) {
      RrefResult r = rref(Mat::from_rows(next));
      for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
        basis.push_back(r.m.row(p));
    }
    if (basis.size() == cur.size() && !basis.empty()) {
      rep.power_dims.push_back(basis.size());
      rep.algebra_nilpotent = false;
      break;  // chain stabilized above zero
    }
    rep.power_dims.push_back(basis.size());
    cur = std::move(basis);
    if (cur.empty()) {
      rep.algebra_nilpotent = true;
      break;
    }
  }
  if (n == 0) rep.algebra_nilpotent = true;

  rep.has_central_translation = !central_translations(t).empty() || n == 0;
  rep.decomposes_to_zero = decompose_to_zero(t).reached_zero;
  return rep;
}

CotangentCompletenessReport cotangent_completeness(const CotangentData& d,
                                                   unsigned long seed,
                                                   std::size_t samples) {
  const VerificationReport val = validate_cotangent(d);
  if (!val.all_passed())
    throw ValidationError("cotangent_completeness: invalid data");
  const std::size_t n = d.base.dim;
  const Algebra circ_alg(n, d.circ);
  const FaslaTriple built = twisted_cotangent(d);

  CotangentCompletenessReport rep;

  rep.base_side_nilpotent = true;
  auto base_test = [&](const Vec& a) {
    return is_nilpotent(right_mult_matrix(d.base, a)) &&
           is_nilpotent(left_mult_matrix(circ_alg, a));
  };
  for (std::size_t i = 0; i < n && rep.base_side_nilpotent; ++i)
    if (!base_test(Vec::unit(n, i))) rep.base_side_nilpotent = false;
  for (const Vec& v : sample_vectors(n, samples, seed)) {
    if (!rep.base_side_nilpotent) break;
    if (!base_test(v)) rep.base_side_nilpotent = false;
  }

  rep.built_side_nilpotent = true;
  for (std::size_t i = 0; i < 2 * n && rep.built_side_nilpotent; ++i)
    if (!is_nilpotent(right_mult_basis(built.algebra, i)))
      rep.built_side_nilpotent = false;
  for (const Vec& v : sample_vectors(2 * n, samples, seed + 1)) {
    if (!rep.built_side_nilpotent) break;
    if (!is_nilpotent(right_mult_matrix(built.algebra, v)))
      rep.built_side_nilpotent = false;
  }

  rep.sides_agree = rep.base_side_nilpotent == rep.built_side_nilpotent;

  auto trace_complete = [](const Algebra& a) {
    for (std::size_t i = 0; i < a.dim; ++i)
      if (right_mult_basis(a, i).trace() != 0) return false;
    return true;
  };
  rep.base_complete = trace_complete(d.base);
  rep.built_complete = trace_complete(built.algebra);
  return rep;
}

}  // namespace fasla
