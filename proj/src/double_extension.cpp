#include "fasla/double_extension.hpp"

#include <sstream>

namespace fasla {

ExtensionParams ExtensionParams::zero(std::size_t n) {
  ExtensionParams p;
  p.u = Mat(n, n);
  p.D = Mat(n, n);
  p.x0 = Vec(n);
  p.z0 = Vec(n);
  return p;
}

bool ExtensionParams::operator==(const ExtensionParams& o) const {
  return u == o.u && D == o.D && x0 == o.x0 && z0 == o.z0 && beta == o.beta &&
         lambda == o.lambda && mu == o.mu;
}

Mat omega_adjoint(const Mat& m, const Mat& gram) {
  auto ginv = inverse(gram);
  if (!ginv) throw ValidationError("omega_adjoint: degenerate form");
  return *ginv * m.transpose() * gram;
}

namespace {

void require_shapes(const FaslaTriple& base, const ExtensionParams& p) {
  const std::size_t n = base.dim();
  if (p.u.rows() != n || p.u.cols() != n || p.D.rows() != n ||
      p.D.cols() != n || p.x0.size() != n || p.z0.size() != n)
    throw DimensionError("extension data shape does not match the base");
  if (base.omega.dim() != n)
    throw DimensionError("base form dimension mismatch");
}

CheckResult simple(const std::string& name, bool ok) {
  return CheckResult{name, ok, std::nullopt, std::nullopt};
}

}  // namespace

VerificationReport validate_extension(const FaslaTriple& base,
                                      const ExtensionParams& p) {
  require_shapes(base, p);
  const std::size_t n = base.dim();
  VerificationReport rep;

  {
    const VerificationReport inner = check_fasla(base);
    CheckResult c = simple("base-fasla", inner.all_passed());
    if (!c.passed) {
      for (const CheckResult& ic : inner.checks)
        if (!ic.passed) {
          c.witness = ic.witness ? ic.witness : std::vector<std::size_t>{};
          c.discrepancy = ic.discrepancy ? ic.discrepancy : Rat(1);
          break;
        }
    }
    rep.add(std::move(c));
  }

  {
    CheckResult c = simple("lambda-mu-relation",
                           p.lambda == p.mu || 2 * p.lambda == p.mu);
    if (!c.passed) {
      c.witness = std::vector<std::size_t>{};
      c.discrepancy = (p.lambda - p.mu) * (2 * p.lambda - p.mu);
    }
    rep.add(std::move(c));
  }

  // u([x,y]) = L_x u(y) - L_y u(x) on basis pairs
  {
    CheckResult c = simple("u-lie-1-cocycle", true);
    const Algebra br = commutator_algebra(base.algebra);
    for (std::size_t i = 0; i < n && c.passed; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec lhs = p.u * br.basis_product(i, j);
        const Vec rhs =
            base.algebra.mul(Vec::unit(n, i), p.u.col(j)) -
            base.algebra.mul(Vec::unit(n, j), p.u.col(i));
        const Vec d = lhs - rhs;
        if (!d.is_zero()) {
          c.passed = false;
          c.witness = std::vector<std::size_t>{i, j};
          for (std::size_t k = 0; k < n; ++k)
            if (d[k] != 0) {
              c.discrepancy = d[k];
              break;
            }
          break;
        }
      }
    rep.add(std::move(c));
  }

  // D+u in sp(B, omega'): G(D+u) symmetric
  {
    const Mat s = base.omega.gram * (p.D + p.u);
    CheckResult c = simple("d-action-symplectic", s == s.transpose());
    if (!c.passed) {
      for (std::size_t i = 0; i < n && !c.witness; ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (s.at(i, j) != s.at(j, i)) {
            c.witness = std::vector<std::size_t>{i, j};
            c.discrepancy = s.at(i, j) - s.at(j, i);
            break;
          }
    }
    rep.add(std::move(c));
  }

  // D(x)y + xD(y) - D(xy) = u(xy) - xu(y) on basis pairs
  {
    CheckResult c = simple("twist-derivation-defect", true);
    for (std::size_t i = 0; i < n && c.passed; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec ei = Vec::unit(n, i), ej = Vec::unit(n, j);
        const Vec xy = base.algebra.basis_product(i, j);
        const Vec lhs = base.algebra.mul(p.D.col(i), ej) +
                        base.algebra.mul(ei, p.D.col(j)) - p.D * xy;
        const Vec rhs = p.u * xy - base.algebra.mul(ei, p.u.col(j));
        const Vec d = lhs - rhs;
        if (!d.is_zero()) {
          c.passed = false;
          c.witness = std::vector<std::size_t>{i, j};
          for (std::size_t k = 0; k < n; ++k)
            if (d[k] != 0) {
              c.discrepancy = d[k];
              break;
            }
          break;
        }
      }
    rep.add(std::move(c));
  }

  // the residual form is a coboundary realized by x0
  {
    const OmegaUpRoutes routes =
        omega_up_routes(base, p.u, p.D, p.lambda, p.x0);
    CheckResult c = simple("residual-form-coboundary",
                           routes.coboundary_membership &&
                               routes.commutator_identity);
    if (!c.passed) {
      const Mat defect = p.u * p.D - p.D * p.u - p.u * p.u - p.u * p.lambda +
                         right_mult_matrix(base.algebra, p.x0);
      c.witness = std::vector<std::size_t>{};
      c.discrepancy = Rat(1);
      for (std::size_t i = 0; i < n && *c.discrepancy == 1; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (defect.at(i, j) != 0) {
            c.witness = std::vector<std::size_t>{i, j};
            c.discrepancy = defect.at(i, j);
            break;
          }
    }
    rep.add(std::move(c));
  }

  // D*(x0-z0) - 2 u*(x0) - 2 lambda (x0-z0) + (lambda-mu) z0 = 0
  {
    CheckResult c = simple("translation-constraint", true);
    if (n > 0) {
      const Mat dstar = omega_adjoint(p.D, base.omega.gram);
      const Mat ustar = omega_adjoint(p.u, base.omega.gram);
      const Vec w = p.x0 - p.z0;
      const Vec lhs = dstar * w - Rat(2) * (ustar * p.x0) - Rat(2) * p.lambda * w +
                      (p.lambda - p.mu) * p.z0;
      if (!lhs.is_zero()) {
        c.passed = false;
        for (std::size_t k = 0; k < n; ++k)
          if (lhs[k] != 0) {
            c.witness = std::vector<std::size_t>{k};
            c.discrepancy = lhs[k];
            break;
          }
      }
    }
    rep.add(std::move(c));
  }

  // (lambda-mu)(u+u*) - 2 u u* = L_x(x0-z0) + R_x*(x0-z0) columnwise
  {
    CheckResult c = simple("adjoint-constraint", true);
    if (n > 0) {
      const Mat ustar = omega_adjoint(p.u, base.omega.gram);
      const Mat lhs_m =
          (p.lambda - p.mu) * (p.u + ustar) - Rat(2) * (p.u * ustar);
      const Vec w = p.x0 - p.z0;
      for (std::size_t i = 0; i < n; ++i) {
        const Vec lhs = lhs_m.col(i);
        const Mat rx = right_mult_basis(base.algebra, i);
        const Vec rhs = base.algebra.mul(Vec::unit(n, i), w) +
                        omega_adjoint(rx, base.omega.gram) * w;
        const Vec d = lhs - rhs;
        if (!d.is_zero()) {
          c.passed = false;
          c.witness = std::vector<std::size_t>{i};
          for (std::size_t k = 0; k < n; ++k)
            if (d[k] != 0) {
              c.discrepancy = d[k];
              break;
            }
          break;
        }
      }
    }
    rep.add(std::move(c));
  }

  return rep;
}

FaslaTriple double_extend(const FaslaTriple& base, const ExtensionParams& p) {
  const VerificationReport rep = validate_extension(base, p);
  if (!rep.all_passed()) {
    std::ostringstream os;
    os << "double_extend: validation failed:";
    for (const CheckResult& c : rep.checks)
      if (!c.passed) os << " " << c.name;
    throw ValidationError(os.str());
  }

  const std::size_t n = base.dim();
  const std::size_t big = n + 2;
  const std::size_t E = 0, D = n + 1;  // e first, d last
  auto blk = [](std::size_t i) { return i + 1; };

  Algebra a(big);
  // e.d = (lambda-mu) e ; d.e = lambda e ; d.d = beta e + x0 - lambda d
  a.product.at(E, D, E) = p.lambda - p.mu;
  a.product.at(D, E, E) = p.lambda;
  a.product.at(D, D, E) = p.beta;
  for (std::size_t k = 0; k < n; ++k) a.product.at(D, D, blk(k)) = p.x0[k];
  a.product.at(D, D, D) = -p.lambda;

  const Mat du = p.D + p.u;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec ej = Vec::unit(n, j);
    // d.x = omega'(x0, x) e + (D+u)(x)
    a.product.at(D, blk(j), E) = base.omega.eval(p.x0, ej);
    for (std::size_t k = 0; k < n; ++k)
      a.product.at(D, blk(j), blk(k)) = du.at(k, j);
    // x.d = omega'(x0-z0, x) e + u(x)
    a.product.at(blk(j), D, E) = base.omega.eval(p.x0 - p.z0, ej);
    for (std::size_t k = 0; k < n; ++k)
      a.product.at(blk(j), D, blk(k)) = p.u.at(k, j);
  }
  // x.y = omega'(u(x), y) e + xy
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a.product.at(blk(i), blk(j), E) =
          base.omega.eval(p.u.col(i), Vec::unit(n, j));
      for (std::size_t k = 0; k < n; ++k)
        a.product.at(blk(i), blk(j), blk(k)) = base.algebra.product.at(i, j, k);
    }

  Mat gram(big, big);
  gram.at(E, D) = 1;
  gram.at(D, E) = -1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram.at(blk(i), blk(j)) = base.omega.gram.at(i, j);

  return {std::move(a), SymplecticForm(std::move(gram))};
}

std::vector<Vec> find_degenerate_ideal_vectors(const FaslaTriple& t) {
  return two_sided_annihilator(t.algebra);
}

BilateralIdealCheck check_bilateral_ideal(const FaslaTriple& t, const Vec& e) {
  const std::size_t n = t.dim();
  if (e.size() != n) throw DimensionError("check_bilateral_ideal: bad vector");
  if (e.is_zero())
    throw ValidationError("check_bilateral_ideal: zero vector spans no ideal");

  BilateralIdealCheck out;
  const std::vector<Vec> line{e};
  out.ideal_is_bilateral = true;
  for (std::size_t i = 0; i < n && out.ideal_is_bilateral; ++i) {
    const Vec ei = Vec::unit(n, i);
    if (!in_span(line, t.algebra.mul(ei, e)) ||
        !in_span(line, t.algebra.mul(e, ei)))
      out.ideal_is_bilateral = false;
  }

  const std::vector<Vec> perp = omega_perp(t.omega, line);
  out.perp_is_bilateral = true;
  for (std::size_t i = 0; i < n && out.perp_is_bilateral; ++i) {
    const Vec ei = Vec::unit(n, i);
    for (const Vec& y : perp) {
      if (!in_span(perp, t.algebra.mul(ei, y)) ||
          !in_span(perp, t.algebra.mul(y, ei))) {
        out.perp_is_bilateral = false;
        break;
      }
    }
  }
  return out;
}

namespace {

Vec coords_in_basis(const Mat& basis_inverse, const Vec& v) {
  return basis_inverse * v;
}

void expect(bool cond, const char* what) {
  if (!cond)
    throw ValidationError(std::string("reduce_by_ideal: ") + what);
}

}  // namespace

ReductionResult reduce_by_ideal(const FaslaTriple& t, const Vec& e,
                                const Vec& d) {
  const std::size_t big = t.dim();
  if (e.size() != big || d.size() != big)
    throw DimensionError("reduce_by_ideal: vector dimension mismatch");
  expect(t.omega.eval(e, d) == 1, "omega(e, d) must equal 1");
  const BilateralIdealCheck bc = check_bilateral_ideal(t, e);
  expect(bc.ideal_is_bilateral, "span{e} is not a bilateral ideal");
  expect(bc.perp_is_bilateral, "the orthogonal of span{e} is not bilateral");
  expect(check_fasla(t).all_passed(), "input does not satisfy the axioms");

  const std::vector<Vec> block = omega_perp(t.omega, {e, d});
  const std::size_t n = block.size();
  expect(n + 2 == big, "orthogonal complement has unexpected dimension");

  std::vector<Vec> cols;
  cols.push_back(e);
  for (const Vec& b : block) cols.push_back(b);
  cols.push_back(d);
  const Mat P = Mat::from_columns(cols);
  auto Pinv_opt = inverse(P);
  expect(Pinv_opt.has_value(), "(e, complement, d) is not a basis");
  const Mat& Pinv = *Pinv_opt;

  const std::size_t E = 0, DD = n + 1;
  auto split = [&](const Vec& v) {
    const Vec c = coords_in_basis(Pinv, v);
    Vec mid(n);
    for (std::size_t k = 0; k < n; ++k) mid[k] = c[k + 1];
    struct Parts {
      Rat e_part, d_part;
      Vec block;
    };
    return Parts{c[E], c[DD], std::move(mid)};
  };

  // base form: restriction of omega to the block
  Mat gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram.at(i, j) = t.omega.eval(block[i], block[j]);
  const SymplecticForm omega_base{gram};

  ExtensionParams p = ExtensionParams::zero(n);

  // d.e = lambda e
  {
    const auto de = split(t.algebra.mul(d, e));
    expect(de.block.is_zero() && de.d_part == 0, "d.e is not a multiple of e");
    p.lambda = de.e_part;
  }
  // e.d = (lambda - mu) e
  {
    const auto ed = split(t.algebra.mul(e, d));
    expect(ed.block.is_zero() && ed.d_part == 0, "e.d is not a multiple of e");
    p.mu = p.lambda - ed.e_part;
  }
  // d.d = beta e + x0 - lambda d
  {
    const auto dd = split(t.algebra.mul(d, d));
    expect(dd.d_part == -p.lambda, "d.d has an unexpected d component");
    p.beta = dd.e_part;
    p.x0 = dd.block;
  }
  // x.d = omega'(x0 - z0, x) e + u(x) determines u and x0 - z0
  {
    Vec pairing(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto xd = split(t.algebra.mul(block[i], d));
      expect(xd.d_part == 0, "x.d has a d component");
      for (std::size_t k = 0; k < n; ++k) p.u.at(k, i) = xd.block[k];
      pairing[i] = xd.e_part;
    }
    // omega'(x0 - z0, e_i) = pairing_i, so G'^T (x0 - z0) = pairing
    auto w = solve(gram.transpose(), pairing);
    expect(w.has_value(), "base form is degenerate");
    p.z0 = p.x0 - *w;
  }
  // d.x = omega'(x0, x) e + (D+u)(x) determines D
  {
    for (std::size_t j = 0; j < n; ++j) {
      const auto dx = split(t.algebra.mul(d, block[j]));
      expect(dx.d_part == 0, "d.x has a d component");
      expect(dx.e_part == omega_base.eval(p.x0, Vec::unit(n, j)),
             "d.x pairing does not match x0");
      for (std::size_t k = 0; k < n; ++k)
        p.D.at(k, j) = dx.block[k] - p.u.at(k, j);
    }
  }

  // base product and the pairing row of x.y
  Algebra base_alg(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto xy = split(t.algebra.mul(block[i], block[j]));
      expect(xy.d_part == 0, "x.y has a d component");
      expect(xy.e_part == omega_base.eval(p.u.col(i), Vec::unit(n, j)),
             "x.y pairing does not match u");
      for (std::size_t k = 0; k < n; ++k)
        base_alg.product.at(i, j, k) = xy.block[k];
    }

  // e annihilates everything except e.d
  for (std::size_t i = 0; i < n; ++i) {
    expect(t.algebra.mul(e, block[i]).is_zero(), "e.x is nonzero");
    expect(t.algebra.mul(block[i], e).is_zero(), "x.e is nonzero");
  }
  expect(t.algebra.mul(e, e).is_zero(), "e.e is nonzero");

  ReductionResult out{{std::move(base_alg), omega_base}, std::move(p), P};
  expect(check_fasla(out.base).all_passed(), "quotient violates the axioms");
  expect(validate_extension(out.base, out.params).all_passed(),
         "extracted data fails validation");
  expect(conjugate(t, P) == double_extend(out.base, out.params),
         "re-extension does not reproduce the input");
  return out;
}

Decomposition decompose_to_zero(const FaslaTriple& t) {
  Decomposition out;
  FaslaTriple cur = t;
  while (cur.dim() > 0) {
    // candidate directions, most constrained first; each is still verified
    std::vector<Vec> candidates;
    auto push_all = [&candidates](const std::vector<Vec>& vs) {
      for (const Vec& v : vs) candidates.push_back(v);
    };
    push_all(two_sided_annihilator(cur.algebra));
    push_all(left_kernel(cur.algebra));
    push_all(right_kernel(cur.algebra));
    for (std::size_t i = 0; i < cur.dim(); ++i)
      candidates.push_back(Vec::unit(cur.dim(), i));

    bool advanced = false;
    for (const Vec& e : candidates) {
      if (e.is_zero()) continue;
      const BilateralIdealCheck bc = check_bilateral_ideal(cur, e);
      if (!bc.ideal_is_bilateral || !bc.perp_is_bilateral) continue;
      // d: first basis vector pairing nontrivially with e, scaled so that
      // omega(e, d) = 1
      std::optional<Vec> d;
      for (std::size_t k = 0; k < cur.dim(); ++k) {
        const Vec ek = Vec::unit(cur.dim(), k);
        const Rat w = cur.omega.eval(e, ek);
        if (w != 0) {
          d = ek * (1 / w);
          break;
        }
      }
      if (!d) continue;
      try {
        ReductionResult step = reduce_by_ideal(cur, e, *d);
        cur = step.base;
        out.steps.push_back(std::move(step));
        advanced = true;
        break;
      } catch (const Error&) {
        continue;  // candidate looked bilateral but the reduction refused it
      }
    }
    if (!advanced) {
      out.reached_zero = false;
      out.stuck = cur;
      out.note =
          "no admissible direction among annihilator, kernel and basis "
          "candidates; the search is a heuristic, not a nonexistence proof";
      return out;
    }
  }
  out.reached_zero = true;
  return out;
}

}  // namespace fasla
