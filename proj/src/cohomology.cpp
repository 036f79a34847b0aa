#include "fasla/cohomology.hpp"

namespace fasla {

Bimodule Bimodule::trivial(const Algebra& a, std::size_t m) {
  Bimodule b{a, m, {}, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    b.left_action.emplace_back(m, m);
    b.right_action.emplace_back(m, m);
  }
  return b;
}

Bimodule Bimodule::canonical(const Algebra& a) {
  Bimodule b{a, a.dim, {}, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    b.left_action.push_back(left_mult_basis(a, i));
    b.right_action.push_back(right_mult_basis(a, i));
  }
  return b;
}

Bimodule Bimodule::coadjoint_dual(const Algebra& a) {
  Bimodule b{a, a.dim, {}, {}};
  const Algebra br = commutator_algebra(a);
  for (std::size_t i = 0; i < a.dim; ++i) {
    b.left_action.push_back(-(left_mult_basis(br, i).transpose()));
    b.right_action.push_back(right_mult_basis(a, i).transpose());
  }
  return b;
}

Bimodule Bimodule::dual_pair(const Algebra& a, const Tensor3& circ) {
  if (circ.dim() != a.dim)
    throw DimensionError("dual_pair: second product dimension mismatch");
  const Algebra c(a.dim, circ);
  Bimodule b{a, a.dim, {}, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    b.left_action.push_back(-(left_mult_basis(a, i).transpose()));
    b.right_action.push_back(left_mult_basis(c, i).transpose());
  }
  return b;
}

Cochain::Cochain(std::size_t degree, std::size_t n, std::size_t m)
    : degree_(degree), n_(n), m_(m) {
  std::size_t size = m;
  for (std::size_t i = 0; i < degree; ++i) {
    if (n == 0) {
      size = (degree > 0) ? 0 : m;
      break;
    }
    size *= n;
  }
  coeffs_.assign(size, Rat(0));
}

std::size_t Cochain::tuple_offset(const std::vector<std::size_t>& t) const {
  if (t.size() != degree_) throw DimensionError("cochain tuple arity mismatch");
  std::size_t off = 0;
  for (std::size_t i : t) {
    if (i >= n_) throw DimensionError("cochain tuple index out of range");
    off = off * n_ + i;
  }
  return off * m_;
}

Vec Cochain::value_at(const std::vector<std::size_t>& t) const {
  const std::size_t off = tuple_offset(t);
  Vec v(m_);
  for (std::size_t k = 0; k < m_; ++k) v[k] = coeffs_[off + k];
  return v;
}

void Cochain::set_value(const std::vector<std::size_t>& t, const Vec& v) {
  if (v.size() != m_) throw DimensionError("cochain value dimension mismatch");
  const std::size_t off = tuple_offset(t);
  for (std::size_t k = 0; k < m_; ++k) coeffs_[off + k] = v[k];
}

Vec Cochain::flatten() const {
  Vec v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  return v;
}

Cochain Cochain::from_flat(std::size_t degree, std::size_t n, std::size_t m,
                           const Vec& flat) {
  Cochain c(degree, n, m);
  if (flat.size() != c.coeffs_.size())
    throw DimensionError("cochain flat size mismatch");
  for (std::size_t i = 0; i < c.coeffs_.size(); ++i) c.coeffs_[i] = flat[i];
  return c;
}

bool Cochain::is_zero() const {
  for (const Rat& x : coeffs_)
    if (x != 0) return false;
  return true;
}

bool Cochain::operator==(const Cochain& o) const {
  return degree_ == o.degree_ && n_ == o.n_ && m_ == o.m_ &&
         coeffs_ == o.coeffs_;
}

namespace {

int sign_of(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

void add_scaled(Vec& acc, int sign, const Vec& v) {
  if (sign == 1)
    acc += v;
  else
    acc += -v;
}

}  // namespace

Cochain nijenhuis_differential(const Bimodule& b, const Cochain& f) {
  const std::size_t p = f.degree();
  const std::size_t n = b.base.dim;
  const std::size_t m = b.module_dim;
  if (f.base_dim() != n || f.module_dim() != m)
    throw DimensionError("differential: cochain shape mismatch");
  if (p > kMaxDifferentialDegree)
    throw DimensionError("differential degree above the supported cap");

  Cochain out(p + 1, n, m);
  if (n == 0 || p == 0) return out;

  // Iterate output tuples (t[0], ..., t[p]).
  std::vector<std::size_t> t(p + 1, 0);
  const std::size_t total = [&] {
    std::size_t s = 1;
    for (std::size_t i = 0; i <= p; ++i) s *= n;
    return s;
  }();

  std::vector<std::size_t> args(p);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = p + 1; i-- > 0;) {
      t[i] = rem % n;
      rem /= n;
    }

    Vec acc(m);

    // sum_i (-1)^i x_i . f(..., x_i omitted, ..., x_p)
    for (std::size_t i = 0; i < p; ++i) {
      args.clear();
      for (std::size_t q = 0; q <= p; ++q)
        if (q != i) args.push_back(t[q]);
      const Vec fv = f.value_at(args);
      if (!fv.is_zero()) add_scaled(acc, sign_of(i), b.left_action[t[i]] * fv);
    }

    // sum_i (-1)^i f(x_0, ..., x_i omitted, ..., x_{p-1}, x_i) # x_p
    for (std::size_t i = 0; i < p; ++i) {
      args.clear();
      for (std::size_t q = 0; q < p; ++q)
        if (q != i) args.push_back(t[q]);
      args.push_back(t[i]);
      const Vec fv = f.value_at(args);
      if (!fv.is_zero()) add_scaled(acc, sign_of(i), b.right_action[t[p]] * fv);
    }

    // sum_{i<j<p} (-1)^{i+j} f([x_i, x_j], ..., x_i, x_j omitted ..., x_p),
    // the bracket expanded over the basis in the first slot
    for (std::size_t i = 0; i + 1 < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        args.assign(1, 0);
        for (std::size_t q = 0; q <= p; ++q)
          if (q != i && q != j) args.push_back(t[q]);
        for (std::size_t k = 0; k < n; ++k) {
          const Rat coef = b.base.product.at(t[i], t[j], k) -
                           b.base.product.at(t[j], t[i], k);
          if (coef == 0) continue;
          args[0] = k;
          const Vec fv = f.value_at(args);
          if (!fv.is_zero())
            add_scaled(acc, sign_of(i + j), fv * coef);
        }
      }

    // - sum_i (-1)^i f(x_0, ..., x_i omitted, ..., x_{p-1}, x_i x_p),
    // the product expanded over the basis in the last slot
    for (std::size_t i = 0; i < p; ++i) {
      args.clear();
      for (std::size_t q = 0; q < p; ++q)
        if (q != i) args.push_back(t[q]);
      args.push_back(0);
      for (std::size_t k = 0; k < n; ++k) {
        const Rat& coef = b.base.product.at(t[i], t[p], k);
        if (coef == 0) continue;
        args[p - 1] = k;
        const Vec fv = f.value_at(args);
        if (!fv.is_zero()) add_scaled(acc, -sign_of(i), fv * coef);
      }
    }

    if (!acc.is_zero()) out.set_value(t, acc);
  }
  return out;
}

Mat differential_matrix(const Bimodule& b, std::size_t p) {
  const std::size_t n = b.base.dim, m = b.module_dim;
  const Cochain domain_probe(p, n, m), image_probe(p + 1, n, m);
  Mat mat(image_probe.flat_size(), domain_probe.flat_size());
  for (std::size_t q = 0; q < domain_probe.flat_size(); ++q) {
    Cochain unit(p, n, m);
    unit.coeff(q) = 1;
    const Cochain img = nijenhuis_differential(b, unit);
    for (std::size_t r = 0; r < img.flat_size(); ++r)
      mat.at(r, q) = img.coeff(r);
  }
  return mat;
}

CohomologyDims cohomology_dims(const Bimodule& b, std::size_t p) {
  const std::size_t dim_cp = Cochain(p, b.base.dim, b.module_dim).flat_size();
  const std::size_t rank_p = rank(differential_matrix(b, p));
  CohomologyDims d;
  d.cocycles = dim_cp - rank_p;
  d.coboundaries = (p == 0) ? 0 : rank(differential_matrix(b, p - 1));
  d.cohomology = d.cocycles - d.coboundaries;
  return d;
}

std::vector<Mat> lie_1cocycle_space(const FaslaTriple& t) {
  const std::size_t n = t.dim();
  const Algebra br = commutator_algebra(t.algebra);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const Mat li = left_mult_basis(t.algebra, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mat lj = left_mult_basis(t.algebra, j);
      const Vec bracket = br.basis_product(i, j);
      // coordinate k of u([e_i,e_j]) - L_i u(e_j) + L_j u(e_i),
      // unknowns u[r][c] flattened row major
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(n * n);
        for (std::size_t c = 0; c < n; ++c) row[k * n + c] += bracket[c];
        for (std::size_t r = 0; r < n; ++r) {
          row[r * n + j] -= li.at(k, r);
          row[r * n + i] += lj.at(k, r);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Vec> flat =
      rows.empty() ? [&] {
        std::vector<Vec> full;
        for (std::size_t q = 0; q < n * n; ++q)
          full.push_back(Vec::unit(n * n, q));
        return full;
      }()
                   : nullspace(Mat::from_rows(rows));
  std::vector<Mat> basis;
  for (const Vec& v : flat) {
    Mat u(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) u.at(r, c) = v[r * n + c];
    basis.push_back(std::move(u));
  }
  return basis;
}

Mat lie_1coboundary_map(const FaslaTriple& t) {
  const std::size_t n = t.dim();
  Mat m(n * n, n);
  // column j: vec of u(x) = L_x(e_j), u[k][i] = (L_{e_i} e_j)_k = c[i][j][k]
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        m.at(k * n + i, j) = t.algebra.product.at(i, j, k);
  return m;
}

std::size_t lie_h1_dim(const FaslaTriple& t) {
  return lie_1cocycle_space(t).size() - rank(lie_1coboundary_map(t));
}

Cochain cocycle_correspondence(const FaslaTriple& t, const Mat& u) {
  const std::size_t n = t.dim();
  if (u.rows() != n || u.cols() != n)
    throw DimensionError("cocycle_correspondence: matrix shape mismatch");
  Cochain f(2, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ui = u.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(1);
      v[0] = t.omega.eval(ui, Vec::unit(n, j));
      f.set_value({i, j}, v);
    }
  }
  return f;
}

OmegaUpRoutes omega_up_routes(const FaslaTriple& base, const Mat& u,
                              const Mat& d, const Rat& lambda, const Vec& x0) {
  const std::size_t n = base.dim();
  if (u.rows() != n || u.cols() != n || d.rows() != n || d.cols() != n ||
      x0.size() != n)
    throw DimensionError("omega_up: shape mismatch");
  const Mat m = u * d - d * u - u * u - u * lambda;

  OmegaUpRoutes routes;

  // Route 1: the form (x,y) -> omega'(M x, y) lies in the image of delta_1
  // on trivial-coefficient 1-cochains.
  Cochain form(2, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec mi = m.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(1);
      v[0] = base.omega.eval(mi, Vec::unit(n, j));
      form.set_value({i, j}, v);
    }
  }
  const Mat delta1 = differential_matrix(Bimodule::trivial(base.algebra, 1), 1);
  routes.coboundary_membership = in_column_space(delta1, form.flatten());

  // Route 2: [u, D] = u^2 + lambda u - R_{x0}.
  const Mat lhs = u * d - d * u;
  const Mat rhs = u * u + u * lambda - right_mult_matrix(base.algebra, x0);
  routes.commutator_identity = (lhs == rhs);
  return routes;
}

bool omega_up_is_coboundary(const FaslaTriple& base, const Mat& u, const Mat& d,
                            const Rat& lambda, const Vec& x0) {
  const OmegaUpRoutes r = omega_up_routes(base, u, d, lambda, x0);
  return r.coboundary_membership && r.commutator_identity;
}

Mat theta_map(const FaslaTriple& t, const Mat& u) {
  const std::size_t n = t.dim();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = t.omega.eval(u.col(i), Vec::unit(n, j)) -
                   t.omega.eval(u.col(j), Vec::unit(n, i));
  return m;
}

}  // namespace fasla
