#include "fasla/cotangent.hpp"

#include <algorithm>
#include <sstream>

namespace fasla {

CotangentData CotangentData::plain(const Algebra& base) {
  return CotangentData{base, Tensor3(base.dim), Tensor3(base.dim)};
}

VerificationReport validate_cotangent(const CotangentData& d) {
  const std::size_t n = d.base.dim;
  if (d.circ.dim() != n || d.f.dim() != n)
    throw DimensionError("cotangent data shape does not match the base");

  VerificationReport rep;
  rep.append(check_left_symmetric(d.base));

  const Algebra circ_alg(n, d.circ);

  CheckResult comm{"circ-commutative", true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < n && comm.passed; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rat diff = d.circ.at(i, j, k) - d.circ.at(j, i, k);
        if (diff != 0) {
          comm.passed = false;
          comm.witness = std::vector<std::size_t>{i, j, k};
          comm.discrepancy = diff;
          break;
        }
      }
  rep.add(std::move(comm));

  // a o (b o c) + a (b o c) = (a b) o c + b o (a c)
  CheckResult mix{"products-compatible", true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < n && mix.passed; ++i)
    for (std::size_t j = 0; j < n && mix.passed; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ei = Vec::unit(n, i), ek = Vec::unit(n, k);
        const Vec bc = circ_alg.basis_product(j, k);
        const Vec lhs = circ_alg.mul(ei, bc) + d.base.mul(ei, bc);
        const Vec rhs = circ_alg.mul(d.base.basis_product(i, j), ek) +
                        circ_alg.mul(Vec::unit(n, j), d.base.basis_product(i, k));
        const Vec def = lhs - rhs;
        if (!def.is_zero()) {
          mix.passed = false;
          mix.witness = std::vector<std::size_t>{i, j, k};
          for (std::size_t q = 0; q < n; ++q)
            if (def[q] != 0) {
              mix.discrepancy = def[q];
              break;
            }
          break;
        }
      }
  rep.add(std::move(mix));

  const Bimodule bim = Bimodule::dual_pair(d.base, d.circ);
  {
    VerificationReport sub =
        check_bimodule(d.base, bim.left_action, bim.right_action);
    for (CheckResult& c : sub.checks) c.name = "dual-" + c.name;
    rep.append(sub);
  }

  // f is a cocycle for the dual bimodule
  {
    Cochain fc(2, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = d.f.at(i, j, k);
        fc.set_value({i, j}, v);
      }
    const Cochain df = nijenhuis_differential(bim, fc);
    CheckResult c{"f-cocycle", df.is_zero(), std::nullopt, std::nullopt};
    if (!c.passed) {
      for (std::size_t x = 0; x < n && !c.witness; ++x)
        for (std::size_t y = 0; y < n && !c.witness; ++y)
          for (std::size_t z = 0; z < n && !c.witness; ++z) {
            const Vec v = df.value_at({x, y, z});
            for (std::size_t k = 0; k < n; ++k)
              if (v[k] != 0) {
                c.witness = std::vector<std::size_t>{x, y, z};
                c.discrepancy = v[k];
                break;
              }
          }
    }
    rep.add(std::move(c));
  }

  // f(a,b)(c) = f(a,c)(b)
  CheckResult sym{"f-last-two-symmetric", true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < n && sym.passed; ++i)
    for (std::size_t j = 0; j < n && sym.passed; ++j)
      for (std::size_t k = 0; k < j; ++k) {
        const Rat diff = d.f.at(i, j, k) - d.f.at(i, k, j);
        if (diff != 0) {
          sym.passed = false;
          sym.witness = std::vector<std::size_t>{i, j, k};
          sym.discrepancy = diff;
          break;
        }
      }
  rep.add(std::move(sym));

  return rep;
}

FaslaTriple twisted_cotangent(const CotangentData& d) {
  const VerificationReport rep = validate_cotangent(d);
  if (!rep.all_passed()) {
    std::ostringstream os;
    os << "twisted_cotangent: validation failed:";
    for (const CheckResult& c : rep.checks)
      if (!c.passed) os << " " << c.name;
    throw ValidationError(os.str());
  }

  const std::size_t n = d.base.dim;
  const std::size_t big = 2 * n;
  const Algebra circ_alg(n, d.circ);

  // basis order: duals first (indices 0..n-1), then the base (n..2n-1)
  std::vector<Mat> lprime, lbase;
  for (std::size_t i = 0; i < n; ++i) {
    lprime.push_back(left_mult_basis(circ_alg, i));
    lbase.push_back(left_mult_basis(d.base, i));
  }
  Algebra a(big);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // alpha . b = t(L'_b)(alpha): (t(L'_j) alpha_i)_k = (L'_j)[i][k]
        a.product.at(i, n + j, k) = lprime[j].at(i, k);
        // a . beta = L*_a(beta) = -t(L_a) beta
        a.product.at(n + i, j, k) = -lbase[i].at(j, k);
        // a . b = f(a,b) + ab
        a.product.at(n + i, n + j, k) = d.f.at(i, j, k);
        a.product.at(n + i, n + j, n + k) = d.base.product.at(i, j, k);
      }

  return {std::move(a), standard_symplectic(n)};
}

FaslaTriple hess_product(const Algebra& base) {
  if (!check_left_symmetric(base).all_passed())
    throw ValidationError("hess_product: base is not left-symmetric");
  const CotangentData d = CotangentData::plain(base);
  FaslaTriple t = twisted_cotangent(d);

  // both halves stay parallel: B.B in B, B.B* in B*, B*.g = 0
  const std::size_t n = base.dim;
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j)
      for (std::size_t k = 0; k < 2 * n; ++k) {
        const Rat& c = t.algebra.product.at(i, j, k);
        if (c == 0) continue;
        const bool i_dual = i < n, j_dual = j < n, k_dual = k < n;
        const bool ok = (!i_dual && !j_dual && !k_dual) ||
                        (!i_dual && j_dual && k_dual);
        if (i_dual || !ok)
          throw Error("hess_product: parallelism block structure violated");
      }
  return t;
}

std::vector<Mat> cotangent_right_mults(const CotangentData& d) {
  const FaslaTriple t = twisted_cotangent(d);
  const std::size_t n = d.base.dim;
  const Algebra circ_alg(n, d.circ);

  std::vector<Mat> mults;
  for (std::size_t v = 0; v < 2 * n; ++v)
    mults.push_back(right_mult_basis(t.algebra, v));

  // cross-check the blocks against the closed forms
  for (std::size_t j = 0; j < n; ++j) {
    // right multiplication by the dual vector alpha_j:
    //   b . alpha_j = L*_b(alpha_j), beta . alpha_j = 0
    Mat expected(2 * n, 2 * n);
    for (std::size_t b = 0; b < n; ++b) {
      const Mat lb = left_mult_basis(d.base, b);
      for (std::size_t k = 0; k < n; ++k) expected.at(k, n + b) = -lb.at(j, k);
    }
    if (!(mults[j] == expected))
      throw Error("cotangent_right_mults: dual block mismatch");

    // right multiplication by the primal vector e_j:
    //   b . e_j = f(b, e_j) + b e_j, beta . e_j = t(L'_j) beta
    Mat expected_p(2 * n, 2 * n);
    const Mat lpj = left_mult_basis(circ_alg, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) expected_p.at(k, i) = lpj.at(i, k);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        expected_p.at(k, n + b) = d.f.at(b, j, k);
        expected_p.at(n + k, n + b) = d.base.product.at(b, j, k);
      }
    if (!(mults[n + j] == expected_p))
      throw Error("cotangent_right_mults: primal block mismatch");
  }
  return mults;
}

namespace {

// Smallest subspace containing the seed and closed under every left and
// right multiplication.
std::vector<Vec> ideal_closure(const Algebra& a, const Vec& seed) {
  std::vector<Vec> basis;
  std::vector<Vec> queue{seed};
  while (!queue.empty()) {
    const Vec v = queue.back();
    queue.pop_back();
    if (in_span(basis, v)) continue;
    basis.push_back(v);
    for (std::size_t i = 0; i < a.dim; ++i) {
      const Vec ei = Vec::unit(a.dim, i);
      queue.push_back(a.mul(ei, v));
      queue.push_back(a.mul(v, ei));
    }
  }
  return basis;
}

bool is_isotropic(const SymplecticForm& w, const std::vector<Vec>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (w.eval(basis[i], basis[j]) != 0) return false;
  return true;
}

bool is_bilateral_subspace(const Algebra& a, const std::vector<Vec>& basis) {
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Vec ei = Vec::unit(a.dim, i);
    for (const Vec& v : basis) {
      if (!in_span(basis, a.mul(ei, v))) return false;
      if (!in_span(basis, a.mul(v, ei))) return false;
    }
  }
  return true;
}

std::vector<Vec> canonical_span_basis(const std::vector<Vec>& vs) {
  if (vs.empty()) return {};
  RrefResult r = rref(Mat::from_rows(vs));
  std::vector<Vec> basis;
  for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) basis.push_back(r.m.row(p));
  return basis;
}

// Row-reads a candidate split out of the triple. Returns nullopt when the
// round trip does not close exactly.
std::optional<LagrangianSplit> try_extract(const FaslaTriple& t,
                                           const std::vector<Vec>& ideal) {
  const std::size_t big = t.dim();
  const std::size_t n = big / 2;
  if (ideal.size() != n) return std::nullopt;
  if (!is_isotropic(t.omega, ideal)) return std::nullopt;
  if (!is_bilateral_subspace(t.algebra, ideal)) return std::nullopt;

  // complement: standard basis vectors away from the pivot columns
  RrefResult r = rref(Mat::from_rows(ideal));
  std::vector<bool> pivot(big, false);
  for (std::size_t c : r.pivot_cols) pivot[c] = true;
  std::vector<Vec> comp;
  for (std::size_t c = 0; c < big; ++c)
    if (!pivot[c]) comp.push_back(Vec::unit(big, c));
  if (comp.size() != n) return std::nullopt;

  // correct the section so that its span is Lagrangian too: replace c_i by
  // c_i + m_i with omega(m_i, c_j) = -omega(c_i, c_j) / 2
  {
    Mat pair(n, n);  // pair[j][i] = omega(ideal_j, comp_i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        pair.at(j, i) = t.omega.eval(ideal[j], comp[i]);
    for (std::size_t i = 0; i < n; ++i) {
      Vec target(n);
      for (std::size_t j = 0; j < n; ++j)
        target[j] = t.omega.eval(comp[i], comp[j]) / Rat(-2);
      // coefficients y with sum_q y_q omega(ideal_q, c_j) = target_j
      auto y = solve(pair.transpose(), target);
      if (!y) return std::nullopt;
      Vec mi(big);
      for (std::size_t q = 0; q < n; ++q) mi += (*y)[q] * ideal[q];
      comp[i] = comp[i] + mi;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (t.omega.eval(comp[i], comp[j]) != 0) return std::nullopt;
  }

  // dual basis inside the ideal: iota_k with omega(iota_k, comp_l) = delta
  Mat pair(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      pair.at(j, l) = t.omega.eval(ideal[j], comp[l]);
  std::vector<Vec> iota;
  for (std::size_t k = 0; k < n; ++k) {
    auto y = solve(pair.transpose(), Vec::unit(n, k));
    if (!y) return std::nullopt;
    Vec v(big);
    for (std::size_t q = 0; q < n; ++q) v += (*y)[q] * ideal[q];
    iota.push_back(std::move(v));
  }

  std::vector<Vec> cols = iota;
  for (const Vec& c : comp) cols.push_back(c);
  const Mat P = Mat::from_columns(cols);
  if (!inverse(P)) return std::nullopt;

  // read the data off the products of section vectors: the section part of
  // comp_i . comp_j pairs with iota, the ideal part pairs with the section
  // (the section span is isotropic, so no subtraction is needed)
  CotangentData data{Algebra(n), Tensor3(n), Tensor3(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec prod = t.algebra.mul(comp[i], comp[j]);
      for (std::size_t k = 0; k < n; ++k) {
        data.base.product.at(i, j, k) = t.omega.eval(iota[k], prod);
        data.f.at(i, j, k) = t.omega.eval(prod, comp[k]);
      }
    }
  // circ from omega(beta . a, b) = omega(beta, a o b)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec target(n);
      for (std::size_t q = 0; q < n; ++q)
        target[q] = t.omega.eval(t.algebra.mul(iota[q], comp[i]), comp[j]);
      // omega(iota_q, sum_k circ_k comp_k) = target_q and the pairing is
      // the identity by construction of iota
      for (std::size_t k = 0; k < n; ++k) data.circ.at(i, j, k) = target[k];
    }

  if (!validate_cotangent(data).all_passed()) return std::nullopt;
  if (!(conjugate(t, P) == twisted_cotangent(data))) return std::nullopt;
  return LagrangianSplit{ideal, std::move(data), P};
}

}  // namespace

std::optional<LagrangianSplit> detect_lagrangian_ideal(const FaslaTriple& t) {
  const std::size_t big = t.dim();
  if (big % 2 != 0) return std::nullopt;
  const std::size_t n = big / 2;

  std::vector<std::vector<Vec>> candidates;

  // leading half of the coordinates (the canonical split of constructor
  // outputs)
  {
    std::vector<Vec> lead;
    for (std::size_t i = 0; i < n; ++i) lead.push_back(Vec::unit(big, i));
    candidates.push_back(std::move(lead));
  }
  // the two-sided annihilator, when it has the right dimension
  {
    std::vector<Vec> ann = two_sided_annihilator(t.algebra);
    if (ann.size() == n) candidates.push_back(std::move(ann));
  }
  // greedy isotropic sums of small ideal closures seeded from the standard
  // basis and the one-sided kernels
  {
    std::vector<Vec> seeds;
    for (std::size_t i = 0; i < big; ++i) seeds.push_back(Vec::unit(big, i));
    for (const Vec& v : left_kernel(t.algebra)) seeds.push_back(v);
    for (const Vec& v : right_kernel(t.algebra)) seeds.push_back(v);
    for (const Vec& v : two_sided_annihilator(t.algebra)) seeds.push_back(v);

    std::vector<std::vector<Vec>> atoms;
    for (const Vec& s : seeds) {
      if (s.is_zero()) continue;
      std::vector<Vec> cl = canonical_span_basis(ideal_closure(t.algebra, s));
      if (cl.size() > n || !is_isotropic(t.omega, cl)) continue;
      bool dup = false;
      for (const auto& a : atoms)
        if (spans_equal(a, cl)) {
          dup = true;
          break;
        }
      if (!dup) atoms.push_back(std::move(cl));
    }
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const auto& a, const auto& b) {
                       return a.size() < b.size();
                     });
    std::vector<Vec> acc;
    for (const auto& atom : atoms) {
      std::vector<Vec> merged = acc;
      for (const Vec& v : atom) merged.push_back(v);
      merged = canonical_span_basis(merged);
      if (merged.size() > n || !is_isotropic(t.omega, merged)) continue;
      acc = std::move(merged);
      if (acc.size() == n) break;
    }
    if (acc.size() == n) candidates.push_back(std::move(acc));
  }

  for (const auto& cand : candidates)
    if (auto split = try_extract(t, cand)) return split;
  return std::nullopt;
}

}  // namespace fasla
