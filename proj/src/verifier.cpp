#include "fasla/verifier.hpp"

#include <functional>
#include <sstream>

namespace fasla {

bool VerificationReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

void VerificationReport::append(const VerificationReport& other) {
  for (const CheckResult& c : other.checks) checks.push_back(c);
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << (c.passed ? "pass" : "FAIL") << "  " << c.name;
    if (c.witness) {
      os << "  witness=(";
      for (std::size_t i = 0; i < c.witness->size(); ++i)
        os << (i ? "," : "") << (*c.witness)[i];
      os << ")";
    }
    if (c.discrepancy) os << "  discrepancy=" << rat_str(*c.discrepancy);
    os << "\n";
  }
  return os.str();
}

namespace {

// First nonzero coordinate, for the witness discrepancy.
std::optional<Rat> first_nonzero(const Vec& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) return v[k];
  return std::nullopt;
}

CheckResult scan_basis_triples(const std::string& name, const Algebra& a,
                               const std::function<Vec(std::size_t, std::size_t,
                                                       std::size_t)>& defect) {
  CheckResult r{name, true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Vec d = defect(i, j, k);
        if (auto disc = first_nonzero(d)) {
          if (r.passed) {
            r.passed = false;
            r.witness = std::vector<std::size_t>{i, j, k};
            r.discrepancy = *disc;
          }
          return r;
        }
      }
  return r;
}

Vec scalar_as_vec(const Rat& x) {
  Vec v(1);
  v[0] = x;
  return v;
}

}  // namespace

VerificationReport check_left_symmetric(const Algebra& a) {
  VerificationReport rep;
  auto defect = [&a](std::size_t i, std::size_t j, std::size_t k) {
    const Vec ei = Vec::unit(a.dim, i), ej = Vec::unit(a.dim, j),
              ek = Vec::unit(a.dim, k);
    const Vec left = a.mul(ei, a.mul(ej, ek)) - a.mul(a.basis_product(i, j), ek);
    const Vec right = a.mul(ej, a.mul(ei, ek)) - a.mul(a.basis_product(j, i), ek);
    return left - right;
  };
  rep.add(scan_basis_triples("left-symmetric", a, defect));
  return rep;
}

VerificationReport check_jacobi(const Algebra& a) {
  VerificationReport rep;
  const Algebra br = commutator_algebra(a);

  CheckResult anti{"bracket-antisymmetric", true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < a.dim && anti.passed; ++i)
    for (std::size_t j = 0; j < a.dim && anti.passed; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Rat d = br.product.at(i, j, k) + br.product.at(j, i, k);
        if (d != 0) {
          anti.passed = false;
          anti.witness = std::vector<std::size_t>{i, j, k};
          anti.discrepancy = d;
          break;
        }
      }
  rep.add(std::move(anti));

  auto jac = [&br](std::size_t i, std::size_t j, std::size_t k) {
    const Vec ei = Vec::unit(br.dim, i), ej = Vec::unit(br.dim, j),
              ek = Vec::unit(br.dim, k);
    return br.mul(br.basis_product(i, j), ek) + br.mul(br.basis_product(j, k), ei) +
           br.mul(br.basis_product(k, i), ej);
  };
  rep.add(scan_basis_triples("jacobi", br, jac));
  return rep;
}

VerificationReport check_scalar_2cocycle(const Algebra& a,
                                         const SymplecticForm& omega) {
  if (omega.dim() != a.dim)
    throw DimensionError("check_scalar_2cocycle: form dimension mismatch");
  VerificationReport rep;
  const Algebra br = commutator_algebra(a);
  auto defect = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vec ei = Vec::unit(a.dim, i), ej = Vec::unit(a.dim, j),
              ek = Vec::unit(a.dim, k);
    const Rat s = omega.eval(br.basis_product(i, j), ek) +
                  omega.eval(br.basis_product(j, k), ei) +
                  omega.eval(br.basis_product(k, i), ej);
    return scalar_as_vec(s);
  };
  rep.add(scan_basis_triples("scalar-2-cocycle", a, defect));
  return rep;
}

VerificationReport check_compatibility(const Algebra& a,
                                       const SymplecticForm& omega) {
  if (omega.dim() != a.dim)
    throw DimensionError("check_compatibility: form dimension mismatch");
  VerificationReport rep;
  auto defect = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vec ej = Vec::unit(a.dim, j), ek = Vec::unit(a.dim, k);
    const Rat s =
        omega.eval(a.basis_product(i, j), ek) + omega.eval(ej, a.basis_product(i, k));
    return scalar_as_vec(s);
  };
  rep.add(scan_basis_triples("compatibility", a, defect));
  return rep;
}

bool check_nondegenerate(const SymplecticForm& omega) {
  if (omega.dim() % 2 == 1) return false;
  return rank(omega.gram) == omega.dim();
}

VerificationReport check_fasla(const FaslaTriple& t) {
  VerificationReport rep;
  rep.append(check_left_symmetric(t.algebra));
  rep.append(check_jacobi(t.algebra));

  CheckResult skew{"omega-skew", t.omega.dim() == t.dim() && t.omega.is_skew(),
                   std::nullopt, std::nullopt};
  if (!skew.passed) {
    for (std::size_t i = 0; i < t.omega.dim() && !skew.witness; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const Rat d = t.omega.gram.at(i, j) + t.omega.gram.at(j, i);
        if (d != 0) {
          skew.witness = std::vector<std::size_t>{i, j};
          skew.discrepancy = d;
          break;
        }
      }
  }
  rep.add(std::move(skew));

  CheckResult nd{"omega-nondegenerate", check_nondegenerate(t.omega),
                 std::nullopt, std::nullopt};
  if (!nd.passed) {
    nd.witness = std::vector<std::size_t>{};
    nd.discrepancy = Rat(static_cast<long>(t.omega.dim()) -
                         static_cast<long>(rank(t.omega.gram)));
    if (*nd.discrepancy == 0) nd.discrepancy = Rat(1);  // odd dimension
  }
  rep.add(std::move(nd));

  rep.append(check_scalar_2cocycle(t.algebra, t.omega));
  rep.append(check_compatibility(t.algebra, t.omega));
  return rep;
}

VerificationReport check_bimodule(const Algebra& b,
                                  const std::vector<Mat>& left_action,
                                  const std::vector<Mat>& right_action) {
  const std::size_t n = b.dim;
  if (left_action.size() != n || right_action.size() != n)
    throw DimensionError("check_bimodule: action list length mismatch");
  std::size_t m = left_action.empty() ? 0 : left_action[0].rows();
  for (const Mat& a : left_action)
    if (a.rows() != m || a.cols() != m)
      throw DimensionError("check_bimodule: action matrix shape mismatch");
  for (const Mat& a : right_action)
    if (a.rows() != m || a.cols() != m)
      throw DimensionError("check_bimodule: action matrix shape mismatch");

  VerificationReport rep;
  const Algebra br = commutator_algebra(b);

  CheckResult c1{"bimodule-left-action", true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < n && c1.passed; ++i)
    for (std::size_t j = 0; j < n && c1.passed; ++j) {
      // x.(y.v) - y.(x.v) = [x,y].v as matrices
      Mat lhs = left_action[i] * left_action[j] - left_action[j] * left_action[i];
      Mat rhs(m, m);
      for (std::size_t k = 0; k < n; ++k) {
        const Rat& c = br.product.at(i, j, k);
        if (c != 0) rhs = rhs + left_action[k] * c;
      }
      const Mat d = lhs - rhs;
      if (!d.is_zero()) {
        c1.passed = false;
        for (std::size_t w = 0; w < m && !c1.witness; ++w)
          for (std::size_t v = 0; v < m; ++v)
            if (d.at(v, w) != 0) {
              c1.witness = std::vector<std::size_t>{i, j, w};
              c1.discrepancy = d.at(v, w);
              break;
            }
      }
    }
  rep.add(std::move(c1));

  CheckResult c2{"bimodule-right-action", true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < n && c2.passed; ++i)
    for (std::size_t j = 0; j < n && c2.passed; ++j) {
      // x.(v#y) - (x.v)#y = v#(xy) - (v#x)#y as matrices acting on v
      Mat lhs = left_action[i] * right_action[j] - right_action[j] * left_action[i];
      Mat rhs = -(right_action[j] * right_action[i]);
      for (std::size_t k = 0; k < n; ++k) {
        const Rat& c = b.product.at(i, j, k);
        if (c != 0) rhs = rhs + right_action[k] * c;
      }
      const Mat d = lhs - rhs;
      if (!d.is_zero()) {
        c2.passed = false;
        for (std::size_t w = 0; w < m && !c2.witness; ++w)
          for (std::size_t v = 0; v < m; ++v)
            if (d.at(v, w) != 0) {
              c2.witness = std::vector<std::size_t>{i, j, w};
              c2.discrepancy = d.at(v, w);
              break;
            }
      }
    }
  rep.add(std::move(c2));
  return rep;
}

bool check_associative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Vec ek = Vec::unit(a.dim, k), ei = Vec::unit(a.dim, i);
        const Vec lhs = a.mul(a.basis_product(i, j), ek);
        const Vec rhs = a.mul(ei, a.basis_product(j, k));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

}  // namespace fasla
