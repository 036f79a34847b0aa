#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fasla/algebra.hpp"

namespace fasla {

/// One decided identity. When a check fails, `witness` holds the first
/// basis-index tuple (lexicographic order) at which the identity breaks and
/// `discrepancy` the first nonzero coordinate of the defect there.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::optional<std::vector<std::size_t>> witness;
  std::optional<Rat> discrepancy;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& other);
  const CheckResult* find(const std::string& name) const;
  std::string to_text() const;
};

/// Associator symmetry x(yz) - (xy)z = y(xz) - (yx)z on all basis triples.
VerificationReport check_left_symmetric(const Algebra& a);

/// Antisymmetry and Jacobi identity for the commutator of `a`.
VerificationReport check_jacobi(const Algebra& a);

/// Vanishing cyclic sum of omega over the commutator bracket.
VerificationReport check_scalar_2cocycle(const Algebra& a,
                                         const SymplecticForm& omega);

/// omega(x.y, z) + omega(y, x.z) = 0 on all basis triples.
VerificationReport check_compatibility(const Algebra& a,
                                       const SymplecticForm& omega);

/// Exact rank equals the dimension. Odd dimension always reports false.
bool check_nondegenerate(const SymplecticForm& omega);

/// Conjunction of left symmetry, Jacobi, skewness, nondegeneracy, the
/// 2-cocycle identity and compatibility; one report line per sub-check.
VerificationReport check_fasla(const FaslaTriple& t);

/// Both module identities for actions of `b` on a module of dimension m:
///   x.(y.v) - y.(x.v) = [x,y].v
///   x.(v#y) - (x.v)#y = v#(xy) - (v#x)#y
VerificationReport check_bimodule(const Algebra& b,
                                  const std::vector<Mat>& left_action,
                                  const std::vector<Mat>& right_action);

/// (x.y).z = x.(y.z) on all basis triples.
bool check_associative(const Algebra& a);

}  // namespace fasla
