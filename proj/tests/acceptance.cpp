// Integration gate: every structural guarantee of the library, run end to
// end at desk scale. One line per criterion; exits nonzero when any fails.

#include <chrono>
#include <iostream>
#include <sstream>

#include "fasla/io.hpp"
#include "generators.hpp"

using namespace fasla;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool passed,
            const std::string& detail = "") {
  std::cout << (passed ? "[PASS] " : "[FAIL] ") << "criterion " << number
            << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!passed) ++g_failures;
}

// ---- 1: exact reproduction of the two-dimensional tables ---------------

Tensor3 table_tensor(const Rat& beta, const Rat& lambda, const Rat& mu) {
  Tensor3 t(2);
  t.at(1, 1, 0) = beta;
  t.at(1, 1, 1) = -lambda;
  t.at(1, 0, 0) = lambda;
  t.at(0, 1, 0) = lambda - mu;
  return t;
}

void criterion_1() {
  struct Row {
    Rat beta, lambda, mu;
  };
  const Row rows[] = {{Rat(0), Rat(0), Rat(0)},
                      {Rat(1), Rat(0), Rat(0)},
                      {Rat(0), Rat(1), Rat(1)},
                      {Rat(0), Rat(1), Rat(2)}};
  bool ok = true;
  std::string detail;
  for (const Row& r : rows) {
    const FaslaTriple t = dim2_family(r.beta, r.lambda, r.mu);
    if (!(t.algebra.product == table_tensor(r.beta, r.lambda, r.mu)) ||
        t.omega.gram.at(0, 1) != 1 || !check_fasla(t).all_passed()) {
      ok = false;
      detail = "mismatch at beta=" + rat_str(r.beta) +
               " lambda=" + rat_str(r.lambda) + " mu=" + rat_str(r.mu);
    }
  }
  report(1, "two-dimensional family tables reproduced exactly", ok, detail);
}

// ---- 2: completeness iff unimodularity ---------------------------------

void criterion_2() {
  bool ok = true;
  std::string detail;
  std::size_t checked = 0;
  auto run_one = [&](const FaslaTriple& t, const std::string& origin) {
    const CompletenessReport rep = completeness(t);
    if (rep.complete != rep.unimodular) {
      ok = false;
      detail = "verdict/unimodularity split on " + origin;
    }
    for (const Rat& tr : rep.traces_L)
      if (tr != 0) {
        ok = false;
        detail = "nonzero left trace on " + origin;
      }
    ++checked;
  };
  for (const auto& e : builtin_suite()) run_one(e.triple, e.name);
  const auto instances = testgen::validated_extensions(1002, 50);
  for (const auto& [base, params] : instances)
    run_one(double_extend(base, params), "a randomized extension");
  report(2, "complete iff unimodular, left traces zero", ok,
         detail.empty() ? std::to_string(checked) + " triples" : detail);
}

// ---- 3: constructor soundness ------------------------------------------

void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  const auto instances = testgen::validated_extensions(1003, 100);
  std::size_t by_dim[3] = {0, 0, 0};
  for (const auto& [base, params] : instances) {
    if (!validate_extension(base, params).all_passed()) {
      ok = false;
      detail = "generator produced unvalidated parameters";
      break;
    }
    if (!check_fasla(double_extend(base, params)).all_passed()) {
      ok = false;
      detail = "extension output failed the axioms";
      break;
    }
    by_dim[base.dim() / 2 > 2 ? 2 : base.dim() / 2]++;
  }
  if (ok && (by_dim[0] == 0 || by_dim[1] == 0 || by_dim[2] == 0)) {
    ok = false;
    detail = "base dimensions 0, 2, 4 not all exercised";
  }

  const auto cots = testgen::validated_cotangent_data(1004, 50);
  bool dims_seen[4] = {false, false, false, false};
  for (const CotangentData& d : cots) {
    if (!validate_cotangent(d).all_passed() ||
        !check_fasla(twisted_cotangent(d)).all_passed()) {
      ok = false;
      detail = "cotangent output failed the axioms";
      break;
    }
    if (d.base.dim <= 3) dims_seen[d.base.dim] = true;
  }
  if (ok && (!dims_seen[1] || !dims_seen[2] || !dims_seen[3])) {
    ok = false;
    detail = "base dimensions 1, 2, 3 not all exercised";
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (elapsed > 60000) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + " ms exceeds one minute";
  }
  report(3, "150 randomized validated constructions pass the axioms", ok,
         detail.empty() ? std::to_string(elapsed) + " ms" : detail);
}

// ---- 4: round trips ------------------------------------------------------

void criterion_4() {
  bool ok = true;
  std::string detail;
  const auto instances = testgen::validated_extensions(1003, 100);
  for (const auto& [base, params] : instances) {
    const FaslaTriple big = double_extend(base, params);
    const std::size_t N = big.dim();
    const ReductionResult rr =
        reduce_by_ideal(big, Vec::unit(N, 0), Vec::unit(N, N - 1));
    if (!(rr.base == base) || !(rr.params == params)) {
      ok = false;
      detail = "reduction did not invert an extension";
      break;
    }
  }
  if (ok) {
    const auto cots = testgen::validated_cotangent_data(1004, 50);
    for (const CotangentData& d : cots) {
      const auto split = detect_lagrangian_ideal(twisted_cotangent(d));
      if (!split || !(split->data == d) ||
          !(split->basis_change == Mat::identity(2 * d.base.dim))) {
        ok = false;
        detail = "detection did not invert a cotangent build";
        break;
      }
    }
  }
  report(4, "reduction and detection invert the constructions exactly", ok,
         detail);
}

// ---- 5: the cochain complex ----------------------------------------------

void criterion_5() {
  bool ok = true;
  std::string detail;
  testgen::Rng rng(1005);
  for (int trial = 0; trial < 20 && ok; ++trial) {
    const Bimodule b = testgen::random_bimodule(rng);
    if (!check_bimodule(b.base, b.left_action, b.right_action).all_passed()) {
      ok = false;
      detail = "generator produced an invalid bimodule";
      break;
    }
    for (std::size_t p = 1; p <= 2 && ok; ++p) {
      const std::size_t dim = Cochain(p, b.base.dim, b.module_dim).flat_size();
      for (std::size_t q = 0; q < dim; ++q) {
        Cochain unit(p, b.base.dim, b.module_dim);
        unit.coeff(q) = 1;
        if (!nijenhuis_differential(b, nijenhuis_differential(b, unit))
                 .is_zero()) {
          ok = false;
          detail = "differential does not square to zero at degree " +
                   std::to_string(p);
          break;
        }
      }
    }
  }
  if (ok) {
    for (const auto& e : builtin_suite()) {
      const CohomologyDims h2 =
          cohomology_dims(Bimodule::trivial(e.triple.algebra, 1), 2);
      if (h2.cohomology != lie_h1_dim(e.triple)) {
        ok = false;
        detail = "scalar degree-two class count differs from the "
                 "representation count on " + e.name;
        break;
      }
    }
  }
  if (ok) {
    const CohomologyDims dims = cohomology_dims(Bimodule::trivial(Algebra(2), 1), 2);
    if (dims.cocycles != 4 || dims.coboundaries != 0 || dims.cohomology != 4) {
      ok = false;
      detail = "abelian plane degree-two dimensions are not (4, 0, 4)";
    }
  }
  report(5, "differentials square to zero and class counts match", ok, detail);
}

// ---- 6: associative structure ----------------------------------------------

void criterion_6() {
  bool ok = true;
  std::string detail;
  std::size_t associative_entries = 0;
  for (const auto& e : builtin_suite()) {
    if (!check_associative(e.triple.algebra)) continue;
    ++associative_entries;
    const BiinvariantReport rep = biinvariant_analysis(e.triple);
    if (!rep.left_mults_anticommute || !rep.left_mults_square_zero) {
      ok = false;
      detail = "left multiplications fail to anticommute on " + e.name;
    }
    if (e.triple.dim() > 0 && central_translations(e.triple).empty()) {
      ok = false;
      detail = "no central translation on " + e.name;
    }
    if (!rep.decomposes_to_zero) {
      ok = false;
      detail = "decomposition stuck on " + e.name;
    }
  }
  if (associative_entries == 0) {
    ok = false;
    detail = "no associative catalog entries to test";
  }
  report(6, "associative catalog entries decompose with central translations",
         ok, detail.empty() ? std::to_string(associative_entries) + " entries"
                            : detail);
}

// ---- 7: the exponential pair -------------------------------------------------

void criterion_7() {
  bool ok = true;
  std::string detail;
  const Rat beta = rat(5, 3);
  const FaslaTriple t = dim2_family(beta, Rat(0), Rat(0));
  const Rat ts[] = {rat(1, 2), Rat(2), rat(-3, 5), Rat(1), rat(7, 4)};
  for (const Rat& s : ts) {
    Vec x(2);
    x[1] = s;
    const AffineSymplecticElement el = etale_representation(t, x);
    Vec q(2);
    q[0] = s * s * beta / 2;
    q[1] = s;
    Mat f = Mat::identity(2);
    f.at(0, 1) = s * beta;
    if (!(el.translation == q) || !(el.linear == f)) {
      ok = false;
      detail = "closed form mismatch at t = " + rat_str(s);
    }
    if (!symplectic_check(el, t.omega)) {
      ok = false;
      detail = "exponential is not symplectic at t = " + rat_str(s);
    }
  }
  for (const Rat& s : ts) {
    for (const Rat& u : ts) {
      Vec xs(2), xu(2), xsum(2);
      xs[1] = s;
      xu[1] = u;
      xsum[1] = s + u;
      if (!(compose_affine(etale_representation(t, xs),
                           etale_representation(t, xu)) ==
            etale_representation(t, xsum))) {
        ok = false;
        detail = "one-parameter composition broke at (" + rat_str(s) + ", " +
                 rat_str(u) + ")";
      }
    }
  }
  report(7, "exponential pair matches the closed form and composes", ok, detail);
}

// ---- 8: cotangent completeness equivalence ---------------------------------

void criterion_8() {
  bool ok = true;
  std::string detail;
  std::size_t nilpotent_side = 0, other_side = 0;

  // mix generated data with hand-picked nilpotent and non-nilpotent bases
  std::vector<CotangentData> pool = testgen::validated_cotangent_data(1008, 14);
  pool.push_back(CotangentData::plain(Algebra(2)));
  pool.push_back(CotangentData::plain(testgen::truncated_power_algebra()));
  pool.push_back(CotangentData::plain(dim2_family(Rat(0), Rat(1), Rat(1)).algebra));
  pool.push_back(CotangentData::plain(testgen::line_algebra(Rat(1))));
  {
    Algebra line = testgen::line_algebra(Rat(1));
    Tensor3 circ(1);
    circ.at(0, 0, 0) = 1;
    pool.push_back(CotangentData{line, circ, Tensor3(1)});
  }
  {
    Algebra line = testgen::line_algebra(Rat(0));
    Tensor3 f(1);
    f.at(0, 0, 0) = 1;
    pool.push_back(CotangentData{line, Tensor3(1), f});
  }

  for (const CotangentData& d : pool) {
    const CotangentCompletenessReport rep = cotangent_completeness(d);
    if (!rep.sides_agree) {
      ok = false;
      detail = "nilpotency sides disagree on a base of dimension " +
               std::to_string(d.base.dim);
      break;
    }
    (rep.base_side_nilpotent ? nilpotent_side : other_side)++;
    // the null-companion specialization is complete exactly with the base
    if (d.circ.is_zero() && d.f.is_zero() &&
        rep.base_complete != rep.built_complete) {
      ok = false;
      detail = "plain cotangent completeness differs from the base";
      break;
    }
  }
  if (ok && (nilpotent_side == 0 || other_side == 0)) {
    ok = false;
    detail = "the pool did not mix nilpotent and non-nilpotent instances";
  }
  report(8, "cotangent completeness equivalence has no disagreements", ok,
         detail.empty() ? std::to_string(nilpotent_side) + " nilpotent / " +
                              std::to_string(other_side) + " non-nilpotent"
                        : detail);
}

// ---- 9: serialization determinism -------------------------------------------

void criterion_9() {
  bool ok = true;
  std::string detail;
  for (const auto& e : builtin_suite()) {
    const AlgebraFile f{e.triple.algebra, e.triple.omega, std::nullopt};
    const std::string s1 = dump_canonical(algebra_to_json(f));
    const AlgebraFile g = algebra_from_json(parse_text(s1));
    const std::string s2 = dump_canonical(algebra_to_json(g));
    if (s1 != s2) {
      ok = false;
      detail = "round trip changed bytes for " + e.name;
    }
  }
  report(9, "serialize, parse, serialize is byte-identical", ok, detail);
}

}  // namespace

int main() {
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] unexpected exception: " << e.what() << std::endl;
    return 1;
  }
  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed" << std::endl;
  return 1;
}
