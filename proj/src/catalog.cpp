#include "fasla/catalog.hpp"

namespace fasla {

FaslaTriple dim2_family(const Rat& beta, const Rat& lambda, const Rat& mu) {
  if (lambda != mu && 2 * lambda != mu)
    throw ValidationError("dim2_family: need lambda = mu or lambda = mu/2");
  ExtensionParams p = ExtensionParams::zero(0);
  p.beta = beta;
  p.lambda = lambda;
  p.mu = mu;
  const FaslaTriple base{Algebra(0), SymplecticForm(Mat(0, 0))};
  return double_extend(base, p);
}

FaslaTriple even_dim_family(std::size_t n, const Mat& D, const Rat& mu,
                            const Rat& lambda, const Rat& beta, const Vec& x0) {
  if (n < 2) throw ValidationError("even_dim_family: need n >= 2");
  const std::size_t base_dim = 2 * n - 2;
  const SymplecticForm w0 = standard_symplectic(n - 1);
  if (D.rows() != base_dim || D.cols() != base_dim || x0.size() != base_dim)
    throw DimensionError("even_dim_family: shape mismatch");
  {
    const Mat s = w0.gram * D;
    if (!(s == s.transpose()))
      throw ValidationError("even_dim_family: D does not preserve the form");
  }
  if (lambda != mu) {
    if (2 * lambda != mu)
      throw ValidationError("even_dim_family: need lambda = mu or lambda = mu/2");
    if (!x0.is_zero())
      throw ValidationError("even_dim_family: lambda = mu/2 forces x0 = 0");
  }
  const FaslaTriple base{Algebra(base_dim), w0};
  ExtensionParams p = ExtensionParams::zero(base_dim);
  p.D = D;
  p.x0 = x0;
  p.z0 = x0;
  p.beta = beta;
  p.lambda = lambda;
  p.mu = mu;
  return double_extend(base, p);
}

VerificationReport verify_catalog_entry(const CatalogEntry& entry) {
  VerificationReport rep = check_fasla(entry.triple);
  auto flag = [&rep](const std::string& name, bool ok) {
    CheckResult c{name, ok, std::nullopt, std::nullopt};
    if (!ok) {
      c.witness = std::vector<std::size_t>{};
      c.discrepancy = Rat(1);
    }
    rep.add(std::move(c));
  };
  for (const auto& [key, value] : entry.expected) {
    if (key == "complete") {
      flag("expected-complete",
           completeness(entry.triple).complete == (value == "true"));
    } else if (key == "associative") {
      flag("expected-associative",
           check_associative(entry.triple.algebra) == (value == "true"));
    } else if (key == "decomposes") {
      flag("expected-decomposes",
           decompose_to_zero(entry.triple).reached_zero == (value == "true"));
    } else if (key == "central-contains") {
      const std::size_t idx = std::stoul(value);
      flag("expected-central-contains",
           in_span(central_translations(entry.triple),
                   Vec::unit(entry.triple.dim(), idx)));
    } else if (key == "central-dim") {
      flag("expected-central-dim",
           central_translations(entry.triple).size() == std::stoul(value));
    } else if (key == "translation-contains") {
      const std::size_t idx = std::stoul(value);
      flag("expected-translation-contains",
           in_span(translation_directions(entry.triple),
                   Vec::unit(entry.triple.dim(), idx)));
    } else if (key == "cotangent-bracket") {
      // the commutator must match the blockwise bracket determined by the
      // stored cotangent data: [a+al, b+be] = [a,b] + th_a(be) - th_b(al)
      // + (f(a,b) - f(b,a)) with th = L* - t(L')
      bool ok = entry.cotangent_data.has_value();
      if (ok) {
        const CotangentData& cd = *entry.cotangent_data;
        const std::size_t n = cd.base.dim;
        const Algebra circ_alg(n, cd.circ);
        const Algebra br = commutator_algebra(entry.triple.algebra);
        const Algebra base_br = commutator_algebra(cd.base);
        for (std::size_t i = 0; i < n && ok; ++i) {
          const Mat theta_i = -(left_mult_basis(cd.base, i).transpose()) -
                              left_mult_basis(circ_alg, i).transpose();
          for (std::size_t j = 0; j < n && ok; ++j) {
            // primal-primal bracket
            for (std::size_t k = 0; k < n && ok; ++k) {
              const Rat dual_part = cd.f.at(i, j, k) - cd.f.at(j, i, k);
              if (br.product.at(n + i, n + j, k) != dual_part ||
                  br.product.at(n + i, n + j, n + k) !=
                      base_br.product.at(i, j, k))
                ok = false;
            }
            // primal-dual bracket: [e_i, al_j] = th_i(al_j)
            for (std::size_t k = 0; k < n && ok; ++k) {
              if (br.product.at(n + i, j, k) != theta_i.at(k, j) ||
                  br.product.at(n + i, j, n + k) != 0)
                ok = false;
            }
          }
        }
      }
      flag("expected-cotangent-bracket", ok);
    } else {
      flag("unknown-expected-key-" + key, false);
    }
  }
  return rep;
}

std::vector<CatalogEntry> builtin_suite() {
  std::vector<CatalogEntry> entries;

  auto add = [&entries](CatalogEntry e) {
    const VerificationReport rep = verify_catalog_entry(e);
    if (!rep.all_passed())
      throw Error("catalog entry \"" + e.name + "\" failed verification:\n" +
                  rep.to_text());
    entries.push_back(std::move(e));
  };

  add({"dim2-abelian-beta0",
       dim2_family(0, 0, 0),
       {{"complete", "true"},
        {"associative", "true"},
        {"decomposes", "true"},
        {"central-contains", "0"},
        {"central-dim", "2"}},
       "zero product on the plane",
       std::nullopt});

  add({"dim2-abelian-beta1",
       dim2_family(1, 0, 0),
       {{"complete", "true"},
        {"associative", "true"},
        {"decomposes", "true"},
        {"central-contains", "0"},
        {"central-dim", "1"}},
       "d.d = e, all other products zero",
       std::nullopt});

  add({"dim2-lambda-eq-mu",
       dim2_family(0, 1, 1),
       {{"complete", "false"},
        {"associative", "false"},
        {"decomposes", "true"},
        {"translation-contains", "0"},
        {"central-dim", "0"}},
       "nonabelian line algebra, d.d = -d, d.e = e",
       std::nullopt});

  add({"dim2-lambda-half-mu",
       dim2_family(0, 1, 2),
       {{"complete", "false"}, {"central-dim", "0"}},
       "d.d cell follows the general extension product (beta e - lambda d); "
       "the off-diagonal entries are (mu/2) e and -(mu/2) e",
       std::nullopt});

  {
    Mat d(2, 2);
    d.at(0, 1) = 1;
    add({"even4-nilpotent",
         even_dim_family(2, d, 0, 0, 0, Vec(2)),
         {{"complete", "true"},
          {"associative", "true"},
          {"decomposes", "true"},
          {"central-contains", "0"}},
         "extension of the abelian plane by a square-zero twist",
         std::nullopt});
  }

  {
    Vec x0(4);
    x0[0] = 1;
    add({"even6-incomplete",
         even_dim_family(3, Mat(4, 4), 1, 1, 0, x0),
         {{"complete", "false"}, {"translation-contains", "0"}},
         "six-dimensional, lambda = mu = 1 with a nonzero x0",
         std::nullopt});
  }

  {
    const Algebra aff = dim2_family(0, 1, 1).algebra;
    CotangentData cd = CotangentData::plain(aff);
    add({"cotangent-aff-hess",
         hess_product(aff),
         {{"complete", "false"}, {"cotangent-bracket", "structural"}},
         "plain cotangent of the nonabelian line algebra",
         cd});
  }

  {
    // one-dimensional idempotent base with a symmetric nonzero cocycle
    Algebra line(1);
    line.product.at(0, 0, 0) = 1;
    CotangentData cd{line, Tensor3(1), Tensor3(1)};
    cd.f.at(0, 0, 0) = 1;
    add({"cotangent-twisted-sym-f",
         twisted_cotangent(cd),
         {{"complete", "false"}, {"cotangent-bracket", "structural"}},
         "twisted cotangent of the idempotent line with f(a,a) = a*",
         cd});
  }

  return entries;
}

}  // namespace fasla
