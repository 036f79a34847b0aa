// Command-line front end: exact construction, verification and analysis of
// flat affine symplectic Lie algebras.
//
// Exit codes: 0 = ran (checks passed or an analysis verdict was produced),
// 1 = a check failed, 2 = malformed input.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "fasla/io.hpp"

using namespace fasla;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

unsigned long env_seed() {
  const char* s = std::getenv("FASLA_SEED");
  if (!s) return 0;
  return std::strtoul(s, nullptr, 10);
}

AlgebraFile load_algebra(const std::string& path, bool approx = false) {
  ParseOptions opt;
  opt.approx = approx;
  return algebra_from_json(parse_text(read_file(path)), opt);
}

void print_report(const VerificationReport& rep, bool as_json) {
  if (as_json)
    std::cout << dump_canonical(report_to_json(rep));
  else
    std::cout << rep.to_text();
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + rat_str(v[i]);
  return s + ")";
}

std::string mat_str(const Mat& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < m.cols(); ++j)
      s += (j ? " " : "") + rat_str(m.at(i, j));
    s += "]\n";
  }
  return s;
}

int run_verify(const std::string& input, bool as_json) {
  const AlgebraFile f = load_algebra(input);
  const VerificationReport rep = check_fasla(f.triple());
  print_report(rep, as_json);
  return rep.all_passed() ? kOk : kCheckFailed;
}

int run_double_extend(const std::string& base_path, const std::string& params_path,
                      const std::string& out) {
  const AlgebraFile base = load_algebra(base_path);
  const ExtensionParams params = params_from_json(parse_text(read_file(params_path)));
  const VerificationReport rep = validate_extension(base.triple(), params);
  print_report(rep, false);
  if (!rep.all_passed()) return kCheckFailed;
  const FaslaTriple big = double_extend(base.triple(), params);
  std::vector<std::string> labels{"e"};
  for (std::size_t i = 0; i < base.algebra.dim; ++i)
    labels.push_back("b" + std::to_string(i + 1));
  labels.push_back("d");
  write_file(out, dump_canonical(algebra_to_json({big.algebra, big.omega, labels})));
  std::cout << "wrote " << out << " (dim " << big.dim() << ")\n";
  return kOk;
}

int run_reduce(const std::string& input, long e_idx, long d_idx,
               const std::string& out_base, const std::string& out_params) {
  const FaslaTriple t = load_algebra(input).triple();
  const std::size_t n = t.dim();
  Vec e(n), d(n);
  if (e_idx >= 0) {
    if (static_cast<std::size_t>(e_idx) >= n) throw ParseError("--e out of range");
    e = Vec::unit(n, static_cast<std::size_t>(e_idx));
  } else {
    // first admissible direction, as in the decomposition search
    const Decomposition dec = decompose_to_zero(t);
    if (dec.steps.empty()) {
      std::cout << "no admissible reduction direction found\n";
      return kCheckFailed;
    }
    e = dec.steps[0].basis_change.col(0);
  }
  if (d_idx >= 0) {
    if (static_cast<std::size_t>(d_idx) >= n) throw ParseError("--d out of range");
    const Vec ek = Vec::unit(n, static_cast<std::size_t>(d_idx));
    const Rat w = t.omega.eval(e, ek);
    if (w == 0) {
      std::cout << "omega(e, d) = 0 for the chosen pair\n";
      return kCheckFailed;
    }
    d = ek * (1 / w);
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      const Vec ek = Vec::unit(n, k);
      const Rat w = t.omega.eval(e, ek);
      if (w != 0) {
        d = ek * (1 / w);
        break;
      }
    }
  }
  const ReductionResult rr = reduce_by_ideal(t, e, d);
  std::cout << "e = " << vec_str(e) << "\nd = " << vec_str(d) << "\n";
  std::cout << "base dim " << rr.base.dim() << ", parameters:\n"
            << dump_canonical(params_to_json(rr.params));
  if (!out_base.empty())
    write_file(out_base, dump_canonical(algebra_to_json(
                             {rr.base.algebra, rr.base.omega, std::nullopt})));
  if (!out_params.empty())
    write_file(out_params, dump_canonical(params_to_json(rr.params)));
  return kOk;
}

int run_decompose(const std::string& input) {
  const FaslaTriple t = load_algebra(input).triple();
  const Decomposition dec = decompose_to_zero(t);
  std::size_t step = 0;
  for (const ReductionResult& rr : dec.steps) {
    std::cout << "step " << ++step << ": dim " << rr.basis_change.rows()
              << " -> " << rr.base.dim() << ", e = "
              << vec_str(rr.basis_change.col(0)) << ", beta = "
              << rat_str(rr.params.beta) << ", lambda = "
              << rat_str(rr.params.lambda) << ", mu = " << rat_str(rr.params.mu)
              << "\n";
  }
  if (dec.reached_zero) {
    std::cout << "decomposition reached the zero algebra in " << dec.steps.size()
              << " step(s)\n";
  } else {
    std::cout << "stuck at dimension " << dec.stuck->dim() << ": " << dec.note
              << "\n";
  }
  return kOk;
}

int run_cotangent(const std::string& data_path, bool hess,
                  const std::string& base_path, const std::string& out) {
  CotangentData data{Algebra(0), Tensor3(0), Tensor3(0)};
  if (hess) {
    const AlgebraFile base = load_algebra(base_path);
    data = CotangentData::plain(base.algebra);
  } else {
    data = cotangent_from_json(parse_text(read_file(data_path)));
  }
  const VerificationReport rep = validate_cotangent(data);
  print_report(rep, false);
  if (!rep.all_passed()) return kCheckFailed;
  const FaslaTriple t = hess ? hess_product(data.base) : twisted_cotangent(data);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < data.base.dim; ++i)
    labels.push_back("a" + std::to_string(i + 1) + "*");
  for (std::size_t i = 0; i < data.base.dim; ++i)
    labels.push_back("a" + std::to_string(i + 1));
  write_file(out, dump_canonical(algebra_to_json({t.algebra, t.omega, labels})));
  std::cout << "wrote " << out << " (dim " << t.dim() << ")\n";
  return kOk;
}

int run_detect_lagrangian(const std::string& input) {
  const FaslaTriple t = load_algebra(input).triple();
  const auto split = detect_lagrangian_ideal(t);
  if (!split) {
    std::cout << "no Lagrangian bilateral ideal found (restricted search; "
                 "this is not a nonexistence proof)\n";
    return kOk;
  }
  std::cout << "ideal basis:\n";
  for (const Vec& v : split->ideal_basis) std::cout << "  " << vec_str(v) << "\n";
  std::cout << "recovered data:\n"
            << dump_canonical(cotangent_to_json(split->data));
  return kOk;
}

Mat module_matrix_from_json(const Json& rows, std::size_t m,
                            const ParseOptions& opt) {
  Mat mm(m, m);
  if (!rows.is_array() || rows.size() != m)
    throw ParseError("module action matrix has the wrong shape");
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m)
      throw ParseError("module action matrix has the wrong shape");
    for (std::size_t c = 0; c < m; ++c) {
      const Json& cell = rows[i][c];
      if (cell.is_string())
        mm.at(i, c) = parse_rat(cell.get<std::string>());
      else if (cell.is_number_integer())
        mm.at(i, c) = Rat(cell.get<long>());
      else if (cell.is_number() && opt.approx)
        mm.at(i, c) = rat_from_double(cell.get<double>(), opt.tolerance);
      else
        throw ParseError("module action entries must be rational strings");
    }
  }
  return mm;
}

int run_cohomology(const std::string& input, std::size_t degree,
                   const std::string& module, bool approx) {
  const AlgebraFile f = load_algebra(input, approx);
  Bimodule bim = Bimodule::trivial(f.algebra, 1);
  if (module == "trivial") {
    // already set
  } else if (module == "canonical-dual") {
    bim = Bimodule::coadjoint_dual(f.algebra);
  } else {
    const Json j = parse_text(read_file(module));
    if (!j.contains("module_dim") || !j.contains("left_action") ||
        !j.contains("right_action"))
      throw ParseError(
          "module file needs module_dim, left_action and right_action");
    ParseOptions opt;
    opt.approx = approx;
    const std::size_t m = j["module_dim"].get<std::size_t>();
    if (j["left_action"].size() != f.algebra.dim ||
        j["right_action"].size() != f.algebra.dim)
      throw ParseError("module file needs one action matrix per basis vector");
    bim.module_dim = m;
    bim.left_action.clear();
    bim.right_action.clear();
    for (const auto& rows : j["left_action"])
      bim.left_action.push_back(module_matrix_from_json(rows, m, opt));
    for (const auto& rows : j["right_action"])
      bim.right_action.push_back(module_matrix_from_json(rows, m, opt));
  }
  const VerificationReport rep =
      check_bimodule(bim.base, bim.left_action, bim.right_action);
  if (!rep.all_passed()) {
    print_report(rep, false);
    return kCheckFailed;
  }
  const CohomologyDims dims = cohomology_dims(bim, degree);
  std::cout << "degree " << degree << ": cocycles " << dims.cocycles
            << ", coboundaries " << dims.coboundaries << ", cohomology "
            << dims.cohomology << "\n";
  return kOk;
}

int run_complete(const std::string& input, bool approx) {
  const FaslaTriple t = load_algebra(input, approx).triple();
  const CompletenessReport rep = completeness(t, env_seed());
  std::cout << "unimodular: " << (rep.unimodular ? "yes" : "no") << "\n";
  std::cout << "traces of ad on the basis:";
  for (const Rat& r : rep.traces_ad) std::cout << " " << rat_str(r);
  std::cout << "\ntraces of R on the basis:";
  for (const Rat& r : rep.traces_R) std::cout << " " << rat_str(r);
  std::cout << "\nright multiplications nilpotent (sampled): "
            << (rep.right_mults_nilpotent ? "yes" : "no") << "\n";
  std::cout << "verdict: " << (rep.complete ? "complete" : "incomplete") << "\n";
  return kOk;
}

int run_etale(const std::string& input, const std::string& x_text, bool approx,
              std::size_t order) {
  const FaslaTriple t = load_algebra(input, approx).triple();
  Vec x(t.dim());
  {
    std::size_t i = 0;
    std::string token;
    for (const char* p = x_text.c_str();; ++p) {
      if (*p == ',' || *p == '\0') {
        if (i >= t.dim()) throw ParseError("--x has too many entries");
        x[i++] = approx && token.find_first_of(".eE") != std::string::npos
                     ? rat_from_double(std::stod(token))
                     : parse_rat(token);
        token.clear();
        if (*p == '\0') break;
      } else if (*p != ' ') {
        token += *p;
      }
    }
    if (i != t.dim()) throw ParseError("--x has too few entries");
  }
  try {
    const AffineSymplecticElement el = etale_representation(t, x);
    std::cout << "Q = " << vec_str(el.translation) << "\nF =\n"
              << mat_str(el.linear);
    std::cout << "symplectic: " << (symplectic_check(el, t.omega) ? "yes" : "no")
              << "\n";
    return kOk;
  } catch (const NonNilpotentError& e) {
    if (!approx) {
      std::cout << e.what() << "\n";
      return kCheckFailed;
    }
    // floating truncation for exploration only
    const std::size_t cap = order == 0 ? 16 : order;
    const Mat l = left_mult_matrix(t.algebra, x);
    const std::size_t n = t.dim();
    std::vector<double> lf(n * n), qf(n, 0.0), pw(n * n, 0.0), ff(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lf[i * n + j] = l.at(i, j).get_d();
    for (std::size_t i = 0; i < n; ++i) {
      pw[i * n + i] = 1.0;
      ff[i * n + i] = 1.0;
    }
    double norm1 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double colsum = 0.0;
      for (std::size_t i = 0; i < n; ++i) colsum += std::abs(lf[i * n + j]);
      norm1 = std::max(norm1, colsum);
    }
    double kfact = 1.0;
    for (std::size_t k = 1; k <= cap; ++k) {
      kfact /= static_cast<double>(k);
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += pw[i * n + j] * x[j].get_d();
        qf[i] += kfact * s;
      }
      std::vector<double> nxt(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t j = 0; j < n; ++j)
            nxt[i * n + j] += pw[i * n + q] * lf[q * n + j];
      pw = std::move(nxt);
      if (k < cap)
        for (std::size_t i = 0; i < n * n; ++i) ff[i] += kfact * pw[i];
    }
    double tail = 1.0;
    for (std::size_t k = 1; k <= cap + 1; ++k)
      tail *= norm1 / static_cast<double>(k);
    std::cout << "L_x is not nilpotent; floating truncation at order " << cap
              << " (tail estimate " << tail << "):\nQ ~ (";
    for (std::size_t i = 0; i < n; ++i) std::cout << (i ? ", " : "") << qf[i];
    std::cout << ")\nF ~\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << "  [";
      for (std::size_t j = 0; j < n; ++j)
        std::cout << (j ? " " : "") << ff[i * n + j];
      std::cout << "]\n";
    }
    return kOk;
  }
}

int run_central(const std::string& input, bool approx) {
  const FaslaTriple t = load_algebra(input, approx).triple();
  const auto central = central_translations(t);
  const auto translations = translation_directions(t);
  std::cout << "central translation directions (" << central.size() << "):\n";
  for (const Vec& v : central) std::cout << "  " << vec_str(v) << "\n";
  std::cout << "translation directions (" << translations.size() << "):\n";
  for (const Vec& v : translations) std::cout << "  " << vec_str(v) << "\n";
  return kOk;
}

int run_catalog(bool list, const std::string& emit, const std::string& family,
                const std::string& beta, const std::string& lambda,
                const std::string& mu, const std::string& out) {
  if (list) {
    for (const auto& e : builtin_suite()) {
      std::cout << e.name << " (dim " << e.triple.dim() << ")";
      if (!e.note.empty()) std::cout << ": " << e.note;
      std::cout << "\n";
    }
    return kOk;
  }
  if (!family.empty()) {
    if (family != "dim2") throw ParseError("unknown family: " + family);
    const FaslaTriple t =
        dim2_family(parse_rat(beta), parse_rat(lambda), parse_rat(mu));
    const std::string text = dump_canonical(algebra_to_json(
        {t.algebra, t.omega, std::vector<std::string>{"e", "d"}}));
    if (out.empty())
      std::cout << text;
    else {
      write_file(out, text);
      std::cout << "wrote " << out << "\n";
    }
    return kOk;
  }
  if (emit.empty())
    throw ParseError("catalog needs --list, --emit or --family");
  for (const auto& e : builtin_suite()) {
    if (e.name != emit) continue;
    const std::string text = dump_canonical(
        algebra_to_json({e.triple.algebra, e.triple.omega, std::nullopt}));
    if (out.empty())
      std::cout << text;
    else {
      write_file(out, text);
      std::cout << "wrote " << out << "\n";
    }
    return kOk;
  }
  throw ParseError("unknown catalog entry: " + emit);
}

int run_chu(const std::string& input, const std::string& out) {
  const AlgebraFile f = load_algebra(input);
  if (!f.omega) throw ParseError("chu needs a form in the input file");
  const Algebra conn = chu_connection(f.algebra, *f.omega);
  const bool compatible = check_compatibility(conn, *f.omega).all_passed();
  std::cout << "connection is left-symmetric with the given bracket as "
               "commutator\n";
  std::cout << "form-compatible: " << (compatible ? "yes" : "no") << "\n";
  if (!out.empty()) {
    write_file(out, dump_canonical(algebra_to_json({conn, f.omega, f.labels})));
    std::cout << "wrote " << out << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tools for flat affine symplectic Lie algebras"};
  app.require_subcommand(1);

  std::string input, base_path, params_path, data_path, out, out_base, out_params;
  std::string module = "trivial", x_text, family, beta = "0", lambda = "0",
              mu = "0", emit;
  bool as_json = false, hess = false, approx = false, list = false;
  long e_idx = -1, d_idx = -1;
  std::size_t degree = 2, order = 0;

  CLI::App* verify = app.add_subcommand("verify", "decide the axioms of a triple");
  verify->add_option("--input", input)->required();
  verify->add_flag("--json", as_json, "machine-readable report");

  CLI::App* dext = app.add_subcommand("double-extend",
                                      "extend a triple by a hyperbolic plane");
  dext->add_option("--base", base_path)->required();
  dext->add_option("--params", params_path)->required();
  dext->add_option("--out", out)->required();

  CLI::App* reduce = app.add_subcommand(
      "reduce", "invert a double extension along an ideal direction");
  reduce->add_option("--input", input)->required();
  reduce->add_option("--e", e_idx, "basis index of the ideal direction");
  reduce->add_option("--d", d_idx, "basis index pairing with e");
  reduce->add_option("--out-base", out_base);
  reduce->add_option("--out-params", out_params);

  CLI::App* dec = app.add_subcommand("decompose",
                                     "chain reductions down to the zero algebra");
  dec->add_option("--input", input)->required();

  CLI::App* cot = app.add_subcommand("cotangent", "build a twisted cotangent triple");
  cot->add_option("--data", data_path);
  cot->add_flag("--hess", hess, "null companion and cocycle over --base");
  cot->add_option("--base", base_path);
  cot->add_option("--out", out)->required();

  CLI::App* det = app.add_subcommand("detect-lagrangian",
                                     "search for a Lagrangian bilateral ideal");
  det->add_option("--input", input)->required();

  CLI::App* coh = app.add_subcommand(
      "cohomology", "cocycle, coboundary and cohomology dimensions");
  coh->add_option("--input", input)->required();
  coh->add_option("--degree", degree)->required();
  coh->add_option("--module", module, "trivial, canonical-dual, or a module file");
  coh->add_flag("--approx", approx, "accept plain numbers in the input");

  CLI::App* comp = app.add_subcommand("complete", "geodesic completeness analysis");
  comp->add_option("--input", input)->required();
  comp->add_flag("--approx", approx);

  CLI::App* eta = app.add_subcommand("etale", "exact exponential pair at a direction");
  eta->add_option("--input", input)->required();
  eta->add_option("--x", x_text)->required();
  eta->add_flag("--approx", approx,
                "floating truncation for non-nilpotent directions");
  eta->add_option("--order", order, "truncation order with --approx");

  CLI::App* cen = app.add_subcommand(
      "central", "translation and central-translation directions");
  cen->add_option("--input", input)->required();
  cen->add_flag("--approx", approx);

  CLI::App* cat = app.add_subcommand("catalog", "built-in instances");
  cat->add_flag("--list", list);
  cat->add_option("--emit", emit, "entry name");
  cat->add_option("--family", family, "parameterized family (dim2)");
  cat->add_option("--beta", beta);
  cat->add_option("--lambda", lambda);
  cat->add_option("--mu", mu);
  cat->add_option("--out", out);

  CLI::App* chu = app.add_subcommand("chu", "the connection determined by the form");
  chu->add_option("--input", input)->required();
  chu->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(input, as_json);
    if (dext->parsed()) return run_double_extend(base_path, params_path, out);
    if (reduce->parsed())
      return run_reduce(input, e_idx, d_idx, out_base, out_params);
    if (dec->parsed()) return run_decompose(input);
    if (cot->parsed()) {
      if (hess && base_path.empty()) throw ParseError("--hess needs --base");
      if (!hess && data_path.empty())
        throw ParseError("cotangent needs --data or --hess with --base");
      return run_cotangent(data_path, hess, base_path, out);
    }
    if (det->parsed()) return run_detect_lagrangian(input);
    if (coh->parsed()) return run_cohomology(input, degree, module, approx);
    if (comp->parsed()) return run_complete(input, approx);
    if (eta->parsed()) return run_etale(input, x_text, approx, order);
    if (cen->parsed()) return run_central(input, approx);
    if (cat->parsed())
      return run_catalog(list, emit, family, beta, lambda, mu, out);
    if (chu->parsed()) return run_chu(input, out);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ValidationError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kBadInput;
}
