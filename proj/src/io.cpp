#include "fasla/io.hpp"

#include <fstream>
#include <sstream>

namespace fasla {

FaslaTriple AlgebraFile::triple() const {
  if (!omega) throw ValidationError("algebra file carries no form");
  return {algebra, *omega};
}

namespace {

Rat scalar_from_json(const Json& j, const ParseOptions& opt) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long>()));
  if (j.is_number() && opt.approx)
    return rat_from_double(j.get<double>(), opt.tolerance);
  if (j.is_number())
    throw ParseError(
        "plain numbers are only accepted in approximate mode; write scalars "
        "as \"p/q\" strings");
  throw ParseError("expected a rational scalar, got " + j.dump());
}

Json scalar_to_json(const Rat& r) { return Json(rat_str(r)); }

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j, const ParseOptions& opt) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of arrays)");
  const std::size_t rows = j.size();
  if (rows == 0) return Mat(0, 0);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = scalar_from_json(j[i][c], opt);
  }
  return m;
}

Json vector_to_json(const Vec& v) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    arr.push_back(scalar_to_json(v[i]));
  return arr;
}

Vec vector_from_json(const Json& j, const ParseOptions& opt) {
  if (!j.is_array()) throw ParseError("expected a vector (array)");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[i] = scalar_from_json(j[i], opt);
  return v;
}

Json tensor_to_json(const Tensor3& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < t.dim(); ++k)
        row.push_back(scalar_to_json(t.at(i, j, k)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Tensor3 tensor_from_json(const Json& j, std::size_t n,
                         const ParseOptions& opt) {
  if (!j.is_array() || j.size() != n)
    throw ParseError("product tensor must have one plane per basis vector");
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw ParseError("product tensor plane has the wrong shape");
    for (std::size_t q = 0; q < n; ++q) {
      if (!j[i][q].is_array() || j[i][q].size() != n)
        throw ParseError("product tensor row has the wrong shape");
      for (std::size_t k = 0; k < n; ++k)
        t.at(i, q, k) = scalar_from_json(j[i][q][k], opt);
    }
  }
  return t;
}

}  // namespace

Json algebra_to_json(const AlgebraFile& f) {
  Json j;
  j["dim"] = f.algebra.dim;
  j["field"] = "rational";
  j["product"] = tensor_to_json(f.algebra.product);
  j["omega"] = f.omega ? matrix_to_json(f.omega->gram) : Json(nullptr);
  if (f.labels) {
    Json arr = Json::array();
    for (const std::string& s : *f.labels) arr.push_back(s);
    j["labels"] = std::move(arr);
  } else {
    j["labels"] = nullptr;
  }
  return j;
}

AlgebraFile algebra_from_json(const Json& j, const ParseOptions& opt) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw ParseError("algebra file needs a nonnegative integer \"dim\"");
  const std::size_t n = j["dim"].get<std::size_t>();
  if (j.contains("field") && j["field"] != "rational")
    throw ParseError("unsupported field: " + j["field"].dump());
  if (!j.contains("product")) throw ParseError("algebra file needs \"product\"");

  AlgebraFile f;
  f.algebra = Algebra(n, tensor_from_json(j["product"], n, opt));
  if (j.contains("omega") && !j["omega"].is_null()) {
    Mat g = matrix_from_json(j["omega"], opt);
    if (g.rows() != n || g.cols() != n)
      throw ParseError("omega must be a dim x dim matrix");
    f.omega = SymplecticForm(std::move(g));
  }
  if (j.contains("labels") && !j["labels"].is_null()) {
    std::vector<std::string> labels;
    for (const auto& s : j["labels"]) {
      if (!s.is_string()) throw ParseError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
    if (labels.size() != n)
      throw ParseError("labels length must equal the dimension");
    f.labels = std::move(labels);
  }
  return f;
}

Json params_to_json(const ExtensionParams& p) {
  Json j;
  j["u"] = matrix_to_json(p.u);
  j["D"] = matrix_to_json(p.D);
  j["x0"] = vector_to_json(p.x0);
  j["z0"] = vector_to_json(p.z0);
  j["beta"] = scalar_to_json(p.beta);
  j["lambda"] = scalar_to_json(p.lambda);
  j["mu"] = scalar_to_json(p.mu);
  return j;
}

ExtensionParams params_from_json(const Json& j, const ParseOptions& opt) {
  if (!j.is_object()) throw ParseError("params file must be a JSON object");
  for (const char* key : {"u", "D", "x0", "z0", "beta", "lambda", "mu"})
    if (!j.contains(key))
      throw ParseError(std::string("params file needs \"") + key + "\"");
  ExtensionParams p;
  p.u = matrix_from_json(j["u"], opt);
  p.D = matrix_from_json(j["D"], opt);
  p.x0 = vector_from_json(j["x0"], opt);
  p.z0 = vector_from_json(j["z0"], opt);
  p.beta = scalar_from_json(j["beta"], opt);
  p.lambda = scalar_from_json(j["lambda"], opt);
  p.mu = scalar_from_json(j["mu"], opt);
  const std::size_t n = p.x0.size();
  if (p.u.rows() != n || p.u.cols() != n || p.D.rows() != n ||
      p.D.cols() != n || p.z0.size() != n)
    throw ParseError("params entries disagree on the base dimension");
  // a dim-0 matrix serialized as [] round-trips as 0x0
  return p;
}

Json cotangent_to_json(const CotangentData& d) {
  Json j;
  j["base"] = algebra_to_json({d.base, std::nullopt, std::nullopt});
  j["circ"] = tensor_to_json(d.circ);
  j["f"] = tensor_to_json(d.f);
  return j;
}

CotangentData cotangent_from_json(const Json& j, const ParseOptions& opt) {
  if (!j.is_object() || !j.contains("base") || !j.contains("circ") ||
      !j.contains("f"))
    throw ParseError("cotangent file needs \"base\", \"circ\" and \"f\"");
  const AlgebraFile base = algebra_from_json(j["base"], opt);
  const std::size_t n = base.algebra.dim;
  return CotangentData{base.algebra, tensor_from_json(j["circ"], n, opt),
                       tensor_from_json(j["f"], n, opt)};
}

namespace {

Json cochain_level(const Cochain& c, std::size_t depth, std::size_t offset,
                   std::size_t stride) {
  Json arr = Json::array();
  if (depth == c.degree()) {
    for (std::size_t v = 0; v < c.module_dim(); ++v)
      arr.push_back(scalar_to_json(c.coeff(offset + v)));
    return arr;
  }
  if (c.base_dim() == 0) return arr;
  const std::size_t sub = stride / c.base_dim();
  for (std::size_t i = 0; i < c.base_dim(); ++i)
    arr.push_back(cochain_level(c, depth + 1, offset + i * sub, sub));
  return arr;
}

void cochain_fill(Cochain& c, const Json& j, std::size_t depth,
                  std::size_t offset, std::size_t stride,
                  const ParseOptions& opt) {
  if (depth == c.degree()) {
    if (!j.is_array() || j.size() != c.module_dim())
      throw ParseError("cochain value has the wrong module dimension");
    for (std::size_t v = 0; v < c.module_dim(); ++v)
      c.coeff(offset + v) = scalar_from_json(j[v], opt);
    return;
  }
  if (!j.is_array() || j.size() != c.base_dim())
    throw ParseError("cochain nesting does not match the declared degree");
  if (c.base_dim() == 0) return;
  const std::size_t sub = stride / c.base_dim();
  for (std::size_t i = 0; i < c.base_dim(); ++i)
    cochain_fill(c, j[i], depth + 1, offset + i * sub, sub, opt);
}

}  // namespace

Json cochain_to_json(const Cochain& c) {
  Json j;
  j["degree"] = c.degree();
  j["base_dim"] = c.base_dim();
  j["module_dim"] = c.module_dim();
  j["coeffs"] = cochain_level(c, 0, 0, c.flat_size());
  return j;
}

Cochain cochain_from_json(const Json& j, const ParseOptions& opt) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("base_dim") ||
      !j.contains("module_dim") || !j.contains("coeffs"))
    throw ParseError("cochain file needs degree, base_dim, module_dim, coeffs");
  Cochain c(j["degree"].get<std::size_t>(), j["base_dim"].get<std::size_t>(),
            j["module_dim"].get<std::size_t>());
  cochain_fill(c, j["coeffs"], 0, 0, c.flat_size(), opt);
  return c;
}

Json report_to_json(const VerificationReport& r) {
  Json arr = Json::array();
  for (const CheckResult& c : r.checks) {
    Json line;
    line["check"] = c.name;
    line["passed"] = c.passed;
    if (c.witness) {
      Json w = Json::array();
      for (std::size_t i : *c.witness) w.push_back(i);
      line["witness"] = std::move(w);
    } else {
      line["witness"] = nullptr;
    }
    line["discrepancy"] =
        c.discrepancy ? Json(rat_str(*c.discrepancy)) : Json(nullptr);
    arr.push_back(std::move(line));
  }
  return arr;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // translate the byte offset into line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << "JSON syntax error at line " << line << ", column " << col << ": "
       << e.what();
    throw ParseError(os.str());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << contents;
}

}  // namespace fasla
