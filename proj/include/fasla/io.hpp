#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fasla/catalog.hpp"

namespace fasla {

using Json = nlohmann::ordered_json;

/// Contents of an algebra file: the product tensor, optionally a form and
/// basis labels.
struct AlgebraFile {
  Algebra algebra;
  std::optional<SymplecticForm> omega;
  std::optional<std::vector<std::string>> labels;

  FaslaTriple triple() const;
};

struct ParseOptions {
  /// Accept plain JSON numbers and round them to rationals (tolerance
  /// 1e-9). Off by default; every identity-checking path stays exact.
  bool approx = false;
  double tolerance = 1e-9;
};

Json algebra_to_json(const AlgebraFile& f);
AlgebraFile algebra_from_json(const Json& j, const ParseOptions& opt = {});

Json params_to_json(const ExtensionParams& p);
ExtensionParams params_from_json(const Json& j, const ParseOptions& opt = {});

Json cotangent_to_json(const CotangentData& d);
CotangentData cotangent_from_json(const Json& j, const ParseOptions& opt = {});

/// Degree header plus nested rational arrays (degree-many levels of base
/// indices, innermost the module coordinates).
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, const ParseOptions& opt = {});

Json report_to_json(const VerificationReport& r);

/// Canonical text: two-space indentation, one trailing newline, scalars in
/// lowest terms. Serialize/parse/serialize is byte-identical.
std::string dump_canonical(const Json& j);

Json parse_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace fasla
