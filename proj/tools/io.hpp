#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "peglab/adf.hpp"
#include "peglab/geom.hpp"
#include "peglab/square.hpp"

namespace peglab::io {

using Json = nlohmann::ordered_json;

/// Malformed input, with a "path:line:col: " prefix when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json load_json(const std::filesystem::path& path);
Json parse_json(const std::string& text, const std::string& origin = "<input>");
void write_text(const std::filesystem::path& path, const std::string& text);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);

/// Curve document: {"L", "degree", "closed", "vertices"}.
struct CurveDoc {
  std::optional<Rational> L;
  int degree = 0;
  bool closed = false;
  std::vector<RPoint> vertices;
};

CurveDoc curve_from_json(const Json& j);
Json to_json(const CurveDoc& c);
Json to_json(const CylCurve& c);
Json to_json(const RPolyline& p);
Json to_json(const DPolyline& p);

CylCurve cyl_curve(const CurveDoc& c);
RPolyline polyline(const CurveDoc& c);
/// Open curve read as the graph of a function of x.
RFunction graph_function(const CurveDoc& c);

CylCurve load_cyl_curve(const std::filesystem::path& path);
/// {"f": curve, "g": curve}.
std::pair<RFunction, RFunction> load_pair(const std::filesystem::path& path);
/// {"y": [[...], [...], [...]]}.
AdfInstance load_instance(const std::filesystem::path& path);
Json to_json(const AdfInstance& inst);
/// {"grid", "x", "y", "a", "b"} with rational entries.
SquareTrace<Rational> load_trace(const std::filesystem::path& path);

Json to_json(const XReal& x);

}  // namespace peglab::io
