#include "io.hpp"

#include <fstream>
#include <sstream>

namespace peglab::io {

namespace {

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is one past the offending character.
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    std::string msg = e.what();
    const auto pos = msg.find("syntax error");
    if (pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(origin + ":" + location(text, at) + ": " + msg);
  }
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string() + ": cannot write");
  out << text;
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (j.is_number_float()) return from_double(j.get<double>());
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  }
  throw ParseError("expected a rational string or number, got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const XReal& x) { return to_string(x); }

CurveDoc curve_from_json(const Json& j) {
  CurveDoc c;
  if (j.contains("L") && !j.at("L").is_null()) c.L = rational_from_json(j.at("L"));
  if (j.contains("degree")) c.degree = j.at("degree").get<int>();
  if (j.contains("closed")) c.closed = j.at("closed").get<bool>();
  const Json& v = field(j, "vertices");
  if (!v.is_array()) throw ParseError("\"vertices\" must be an array");
  for (const auto& p : v) {
    if (!p.is_array() || p.size() != 2) throw ParseError("vertex must be a pair [x, y]");
    c.vertices.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  return c;
}

Json to_json(const CurveDoc& c) {
  Json j;
  j["L"] = c.L ? to_json(*c.L) : Json(nullptr);
  j["degree"] = c.degree;
  j["closed"] = c.closed;
  Json v = Json::array();
  for (const auto& p : c.vertices) v.push_back({to_json(p.x), to_json(p.y)});
  j["vertices"] = std::move(v);
  return j;
}

Json to_json(const CylCurve& c) { return to_json(CurveDoc{c.L(), c.degree(), false, c.lift()}); }

Json to_json(const RPolyline& p) { return to_json(CurveDoc{std::nullopt, 0, p.closed(), p.vertices()}); }

Json to_json(const DPolyline& p) {
  Json j;
  j["L"] = nullptr;
  j["degree"] = 0;
  j["closed"] = p.closed();
  Json v = Json::array();
  for (const auto& q : p.vertices()) v.push_back({q.x, q.y});
  j["vertices"] = std::move(v);
  return j;
}

CylCurve cyl_curve(const CurveDoc& c) {
  if (!c.L) throw ParseError("cylinder curve needs \"L\"");
  CylCurve out(*c.L, c.vertices);
  if (c.degree != 0 && out.degree() != c.degree)
    throw ParseError("declared degree " + std::to_string(c.degree) + " does not match the lift");
  return out;
}

RPolyline polyline(const CurveDoc& c) { return RPolyline(c.vertices, c.closed); }

RFunction graph_function(const CurveDoc& c) {
  std::vector<Rational> t, v;
  for (const auto& p : c.vertices) {
    t.push_back(p.x);
    v.push_back(p.y);
  }
  return RFunction::interval(std::move(t), std::move(v));
}

CylCurve load_cyl_curve(const std::filesystem::path& path) {
  try {
    return cyl_curve(curve_from_json(load_json(path)));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

std::pair<RFunction, RFunction> load_pair(const std::filesystem::path& path) {
  const Json j = load_json(path);
  try {
    return {graph_function(curve_from_json(field(j, "f"))), graph_function(curve_from_json(field(j, "g")))};
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

AdfInstance load_instance(const std::filesystem::path& path) {
  const Json j = load_json(path);
  try {
    const Json& y = field(j, "y");
    if (!y.is_array() || y.size() != 3) throw ParseError("\"y\" must hold three lists");
    std::array<std::vector<Rational>, 3> lists;
    for (int i = 0; i < 3; ++i)
      for (const auto& v : y[i]) lists[i].push_back(rational_from_json(v));
    return AdfInstance(std::move(lists));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json to_json(const AdfInstance& inst) {
  Json y = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json l = Json::array();
    for (const auto& v : inst.list(i)) l.push_back(to_json(v));
    y.push_back(std::move(l));
  }
  Json j;
  j["y"] = std::move(y);
  return j;
}

SquareTrace<Rational> load_trace(const std::filesystem::path& path) {
  const Json j = load_json(path);
  SquareTrace<Rational> t;
  try {
    auto read = [&](const char* key, std::vector<Rational>& out) {
      for (const auto& v : field(j, key)) out.push_back(rational_from_json(v));
    };
    read("grid", t.grid);
    read("x", t.x);
    read("y", t.y);
    read("a", t.a);
    read("b", t.b);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return t;
}

}  // namespace peglab::io
