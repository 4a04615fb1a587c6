#include "cvxmetric/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cvxmetric/errors.hpp"
#include "json.hpp"

namespace cvxmetric {
namespace {

using nlohmann::json;

[[noreturn]] void parse_failure(const std::string& text, std::size_t byte,
                                const std::string& what) {
  std::size_t line = 1, col = 1;
  const std::size_t stop = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw Error("JSON parse error at line " + std::to_string(line) + ", column " +
              std::to_string(col) + ": " + what);
}

double expect_number(const json& j, const char* where) {
  if (!j.is_number()) throw Error(std::string("body JSON: ") + where + " must be a number");
  return j.get<double>();
}

Vector expect_vector(const json& j, const char* where) {
  if (!j.is_array()) throw Error(std::string("body JSON: ") + where + " must be an array");
  Vector v;
  v.reserve(j.size());
  for (const json& e : j) v.push_back(expect_number(e, where));
  return v;
}

std::vector<Vector> expect_rows(const json& j, const char* where) {
  if (!j.is_array() || j.empty())
    throw Error(std::string("body JSON: ") + where + " must be a nonempty array of arrays");
  std::vector<Vector> rows;
  rows.reserve(j.size());
  for (const json& r : j) rows.push_back(expect_vector(r, where));
  return rows;
}

void append_vector(std::string& out, const Vector& v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_real(v[i]);
  }
  out += ']';
}

void append_rows(std::string& out, const std::vector<Vector>& rows) {
  out += '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    append_vector(out, rows[i]);
  }
  out += ']';
}

}  // namespace

ConvexBody parse_body_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_failure(text, e.byte, e.what());
  }
  if (!doc.is_object()) throw Error("body JSON: top level must be an object");
  if (!doc.contains("type") || !doc["type"].is_string())
    throw Error("body JSON: missing string field \"type\"");
  const std::string type = doc["type"].get<std::string>();

  if (type == "hpolytope") {
    if (!doc.contains("A") || !doc.contains("b"))
      throw Error("body JSON: hpolytope needs \"A\" and \"b\"");
    std::vector<Vector> rows = expect_rows(doc["A"], "\"A\"");
    Vector b = expect_vector(doc["b"], "\"b\"");
    if (rows.size() != b.size())
      throw Error("body JSON: \"A\" row count must match \"b\" length");
    return ConvexBody::hpolytope(Matrix::from_rows(rows), std::move(b));
  }
  if (type == "vpolytope") {
    if (!doc.contains("vertices")) throw Error("body JSON: vpolytope needs \"vertices\"");
    return ConvexBody::vpolytope(expect_rows(doc["vertices"], "\"vertices\""));
  }
  if (type == "ball") {
    if (!doc.contains("center") || !doc.contains("radius"))
      throw Error("body JSON: ball needs \"center\" and \"radius\"");
    return ConvexBody::ball(expect_vector(doc["center"], "\"center\""),
                            expect_number(doc["radius"], "\"radius\""));
  }
  throw Error("body JSON: unknown type \"" + type + "\"");
}

ConvexBody load_body_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open body file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_body_json(buf.str());
}

std::string body_to_json(const ConvexBody& body) {
  std::string out;
  if (const HPolytope* hp = body.as_hpolytope()) {
    out += "{\"type\": \"hpolytope\", \"A\": ";
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < hp->a.rows; ++i) rows.push_back(hp->a.row(i));
    append_rows(out, rows);
    out += ", \"b\": ";
    append_vector(out, hp->b);
    out += '}';
  } else if (const VPolytope* vp = body.as_vpolytope()) {
    out += "{\"type\": \"vpolytope\", \"vertices\": ";
    append_rows(out, vp->vertices);
    out += '}';
  } else {
    const Ball* bl = body.as_ball();
    out += "{\"type\": \"ball\", \"center\": ";
    append_vector(out, bl->center);
    out += ", \"radius\": " + format_real(bl->radius) + '}';
  }
  return out;
}

std::vector<Vector> load_points_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open points file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_points_csv(buf.str());
}

std::vector<Vector> parse_points_csv(const std::string& text) {
  std::vector<Vector> points;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    try {
      points.push_back(parse_point_arg(line));
    } catch (const Error& e) {
      throw Error("points CSV line " + std::to_string(lineno) + ": " + e.what());
    }
    if (points.size() > 1 && points.back().size() != points.front().size())
      throw Error("points CSV line " + std::to_string(lineno) +
                  ": inconsistent dimension");
  }
  if (points.empty()) throw Error("points CSV: no rows");
  return points;
}

Vector parse_point_arg(const std::string& text) {
  Vector v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string field = text.substr(pos, comma - pos);
    const char* s = field.c_str();
    char* end = nullptr;
    const double val = std::strtod(s, &end);
    while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
    if (end == s || (end && *end != '\0'))
      throw Error("cannot parse coordinate \"" + field + "\"");
    v.push_back(val);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  if (v.empty()) throw Error("empty coordinate list");
  return v;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string ext_real_to_json(const ExtReal& v) {
  if (v.is_inf()) return "\"inf\"";
  return format_real(v.value());
}

std::string fixture_to_json(const ConvexBody& body, const PiecewiseAffineConvexFn& fn) {
  std::string out = "{\"body\": " + body_to_json(body) + ", \"fn\": {\"pieces\": [";
  const std::vector<AffinePiece>& pieces = fn.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) out += ", ";
    out += "{\"gradient\": ";
    append_vector(out, pieces[i].gradient);
    out += ", \"offset\": " + format_real(pieces[i].offset) + '}';
  }
  out += "], \"m\": " + format_real(fn.m()) + ", \"M\": " + format_real(fn.M()) +
         ", \"scale\": " + format_real(fn.scale()) +
         ", \"h_max\": " + format_real(fn.h_max()) + "}}";
  return out;
}

}  // namespace cvxmetric
