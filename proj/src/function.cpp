#include "mnat/function.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mnat/errors.hpp"

namespace mnat {

using nlohmann::json;

TabulatedFunction::TabulatedFunction(int dim) : dim_(dim) {
  if (dim < 1) {
    throw DimensionError("function dimension must be at least 1, got " +
                         std::to_string(dim));
  }
}

TabulatedFunction::TabulatedFunction(
    int dim, std::vector<std::pair<LatticePoint, Rational>> entries)
    : TabulatedFunction(dim) {
  for (auto& [p, v] : entries) insert(p, v);
}

void TabulatedFunction::insert(const LatticePoint& x, const Rational& value) {
  if (x.dim() != dim_) {
    throw DimensionError("table key " + x.to_string() + " has dimension " +
                         std::to_string(x.dim()) + ", expected " +
                         std::to_string(dim_));
  }
  auto [it, inserted] = table_.emplace(x, value);
  (void)it;
  if (!inserted) {
    throw ParseError("point " + x.to_string() + " listed more than once");
  }
}

ExtendedValue TabulatedFunction::eval(const LatticePoint& x) const {
  if (x.dim() != dim_) {
    throw DimensionError("evaluation at " + x.to_string() + " of dimension " +
                         std::to_string(x.dim()) + ", expected " +
                         std::to_string(dim_));
  }
  auto it = table_.find(x);
  if (it == table_.end()) return ExtendedValue::infinity();
  return ExtendedValue(it->second);
}

bool TabulatedFunction::in_domain(const LatticePoint& x) const {
  return x.dim() == dim_ && table_.count(x) > 0;
}

std::vector<LatticePoint> TabulatedFunction::domain() const {
  std::vector<LatticePoint> r;
  r.reserve(table_.size());
  for (const auto& [p, v] : table_) r.push_back(p);
  return r;
}

namespace {

Rational value_from_file_json(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_float()) {
    // Accept only doubles with a short exact binary expansion; anything
    // else must be spelled as a "p/q" string to stay exact.
    double d = v.get<double>();
    double scaled = d;
    std::int64_t den = 1;
    for (int k = 0; k < 40 && scaled != std::floor(scaled); ++k) {
      scaled *= 2;
      den *= 2;
    }
    if (scaled != std::floor(scaled) || std::abs(scaled) > 9.0e18) {
      throw ParseError(where + ": value " + v.dump() +
                       " is not exactly representable; use a \"p/q\" string");
    }
    return Rational(static_cast<std::int64_t>(scaled), den);
  }
  throw ParseError(where + ": expected a number or \"p/q\" string, got " +
                   v.dump());
}

}  // namespace

TabulatedFunction parse_function_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("missing integer field \"dim\"");
  }
  int dim = doc["dim"].get<int>();
  if (dim < 1) throw ParseError("\"dim\" must be at least 1");
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError("missing array field \"points\"");
  }
  TabulatedFunction f(dim);
  size_t idx = 0;
  for (const auto& entry : doc["points"]) {
    std::string where = "points[" + std::to_string(idx) + "]";
    if (!entry.is_object() || !entry.contains("x") || !entry.contains("f")) {
      throw ParseError(where + ": expected {\"x\": [...], \"f\": value}");
    }
    const json& xj = entry["x"];
    if (!xj.is_array() || xj.size() != static_cast<size_t>(dim)) {
      throw ParseError(where + ".x: expected an array of length " +
                       std::to_string(dim));
    }
    std::vector<std::int64_t> coords;
    coords.reserve(xj.size());
    for (const auto& c : xj) {
      if (!c.is_number_integer()) {
        throw ParseError(where + ".x: coordinates must be integers");
      }
      coords.push_back(c.get<std::int64_t>());
    }
    f.insert(LatticePoint(std::move(coords)),
             value_from_file_json(entry["f"], where + ".f"));
    ++idx;
  }
  return f;
}

TabulatedFunction load_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_function_json(buf.str());
}

std::string emit_function_json(const TabulatedFunction& f) {
  json points = json::array();
  for (const auto& [p, v] : f.table()) {
    json pv = json::array();
    for (auto c : p.coords()) pv.push_back(c);
    json fv;
    if (v.is_integer()) {
      fv = v.num();
    } else {
      fv = v.to_string();
    }
    points.push_back({{"x", pv}, {"f", fv}});
  }
  json doc{{"dim", f.dim()}, {"points", points}};
  return doc.dump(2) + "\n";
}

}  // namespace mnat
