#pragma once

// JSON input/output. Rationals travel as strings ("5", "-3/7") so nothing is
// ever rounded. Opt-in: not pulled in by chambers.hpp.

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arrangement.hpp"
#include "fourier_motzkin.hpp"
#include "linalg.hpp"
#include "min_norm_point.hpp"
#include "rational.hpp"
#include "sign_vector.hpp"

namespace chambers {

using json = nlohmann::json;

inline json rational_to_json(const Rat& r) { return to_string(r); }

inline Rat rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected rational as string or integer");
}

inline json vector_to_json(const Vector<Rat>& v) {
  json out = json::array();
  for (const Rat& c : v) out.push_back(rational_to_json(c));
  return out;
}

inline Vector<Rat> vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of rationals");
  Vector<Rat> v;
  v.reserve(j.size());
  for (const json& c : j) v.push_back(rational_from_json(c));
  return v;
}

// {"dimension": 3, "points": [["1","0","-1/2"], ...]}
inline std::vector<Vector<Rat>> points_from_json(const json& j) {
  if (!j.contains("dimension") || !j.contains("points"))
    throw std::invalid_argument("points file needs \"dimension\" and \"points\"");
  std::size_t dim = j.at("dimension").get<std::size_t>();
  std::vector<Vector<Rat>> points;
  for (const json& p : j.at("points")) {
    Vector<Rat> v = vector_from_json(p);
    if (v.size() != dim) throw std::invalid_argument("point of wrong dimension");
    points.push_back(std::move(v));
  }
  return points;
}

inline json points_to_json(const std::vector<Vector<Rat>>& points, std::size_t dim) {
  json out;
  out["dimension"] = dim;
  out["points"] = json::array();
  for (const auto& p : points) out["points"].push_back(vector_to_json(p));
  return out;
}

// {"variables": 2,
//  "constraints": [{"coefficients": ["1","-1"], "relation": ">", "rhs": "0"}]}
inline LinearSystem<Rat> system_from_json(const json& j) {
  if (!j.contains("variables") || !j.contains("constraints"))
    throw std::invalid_argument("system file needs \"variables\" and \"constraints\"");
  LinearSystem<Rat> sys;
  sys.num_vars = j.at("variables").get<std::size_t>();
  for (const json& c : j.at("constraints")) {
    LinearConstraint<Rat> row;
    row.coeffs = vector_from_json(c.at("coefficients"));
    if (row.coeffs.size() != sys.num_vars)
      throw std::invalid_argument("constraint of wrong arity");
    std::string rel = c.at("relation").get<std::string>();
    if (rel == ">=")
      row.rel = Rel::ge;
    else if (rel == ">")
      row.rel = Rel::gt;
    else
      throw std::invalid_argument("relation must be \">=\" or \">\"");
    row.rhs = rational_from_json(c.at("rhs"));
    sys.constraints.push_back(std::move(row));
  }
  return sys;
}

inline json system_to_json(const LinearSystem<Rat>& sys) {
  json out;
  out["variables"] = sys.num_vars;
  out["constraints"] = json::array();
  for (const auto& c : sys.constraints) {
    json row;
    row["coefficients"] = vector_to_json(c.coeffs);
    row["relation"] = c.rel == Rel::ge ? ">=" : ">";
    row["rhs"] = rational_to_json(c.rhs);
    out["constraints"].push_back(std::move(row));
  }
  return out;
}

inline json chamber_complex_to_json(const ChamberComplex<Rat>& complex) {
  json out;
  out["count"] = complex.chambers.size();
  out["chambers"] = json::array();
  for (const auto& ch : complex.chambers) {
    json row;
    row["signs"] = ch.signs.to_string();
    row["witness"] = vector_to_json(ch.witness);
    out["chambers"].push_back(std::move(row));
  }
  out["walls"] = json::array();
  for (const auto& w : complex.walls) {
    json row;
    row["from"] = w.from;
    row["to"] = w.to;
    row["hyperplane"] = w.hyperplane;
    out["walls"].push_back(std::move(row));
  }
  return out;
}

inline json min_norm_to_json(const MinNormResult<Rat>& result) {
  json out;
  out["point"] = vector_to_json(result.point);
  out["norm_squared"] = rational_to_json(result.norm_squared);
  out["support"] = result.support;
  out["coefficients"] = json::array();
  for (const Rat& c : result.coefficients)
    out["coefficients"].push_back(rational_to_json(c));
  return out;
}

}  // namespace chambers
