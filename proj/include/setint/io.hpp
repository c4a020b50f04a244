/* Copyright 2026 The setint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/**
 * @file io.hpp
 * @brief JSON schema for spaces, point sets, multifunctions and reports; CSV
 *        report emission; schedule parsing.
 *
 * Multifunction schema (the "kind" field selects the body):
 *
 *     {"kind": "constant", "space": {"dim": 2, "norm": "l2"},
 *      "boundM": 1, "diamBound": 2, "value": [[0, 0], [1, 0]]}
 *     {"kind": "piecewise_constant", ..., "breaks": [0.5], "sets": [[[0]], [[1]]]}
 *     {"kind": "moving_finite", ..., "curves": [[[0, 0], [1, 0]]]}
 *     {"kind": "convex_hull", "inner": {...}}
 *     {"kind": "counterexample_l1", "n": 3, "N": 8}
 *
 * convex_hull and counterexample_l1 derive space and bounds from their inputs.
 */

#include <cstdio>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "setint/counterexamples.hpp"
#include "setint/errors.hpp"
#include "setint/integrate.hpp"
#include "setint/multifunction.hpp"
#include "setint/partition.hpp"
#include "setint/setops.hpp"
#include "setint/spaces.hpp"

namespace setint::io {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "v1";

namespace detail {

inline const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw invalid_argument(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw invalid_argument(where + ": expected a number");
  return j.get<double>();
}

inline Vector vector_of(const json& j, const std::string& where) {
  if (!j.is_array()) throw invalid_argument(where + ": expected an array of numbers");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(number(x, where));
  return v;
}

}  // namespace detail

inline json to_json(const SpaceDescriptor& s) {
  json j{{"dim", s.dim()}, {"norm", std::string(to_string(s.norm()))}};
  j["infratype"] = s.infratype() ? json::array({s.infratype()->p, s.infratype()->C}) : json(nullptr);
  return j;
}

inline SpaceDescriptor space_from_json(const json& j) {
  const auto& dim = detail::require(j, "dim", "space");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) throw invalid_argument("space: dim must be a positive integer");
  const auto& nrm = detail::require(j, "norm", "space");
  if (!nrm.is_string()) throw invalid_argument("space: norm must be a string");
  std::optional<Infratype> it;
  if (j.contains("infratype") && !j.at("infratype").is_null()) {
    const auto& t = j.at("infratype");
    if (t.is_array() && t.size() == 2) {
      it = Infratype{detail::number(t[0], "infratype[0]"), detail::number(t[1], "infratype[1]")};
    } else {
      it = Infratype{detail::number(detail::require(t, "p", "infratype"), "infratype.p"),
                     detail::number(detail::require(t, "C", "infratype"), "infratype.C")};
    }
  }
  return SpaceDescriptor(dim.get<std::size_t>(), parse_norm(nrm.get<std::string>()), it);
}

inline json to_json(const PointSet& A) {
  json pts = json::array();
  for (std::size_t i = 0; i < A.size(); ++i) {
    auto p = A.point(i);
    pts.push_back(json(Vector(p.begin(), p.end())));
  }
  return pts;
}

/// Standalone form {"space": ..., "points": [...]}; the space must match.
inline json to_json_document(const PointSet& A) { return {{"space", to_json(A.space())}, {"points", to_json(A)}}; }

/// Accepts a bare array of points or the standalone document form.
inline PointSet point_set_from_json(const SpaceDescriptor& space, const json& j, const std::string& where) {
  if (j.is_object()) {
    if (!(space_from_json(detail::require(j, "space", where)) == space))
      throw invalid_argument(where + ": point set space does not match");
    return point_set_from_json(space, detail::require(j, "points", where), where);
  }
  if (!j.is_array() || j.empty()) throw invalid_argument(where + ": expected a nonempty array of points");
  std::vector<Vector> pts;
  for (const auto& p : j) pts.push_back(detail::vector_of(p, where));
  return PointSet(space, pts);
}

inline Multifunction multifunction_from_json(const json& j) {
  const auto& kind_j = detail::require(j, "kind", "multifunction");
  if (!kind_j.is_string()) throw invalid_argument("multifunction: kind must be a string");
  const std::string kind = kind_j.get<std::string>();

  if (kind == "convex_hull") {
    return convex_hull_of(multifunction_from_json(detail::require(j, "inner", "convex_hull")));
  }
  if (kind == "counterexample_l1") {
    L1CounterexampleConfig cfg;
    const auto& n = detail::require(j, "n", "counterexample_l1");
    const auto& N = detail::require(j, "N", "counterexample_l1");
    if (!n.is_number_integer() || !N.is_number_integer() || N.get<long long>() < 1)
      throw invalid_argument("counterexample_l1: n and N must be integers");
    cfg.n = n.get<int>();
    cfg.N = N.get<std::size_t>();
    return l1_counterexample_eval(cfg);
  }

  const auto space = space_from_json(detail::require(j, "space", kind));
  const double bm = detail::number(detail::require(j, "boundM", kind), kind + ".boundM");
  const double db = detail::number(detail::require(j, "diamBound", kind), kind + ".diamBound");
  if (kind == "constant") {
    return Multifunction(space, body::Constant{point_set_from_json(space, detail::require(j, "value", kind), "value")},
                         bm, db);
  }
  if (kind == "piecewise_constant") {
    body::PiecewiseConstant b;
    b.breaks = detail::vector_of(detail::require(j, "breaks", kind), "breaks");
    const auto& sets = detail::require(j, "sets", kind);
    if (!sets.is_array()) throw invalid_argument("piecewise_constant: sets must be an array");
    for (const auto& s : sets) b.sets.push_back(point_set_from_json(space, s, "sets"));
    return Multifunction(space, std::move(b), bm, db);
  }
  if (kind == "moving_finite") {
    body::MovingFinite b;
    const auto& curves = detail::require(j, "curves", kind);
    if (!curves.is_array()) throw invalid_argument("moving_finite: curves must be an array");
    for (const auto& c : curves) {
      if (!c.is_array()) throw invalid_argument("moving_finite: each curve is an array of coefficient vectors");
      std::vector<Vector> coeffs;
      for (const auto& v : c) coeffs.push_back(detail::vector_of(v, "curves"));
      b.curves.push_back(std::move(coeffs));
    }
    return Multifunction(space, std::move(b), bm, db);
  }
  throw invalid_argument("multifunction: unknown kind '" + kind + "'");
}

inline json to_json(const Multifunction& F) {
  struct V {
    const Multifunction& F;
    json operator()(const body::Constant& b) const { return {{"value", to_json(b.value)}}; }
    json operator()(const body::PiecewiseConstant& b) const {
      json sets = json::array();
      for (const auto& s : b.sets) sets.push_back(to_json(s));
      return {{"breaks", b.breaks}, {"sets", sets}};
    }
    json operator()(const body::MovingFinite& b) const { return {{"curves", b.curves}}; }
    json operator()(const body::ConvexHullOf& b) const { return {{"inner", to_json(*b.inner)}}; }
    json operator()(const body::CounterexampleL1& b) const { return {{"n", b.n}, {"N", b.N}}; }
  };
  json j = std::visit(V{F}, F.body());
  j["kind"] = F.kind();
  if (!std::holds_alternative<body::ConvexHullOf>(F.body()) && !std::holds_alternative<body::CounterexampleL1>(F.body())) {
    j["space"] = to_json(F.space());
    j["boundM"] = F.bound_m();
    j["diamBound"] = F.diam_bound();
  }
  return j;
}

// ---------------------------------------------------------------------------
// Schedules
// ---------------------------------------------------------------------------

/**
 * Interval counts from "2,4,8", "uniform:2^k" (k = 1..8), "uniform:2^a..2^b"
 * or "uniform:n" (a single count).
 */
inline std::vector<std::size_t> parse_schedule(const std::string& text) {
  auto parse_count = [&](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (...) {
      throw invalid_argument("schedule: cannot parse '" + s + "'");
    }
    if (pos != s.size() || v < 1) throw invalid_argument("schedule: '" + s + "' is not a positive integer");
    return static_cast<std::size_t>(v);
  };
  auto parse_pow = [&](const std::string& s) -> std::size_t {
    if (s.rfind("2^", 0) != 0) return parse_count(s);
    const auto e = parse_count(s.substr(2));
    if (e > 40) throw invalid_argument("schedule: exponent too large");
    return std::size_t{1} << e;
  };
  std::vector<std::size_t> out;
  if (text.rfind("uniform:", 0) == 0) {
    const std::string rest = text.substr(8);
    if (rest == "2^k") {
      for (int k = 1; k <= 8; ++k) out.push_back(std::size_t{1} << k);
    } else if (auto dots = rest.find(".."); dots != std::string::npos) {
      const auto lo = parse_pow(rest.substr(0, dots)), hi = parse_pow(rest.substr(dots + 2));
      if (lo > hi) throw invalid_argument("schedule: empty range '" + text + "'");
      if (rest.rfind("2^", 0) == 0) {
        for (std::size_t c = lo; c <= hi; c *= 2) out.push_back(c);
      } else {
        for (std::size_t c = lo; c <= hi; ++c) out.push_back(c);
      }
    } else {
      out.push_back(parse_pow(rest));
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_pow(item));
  }
  if (out.empty()) throw invalid_argument("schedule: no partitions in '" + text + "'");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) throw invalid_argument("schedule: interval counts must increase strictly");
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json to_json(const ConvergenceReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr{{"mesh", row.mesh},
            {"distance", row.distance ? json(*row.distance) : json(nullptr)},
            {"pruneError", row.prune_error},
            {"cardinality", row.cardinality},
            {"ms", row.ms}};
    rows.push_back(std::move(jr));
  }
  json j{{"mode", to_string(r.mode)},
         {"verdict", to_string(r.verdict)},
         {"hullSemantics", r.hull_semantics},
         {"tol", r.tol},
         {"hullTol", r.hull_tol},
         {"rows", rows},
         {"rate", r.rate ? json(*r.rate) : json(nullptr)}};
  if (r.lower_bound) j["lowerBound"] = *r.lower_bound;
  if (r.witness) j["witness"] = *r.witness;
  if (r.limit) {
    j["limitSize"] = r.limit->base.size();
    j["limitErrBound"] = r.limit->err_bound;
  }
  return j;
}

inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline constexpr const char* kCsvHeader = "mesh,distance,prune_error,cardinality,ms";

inline void write_csv(std::ostream& os, const ConvergenceReport& r) {
  os << kCsvHeader << '\n';
  for (const auto& row : r.rows) {
    os << format_number(row.mesh) << ',' << (row.distance ? format_number(*row.distance) : std::string()) << ','
       << format_number(row.prune_error) << ',' << format_number(row.cardinality) << ',' << format_number(row.ms)
       << '\n';
  }
}

}  // namespace setint::io
