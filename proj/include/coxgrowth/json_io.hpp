#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "coxgrowth/diagram.hpp"
#include "coxgrowth/error.hpp"
#include "coxgrowth/polynomial.hpp"
#include "coxgrowth/sturm.hpp"

namespace coxgrowth {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline long as_integer(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(ErrorKind::ParseError, what + " must be an integer");
  return v.get<long>();
}

}  // namespace detail

/// {"rank": N, "edges": [[i, j, k], ...]}, 1-based, absent pairs infinite.
inline CoxeterSystem diagram_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "diagram must be a JSON object");
  if (!j.contains("rank")) fail(ErrorKind::ParseError, "missing \"rank\"");
  const long rank = detail::as_integer(j.at("rank"), "\"rank\"");
  require(rank >= 1 && rank <= 4096, ErrorKind::BadIndex, "rank must lie in 1..4096");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const Json& es = j.at("edges");
    if (!es.is_array()) fail(ErrorKind::ParseError, "\"edges\" must be an array");
    for (std::size_t idx = 0; idx < es.size(); ++idx) {
      const Json& e = es[idx];
      const std::string where = "edge #" + std::to_string(idx);
      if (!e.is_array() || e.size() != 3) fail(ErrorKind::ParseError, where + " must be [i, j, k]");
      const long i = detail::as_integer(e[0], where + " index i");
      const long jj = detail::as_integer(e[1], where + " index j");
      const long k = detail::as_integer(e[2], where + " label");
      require(k != 0, ErrorKind::InvalidLabel, where + ": label 0 is not a valid label; omit the pair for infinity");
      require(k >= 2, ErrorKind::InvalidLabel, where + ": labels must be >= 2");
      require(i >= 1 && i <= rank && jj >= 1 && jj <= rank, ErrorKind::BadIndex, where + ": index outside 1.." + std::to_string(rank));
      require(i != jj, ErrorKind::BadIndex, where + ": loops are not allowed");
      edges.push_back({static_cast<int>(std::min(i, jj)), static_cast<int>(std::max(i, jj)), k});
    }
  }
  return build_system(static_cast<int>(rank), edges);
}

inline CoxeterSystem parse_diagram(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  return diagram_from_json(j);
}

inline CoxeterSystem load_diagram(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::ConfigError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

inline Json diagram_to_json(const CoxeterSystem& s) {
  Json edges = Json::array();
  for (const auto& e : s.edges()) edges.push_back({e.i, e.j, e.label});
  return Json{{"rank", s.rank()}, {"edges", edges}};
}

inline Json rational_to_json(const Rational& q) { return q.get_str(); }

inline Json polynomial_to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficient_strings()) coeffs.push_back(c);
  return Json{{"text", p.to_string()}, {"coefficients", coeffs}};
}

inline Json interval_to_json(const IsolatingInterval& iv) {
  return Json{{"low", rational_to_json(iv.low)}, {"high", rational_to_json(iv.high)}, {"approx", iv.approx()}};
}

/// Serialises with floats at 17 significant digits (lossless for doubles).
inline void dump_json(const Json& j, std::string& out, int indent = 2, int depth = 0) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad + Json(k).dump() + sep;
        dump_json(v, out, indent, depth + 1);
      }
      out += nl + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short scalar arrays stay on one line.
      bool flat = j.size() <= 8;
      for (const auto& v : j) flat = flat && !v.is_structured();
      out += "[";
      if (!flat) out += nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) {
          out += ",";
          out += flat ? (indent > 0 ? " " : "") : nl;
        }
        first = false;
        if (!flat) out += pad;
        dump_json(v, out, indent, depth + 1);
      }
      if (!flat) out += nl + close_pad;
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = j.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      return;
    }
    default: out += j.dump(); return;
  }
}

inline std::string dump_json(const Json& j, int indent = 2) {
  std::string out;
  dump_json(j, out, indent, 0);
  return out;
}

}  // namespace coxgrowth
