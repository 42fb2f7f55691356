#pragma once

// JSON documents (schema_version 1).
//
// Scheme expression document:
//   {"schema_version": 1, "smooth": false, "expr": NODE}
// NODE is one of
//   {"kind": "empty"}
//   {"kind": "affine", "n": 3}
//   {"kind": "torus_cell", "n": 1, "d": 2}
//   {"kind": "proj_times_torus", "c": 2, "e": 3, "twist": "O(3)"}
//   {"kind": "open", "ambient": NODE, "closed": NODE}
//   {"kind": "closed_glue", "closed": NODE, "open": NODE}
//   {"kind": "product", "left": NODE, "right": NODE}
//   {"kind": "stratified", "strata": [NODE, ...], "order": [[a, b], ...]}
//
// Realization document:
//   {"schema_version": 1, "ground": [..], "pieces": [[..], ..], "closures": [[..], ..],
//    "strata": ["A^0", ...]}            ("strata" is optional)
// Set family document:
//   {"schema_version": 1, "ground": [..], "sets": [[..], ..]}

#include <string>
#include <vector>

#include <json.hpp>

#include "linwitt/error.hpp"
#include "linwitt/scheme_calculus.hpp"
#include "linwitt/scheme_expr.hpp"
#include "linwitt/stratification.hpp"

namespace linwitt {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json node_to_json(const SchemeExpr& x) {
  return x.visit(overloaded{
      [](const expr::Empty&) { return Json{{"kind", "empty"}}; },
      [](const expr::Affine& a) { return Json{{"kind", "affine"}, {"n", a.dim}}; },
      [](const expr::TorusCell& t) {
        return Json{{"kind", "torus_cell"}, {"n", t.affine_dim}, {"d", t.torus_rank}};
      },
      [](const expr::ProjTimesTorus& p) {
        return Json{{"kind", "proj_times_torus"}, {"c", p.proj_dim}, {"e", p.torus_rank}, {"twist", p.twist.name()}};
      },
      [](const expr::OpenGlue& g) {
        return Json{{"kind", "open"}, {"ambient", node_to_json(g.ambient)}, {"closed", node_to_json(g.closed)}};
      },
      [](const expr::ClosedGlue& g) {
        return Json{{"kind", "closed_glue"}, {"closed", node_to_json(g.closed)}, {"open", node_to_json(g.open)}};
      },
      [](const expr::Product& p) {
        return Json{{"kind", "product"}, {"left", node_to_json(p.left)}, {"right", node_to_json(p.right)}};
      },
      [](const expr::Stratified& s) {
        Json strata = Json::array();
        for (const auto& t : s.strata) strata.push_back(node_to_json(t));
        Json order = Json::array();
        for (const auto& [a, b] : s.order) order.push_back(Json::array({a, b}));
        return Json{{"kind", "stratified"}, {"strata", strata}, {"order", order}};
      },
  });
}

inline Json expr_to_json(const SchemeExpr& x) {
  return Json{{"schema_version", kSchemaVersion}, {"smooth", x.smooth()}, {"expr", node_to_json(x)}};
}

namespace detail {

[[noreturn]] inline void json_fail(const std::string& where, const std::string& message) {
  throw Error(ErrorKind::Parse, where + ": " + message);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) json_fail(where, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) json_fail(where, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

inline void check_version(const Json& j, const std::string& where) {
  if (int_field(j, "schema_version", where) != kSchemaVersion) {
    json_fail(where, "unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  }
}

inline PointSet point_set(const Json& j, const std::string& where) {
  if (!j.is_array()) json_fail(where, "expected an array of integers");
  PointSet out;
  for (const auto& p : j) {
    if (!p.is_number_integer()) json_fail(where, "expected an array of integers");
    out.insert(p.get<Point>());
  }
  return out;
}

inline std::vector<PointSet> point_sets(const Json& j, const std::string& where) {
  if (!j.is_array()) json_fail(where, "expected an array of arrays");
  std::vector<PointSet> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(point_set(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

inline SchemeExpr node_from_json(const Json& j, const std::string& where) {
  const Json& kind_json = field(j, "kind", where);
  if (!kind_json.is_string()) json_fail(where, "field \"kind\" must be a string");
  const std::string kind = kind_json.get<std::string>();
  try {
    if (kind == "empty") return empty_scheme();
    if (kind == "affine") return affine(int_field(j, "n", where));
    if (kind == "torus_cell") return torus_cell(int_field(j, "n", where), int_field(j, "d", where));
    if (kind == "proj_times_torus") {
      const Json& t = field(j, "twist", where);
      if (!t.is_string()) json_fail(where, "field \"twist\" must be a string");
      return proj_times_torus(int_field(j, "c", where), int_field(j, "e", where), TwistLabel(t.get<std::string>()));
    }
    if (kind == "open") {
      return open_glue(node_from_json(field(j, "ambient", where), where + ".ambient"),
                       node_from_json(field(j, "closed", where), where + ".closed"));
    }
    if (kind == "closed_glue") {
      return closed_glue(node_from_json(field(j, "closed", where), where + ".closed"),
                         node_from_json(field(j, "open", where), where + ".open"));
    }
    if (kind == "product") {
      return product(node_from_json(field(j, "left", where), where + ".left"),
                     node_from_json(field(j, "right", where), where + ".right"));
    }
    if (kind == "stratified") {
      const Json& strata_json = field(j, "strata", where);
      const Json& order_json = field(j, "order", where);
      if (!strata_json.is_array() || !order_json.is_array()) json_fail(where, "strata and order must be arrays");
      std::vector<SchemeExpr> strata;
      for (std::size_t k = 0; k < strata_json.size(); ++k) {
        strata.push_back(node_from_json(strata_json[k], where + ".strata[" + std::to_string(k) + "]"));
      }
      std::vector<ClosureRelation> order;
      for (const auto& rel : order_json) {
        if (!rel.is_array() || rel.size() != 2 || !rel[0].is_number_unsigned() || !rel[1].is_number_unsigned()) {
          json_fail(where, "order entries must be pairs of non-negative integers");
        }
        order.emplace_back(rel[0].get<std::size_t>(), rel[1].get<std::size_t>());
      }
      return stratified(std::move(strata), std::move(order));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    json_fail(where, e.what());
  }
  json_fail(where, "unknown kind \"" + kind + "\"");
}

}  // namespace detail

inline SchemeExpr expr_from_json(const Json& j) {
  detail::check_version(j, "document");
  const Json& smooth = detail::field(j, "smooth", "document");
  if (!smooth.is_boolean()) detail::json_fail("document", "field \"smooth\" must be a boolean");
  return detail::node_from_json(detail::field(j, "expr", "document"), "expr").with_smooth(smooth.get<bool>());
}

inline SchemeExpr expr_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  return expr_from_json(j);
}

struct RealizationDocument {
  FinitePosetRealization realization;
  /// Expression text of each stratum, when supplied.
  std::vector<std::string> strata;
};

inline RealizationDocument realization_from_json(const Json& j) {
  detail::check_version(j, "realization");
  RealizationDocument doc;
  doc.realization.ground = detail::point_set(detail::field(j, "ground", "realization"), "ground");
  doc.realization.pieces = detail::point_sets(detail::field(j, "pieces", "realization"), "pieces");
  doc.realization.closures = detail::point_sets(detail::field(j, "closures", "realization"), "closures");
  if (j.contains("strata")) {
    const Json& s = j.at("strata");
    if (!s.is_array()) detail::json_fail("realization", "field \"strata\" must be an array of strings");
    for (const auto& t : s) {
      if (!t.is_string()) detail::json_fail("realization", "field \"strata\" must be an array of strings");
      doc.strata.push_back(t.get<std::string>());
    }
    if (doc.strata.size() != doc.realization.pieces.size()) {
      detail::json_fail("realization", "\"strata\" and \"pieces\" have different lengths");
    }
  }
  return doc;
}

inline Json realization_to_json(const FinitePosetRealization& r) {
  return Json{{"schema_version", kSchemaVersion},
              {"ground", r.ground},
              {"pieces", r.pieces},
              {"closures", r.closures}};
}

inline SetFamily set_family_from_json(const Json& j) {
  detail::check_version(j, "family");
  SetFamily f;
  f.ground = detail::point_set(detail::field(j, "ground", "family"), "ground");
  f.sets = detail::point_sets(detail::field(j, "sets", "family"), "sets");
  return f;
}

inline Json set_family_to_json(const SetFamily& f) {
  return Json{{"schema_version", kSchemaVersion}, {"ground", f.ground}, {"sets", f.sets}};
}

}  // namespace linwitt
