#pragma once

// Command-line front end. run() takes the arguments after the program name
// and returns the process exit code:
//   0 success, 2 parse or invalid input, 3 missing capability or assumption,
//   4 unsupported computation, 5 internal consistency failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linwitt/cellular_cohomology.hpp"
#include "linwitt/error.hpp"
#include "linwitt/expr_parser.hpp"
#include "linwitt/json_io.hpp"
#include "linwitt/range_engine.hpp"
#include "linwitt/scheme_calculus.hpp"
#include "linwitt/shifted_sums.hpp"
#include "linwitt/stratification.hpp"

namespace linwitt::cli {

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidForm:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidStratification: return 2;
    case ErrorKind::Capability:
    case ErrorKind::SmoothnessRequired:
    case ErrorKind::TShapeRequired: return 3;
    case ErrorKind::Unsupported: return 4;
    case ErrorKind::InternalConsistency: return 5;
  }
  return 5;
}

struct Options {
  std::string command;
  std::string expr_text;
  std::string expr_json;
  std::string file;
  std::string format = "text";
  std::string field = "real";
  bool smooth = false;
  int venn_n = 0;
  std::optional<int> i, j, j0, j1, jmin, jmax;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

inline SchemeExpr load_expr(const Options& o, std::ostream& err) {
  SchemeExpr x;
  if (!o.expr_json.empty()) {
    if (!o.expr_text.empty()) throw Error(ErrorKind::InvalidArgument, "give an expression or --expr-json, not both");
    x = expr_from_json_text(read_file(o.expr_json));
    return o.smooth ? x.with_smooth(true) : x;
  }
  if (o.expr_text.empty()) throw Error(ErrorKind::Parse, "empty expression");
  ParseResult parsed = parse_expr_with_warnings(o.expr_text);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  return parsed.expr.with_smooth(o.smooth);
}

inline FieldCapability field_of(const Options& o) {
  return o.field == "finite" ? FieldCapability::finite_field() : FieldCapability::real_numbers();
}

inline int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw Error(ErrorKind::InvalidArgument, std::string("missing required flag ") + flag);
  return *v;
}

inline Json assumptions(const SchemeExpr& x, const FieldCapability& f) {
  return Json{{"smooth", x.smooth()}, {"field", f.name}};
}

inline std::string assumptions_line(const SchemeExpr& x, const FieldCapability& f) {
  return std::string("assumptions: ") + (x.smooth() ? "smooth (asserted)" : "smoothness not asserted") +
         ", field " + f.name;
}

inline Json provenance_json(const std::vector<RuleApplication>& provenance) {
  Json out = Json::array();
  for (const auto& app : provenance) {
    out.push_back(Json{{"rule", app.rule},
                       {"node", app.node},
                       {"params", app.params},
                       {"children", app.children},
                       {"level", app.level}});
  }
  return out;
}

inline std::vector<std::string> rules_used(const std::vector<RuleApplication>& provenance) {
  std::vector<std::string> out;
  for (const auto& app : provenance) {
    if (std::find(out.begin(), out.end(), app.rule) == out.end()) out.push_back(app.rule);
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

inline Json summands_json(const ShiftedIdealSum& sum) {
  Json out = Json::array();
  for (const auto& [s, m] : sum.summands()) out.push_back(Json{{"shift", s}, {"multiplicity", m}});
  return out;
}

/// "I^{j-2} + (I^{j-3})^3" for the sum as a function of j.
inline std::string render_sum(const ShiftedIdealSum& sum) {
  if (sum.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& [s, m] : sum.summands()) {
    std::string ideal = s == 0 ? "I^j" : s > 0 ? "I^{j-" + std::to_string(s) + "}" : "I^{j+" + std::to_string(-s) + "}";
    parts.push_back(m == 1 ? ideal : "(" + ideal + ")^" + std::to_string(m));
  }
  return join(parts, " + ");
}

class Report {
 public:
  Report(const Options& o, std::ostream& out) : json_mode_(o.format == "json"), out_(out) {}

  bool json() const { return json_mode_; }
  Json& doc() { return doc_; }
  void line(const std::string& text) { lines_.push_back(text); }

  void emit() {
    if (json_mode_) {
      doc_["schema_version"] = kSchemaVersion;
      out_ << doc_.dump(2) << "\n";
    } else {
      for (const auto& l : lines_) out_ << l << "\n";
    }
  }

 private:
  bool json_mode_;
  std::ostream& out_;
  Json doc_ = Json::object();
  std::vector<std::string> lines_;
};

inline int cmd_linlevel(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemeExpr x = load_expr(o, err);
  const RangeVerdict rs = ibar_range(x, field_of(o));
  Report r(o, out);
  const int jl = j_linear_level(x);
  const int rl = range_level(x);
  const bool t_shape = is_t_linear_shape(x);
  r.doc() = {{"command", "linlevel"},
             {"expr", to_text(x)},
             {"dim", x.dim()},
             {"j_linear_level", jl},
             {"range_level", rl},
             {"t_linear_shape", t_shape},
             {"assumptions", assumptions(x, field_of(o))},
             {"provenance", provenance_json(rs.provenance)}};
  r.line("X = " + to_text(x) + " (dim " + std::to_string(x.dim()) + ")");
  r.line("J-linear level " + std::to_string(jl) + " (witnessed by the tree)");
  r.line("range level " + std::to_string(rl));
  r.line(std::string("T-linear shape: ") + (t_shape ? "yes" : "no"));
  r.line("rules: " + join(rules_used(rs.provenance), ", "));
  r.line(assumptions_line(x, field_of(o)));
  r.emit();
  return 0;
}

inline Json certificate_json(const NonSurjectivityCertificate& c) {
  return Json{{"degree", c.degree},
              {"level", c.level},
              {"coefficients", to_string(c.coefficients)},
              {"rule", c.rule},
              {"verdict", "NOT_SURJECTIVE"},
              {"cokernel", c.cokernel ? Json(c.cokernel->to_string()) : Json(nullptr)}};
}

inline int cmd_range(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemeExpr x = load_expr(o, err);
  const FieldCapability f = field_of(o);
  Report r(o, out);
  r.doc() = {{"command", "range"}, {"expr", to_text(x)}, {"dim", x.dim()}, {"assumptions", assumptions(x, f)}};

  if (x.smooth()) {
    const int i = o.i.value_or(0);
    SheafRangeVerdict v = lift_to_I(sheaf_range(x, f));
    std::string sharpness = "unavailable";
    try {
      v = certify_sharpness(x, i, f);
      sharpness = v.certificates.empty() ? "not certified" : "certified";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unsupported) throw;
    }
    Json certs = Json::array();
    for (const auto& c : v.certificates) certs.push_back(certificate_json(c));
    r.doc()["degree"] = i;
    r.doc()["level"] = v.n;
    r.doc()["iso_from"] = v.iso_from(i);
    r.doc()["injective_at"] = v.inj_at(i);
    r.doc()["jacobson_iso_from"] = v.dim + 1;
    r.doc()["coefficients"] = Json::array({"Ibar", "I(L) for every L"});
    r.doc()["certificates"] = certs;
    r.doc()["sharpness"] = sharpness;
    r.doc()["provenance"] = provenance_json(v.provenance);
    r.doc()["rules"] = rules_used(v.provenance);
    r.line("ISO for j ≥ " + std::to_string(v.iso_from(i)) + "; INJECTIVE at j = " + std::to_string(v.inj_at(i)));
    r.line("  on H^" + std::to_string(i) + "(X, Ibar^j) and H^" + std::to_string(i) +
           "(X, I^j(L)) for every L; ISO for j ≥ " + std::to_string(v.dim + 1) + " by dimension");
    if (o.j) {
      r.doc()["verdict_at_j"] = Json{{"j", *o.j}, {"verdict", to_string(v.at(i, *o.j))}};
      r.line("at j = " + std::to_string(*o.j) + ": " + to_string(v.at(i, *o.j)));
    }
    for (const auto& c : v.certificates) {
      r.line(std::string("NOT_SURJECTIVE at j = ") + std::to_string(c.level) + " with " + to_string(c.coefficients) +
             " coefficients (" + c.rule + ")" + (c.cokernel ? ", cokernel " + c.cokernel->to_string() : ""));
    }
    r.line("rules: " + join(rules_used(v.provenance), ", "));
  } else {
    const RangeVerdict v = ibar_range(x, f);
    r.doc()["level"] = v.iso_diag;
    r.doc()["rost_schmid"] = Json{{"iso_for_i_plus_j_at_least", v.iso_diag}, {"injective_at_i_plus_j", v.inj_diag}};
    r.doc()["provenance"] = provenance_json(v.provenance);
    r.doc()["rules"] = rules_used(v.provenance);
    r.line("Rost-Schmid indexing: ISO for i + j ≥ " + std::to_string(v.iso_diag) + "; INJECTIVE at i + j = " +
           std::to_string(v.inj_diag));
    if (o.i && o.j) {
      r.doc()["verdict_at"] = Json{{"i", *o.i}, {"j", *o.j}, {"verdict", to_string(v.at(*o.i, *o.j))}};
      r.line("at (i, j) = (" + std::to_string(*o.i) + ", " + std::to_string(*o.j) + "): " + to_string(v.at(*o.i, *o.j)));
      const auto* g = x.get_if<expr::OpenGlue>();
      if (g && g->ambient.get_if<expr::Affine>()) {
        const TLinearResult t = t_linear_verdict(x, *o.i, *o.j);
        r.doc()["t_linear"] = Json{{"verdict", to_string(t.verdict)}, {"trace", t.trace}};
        r.line(std::string("T-linear criterion: ") + to_string(t.verdict));
        for (const auto& step : t.trace) r.line("  " + step);
      }
    }
    r.line("rules: " + join(rules_used(v.provenance), ", "));
  }
  r.line(assumptions_line(x, f));
  r.emit();
  return 0;
}

inline int cmd_cohomology(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemeExpr x = load_expr(o, err);
  const int i = require(o.i, "--i");
  const ShiftedIdealSum sum = cohomology_sum(x, i);
  Report r(o, out);
  r.doc() = {{"command", "cohomology"},
             {"expr", to_text(x)},
             {"degree", i},
             {"summands", summands_json(sum)},
             {"rule", cohomology_rule(x)},
             {"assumptions", assumptions(x, field_of(o))}};
  r.line("H^" + std::to_string(i) + "(X, I^j) = " + render_sum(sum));
  if (o.j) {
    const StepVerdict step = step_verdict(sum, *o.j);
    const StepVerdict ibar = ibar_step_verdict(sum, *o.j);
    const std::string group = render_evaluation(evaluate(sum, *o.j));
    r.doc()["at_level"] = Json{{"j", *o.j},
                               {"group", group},
                               {"step", to_string(step.kind)},
                               {"step_cokernel", step.cokernel.to_string()},
                               {"ibar_step", to_string(ibar.kind)},
                               {"ibar_step_cokernel", ibar.cokernel.to_string()}};
    r.line("at j = " + std::to_string(*o.j) + ": " + group);
    r.line("  <<-1>> into level j + 1: " + std::string(to_string(step.kind)) + ", cokernel " + step.cokernel.to_string());
    r.line("  on Ibar: " + std::string(to_string(ibar.kind)) + ", cokernel " + ibar.cokernel.to_string());
  }
  r.line(std::string("rules: ") + cohomology_rule(x));
  r.line(assumptions_line(x, field_of(o)));
  r.emit();
  return 0;
}

inline int cmd_rccm(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemeExpr x = load_expr(o, err);
  const FieldCapability f = field_of(o);
  require_smooth(x);
  const int i = o.i.value_or(0);
  const SheafRangeVerdict v = sheaf_range(x, f);
  const int j_min = o.jmin.value_or(0);
  const int j_max = o.jmax.value_or(std::max(v.dim + 1, i + v.n));
  const RccmVerdict rep = rccm_report(x, i, j_min, j_max, f);
  Report r(o, out);
  Json entries = Json::array();
  r.line("real cycle class map cl^" + std::to_string(i) + "_j : H^" + std::to_string(i) + "(X, I^j(L)) -> H^" +
         std::to_string(i) + "_sing(X(R), Z(L))");
  for (const auto& e : rep.entries) {
    Json st = Json::array();
    std::vector<std::string> words;
    for (const auto& s : e.statements) {
      st.push_back(Json{{"kind", to_string(s.kind)}, {"exponent", s.exponent}});
      switch (s.kind) {
        case RccmKind::Iso: words.push_back("ISO"); break;
        case RccmKind::Injective: words.push_back("INJECTIVE"); break;
        case RccmKind::ImageContains:
          words.push_back("image contains 2^" + std::to_string(s.exponent) + " H^" + std::to_string(i) + "_sing");
          break;
        case RccmKind::ImageEquals:
          words.push_back("image = 2^" + std::to_string(s.exponent) + " im(cl^" + std::to_string(i) + "_" +
                          std::to_string(i) + ")");
          break;
      }
    }
    entries.push_back(Json{{"j", e.level}, {"statements", st}});
    r.line("  j = " + std::to_string(e.level) + ": " + join(words, "; "));
  }
  for (const auto& step : rep.factorization) r.line("  " + step);
  r.doc() = {{"command", "rccm"},
             {"expr", to_text(x)},
             {"degree", i},
             {"level", rep.n},
             {"dim", rep.dim},
             {"entries", entries},
             {"factorization", rep.factorization},
             {"provenance", provenance_json(rep.provenance)},
             {"rules", rules_used(rep.provenance)},
             {"assumptions", assumptions(x, f)}};
  r.line("rules: " + join(rules_used(rep.provenance), ", "));
  r.line(assumptions_line(x, f));
  r.emit();
  return 0;
}

inline int cmd_cokernel(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemeExpr x = load_expr(o, err);
  const int i = require(o.i, "--i");
  const int j0 = require(o.j0, "--j0");
  const ShiftedIdealSum sum = cohomology_sum(x, i);
  const int j1 = o.j1.value_or(std::max(j0, sum.max_shift().value_or(j0)));
  const AbelianGroup group = composite_cokernel(sum, j0, j1);
  const std::int64_t exponent = cokernel_exponent(sum, j0);
  int log2 = 0;
  while ((std::int64_t{1} << log2) < exponent) ++log2;
  Report r(o, out);
  r.doc() = {{"command", "cokernel"},
             {"expr", to_text(x)},
             {"degree", i},
             {"j0", j0},
             {"j1", j1},
             {"summands", summands_json(sum)},
             {"cokernel", group.to_string()},
             {"exponent", exponent},
             {"exponent_log2", log2},
             {"rule", cohomology_rule(x)},
             {"assumptions", assumptions(x, field_of(o))}};
  r.line("H^" + std::to_string(i) + "(X, I^j) = " + render_sum(sum));
  r.line("cokernel of H^" + std::to_string(i) + "(X, I^" + std::to_string(j0) + ") -> H^" + std::to_string(i) +
         "(X, I^" + std::to_string(j1) + "): " + group.to_string());
  r.line("exponent 2^" + std::to_string(log2) + " = " + std::to_string(exponent));
  r.line(std::string("rules: ") + cohomology_rule(x));
  r.line(assumptions_line(x, field_of(o)));
  r.emit();
  return 0;
}

inline Json point_set_json(const PointSet& s) { return Json(std::vector<Point>(s.begin(), s.end())); }

inline std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

inline int cmd_stratify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.file.empty()) throw Error(ErrorKind::InvalidArgument, "missing required flag --file");
  const RealizationDocument doc = realization_from_json(read_json_file(o.file));
  const CheckReport check = check_realization(doc.realization);
  Report r(o, out);
  r.doc() = {{"command", "stratify"}, {"strata_count", doc.realization.pieces.size()}};
  r.line("realization with " + std::to_string(doc.realization.pieces.size()) + " strata over " +
         std::to_string(doc.realization.ground.size()) + " points");
  r.doc()["realization_check"] = pass(check.ok);
  r.doc()["failures"] = check.failures;
  r.line("partition and boundary condition: " + pass(check.ok));
  for (const auto& f : check.failures) r.line("  " + f);
  bool ok = check.ok;
  if (check.ok) {
    const auto order = closure_order_of(doc.realization);
    std::vector<SchemeExpr> strata;
    for (std::size_t k = 0; k < doc.realization.pieces.size(); ++k) {
      if (doc.strata.empty()) {
        strata.push_back(affine(0));
      } else {
        ParseResult p = parse_expr_with_warnings(doc.strata[k]);
        for (const auto& w : p.warnings) err << "warning: " << w << "\n";
        strata.push_back(p.expr);
      }
    }
    const StratificationTree st = stratification_to_tree(strata, order);
    const CheckReport replay = replay_stratification_tree(st, strata, doc.realization);
    ok = ok && replay.ok;
    Json order_json = Json::array();
    std::vector<std::string> order_text;
    for (const auto& [a, b] : order) {
      order_json.push_back(Json::array({a, b}));
      order_text.push_back(std::to_string(a) + "<" + std::to_string(b));
    }
    r.doc()["closure_order"] = order_json;
    r.doc()["leaf_order"] = st.leaf_order;
    r.doc()["replay"] = pass(replay.ok);
    r.line("closure order: " + (order_text.empty() ? std::string("(none)") : join(order_text, ", ")));
    std::vector<std::string> leaves;
    for (auto k : st.leaf_order) leaves.push_back(std::to_string(k));
    r.line("closed decompositions split off strata " + join(leaves, ", "));
    r.line("replay reconstructs the partition: " + pass(replay.ok));
    for (const auto& f : replay.failures) r.line("  " + f);
    if (!doc.strata.empty()) {
      const SchemeExpr x = stratified(strata, order);
      const RangeVerdict v = ibar_range(x);
      r.doc()["expr"] = to_text(x);
      r.doc()["range_level"] = range_level(x);
      r.doc()["j_linear_level"] = j_linear_level(x);
      r.doc()["provenance"] = provenance_json(v.provenance);
      r.line("X = " + to_text(x));
      r.line("range level " + std::to_string(range_level(x)) + ", J-linear level " + std::to_string(j_linear_level(x)));
      r.line("rules: " + join(rules_used(v.provenance), ", "));
    }
  }
  r.doc()["status"] = pass(ok);
  r.emit();
  return ok ? 0 : 5;
}

inline int cmd_venn(const Options& o, std::ostream& out, std::ostream&) {
  if (o.file.empty()) throw Error(ErrorKind::InvalidArgument, "missing required flag --file");
  const SetFamily family = set_family_from_json(read_json_file(o.file));
  const VennReport rep = venn_stratification(o.venn_n, family);
  Report r(o, out);
  Json strata = Json::array();
  r.line("stratification of A_1 u ... u A_" + std::to_string(o.venn_n));
  for (const auto& s : rep.strata) {
    strata.push_back(Json{{"J", s.index_set}, {"points", point_set_json(s.points)}});
    std::vector<std::string> idx;
    for (int k : s.index_set) idx.push_back(std::to_string(k));
    std::vector<std::string> pts;
    for (auto p : s.points) pts.push_back(std::to_string(p));
    r.line("  U_{" + join(idx, ",") + "} = {" + join(pts, ", ") + "}");
  }
  r.line(std::to_string(rep.nonempty_count()) + " nonempty strata");
  r.line("partition: " + pass(rep.partition.ok) + ", boundary condition: " + pass(rep.boundary.ok));
  for (const auto& f : rep.partition.failures) r.line("  " + f);
  for (const auto& f : rep.boundary.failures) r.line("  " + f);
  r.doc() = {{"command", "venn"},
             {"n", o.venn_n},
             {"strata", strata},
             {"nonempty_strata", rep.nonempty_count()},
             {"checks", Json{{"partition", pass(rep.partition.ok)}, {"boundary", pass(rep.boundary.ok)}}},
             {"status", pass(rep.passed())}};
  r.emit();
  return rep.passed() ? 0 : 5;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt-theoretic invariants of linear schemes"};
  app.require_subcommand(1);
  Options o;

  auto add_expr = [&o](CLI::App* sub) {
    sub->add_option("expr", o.expr_text, "scheme expression");
    sub->add_option("--expr-json", o.expr_json, "read the scheme from a JSON document");
    sub->add_flag("--smooth", o.smooth, "assert that the scheme is smooth");
  };
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--field", o.field, "base field")->check(CLI::IsMember({"real", "finite"}));
  };

  auto* linlevel = app.add_subcommand("linlevel", "linearity levels witnessed by the tree");
  add_expr(linlevel);
  add_common(linlevel);

  auto* range = app.add_subcommand("range", "range where <<-1>> is bijective");
  add_expr(range);
  add_common(range);
  range->add_option("--i", o.i, "cohomological degree");
  range->add_option("--j", o.j, "coefficient level to query");

  auto* cohomology = app.add_subcommand("cohomology", "explicit I^j-cohomology");
  add_expr(cohomology);
  add_common(cohomology);
  cohomology->add_option("--i", o.i, "cohomological degree")->required();
  cohomology->add_option("--j", o.j, "coefficient level to evaluate");

  auto* rccm = app.add_subcommand("rccm", "real cycle class map statements");
  add_expr(rccm);
  add_common(rccm);
  rccm->add_option("--i", o.i, "cohomological degree");
  rccm->add_option("--jmin", o.jmin, "lowest level");
  rccm->add_option("--jmax", o.jmax, "highest level");

  auto* cokernel = app.add_subcommand("cokernel", "cokernel of the composite <<-1>>-multiplication");
  add_expr(cokernel);
  add_common(cokernel);
  cokernel->add_option("--i", o.i, "cohomological degree")->required();
  cokernel->add_option("--j0", o.j0, "source level")->required();
  cokernel->add_option("--j1", o.j1, "target level (default: where the groups stabilize)");

  auto* stratify = app.add_subcommand("stratify", "check a finite realization of a stratification");
  add_common(stratify);
  stratify->add_option("--file", o.file, "realization JSON")->required();

  auto* venn = app.add_subcommand("venn", "stratify a union of closed sets");
  add_common(venn);
  venn->add_option("n", o.venn_n, "number of closed sets")->required();
  venn->add_option("--file", o.file, "set family JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*linlevel) return detail::cmd_linlevel(o, out, err);
    if (*range) return detail::cmd_range(o, out, err);
    if (*cohomology) return detail::cmd_cohomology(o, out, err);
    if (*rccm) return detail::cmd_rccm(o, out, err);
    if (*cokernel) return detail::cmd_cokernel(o, out, err);
    if (*stratify) return detail::cmd_stratify(o, out, err);
    if (*venn) return detail::cmd_venn(o, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace linwitt::cli
