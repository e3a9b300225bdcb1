#include "fibercover/report.hpp"

#include <sstream>

#include <json.hpp>

#include "fibercover/error.hpp"

namespace fibercover {

using nlohmann::json;

namespace {

ReportCover report_cover(const BranchedCover& c) {
  ReportCover r;
  r.base_genus = c.base_genus;
  r.degree = c.degree;
  r.genus = genus(c);
  r.regular = is_regular(c);
  for (const auto& h : c.handles) r.handles.emplace_back(h.a.to_cycle_string(), h.b.to_cycle_string());
  for (const auto& bp : c.branch_points)
    r.branches.push_back({bp.label.to_string(), bp.monodromy.to_cycle_string(), bp.padding});
  return r;
}

}  // namespace

DecompositionReport make_report(const FiberDecomposition& dec, const IsomorphismReport* isomorphism,
                                const JacobianReport* jacobian) {
  DecompositionReport r;
  r.first = report_cover(dec.aligned.first);
  r.second = report_cover(dec.aligned.second);
  for (const auto& l : dec.aligned.labels) r.labels.push_back(l.to_string());
  for (const auto& comp : dec.components) {
    ReportComponent rc{comp.orbit.size(), comp.d1, comp.d2, comp.genus, {}};
    for (const auto& bp : comp.cover.branch_points)
      rc.cycle_types.emplace_back(bp.label.to_string(), cycle_type(bp.monodromy).to_string());
    r.components.push_back(std::move(rc));
  }
  for (const auto& sp : dec.singular_points) {
    ReportSingular rs{sp.label.to_string(), sp.cycle1 + 1u, sp.cycle2 + 1u, sp.n1, sp.n2, sp.cone_count, {}};
    for (const auto& cone : sp.cones) rs.cone_components.push_back(cone.component + 1);
    r.singular_points.push_back(std::move(rs));
  }
  for (auto [a, b] : dec.adjacency) r.adjacency.emplace_back(a + 1, b + 1);
  r.connected = dec.connected;
  r.bound = dec.bound;
  r.cond1 = dec.criteria.cond1;
  r.cond2 = dec.criteria.cond2;
  r.predicted_irreducible = dec.criteria.predicted_irreducible;
  for (const auto& pl : dec.criteria.per_label) r.per_label.push_back({pl.label.to_string(), pl.a1, pl.a2});
  if (jacobian)
    r.jacobian = ReportJacobian{jacobian->applicable,  jacobian->failed_hypothesis,
                                jacobian->g_component, jacobian->g_base,
                                jacobian->g_first,     jacobian->g_second,
                                jacobian->dim_p};
  if (isomorphism) {
    ReportIsomorphism ri{isomorphism->all_isomorphic, {}};
    for (const auto& w : isomorphism->witnesses)
      ri.witnesses.push_back(w ? std::optional<std::string>(w->to_cycle_string()) : std::nullopt);
    r.isomorphism = std::move(ri);
  }
  return r;
}

// Structured form.

void to_json(json& j, const ReportBranch& b) {
  j = json{{"label", b.label}, {"cycles", b.cycles}, {"padding", b.padding}};
}
void from_json(const json& j, ReportBranch& b) {
  j.at("label").get_to(b.label);
  j.at("cycles").get_to(b.cycles);
  j.at("padding").get_to(b.padding);
}

void to_json(json& j, const ReportCover& c) {
  json handles = json::array();
  for (const auto& [a, b] : c.handles) handles.push_back({{"a", a}, {"b", b}});
  j = json{{"base_genus", c.base_genus}, {"degree", c.degree},     {"genus", c.genus},
           {"regular", c.regular},       {"handles", handles},     {"branches", c.branches}};
}
void from_json(const json& j, ReportCover& c) {
  j.at("base_genus").get_to(c.base_genus);
  j.at("degree").get_to(c.degree);
  j.at("genus").get_to(c.genus);
  j.at("regular").get_to(c.regular);
  c.handles.clear();
  for (const auto& h : j.at("handles")) c.handles.emplace_back(h.at("a").get<std::string>(), h.at("b").get<std::string>());
  j.at("branches").get_to(c.branches);
}

void to_json(json& j, const ReportComponent& c) {
  json types = json::array();
  for (const auto& [label, type] : c.cycle_types) types.push_back({{"label", label}, {"type", type}});
  j = json{{"size", c.size}, {"d1", c.d1}, {"d2", c.d2}, {"genus", c.genus}, {"cycle_types", types}};
}
void from_json(const json& j, ReportComponent& c) {
  j.at("size").get_to(c.size);
  j.at("d1").get_to(c.d1);
  j.at("d2").get_to(c.d2);
  j.at("genus").get_to(c.genus);
  c.cycle_types.clear();
  for (const auto& t : j.at("cycle_types")) c.cycle_types.emplace_back(t.at("label").get<std::string>(), t.at("type").get<std::string>());
}

void to_json(json& j, const ReportSingular& s) {
  j = json{{"label", s.label}, {"cycle1", s.cycle1}, {"cycle2", s.cycle2},
           {"n1", s.n1},       {"n2", s.n2},         {"cone_count", s.cone_count},
           {"cone_components", s.cone_components}, {"disc_like", s.cone_count == 1}};
}
void from_json(const json& j, ReportSingular& s) {
  j.at("label").get_to(s.label);
  j.at("cycle1").get_to(s.cycle1);
  j.at("cycle2").get_to(s.cycle2);
  j.at("n1").get_to(s.n1);
  j.at("n2").get_to(s.n2);
  j.at("cone_count").get_to(s.cone_count);
  j.at("cone_components").get_to(s.cone_components);
}

void to_json(json& j, const ReportCriterion& c) { j = json{{"label", c.label}, {"a1", c.a1}, {"a2", c.a2}}; }
void from_json(const json& j, ReportCriterion& c) {
  j.at("label").get_to(c.label);
  j.at("a1").get_to(c.a1);
  j.at("a2").get_to(c.a2);
}

void to_json(json& j, const ReportJacobian& r) {
  j = json{{"applicable", r.applicable}, {"failed_hypothesis", r.failed_hypothesis},
           {"g_component", r.g_component}, {"g_base", r.g_base},
           {"g_first", r.g_first},         {"g_second", r.g_second},
           {"dim_p", r.dim_p}};
}
void from_json(const json& j, ReportJacobian& r) {
  j.at("applicable").get_to(r.applicable);
  j.at("failed_hypothesis").get_to(r.failed_hypothesis);
  j.at("g_component").get_to(r.g_component);
  j.at("g_base").get_to(r.g_base);
  j.at("g_first").get_to(r.g_first);
  j.at("g_second").get_to(r.g_second);
  j.at("dim_p").get_to(r.dim_p);
}

void to_json(json& j, const ReportIsomorphism& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back(x ? json(*x) : json(nullptr));
  j = json{{"all_isomorphic", r.all_isomorphic}, {"witnesses", w}};
}
void from_json(const json& j, ReportIsomorphism& r) {
  j.at("all_isomorphic").get_to(r.all_isomorphic);
  r.witnesses.clear();
  for (const auto& x : j.at("witnesses"))
    r.witnesses.push_back(x.is_null() ? std::nullopt : std::optional<std::string>(x.get<std::string>()));
}

namespace {

json to_structured(const DecompositionReport& r) {
  json adjacency = json::array();
  for (auto [a, b] : r.adjacency) adjacency.push_back({a, b});
  json j{{"version", r.version},
         {"first", r.first},
         {"second", r.second},
         {"labels", r.labels},
         {"components", r.components},
         {"singular_points", r.singular_points},
         {"adjacency", adjacency},
         {"connected", r.connected},
         {"bound", r.bound},
         {"criteria",
          {{"cond1", r.cond1},
           {"cond2", r.cond2},
           {"predicted_irreducible", r.predicted_irreducible},
           {"per_label", r.per_label}}},
         {"jacobian", r.jacobian ? json(*r.jacobian) : json(nullptr)},
         {"isomorphism", r.isomorphism ? json(*r.isomorphism) : json(nullptr)}};
  return j;
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string text_form(const DecompositionReport& r) {
  std::ostringstream os;
  os << "version: " << r.version << "\n";
  auto cover = [&](const char* name, const ReportCover& c) {
    os << name << ":\n";
    os << "  base_genus: " << c.base_genus << "\n";
    os << "  degree: " << c.degree << "\n";
    os << "  genus: " << c.genus << "\n";
    os << "  regular: " << yes(c.regular) << "\n";
    for (const auto& [a, b] : c.handles) os << "  handle: " << a << " ; " << b << "\n";
    for (const auto& bp : c.branches)
      os << "  branch: " << bp.label << " " << bp.cycles << (bp.padding ? " pad" : "") << "\n";
  };
  cover("first", r.first);
  cover("second", r.second);
  os << "labels: [";
  for (std::size_t k = 0; k < r.labels.size(); ++k) os << (k ? ", " : "") << r.labels[k];
  os << "]\n";
  os << "bound: " << r.bound << "\n";
  os << "components: " << r.components.size() << "\n";
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const auto& c = r.components[k];
    os << "component " << k + 1 << ":\n";
    os << "  size: " << c.size << "\n";
    os << "  d1: " << c.d1 << "\n";
    os << "  d2: " << c.d2 << "\n";
    os << "  genus: " << c.genus << "\n";
    for (const auto& [label, type] : c.cycle_types) os << "  type: " << label << " " << type << "\n";
  }
  if (r.singular_points.empty()) {
    os << "singular_points: []\n";
  } else {
    os << "singular_points:\n";
    for (const auto& s : r.singular_points) {
      os << "  - label: " << s.label << ", cycles: (" << s.cycle1 << ", " << s.cycle2
         << "), n1: " << s.n1 << ", n2: " << s.n2 << ", cone_count: " << s.cone_count
         << ", cone_components: [";
      for (std::size_t k = 0; k < s.cone_components.size(); ++k)
        os << (k ? ", " : "") << s.cone_components[k];
      os << "]" << (s.cone_count == 1 ? ", disc-like" : "") << "\n";
    }
  }
  os << "adjacency: [";
  for (std::size_t k = 0; k < r.adjacency.size(); ++k)
    os << (k ? ", " : "") << "(" << r.adjacency[k].first << ", " << r.adjacency[k].second << ")";
  os << "]\n";
  os << "connected: " << yes(r.connected) << "\n";
  os << "criteria:\n";
  os << "  cond1: " << yes(r.cond1) << "\n";
  os << "  cond2: " << yes(r.cond2) << "\n";
  os << "  predicted_irreducible: " << yes(r.predicted_irreducible) << "\n";
  for (const auto& c : r.per_label)
    os << "  label: " << c.label << " a1=" << c.a1 << " a2=" << c.a2 << "\n";
  if (r.jacobian) {
    const auto& j = *r.jacobian;
    os << "jacobian:\n";
    os << "  applicable: " << yes(j.applicable) << "\n";
    if (!j.applicable) os << "  failed_hypothesis: " << j.failed_hypothesis << "\n";
    os << "  g_component: " << j.g_component << "\n";
    os << "  g_base: " << j.g_base << "\n";
    os << "  g_first: " << j.g_first << "\n";
    os << "  g_second: " << j.g_second << "\n";
    os << "  dim_p: " << j.dim_p << "\n";
  }
  if (r.isomorphism) {
    os << "isomorphism:\n";
    os << "  all_isomorphic: " << yes(r.isomorphism->all_isomorphic) << "\n";
    for (std::size_t k = 0; k < r.isomorphism->witnesses.size(); ++k) {
      const auto& w = r.isomorphism->witnesses[k];
      os << "  witness 1->" << k + 1 << ": " << (w ? (w->empty() ? "()" : *w) : "none") << "\n";
    }
  }
  return os.str();
}

}  // namespace

std::string emit_report(const DecompositionReport& report, ReportFormat format) {
  if (format == ReportFormat::text) return text_form(report);
  return to_structured(report).dump(2) + "\n";
}

DecompositionReport parse_structured_report(std::string_view text) {
  try {
    json j = json::parse(text);
    DecompositionReport r;
    j.at("version").get_to(r.version);
    if (r.version != 1) throw Error(ErrorKind::syntax, "unsupported report version");
    j.at("first").get_to(r.first);
    j.at("second").get_to(r.second);
    j.at("labels").get_to(r.labels);
    j.at("components").get_to(r.components);
    j.at("singular_points").get_to(r.singular_points);
    for (const auto& e : j.at("adjacency")) r.adjacency.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    j.at("connected").get_to(r.connected);
    j.at("bound").get_to(r.bound);
    const json& c = j.at("criteria");
    c.at("cond1").get_to(r.cond1);
    c.at("cond2").get_to(r.cond2);
    c.at("predicted_irreducible").get_to(r.predicted_irreducible);
    c.at("per_label").get_to(r.per_label);
    if (!j.at("jacobian").is_null()) r.jacobian = j.at("jacobian").get<ReportJacobian>();
    if (!j.at("isomorphism").is_null()) r.isomorphism = j.at("isomorphism").get<ReportIsomorphism>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::syntax, std::string("report: ") + e.what());
  }
}

}  // namespace fibercover
