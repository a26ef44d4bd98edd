#include <algorithm>
#include <set>

#include "chartbraid/error.hpp"
#include "chartbraid/move.hpp"

namespace chartbraid {
namespace {

void require_valid(const Patch& p, const char* what) {
  auto report = validate_complex(p.complex);
  if (report.ok() && p.chart) report = validate_diagram_chart(p.complex, *p.chart);
  if (!report.ok()) throw ValidationError(report.violations.front().clause, std::string(what) + ": " + report.summary());
}

std::string describe(const Assignment& a) {
  std::string s;
  for (const auto& [k, v] : a) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s.empty() ? "no parameters" : s;
}

// Facts with the same name are merged over all assignments.
class FactSheet {
 public:
  void add(const std::string& name, bool ok, const std::string& where) {
    auto& f = slot(name);
    ++checked_[name];
    if (!ok && f.status != FactStatus::failed) {
      f.status = FactStatus::failed;
      f.detail = "fails for " + where;
    }
  }
  void assume(const std::string& name, const std::string& detail) {
    auto& f = slot(name);
    f.status = FactStatus::assumed;
    f.detail = detail;
  }
  std::vector<Fact> finish() {
    for (auto& f : facts_) {
      if (f.status == FactStatus::passed) f.detail = std::to_string(checked_[f.name]) + " checks";
    }
    return std::move(facts_);
  }

 private:
  Fact& slot(const std::string& name) {
    for (auto& f : facts_) {
      if (f.name == name) return f;
    }
    facts_.push_back({name, FactStatus::passed, ""});
    return facts_.back();
  }
  std::vector<Fact> facts_;
  std::map<std::string, int> checked_;
};

void check_lifts(FactSheet& sheet, const Patch& p, int m, const std::string& where) {
  DiagramChart empty;
  empty.m = m;
  const auto& chart = p.chart ? *p.chart : empty;
  std::set<std::string> crossed;
  for (const auto& v : chart.degree2) crossed.insert(v.curve);
  for (const auto& k : crossed) {
    sheet.add("degree-2 identities", local_lift(p.complex, "dcurve:" + k, chart).verified, where + " at " + k);
  }
  for (const auto& b : p.complex.branch_points) {
    sheet.add("branch collapse", local_lift(p.complex, "bpoint:" + b.id, chart).verified, where + " at " + b.id);
  }
  for (const auto& t : p.complex.triple_points) {
    sheet.add("triple point word", local_lift(p.complex, "tpoint:" + t.id, chart).verified, where + " at " + t.id);
  }
}

void rename_ports(Patch& p, const PatchMap& map) {
  auto rename = [&](std::string& name) {
    auto it = map.find("port:" + name);
    if (it != map.end()) name = it->second.substr(5);
  };
  auto& c = p.complex;
  for (auto& s : c.sheets) for (auto& b : s.boundary) rename(b);
  for (auto& k : c.curves) {
    for (auto& e : k.ends) {
      if (e.kind == CurveEndKind::port) rename(e.ref);
    }
  }
  for (auto& q : c.ports) {
    rename(q.name);
    for (auto* a : {&q.over_left, &q.over_right, &q.under_left, &q.under_right}) {
      if (!a->empty()) rename(*a);
    }
  }
  std::sort(c.ports.begin(), c.ports.end(), [](const Port& a, const Port& b) { return a.name < b.name; });
}

}  // namespace

std::optional<Binding> match_move(const Patch& p, const MoveKind& k, const Catalog& catalog) {
  require_valid(p, "patch");
  const auto& entry = catalog.entry(k.id);
  bool target_side = k.direction == Direction::backward;
  const auto& side_text = target_side ? entry.target : entry.source;
  bool side_has_chart = side_text.find("\nchart ") != std::string::npos;
  int m = p.chart ? p.chart->m : 1;
  Patch q = p;
  q.comments.clear();
  if (!side_has_chart) {
    if (q.chart && !q.chart->empty()) return std::nullopt;
    q.chart.reset();
  } else if (!q.chart) {
    return std::nullopt;
  }
  for (const auto& a : admissible_parameters(entry, m)) {
    auto side = instantiate(entry, target_side, m, a);
    if (auto map = find_isomorphism(side, q, false)) return Binding{k, m, a, std::move(*map)};
  }
  return std::nullopt;
}

Patch apply_move(const Patch& p, const MoveKind& k, const Catalog& catalog) {
  auto binding = match_move(p, k, catalog);
  if (!binding) throw ValidationError("match", "patch does not match the " + std::string(k.direction == Direction::forward ? "source" : "target") + " of " + k.id);
  const auto& entry = catalog.entry(k.id);
  auto result = instantiate(entry, k.direction == Direction::forward, binding->m, binding->parameters);
  rename_ports(result, binding->map);
  if (p.chart && !result.chart) {
    result.chart = DiagramChart{};
    result.chart->m = p.chart->m;
  }
  try {
    require_valid(result, "move result");
  } catch (const ValidationError& e) {
    throw InternalError(k.id + " produced an invalid patch: " + e.what());
  }
  if (interface_lines(result) != interface_lines(p)) throw InternalError(k.id + " changed the boundary interface");
  return result;
}

std::string_view to_string(FactStatus s) {
  switch (s) {
    case FactStatus::passed: return "passed";
    case FactStatus::failed: return "failed";
    case FactStatus::assumed: return "assumed";
  }
  return "?";
}

bool CertificationReport::passed() const {
  return std::none_of(facts.begin(), facts.end(), [](const Fact& f) { return f.status == FactStatus::failed; });
}

Chart flatten_chart(const Patch& p) {
  Chart flat;
  flat.schema = SurfaceSchema::disk();
  flat.m = p.chart ? p.chart->m : 1;
  if (!p.chart) return flat;
  std::vector<std::string> arcs;
  for (const auto& q : p.complex.ports) {
    if (q.kind == PortKind::arc) arcs.push_back(q.name);
  }
  std::sort(arcs.begin(), arcs.end());
  auto arc_index = [&](const std::string& name) {
    return static_cast<double>(std::lower_bound(arcs.begin(), arcs.end(), name) - arcs.begin());
  };
  std::set<std::string> d2_ids;
  for (const auto& v : p.chart->degree2) {
    d2_ids.insert(v.id);
    flat.vertices.push_back({v.id, VertexKind::free, std::nullopt});
  }
  std::map<std::string, std::vector<EdgeEnd>> free_ends;
  for (const auto& f : p.chart->fragments) {
    const auto* sheet = p.complex.find_sheet(f.sheet);
    if (!sheet) throw UsageError("chart drawn on unknown 2-cell '" + f.sheet + "'");
    auto local = [&](const std::string& id) { return d2_ids.count(id) ? id : f.sheet + "/" + id; };
    for (auto v : f.vertices) {
      v.id = local(v.id);
      flat.vertices.push_back(std::move(v));
    }
    for (const auto& e : f.edges) {
      ChartEdge g = e;
      g.via.clear();
      auto place = [&](Endpoint& end, bool source) {
        if (end.on_boundary()) {
          const auto& port = sheet->boundary.at(end.boundary.segment);
          end = Endpoint::at_boundary(0, (arc_index(port) + end.boundary.offset) / static_cast<double>(arcs.size()));
          return;
        }
        if (d2_ids.count(end.vertex)) free_ends[end.vertex].push_back({e.id, source});
        end.vertex = local(end.vertex);
      };
      place(g.from, true);
      place(g.to, false);
      flat.edges.push_back(std::move(g));
    }
    for (const auto& [v, ends] : f.rotation) flat.rotation[local(v)] = ends;
  }
  for (auto& [v, ends] : free_ends) {
    std::sort(ends.begin(), ends.end(), [](const EdgeEnd& a, const EdgeEnd& b) { return a.source < b.source; });
    flat.rotation[v] = ends;
  }
  return flat;
}

CertificationReport certify_move(const CatalogEntry& entry, int m, const std::optional<Assignment>& values) {
  if (m < 1) throw UsageError("m must be positive");
  auto admissible = admissible_parameters(entry, m);
  std::vector<Assignment> assignments;
  if (values) {
    Assignment given = *values;
    for (const auto& p : entry.parameters) {
      if (!given.count(p.name)) throw UsageError("missing parameter '" + p.name + "'");
    }
    for (const auto& [k, _] : given) {
      bool declared = std::any_of(entry.parameters.begin(), entry.parameters.end(), [&](const Parameter& p) { return p.name == k; });
      if (!declared) throw UsageError(entry.id + " has no parameter '" + k + "'");
    }
    if (std::find(admissible.begin(), admissible.end(), given) == admissible.end()) {
      throw UsageError("parameters " + describe(given) + " out of range for " + entry.id + " at m=" + std::to_string(m));
    }
    assignments.push_back(std::move(given));
  } else {
    assignments = std::move(admissible);
  }

  CertificationReport report;
  report.move = entry.id;
  report.m = m;
  report.assignments = assignments.size();
  FactSheet sheet;
  if (assignments.empty()) sheet.add("parameters", true, "");
  for (const auto& a : assignments) {
    std::string where = describe(a);
    auto source = instantiate(entry, false, m, a);
    auto target = instantiate(entry, true, m, a);
    bool valid = true;
    for (const auto* side : {&source, &target}) {
      try {
        require_valid(*side, "catalog side");
      } catch (const ValidationError&) {
        valid = false;
      }
    }
    sheet.add("valid sides", valid, where);
    if (!valid) continue;
    sheet.add("interface", interface_lines(source) == interface_lines(target), where);

    auto lhs = flatten_chart(source);
    auto rhs = flatten_chart(target);
    lhs.m = rhs.m = m;
    bool disk = false;
    if (lhs.count(VertexKind::black) <= 1 && rhs.count(VertexKind::black) <= 1) {
      try {
        disk = certify_disk_equivalence(lhs, rhs).status == DiskCertificate::certified;
      } catch (const Error&) {
        disk = false;
      }
    }
    sheet.add("disk criterion", disk, where);
    check_lifts(sheet, source, m, where + " (source)");
    check_lifts(sheet, target, m, where + " (target)");
  }
  for (const auto& f : entry.facts) {
    if (f == "halftwist") {
      auto delta = garside_element(m);
      sheet.add("half twist symmetry", are_equal(flip(delta), delta), "m=" + std::to_string(m));
    } else {
      sheet.add("fact " + f, false, "unknown fact");
    }
  }
  sheet.assume("ambient isotopy", "the two sides present isotopic surfaces in 4-space");
  for (const auto& text : entry.assumptions) sheet.assume("assumed: " + text, "taken as given");
  report.facts = sheet.finish();
  if (assignments.empty()) {
    for (auto& f : report.facts) {
      if (f.name == "parameters") f.detail = "no admissible parameters at m=" + std::to_string(m);
    }
  }
  return report;
}

}  // namespace chartbraid
