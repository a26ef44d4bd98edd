// Patch isomorphism: patches become colored directed multigraphs that are
// compared by color refinement followed by backtracking.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chartbraid/chart.hpp"
#include "chartbraid/move.hpp"

namespace chartbraid {
namespace {

struct Graph {
  std::vector<std::string> keys;
  std::vector<std::string> colors;
  std::map<std::string, int> index;
  std::map<std::pair<int, int>, std::vector<std::string>> relations;
  std::vector<std::vector<std::pair<int, std::string>>> out, in;

  int node(const std::string& key, std::string color) {
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int k = static_cast<int>(keys.size());
    keys.push_back(key);
    colors.push_back(std::move(color));
    index.emplace(key, k);
    out.emplace_back();
    in.emplace_back();
    return k;
  }
  void relate(const std::string& from, const std::string& to, const std::string& label) {
    auto a = index.find(from);
    auto b = index.find(to);
    // Dangling references only occur in invalid patches; they still count.
    int u = a != index.end() ? a->second : node(from, "?" + from);
    int v = b != index.end() ? b->second : node(to, "?" + to);
    relations[{u, v}].push_back(label);
    out[u].emplace_back(v, label);
    in[v].emplace_back(u, label);
  }
  void finish() {
    for (auto& [_, labels] : relations) std::sort(labels.begin(), labels.end());
  }
  const std::vector<std::string>* between(int u, int v) const {
    auto it = relations.find({u, v});
    return it == relations.end() ? nullptr : &it->second;
  }
};

std::string sign(int s) { return s > 0 ? "+" : "-"; }

std::string end_key(const CurveEnd& e) {
  switch (e.kind) {
    case CurveEndKind::branch: return "bpoint:" + e.ref;
    case CurveEndKind::triple: return "tpoint:" + e.ref;
    case CurveEndKind::port: return "port:" + e.ref;
    case CurveEndKind::dangling: return "";
  }
  return "";
}

Graph build(const Patch& p, bool fix_ports) {
  Graph g;
  const auto& c = p.complex;
  for (const auto& r : c.regions) g.node("region:" + r.id, "region");
  for (const auto& s : c.sheets) g.node("sheet:" + s.id, "sheet" + sign(s.orientation));
  for (const auto& k : c.curves) g.node("dcurve:" + k.id, k.closed ? "dcurve-closed" : "dcurve");
  for (const auto& b : c.branch_points) g.node("bpoint:" + b.id, "bpoint" + sign(b.sign));
  for (const auto& t : c.triple_points) g.node("tpoint:" + t.id, "tpoint");
  for (const auto& q : c.ports) g.node("port:" + q.name, (fix_ports ? "port " + q.name : std::string("port")) + (q.kind == PortKind::arc ? " arc" : " dcurve"));

  std::set<std::string> d2_ids;
  if (p.chart) {
    g.node("chart", "chart m=" + std::to_string(p.chart->m));
    for (const auto& v : p.chart->degree2) {
      d2_ids.insert(v.id);
      g.node("d2:" + v.id, "d2 " + std::to_string(v.label) + (v.over ? " over" : " under"));
    }
    for (const auto& f : p.chart->fragments) {
      for (const auto& v : f.vertices) g.node("vertex:" + f.sheet + "/" + v.id, "vertex " + std::string(to_string(v.kind)));
      for (const auto& e : f.edges) g.node("edge:" + e.id, "edge " + std::to_string(e.label));
    }
  }

  for (const auto& s : c.sheets) {
    std::string key = "sheet:" + s.id;
    g.relate(key, "region:" + s.front, "front");
    g.relate(key, "region:" + s.back, "back");
    for (std::size_t k = 0; k < s.boundary.size(); ++k) g.relate(key, "port:" + s.boundary[k], "bnd" + std::to_string(k));
  }
  for (const auto& k : c.curves) {
    std::string key = "dcurve:" + k.id;
    g.relate(key, "sheet:" + k.over_left, "over-left");
    g.relate(key, "sheet:" + k.over_right, "over-right");
    g.relate(key, "sheet:" + k.under_left, "under-left");
    g.relate(key, "sheet:" + k.under_right, "under-right");
    if (k.closed) continue;
    for (int e = 0; e < 2; ++e) {
      auto target = end_key(k.ends[e]);
      if (!target.empty()) g.relate(key, target, "end" + std::to_string(e));
    }
  }
  for (const auto& t : c.triple_points) {
    for (const auto& germ : t.germs) {
      g.relate("tpoint:" + t.id, "dcurve:" + germ.curve, "germ" + std::to_string(germ.end) + std::string(to_string(germ.levels)));
    }
  }
  for (const auto& q : c.ports) {
    if (q.kind != PortKind::dcurve) continue;
    std::string key = "port:" + q.name;
    g.relate(key, "port:" + q.over_left, "over-left");
    g.relate(key, "port:" + q.over_right, "over-right");
    g.relate(key, "port:" + q.under_left, "under-left");
    g.relate(key, "port:" + q.under_right, "under-right");
  }
  if (p.chart) {
    for (const auto& v : p.chart->degree2) g.relate("d2:" + v.id, "dcurve:" + v.curve, "on");
    for (const auto& f : p.chart->fragments) {
      const auto* sheet = c.find_sheet(f.sheet);
      auto endpoint = [&](const Endpoint& e) -> std::pair<std::string, std::string> {
        if (e.on_boundary()) {
          std::string port = sheet && e.boundary.segment < static_cast<int>(sheet->boundary.size())
                                 ? "port:" + sheet->boundary[e.boundary.segment]
                                 : "port:?" + std::to_string(e.boundary.segment);
          return {port, "@" + format_number(e.boundary.offset)};
        }
        if (d2_ids.count(e.vertex)) return {"d2:" + e.vertex, ""};
        return {"vertex:" + f.sheet + "/" + e.vertex, ""};
      };
      for (const auto& v : f.vertices) g.relate("vertex:" + f.sheet + "/" + v.id, "sheet:" + f.sheet, "on");
      for (const auto& e : f.edges) {
        std::string key = "edge:" + e.id;
        g.relate(key, "sheet:" + f.sheet, "on");
        auto [from, fl] = endpoint(e.from);
        auto [to, tl] = endpoint(e.to);
        g.relate(key, from, "from" + fl);
        g.relate(key, to, "to" + tl);
      }
      for (const auto& [_, ends] : f.rotation) {
        for (std::size_t k = 0; k < ends.size(); ++k) {
          const auto& a = ends[k];
          const auto& b = ends[(k + 1) % ends.size()];
          g.relate("edge:" + a.edge, "edge:" + b.edge,
                   std::string("next ") + (a.source ? "s" : "t") + (b.source ? "s" : "t"));
        }
      }
    }
  }
  g.finish();
  return g;
}

// Joint color refinement so that color ids are comparable across graphs.
void refine(Graph& a, Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
  std::map<std::string, int> dictionary;
  auto assign = [&](const std::string& s) {
    auto it = dictionary.emplace(s, static_cast<int>(dictionary.size()));
    return it.first->second;
  };
  ca.clear();
  cb.clear();
  for (const auto& c : a.colors) ca.push_back(assign(c));
  for (const auto& c : b.colors) cb.push_back(assign(c));
  auto classes = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::set<int> s(x.begin(), x.end());
    s.insert(y.begin(), y.end());
    return s.size();
  };
  std::size_t count = classes(ca, cb);
  for (;;) {
    dictionary.clear();
    auto step = [&](const Graph& g, const std::vector<int>& c) {
      std::vector<int> next(c.size());
      for (std::size_t u = 0; u < c.size(); ++u) {
        std::vector<std::string> sig;
        for (const auto& [v, l] : g.out[u]) sig.push_back(">" + l + "#" + std::to_string(c[v]));
        for (const auto& [v, l] : g.in[u]) sig.push_back("<" + l + "#" + std::to_string(c[v]));
        std::sort(sig.begin(), sig.end());
        std::string s = std::to_string(c[u]);
        for (const auto& x : sig) s += "|" + x;
        next[u] = assign(s);
      }
      return next;
    };
    auto na = step(a, ca);
    auto nb = step(b, cb);
    std::size_t n = classes(na, nb);
    ca = std::move(na);
    cb = std::move(nb);
    if (n == count) break;
    count = n;
  }
}

struct Search {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<int> order;
  std::vector<int> forward, backward;

  bool consistent(int u, int x) const {
    for (int w = 0; w < static_cast<int>(a.keys.size()); ++w) {
      if (forward[w] < 0 && w != u) continue;
      int y = w == u ? x : forward[w];
      auto same = [](const std::vector<std::string>* p, const std::vector<std::string>* q) {
        if (!p || !q) return !p && !q;
        return *p == *q;
      };
      if (!same(a.between(u, w), b.between(x, y))) return false;
      if (!same(a.between(w, u), b.between(y, x))) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int x = 0; x < static_cast<int>(b.keys.size()); ++x) {
      if (backward[x] >= 0 || cb[x] != ca[u] || !consistent(u, x)) continue;
      forward[u] = x;
      backward[x] = u;
      if (run(depth + 1)) return true;
      forward[u] = -1;
      backward[x] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<PatchMap> find_isomorphism(const Patch& from, const Patch& to, bool fix_ports) {
  Graph a = build(from, fix_ports);
  Graph b = build(to, fix_ports);
  if (a.keys.size() != b.keys.size()) return std::nullopt;
  std::vector<int> ca, cb;
  refine(a, b, ca, cb);
  auto histogram = [](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (histogram(ca) != histogram(cb)) return std::nullopt;

  Search s{a, b, ca, cb, {}, std::vector<int>(a.keys.size(), -1), std::vector<int>(b.keys.size(), -1)};
  std::map<int, int> class_size;
  for (int c : ca) ++class_size[c];
  s.order.resize(a.keys.size());
  for (std::size_t k = 0; k < s.order.size(); ++k) s.order[k] = static_cast<int>(k);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) { return class_size[ca[x]] < class_size[ca[y]]; });
  if (!s.run(0)) return std::nullopt;
  PatchMap map;
  for (std::size_t u = 0; u < a.keys.size(); ++u) map[a.keys[u]] = b.keys[s.forward[u]];
  return map;
}

}  // namespace chartbraid
