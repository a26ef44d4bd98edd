#pragma once

// Random valid charts with geometry. Candidates are built from disjoint
// pieces (branch-point pairs, white-vertex hedgehogs, arcs across one side
// pair per handle) and kept only if they validate.

#include <random>
#include <set>
#include <string>

#include "chartbraid/chart.hpp"

namespace gen {

using namespace chartbraid;

struct Generated {
  Chart chart;
  std::set<int> labels;  // every label used
};

inline void add_pair(Chart& c, std::mt19937& rng, int label, std::set<int>& labels) {
  std::uniform_real_distribution<double> pos(-8, 8);
  std::uniform_real_distribution<double> len(0.8, 2.5);
  std::uniform_real_distribution<double> ang(0, 6.283185307179586);
  Point p{pos(rng), pos(rng)};
  double a = ang(rng);
  double l = len(rng);
  Point q{p.x + l * std::cos(a), p.y + l * std::sin(a)};
  auto n = std::to_string(c.vertices.size());
  std::string b1 = "b" + n;
  std::string b2 = "c" + n;
  std::string e = "e" + n;
  c.vertices.push_back({b1, VertexKind::black, p});
  c.vertices.push_back({b2, VertexKind::black, q});
  c.edges.push_back({e, label, Endpoint::at_vertex(b1), Endpoint::at_vertex(b2), {}});
  c.rotation[b1] = {{e, true}};
  c.rotation[b2] = {{e, false}};
  labels.insert(label);
}

inline void add_hedgehog(Chart& c, std::mt19937& rng, int i, bool swap, std::set<int>& labels) {
  std::uniform_real_distribution<double> pos(-6, 6);
  std::uniform_real_distribution<double> scale(0.4, 1.0);
  Point w{pos(rng), pos(rng)};
  double s = scale(rng);
  static constexpr Point dirs[6] = {{3, 0}, {1, 3}, {-2, 3}, {-3, 0}, {-1, -3}, {2, -3}};
  auto n = std::to_string(c.vertices.size());
  std::string wid = "w" + n;
  c.vertices.push_back({wid, VertexKind::white, w});
  std::vector<EdgeEnd> rot;
  for (int k = 0; k < 6; ++k) {
    int label = (k % 2 == 0) != swap ? i : i + 1;
    bool incoming = k < 3;
    std::string bid = "h" + n + "_" + std::to_string(k);
    std::string eid = "f" + n + "_" + std::to_string(k);
    c.vertices.push_back({bid, VertexKind::black, Point{w.x + s * dirs[k].x, w.y + s * dirs[k].y}});
    if (incoming) {
      c.edges.push_back({eid, label, Endpoint::at_vertex(bid), Endpoint::at_vertex(wid), {}});
    } else {
      c.edges.push_back({eid, label, Endpoint::at_vertex(wid), Endpoint::at_vertex(bid), {}});
    }
    c.rotation[bid] = {{eid, incoming}};
    rot.push_back({eid, !incoming});
  }
  c.rotation[wid] = rot;
  labels.insert(i);
  labels.insert(i + 1);
}

inline void add_wrap(Chart& c, std::mt19937& rng, int side, int label, std::set<int>& labels) {
  std::uniform_real_distribution<double> off(0.1, 0.4);
  std::uniform_int_distribution<int> coin(0, 1);
  double t = off(rng);
  if (coin(rng)) t = 1 - t;
  int mate = c.schema.partner(side);
  auto id = "a" + std::to_string(c.edges.size());
  auto a = Endpoint::at_boundary(side, t);
  auto b = Endpoint::at_boundary(mate, 1 - t);
  if (coin(rng)) std::swap(a, b);
  c.edges.push_back({id, label, a, b, {}});
  labels.insert(label);
}

/// A random valid chart with m <= max_m on a surface of genus <= max_genus.
inline Generated random_chart(std::mt19937& rng, int max_m = 6, int max_genus = 2) {
  std::uniform_int_distribution<int> mdist(2, max_m);
  std::uniform_int_distribution<int> gdist(0, max_genus);
  for (;;) {
    Generated g;
    Chart& c = g.chart;
    c.m = mdist(rng);
    c.schema = SurfaceSchema(gdist(rng));
    std::uniform_int_distribution<int> ldist(1, c.m - 1);
    std::uniform_int_distribution<int> count(0, 3);
    int pairs = count(rng);
    for (int k = 0; k < pairs; ++k) add_pair(c, rng, ldist(rng), g.labels);
    if (c.m >= 3 && count(rng) == 0) {
      std::uniform_int_distribution<int> idist(1, c.m - 2);
      add_hedgehog(c, rng, idist(rng), count(rng) % 2 == 1, g.labels);
    }
    for (int h = 0; h < c.schema.genus(); ++h) {
      int choice = count(rng);
      if (choice == 1) add_wrap(c, rng, 4 * h + 3, ldist(rng), g.labels);
      if (choice == 2) add_wrap(c, rng, 4 * h, ldist(rng), g.labels);
    }
    if (!validate_chart(c).ok()) continue;
    try {
      monodromy_generators(c);
    } catch (const std::exception&) {
      continue;
    }
    return g;
  }
}

/// Orbits predicted from the labels alone: i and i+1 are joined whenever
/// label i occurs.
inline std::set<std::set<int>> label_components(int m, const std::set<int>& labels) {
  std::set<std::set<int>> out;
  std::set<int> current{1};
  for (int k = 1; k < m; ++k) {
    if (labels.count(k)) {
      current.insert(k + 1);
    } else {
      out.insert(current);
      current = {k + 1};
    }
  }
  out.insert(current);
  return out;
}

}  // namespace gen
