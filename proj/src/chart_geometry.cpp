#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>

#include "chartbraid/chart.hpp"
#include "chartbraid/error.hpp"
#include "geometry.hpp"

namespace chartbraid {

using namespace detail;

TransversePath TransversePath::reversed() const {
  TransversePath r;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) r.pieces.emplace_back(it->rbegin(), it->rend());
  return r;
}

BraidWord intersection_word(const Chart& chart, const TransversePath& path) {
  struct Hit {
    std::size_t piece, segment;
    double t;
    int letter;
  };
  std::vector<Hit> hits;
  std::vector<std::vector<Point>> lines;
  for (const auto& e : chart.edges) lines.push_back(chart.polyline(e));
  for (std::size_t p = 0; p < path.pieces.size(); ++p) {
    const auto& piece = path.pieces[p];
    if (piece.size() < 2) throw UsageError("a path piece needs at least two points");
    for (std::size_t s = 0; s + 1 < piece.size(); ++s) {
      Point a = piece[s];
      Point b = piece[s + 1];
      for (std::size_t k = 0; k < chart.edges.size(); ++k) {
        const auto& pts = lines[k];
        for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
          auto hit = intersect(a, b, pts[j], pts[j + 1]);
          if (hit.contact == Contact::none) continue;
          if (hit.contact != Contact::proper) {
            throw ValidationError("transverse", "path is not transverse to edge " + chart.edges[k].id);
          }
          int eps = cross(b - a, pts[j + 1] - pts[j]) > 0 ? 1 : -1;
          hits.push_back({p, s, hit.t, eps * chart.edges[k].label});
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
    return std::tie(x.piece, x.segment, x.t) < std::tie(y.piece, y.segment, y.t);
  });
  for (std::size_t k = 0; k + 1 < hits.size(); ++k) {
    const auto& x = hits[k];
    const auto& y = hits[k + 1];
    if (x.piece == y.piece && x.segment == y.segment && std::abs(x.t - y.t) < 1e-9) {
      throw ValidationError("transverse", "path meets two edges at the same point");
    }
  }
  std::vector<int> letters;
  for (const auto& h : hits) letters.push_back(h.letter);
  return BraidWord(std::max(chart.m, 1), std::move(letters));
}

TransversePath schema_loop(const SurfaceSchema& schema, int generator_index, bool b_loop) {
  if (schema.genus() == 0 || generator_index < 0 || generator_index >= schema.genus()) {
    throw UsageError("no schema generator " + std::to_string(generator_index + 1) + " on genus " +
                     std::to_string(schema.genus()));
  }
  int base = 4 * generator_index;
  int out = b_loop ? base + 2 : base + 1;
  int in = schema.partner(out);
  TransversePath path;
  path.pieces.push_back({schema.center(), schema.boundary_point(out, 0.5)});
  path.pieces.push_back({schema.boundary_point(in, 0.5), schema.center()});
  return path;
}

namespace {

double distance_to_segment(Point p, Point a, Point b) {
  Point d = b - a;
  double len2 = d.x * d.x + d.y * d.y;
  double t = len2 == 0 ? 0 : std::clamp(((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len2, 0.0, 1.0);
  return norm(p - (a + t * d));
}

TransversePath branch_path(const Chart& chart, const ChartVertex& v) {
  Point p = *v.position;
  double dist = norm(p);
  if (dist < 1e-7) throw ValidationError("transverse", "black vertex " + v.id + " sits at the base point");
  double r = std::min(1.0, dist / 2);
  for (const auto& e : chart.edges) {
    auto pts = chart.polyline(e);
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
      if (detail::near(pts[j], p) || detail::near(pts[j + 1], p)) continue;
      r = std::min(r, distance_to_segment(p, pts[j], pts[j + 1]) / 2);
    }
  }
  for (const auto& w : chart.vertices) {
    if (w.id != v.id) r = std::min(r, norm(*w.position - p) / 2);
  }
  if (r < 1e-6) throw ValidationError("transverse", "no room for a small circle around " + v.id);
  Point u = (1 / dist) * p;
  Point start = p - r * u;
  std::vector<Point> out{chart.schema.center(), start};
  const double a0 = std::atan2(-u.y, -u.x);
  constexpr int steps = 48;
  std::vector<Point> circle;
  for (int k = 0; k < steps; ++k) {
    double a = a0 + 2 * std::numbers::pi * (k + 0.371) / steps;
    circle.push_back(p + Point{r * std::cos(a), r * std::sin(a)});
  }
  circle.push_back(start);
  std::vector<Point> piece = out;
  piece.insert(piece.end(), circle.begin(), circle.end());
  piece.push_back(chart.schema.center());
  TransversePath path;
  path.pieces.push_back(std::move(piece));
  return path;
}

}  // namespace

Monodromy monodromy_generators(const Chart& chart) {
  auto report = validate_chart(chart);
  if (!report.ok()) throw ValidationError(report.violations.front().clause, report.summary());
  if (!chart.has_geometry()) throw UsageError("monodromy needs vertex positions");
  Monodromy mono;
  for (int k = 0; k < chart.schema.genus(); ++k) {
    auto name = std::to_string(k + 1);
    mono.schema_loops.emplace_back("a" + name, intersection_word(chart, schema_loop(chart.schema, k, false)));
    mono.schema_loops.emplace_back("b" + name, intersection_word(chart, schema_loop(chart.schema, k, true)));
  }
  std::vector<const ChartVertex*> blacks;
  for (const auto& v : chart.vertices)
    if (v.kind == VertexKind::black) blacks.push_back(&v);
  auto key = [](const ChartVertex* v) {
    Point p = *v->position;
    return std::tuple(std::atan2(p.y, p.x), norm(p), v->id);
  };
  std::sort(blacks.begin(), blacks.end(), [&](auto* a, auto* b) { return key(a) < key(b); });
  for (std::size_t k = 0; k + 1 < blacks.size(); ++k) {
    auto [a1, d1, i1] = key(blacks[k]);
    auto [a2, d2, i2] = key(blacks[k + 1]);
    if (std::abs(a1 - a2) < 1e-9) {
      throw ValidationError("transverse", "black vertices " + i1 + " and " + i2 + " are aligned with the base point");
    }
  }
  for (const auto* v : blacks) mono.branch_loops.emplace_back(v->id, intersection_word(chart, branch_path(chart, *v)));
  return mono;
}

std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& generators) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : generators) {
    if (g.size() != n) throw UsageError("generator acts on the wrong number of points");
    for (int k = 1; k <= n; ++k) {
      int a = find(k);
      int b = find(g.image(k));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> result;
  std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
  for (int k = 1; k <= n; ++k) {
    int r = find(k);
    if (index[static_cast<std::size_t>(r)] < 0) {
      index[static_cast<std::size_t>(r)] = static_cast<int>(result.size());
      result.emplace_back();
    }
    result[static_cast<std::size_t>(index[static_cast<std::size_t>(r)])].push_back(k);
  }
  return result;
}

CoveringInvariants covering_invariants(const Chart& chart) {
  auto mono = monodromy_generators(chart);
  std::vector<Permutation> gens;
  for (const auto& [name, w] : mono.schema_loops) gens.push_back(permutation_of(w));
  for (const auto& [name, w] : mono.branch_loops) gens.push_back(permutation_of(w));
  CoveringInvariants inv;
  inv.degree = chart.m;
  inv.branch_count = static_cast<int>(chart.count(VertexKind::black));
  inv.euler_characteristic = chart.m * chart.schema.euler_characteristic() - inv.branch_count;
  auto orb = orbits(chart.m, gens);
  inv.component_count = static_cast<int>(orb.size());
  for (const auto& o : orb) inv.component_degrees.push_back(static_cast<int>(o.size()));
  std::sort(inv.component_degrees.rbegin(), inv.component_degrees.rend());
  return inv;
}

std::vector<BoundaryMark> boundary_sequence(const Chart& chart) {
  std::vector<BoundaryMark> marks;
  for (const auto& e : chart.edges) {
    if (e.from.on_boundary()) marks.push_back({e.from.boundary, e.label, 1});
    if (e.to.on_boundary()) marks.push_back({e.to.boundary, e.label, -1});
  }
  std::sort(marks.begin(), marks.end(), [](const BoundaryMark& a, const BoundaryMark& b) {
    return std::tie(a.point.segment, a.point.offset) < std::tie(b.point.segment, b.point.offset);
  });
  return marks;
}

BraidWord boundary_word(const Chart& chart) {
  std::vector<int> letters;
  for (const auto& mark : boundary_sequence(chart)) letters.push_back(mark.sign * mark.label);
  return BraidWord(std::max(chart.m, 1), std::move(letters));
}

DiskEquivalence certify_disk_equivalence(const Chart& lhs, const Chart& rhs) {
  for (const Chart* c : {&lhs, &rhs}) {
    if (!c->schema.is_disk()) throw UsageError("disk equivalence needs charts on a disk");
    auto report = validate_chart(*c);
    if (!report.ok()) throw UsageError("invalid chart: " + report.summary());
  }
  if (lhs.m != rhs.m) throw UsageError("charts have different degrees");
  auto a = boundary_sequence(lhs);
  auto b = boundary_sequence(rhs);
  bool same_points = a.size() == b.size();
  for (std::size_t k = 0; same_points && k < a.size(); ++k) {
    same_points = a[k].point.segment == b[k].point.segment && std::abs(a[k].point.offset - b[k].point.offset) < 1e-9;
  }
  if (!same_points) throw ValidationError("boundary-marking", "the charts meet the boundary at different points");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].label != b[k].label || a[k].sign != b[k].sign) {
      return {DiskCertificate::unknown, "boundary labels or orientations differ at mark " + std::to_string(k + 1)};
    }
  }
  auto blacks_l = lhs.count(VertexKind::black);
  auto blacks_r = rhs.count(VertexKind::black);
  if (blacks_l == 0 && blacks_r == 0) {
    return {DiskCertificate::certified, "same boundary, no black vertices"};
  }
  if (blacks_l == 1 && blacks_r == 1 && are_equal(boundary_word(lhs), boundary_word(rhs))) {
    return {DiskCertificate::certified, "same boundary, one black vertex each"};
  }
  return {DiskCertificate::unknown, "black vertex counts " + std::to_string(blacks_l) + " and " +
                                        std::to_string(blacks_r) + " are outside the certified cases"};
}

}  // namespace chartbraid
