#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartbraid/braid.hpp"

namespace chartbraid {

struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point&) const = default;
};

/// A closed orientable surface of genus g as a 4g-gon with boundary word
/// a1 b1 a1^-1 b1^-1 ... (g >= 1), or a square for genus 0. For genus 0 the
/// square is either a sphere (boundary collapsed, nothing may touch it) or
/// an open disk whose boundary carries marked chart endpoints.
///
/// Polygon geometry: the apothem is 10, the center is the origin, and side k
/// runs counterclockwise from corner k to corner k+1. For genus 1 the square
/// is [-10,10]^2 with side 0 at the bottom.
class SurfaceSchema {
 public:
  explicit SurfaceSchema(int genus = 0, bool disk = false);

  static SurfaceSchema sphere() { return SurfaceSchema(0); }
  static SurfaceSchema disk() { return SurfaceSchema(0, true); }

  int genus() const { return genus_; }
  bool is_disk() const { return disk_; }
  int euler_characteristic() const { return disk_ ? 1 : 2 - 2 * genus_; }
  int side_count() const { return genus_ == 0 ? 4 : 4 * genus_; }
  /// Side glued to `side`, or -1 when the boundary is not identified.
  int partner(int side) const;
  /// "a1 b1 a1^-1 b1^-1 ..." ; empty for genus 0.
  std::string presentation() const;

  Point corner(int k) const;
  Point boundary_point(int side, double offset) const;
  Point center() const { return {0, 0}; }
  bool strictly_inside(Point p) const;

  bool operator==(const SurfaceSchema&) const = default;

 private:
  int genus_ = 0;
  bool disk_ = false;
};

enum class VertexKind { black, white, crossing, free };

std::string_view to_string(VertexKind kind);

struct ChartVertex {
  std::string id;
  VertexKind kind = VertexKind::black;
  std::optional<Point> position;
};

struct BoundaryPoint {
  int segment = 0;
  double offset = 0;
  bool operator==(const BoundaryPoint&) const = default;
};

/// An edge endpoint: a vertex, or a puncture on the polygon boundary.
struct Endpoint {
  std::string vertex;  // empty when on the boundary
  BoundaryPoint boundary;

  bool on_boundary() const { return vertex.empty(); }
  static Endpoint at_vertex(std::string id) { return {std::move(id), {}}; }
  static Endpoint at_boundary(int segment, double offset) { return {{}, {segment, offset}}; }
};

struct ChartEdge {
  std::string id;
  int label = 1;
  Endpoint from;
  Endpoint to;
  std::vector<Point> via;  // interior bend points, in order from -> to
};

/// One end of an edge at a vertex. `source` means the edge's `from` end.
struct EdgeEnd {
  std::string edge;
  bool source = true;
  bool operator==(const EdgeEnd&) const = default;
};

/// An m-chart drawn in a surface schema. Geometry (vertex positions and bend
/// points) is optional; without it only the combinatorial checks and the
/// rotation-based circle words are available.
struct Chart {
  int m = 2;
  SurfaceSchema schema;
  std::vector<std::string> comments;  // leading '#' lines, kept for round trips
  std::vector<ChartVertex> vertices;
  std::vector<ChartEdge> edges;
  /// Counterclockwise cyclic order of edge-ends around each vertex.
  std::map<std::string, std::vector<EdgeEnd>> rotation;

  const ChartVertex* find_vertex(std::string_view id) const;
  const ChartEdge* find_edge(std::string_view id) const;
  bool has_geometry() const;
  /// Polyline of an edge, endpoints included. Requires geometry.
  std::vector<Point> polyline(const ChartEdge& e) const;
  /// Edge-ends incident to a vertex, in edge order.
  std::vector<EdgeEnd> incident_ends(std::string_view vertex) const;
  std::size_t count(VertexKind kind) const;
};

/// Text format:
///   chart m=<m> genus=<g> [disk]
///   v <id> <black|white|crossing|free> [at <x>,<y>]
///   e <id> <label> <from> <to> via [<x>,<y> ...]       endpoints: <vertex-id> | boundary:<side>,<offset>
///   rot <vertex-id> <edge>:<s|t> ...
std::string serialize(const Chart& chart);
Chart parse_chart(std::string_view text);

/// Shortest text that reads back as the same double.
std::string format_number(double v);

struct Violation {
  std::string clause;   // degree, label, crossing, white, free, relator, rotation, boundary, embedding, reference
  std::string element;  // vertex or edge id
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has_clause(std::string_view clause) const;
  std::string summary() const;
};

ValidationReport validate_chart(const Chart& chart);

/// Word read by a small counterclockwise circle around a vertex, starting at
/// the first end of its rotation. Incoming ends read sigma^+1.
BraidWord circle_word(const Chart& chart, std::string_view vertex);

/// A directed polyline in the schema. Consecutive pieces are joined through
/// the boundary identification: piece k ends where piece k+1 starts, up to
/// the gluing.
struct TransversePath {
  std::vector<std::vector<Point>> pieces;

  TransversePath reversed() const;
};

/// sigma_label^eps per crossing, in path order. eps = +1 iff the edge points
/// to the left of the path direction. Throws ValidationError when the path
/// touches a vertex, a bend point, or runs along an edge.
BraidWord intersection_word(const Chart& chart, const TransversePath& path);

struct Monodromy {
  std::vector<std::pair<std::string, BraidWord>> schema_loops;  // a1, b1, ...
  std::vector<std::pair<std::string, BraidWord>> branch_loops;  // keyed by black vertex id
};

/// The loops are based at the polygon center. a_k leaves through the midpoint
/// of side b_k and re-enters through b_k^-1; b_k leaves through a_k^-1 and
/// re-enters through a_k. A branch loop runs straight to its black vertex,
/// circles it counterclockwise and returns; branch loops are sorted by angle
/// around the center, then distance, then id.
Monodromy monodromy_generators(const Chart& chart);
TransversePath schema_loop(const SurfaceSchema& schema, int generator_index, bool b_loop);

struct CoveringInvariants {
  int degree = 1;
  int branch_count = 0;
  int euler_characteristic = 0;
  int component_count = 1;
  std::vector<int> component_degrees;  // sorted descending
};

/// Orbits of the permutation group generated by `generators` on {1..n}.
std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& generators);

CoveringInvariants covering_invariants(const Chart& chart);

enum class DiskCertificate { certified, unknown };

struct DiskEquivalence {
  DiskCertificate status = DiskCertificate::unknown;
  std::string note;
};

/// Boundary crossings read counterclockwise from corner 0: (segment, offset,
/// label, +1 for an inward edge / -1 for an outward one).
struct BoundaryMark {
  BoundaryPoint point;
  int label = 1;
  int sign = 1;
  bool operator==(const BoundaryMark&) const = default;
};
std::vector<BoundaryMark> boundary_sequence(const Chart& chart);
BraidWord boundary_word(const Chart& chart);

/// Sufficient test for equivalence of the 2-dimensional braids presented by
/// two charts on a disk. Never claims inequivalence. Throws ValidationError
/// with invariant "boundary-marking" when the punctures sit at different
/// places, and UsageError when the inputs are not valid disk charts of the
/// same degree.
DiskEquivalence certify_disk_equivalence(const Chart& lhs, const Chart& rhs);

}  // namespace chartbraid
