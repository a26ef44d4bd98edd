#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartbraid/braid.hpp"
#include "chartbraid/chart.hpp"

namespace chartbraid {

/// A complementary region of the diagram in 3-space (or in the patch ball).
struct Region {
  std::string id;
  std::vector<std::string> adjacent;
};

/// A 2-cell of D minus Sing(D) with the regions on its two sides. The
/// oriented normal points into `front` when orientation is +1 and into
/// `back` when it is -1.
struct Sheet {
  std::string id;
  int orientation = 1;
  std::string front;
  std::string back;
  std::vector<std::string> boundary;  // arc ports on the patch boundary

  const std::string& normal_side() const { return orientation > 0 ? front : back; }
  const std::string& other_side() const { return orientation > 0 ? back : front; }
};

enum class CurveEndKind { branch, triple, port, dangling };

struct CurveEnd {
  CurveEndKind kind = CurveEndKind::dangling;
  std::string ref;
};

/// A double point arc or loop. Along its direction, the over sheet is cut
/// into a left and a right 2-cell; likewise the under sheet.
struct DoubleCurve {
  std::string id;
  std::string over_left, over_right, under_left, under_right;
  bool closed = false;
  std::array<CurveEnd, 2> ends;  // unused when closed
};

struct BranchPoint {
  std::string id;
  int sign = 1;
};

enum class LevelPair { top_middle, top_bottom, middle_bottom };

std::string_view to_string(LevelPair levels);

/// One of the six double-curve germs at a triple point.
struct Germ {
  std::string curve;
  int end = 0;
  LevelPair levels = LevelPair::top_middle;
};

struct TriplePoint {
  std::string id;
  std::vector<Germ> germs;
};

enum class PortKind { arc, dcurve };

/// A piece of the patch boundary. Arc ports are boundary arcs of 2-cells;
/// dcurve ports are double-curve endpoints on the boundary, with the four
/// arc ports around them.
struct Port {
  std::string name;
  PortKind kind = PortKind::arc;
  std::string over_left, over_right, under_left, under_right;
};

struct DiagramComplex {
  std::vector<Region> regions;
  std::vector<Sheet> sheets;
  std::vector<DoubleCurve> curves;
  std::vector<BranchPoint> branch_points;
  std::vector<TriplePoint> triple_points;
  std::vector<Port> ports;

  const Region* find_region(std::string_view id) const;
  const Sheet* find_sheet(std::string_view id) const;
  const DoubleCurve* find_curve(std::string_view id) const;
  const BranchPoint* find_branch_point(std::string_view id) const;
  const TriplePoint* find_triple_point(std::string_view id) const;
  const Port* find_port(std::string_view id) const;
  bool is_patch() const { return !ports.empty(); }
};

/// A point where a chart edge of label i crosses a double curve, staying on
/// the over or the under sheet.
struct Degree2Vertex {
  std::string id;
  std::string curve;
  int label = 1;
  bool over = true;
};

/// The part of a chart drawn on one 2-cell. Edge endpoints name a vertex of
/// the fragment, a degree-2 vertex, or `boundary:<k>,<offset>` where k indexes
/// the 2-cell's boundary port list.
struct SheetChart {
  std::string sheet;
  std::vector<ChartVertex> vertices;
  std::vector<ChartEdge> edges;
  std::map<std::string, std::vector<EdgeEnd>> rotation;
};

struct DiagramChart {
  int m = 1;
  std::vector<Degree2Vertex> degree2;
  std::vector<SheetChart> fragments;

  const Degree2Vertex* find_degree2(std::string_view id) const;
  const SheetChart* find_fragment(std::string_view sheet) const;
  bool empty() const;
};

/// A diagram file: the complex plus an optional chart on it.
struct Diagram {
  std::vector<std::string> comments;
  DiagramComplex complex;
  std::optional<DiagramChart> chart;
};

/// Text format:
///   complex
///   region <id> adj=<id>,...
///   sheet <id> <+|-> front=<region> back=<region> [bnd=<port>,...]
///   dcurve <id> over=<left>/<right> under=<left>/<right> ends=<end>,<end> | ends=closed
///        end: b:<bpoint> | t:<tpoint> | p:<port> | -
///   bpoint <id> sign=<+|->
///   tpoint <id> <curve>.<0|1>:<tm|tb|mb> (six germs)
///   port <name> arc | port <name> dcurve over=<arc>/<arc> under=<arc>/<arc>
///   chart m=<m>
///   d2 <id> curve=<dcurve> label=<i> level=<over|under>
///   on-sheet <sheet>
///   v / e / rot lines as in the chart format, scoped to the last on-sheet
std::string serialize(const Diagram& d);
Diagram parse_diagram(std::string_view text);

ValidationReport validate_complex(const DiagramComplex& c);

/// Region colors 0/1 keyed by region id; the first region listed gets 0.
/// Throws ValidationError("checkerboard") when the region graph has an odd
/// cycle.
std::map<std::string, int> checkerboard(const DiagramComplex& c);

struct ParityReport {
  int crossings = 0;
  bool even() const { return crossings % 2 == 0; }
  int color_changes = -1;  // front-side region color changes; -1 if uncolorable
};

/// `loop` alternates 2-cells and double curves: s0 d1 s1 d2 ... s0. Each step
/// must cross the named curve between the left and right cells of one level.
/// Throws ValidationError("transverse") otherwise.
ParityReport loop_parity(const DiagramComplex& c, const std::vector<std::string>& loop);

ValidationReport validate_diagram_chart(const DiagramComplex& c, const DiagramChart& chart);

/// +1 when the edge through the degree-2 vertex runs from the left cell of
/// its level to the right one.
int degree2_sign(const DiagramComplex& c, const DiagramChart& chart, const Degree2Vertex& v);

enum class SiteKind { regular, double_curve, branch_point, triple_point_disk };

std::string_view to_string(SiteKind kind);

struct LocalLift {
  SiteKind kind = SiteKind::regular;
  int m = 1;
  std::vector<BraidWord> words;              // e_m, or C, or the triple-point boundary word
  std::vector<std::vector<BraidWord>> chains;  // identity chains, one per degree-2 vertex or branch point
  std::vector<std::string> chain_names;
  long long double_curve_count = 0;          // lifted double curves meeting the site boundary
  int lifted_branch_points = 0;
  bool verified = false;                     // every chain / certificate checked
};

/// `site` is `sheet:<id>`, `dcurve:<id>`, `bpoint:<id>` or `tpoint:<id>`.
LocalLift local_lift(const DiagramComplex& c, std::string_view site, const DiagramChart& chart);

/// Upper bound m * Braid(F) for the braid index of a degree-m 2-dimensional
/// braid over F. Throws UsageError for non-positive inputs.
std::int64_t braid_index_bound(std::int64_t m, std::int64_t companion_braid_index);

/// Canonical description of the patch boundary, one line per port sorted by
/// name: cell orientation and chart ends for arc ports, direction and
/// surrounding arcs for dcurve ports.
std::vector<std::string> interface_lines(const Diagram& d);

}  // namespace chartbraid
