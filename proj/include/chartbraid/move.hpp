#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartbraid/diagram.hpp"

namespace chartbraid {

/// A patch is a diagram with ports: the local picture inside a ball.
using Patch = Diagram;

/// Incidence-preserving bijection between two patches. Keys are
/// "<kind>:<id>" with kinds region, sheet, dcurve, bpoint, tpoint, port,
/// vertex, edge, d2. With fix_ports the bijection keeps port names.
using PatchMap = std::map<std::string, std::string>;

std::optional<PatchMap> find_isomorphism(const Patch& from, const Patch& to, bool fix_ports = true);
inline bool isomorphic(const Patch& a, const Patch& b) { return find_isomorphism(a, b).has_value(); }

enum class Direction { forward, backward };

struct MoveKind {
  std::string id;  // R1..R7, O1..O6
  Direction direction = Direction::forward;
};

/// "R1" or "R1:forward" / "R1:backward".
MoveKind parse_move_kind(std::string_view text);
std::string to_string(const MoveKind& k);

struct Parameter {
  std::string name;
  bool sign = false;    // ranges over {+1, -1}
  std::string low;      // bounds for integer parameters, e.g. "1" and "m-1"
  std::string high;
};

/// One catalog file: the parameter block and the two sides as diagram text
/// in which labels may be expressions (`i`, `i+1`, `m-1`), `chart m=m` takes
/// the degree, and `sign=eps` after `via` reverses an edge when eps = -1.
struct CatalogEntry {
  std::vector<std::string> comments;
  std::string id;
  std::vector<Parameter> parameters;
  std::vector<std::pair<std::string, std::string>> far;  // |a-b| >= 2
  std::vector<std::string> facts;        // extra checks, e.g. halftwist
  std::vector<std::string> assumptions;  // facts taken from the literature
  std::string source;
  std::string target;
};

CatalogEntry parse_catalog_entry(std::string_view text);
std::string serialize(const CatalogEntry& entry);

using Assignment = std::map<std::string, int>;

/// Every parameter assignment allowed at degree m, in lexicographic order.
std::vector<Assignment> admissible_parameters(const CatalogEntry& entry, int m);

/// One side of the entry with the parameters substituted.
Patch instantiate(const CatalogEntry& entry, bool target_side, int m, const Assignment& values);

/// CHARTBRAID_CATALOG if set, the built-in catalog directory otherwise.
std::filesystem::path default_catalog_dir();

class Catalog {
 public:
  static Catalog load(const std::filesystem::path& dir = default_catalog_dir());
  const CatalogEntry& entry(std::string_view id) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;
};

struct Binding {
  MoveKind kind;
  int m = 1;
  Assignment parameters;
  PatchMap map;  // catalog source side -> patch
};

/// Whole-patch match of the move's source side against p; port names may
/// differ from the catalog's. Throws
/// ValidationError for an invalid patch.
std::optional<Binding> match_move(const Patch& p, const MoveKind& k, const Catalog& catalog);

/// The move's other side, instantiated with the matched parameters and with
/// p's port names. Throws
/// ValidationError when nothing matches and InternalError when the result is
/// invalid or changes the boundary interface.
Patch apply_move(const Patch& p, const MoveKind& k, const Catalog& catalog);

enum class FactStatus { passed, failed, assumed };

std::string_view to_string(FactStatus s);

struct Fact {
  std::string name;
  FactStatus status = FactStatus::passed;
  std::string detail;
};

struct CertificationReport {
  std::string move;
  int m = 1;
  std::size_t assignments = 0;  // parameter assignments checked
  std::vector<Fact> facts;
  bool passed() const;
};

/// Checks, for each given (or every admissible) assignment: the interface is
/// preserved, the flattened charts of both sides are equivalent by the disk
/// criterion, the braid identities of every degree-2 vertex, branch point
/// and triple point hold, and the declared extra facts. Throws UsageError for
/// an assignment out of range.
CertificationReport certify_move(const CatalogEntry& entry, int m, const std::optional<Assignment>& values = std::nullopt);

/// Both sides of a patch's chart drawn on one disk: degree-2 vertices become
/// free vertices and ends on arc ports become boundary punctures ordered by
/// port name.
Chart flatten_chart(const Patch& p);

}  // namespace chartbraid
