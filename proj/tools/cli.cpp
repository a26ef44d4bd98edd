#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "chartbraid/braid.hpp"
#include "chartbraid/chart.hpp"
#include "chartbraid/diagram.hpp"
#include "chartbraid/error.hpp"
#include "chartbraid/move.hpp"
#include "chartbraid/render.hpp"

namespace chartbraid::cli {
namespace {

using json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// First non-comment keyword decides the format.
std::string format_of(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    auto q = line.find_first_of(" \t\r", p);
    return line.substr(p, q == std::string::npos ? std::string::npos : q - p);
  }
  return "";
}

WordProblemMethod method_of(const std::string& name) {
  if (name == "handle") return WordProblemMethod::handle_reduction;
  if (name == "garside") return WordProblemMethod::garside;
  if (name == "cross") return WordProblemMethod::cross_checked;
  throw UsageError("method must be handle, garside or cross");
}

json violations_json(const ValidationReport& r) {
  json a = json::array();
  for (const auto& v : r.violations) a.push_back({{"clause", v.clause}, {"element", v.element}, {"message", v.message}});
  return a;
}

void print_violations(std::ostream& out, const ValidationReport& r) {
  if (r.ok()) {
    out << "valid\n";
    return;
  }
  for (const auto& v : r.violations) out << "invalid " << v.clause << " " << v.element << ": " << v.message << "\n";
}

json words_json(const std::vector<BraidWord>& words) {
  json a = json::array();
  for (const auto& w : words) a.push_back(to_string(w));
  return a;
}

Assignment parse_assignment(const std::vector<std::string>& params) {
  Assignment a;
  for (const auto& p : params) {
    auto eq = p.find('=');
    int v = 0;
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter must look like name=value, got '" + p + "'");
    try {
      std::size_t used = 0;
      v = std::stoi(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument(p);
    } catch (const std::logic_error&) {
      throw UsageError("parameter value must be an integer, got '" + p + "'");
    }
    a[p.substr(0, eq)] = v;
  }
  return a;
}

struct Context {
  std::ostream& out;
  bool as_json = false;
  std::string catalog_dir;

  void emit(json j) {
    json full;
    full["schema"] = 1;
    for (auto& [k, v] : j.items()) full[k] = v;
    out << full.dump(2) << "\n";
  }
  Catalog catalog() const { return catalog_dir.empty() ? Catalog::load() : Catalog::load(catalog_dir); }
};

json certification_json(const CertificationReport& r) {
  json facts = json::array();
  for (const auto& f : r.facts) facts.push_back({{"name", f.name}, {"status", std::string(to_string(f.status))}, {"detail", f.detail}});
  return {{"move", r.move}, {"m", r.m}, {"assignments", r.assignments}, {"passed", r.passed()}, {"facts", facts}};
}

void print_certification(std::ostream& out, const CertificationReport& r) {
  out << r.move << " m=" << r.m << " " << (r.passed() ? "passed" : "FAILED") << " (" << r.assignments << " assignments)\n";
  for (const auto& f : r.facts) out << "  " << to_string(f.status) << " " << f.name << ": " << f.detail << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, false, {}};
  CLI::App app{"Braid words, m-charts and surface diagrams with charts."};
  app.name("chartbraid");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.as_json, "Machine-readable output");
  std::function<int()> action;

  // braid
  auto* braid = app.add_subcommand("braid", "Braid words")->require_subcommand(1);
  std::string word, other, method = "handle";
  int m = 0, index = 0, sign = 0;
  bool lower = false, branch = false;

  auto* reduce = braid->add_subcommand("reduce", "Handle-reduced form of a word");
  reduce->add_option("word", word, "e.g. \"B3: 1 2 -1\"")->required();
  reduce->callback([&] {
    action = [&] {
      auto w = parse_braid_word(word);
      auto r = handle_reduce(w);
      if (ctx.as_json) ctx.emit({{"command", "braid reduce"}, {"input", to_string(w)}, {"reduced", to_string(r)}, {"trivial", r.empty()}});
      else out << to_string(r) << "\n";
      return 0;
    };
  });

  auto* nf = braid->add_subcommand("nf", "Garside normal form");
  nf->add_option("word", word)->required();
  nf->callback([&] {
    action = [&] {
      auto w = parse_braid_word(word);
      auto n = garside_normal_form(w);
      if (ctx.as_json) {
        json factors = json::array();
        for (const auto& f : n.factors) factors.push_back(f.images());
        ctx.emit({{"command", "braid nf"}, {"input", to_string(w)}, {"degree", n.degree}, {"infimum", n.infimum},
                  {"factors", factors}, {"word", to_string(to_word(n))}});
      } else {
        out << to_string(n) << "\n";
      }
      return 0;
    };
  });

  auto* eq = braid->add_subcommand("eq", "Decide equality in the braid group");
  eq->add_option("lhs", word)->required();
  eq->add_option("rhs", other)->required();
  eq->add_option("--method", method, "handle, garside or cross")->capture_default_str();
  eq->callback([&] {
    action = [&] {
      bool equal = are_equal(parse_braid_word(word), parse_braid_word(other), method_of(method));
      if (ctx.as_json) ctx.emit({{"command", "braid eq"}, {"method", method}, {"equal", equal}});
      else out << (equal ? "equal" : "not equal") << "\n";
      return equal ? 0 : 1;
    };
  });

  auto* perm = braid->add_subcommand("perm", "Underlying permutation");
  perm->add_option("word", word)->required();
  perm->callback([&] {
    action = [&] {
      auto p = permutation_of(parse_braid_word(word));
      if (ctx.as_json) ctx.emit({{"command", "braid perm"}, {"images", p.images()}, {"cycles", to_string(p)}});
      else out << to_string(p) << "\n";
      return 0;
    };
  });

  std::string std_name;
  auto* stdw = braid->add_subcommand("std", "Standard 2m-braids: Pi<k>, Pi'<k>, Delta, Delta', Theta, C");
  stdw->add_option("-m", m, "Degree m")->required();
  stdw->add_option("--word", std_name, "Name of one word; all words when omitted");
  stdw->callback([&] {
    action = [&] {
      auto words = standard_words(m);
      std::vector<std::string> names;
      if (!std_name.empty()) {
        names.push_back(std_name);
      } else {
        for (int k = 1; k < m; ++k) names.push_back("Pi" + std::to_string(k));
        for (int k = 1; k < m; ++k) names.push_back("Pi'" + std::to_string(k));
        for (const char* n : {"Delta", "Delta'", "Theta", "C"}) names.emplace_back(n);
      }
      if (ctx.as_json) {
        json w = json::object();
        for (const auto& n : names) w[n] = to_string(standard_word(words, n));
        ctx.emit({{"command", "braid std"}, {"m", m}, {"words", w}});
      } else if (!std_name.empty()) {
        out << to_string(standard_word(words, std_name)) << "\n";
      } else {
        for (const auto& n : names) out << n << " = " << to_string(standard_word(words, n)) << "\n";
      }
      return 0;
    };
  });

  auto* ids = braid->add_subcommand("verify-ids", "Check the identity chains across double curves and at branch points");
  ids->add_option("-m", m, "Degree m")->required();
  ids->add_option("-i", index, "Label; all labels when omitted");
  ids->add_option("--sign", sign, "+1 or -1; both when omitted");
  ids->add_flag("--lower", lower, "Edge on the lower sheet");
  ids->add_flag("--branch", branch, "Branch point collapse instead");
  ids->callback([&] {
    action = [&] {
      json results = json::array();
      bool all = true;
      if (branch) {
        auto r = verify_branch_point_collapse(m);
        all = r.passed();
        if (ctx.as_json) {
          results.push_back({{"kind", "branch"}, {"chain", words_json(r.chain)}, {"removed_letters", r.removed_letters}, {"passed", r.passed()}});
        } else {
          out << "branch m=" << m << " " << (r.passed() ? "passed" : "FAILED") << "\n";
          for (const auto& w : r.chain) out << "  " << to_string(w) << "\n";
        }
      } else {
        std::vector<int> labels, signs;
        if (index) labels.push_back(index);
        else for (int i = 1; i < m; ++i) labels.push_back(i);
        if (sign) signs.push_back(sign);
        else signs = {1, -1};
        for (int i : labels) {
          for (int s : signs) {
            auto r = lower ? verify_lower_sheet_identities(m, i, s) : verify_double_curve_identities(m, i, s);
            all = all && r.passed();
            if (ctx.as_json) {
              results.push_back({{"kind", lower ? "lower" : "upper"}, {"i", i}, {"sign", s}, {"chain", words_json(r.chain)}, {"passed", r.passed()}});
            } else {
              out << (lower ? "lower" : "upper") << " m=" << m << " i=" << i << " sign=" << (s > 0 ? "+1" : "-1") << " "
                  << (r.passed() ? "passed" : "FAILED") << "\n";
              for (const auto& w : r.chain) out << "  " << to_string(w) << "\n";
            }
          }
        }
      }
      if (ctx.as_json) ctx.emit({{"command", "braid verify-ids"}, {"m", m}, {"passed", all}, {"results", results}});
      return all ? 0 : 1;
    };
  });

  // chart
  auto* chart = app.add_subcommand("chart", "m-charts on surfaces")->require_subcommand(1);
  std::string file, file2;
  auto* cvalidate = chart->add_subcommand("validate", "Check the chart conditions");
  cvalidate->add_option("file", file)->required();
  cvalidate->callback([&] {
    action = [&] {
      auto r = validate_chart(parse_chart(slurp(file)));
      if (ctx.as_json) ctx.emit({{"command", "chart validate"}, {"valid", r.ok()}, {"violations", violations_json(r)}});
      else print_violations(out, r);
      return r.ok() ? 0 : 1;
    };
  });

  auto* mono = chart->add_subcommand("monodromy", "Braid monodromy of the generating loops");
  mono->add_option("file", file)->required();
  mono->callback([&] {
    action = [&] {
      auto c = parse_chart(slurp(file));
      auto r = validate_chart(c);
      if (!r.ok()) throw ValidationError(r.violations.front().clause, r.summary());
      auto g = monodromy_generators(c);
      if (ctx.as_json) {
        json loops = json::array();
        for (const auto& [k, w] : g.schema_loops) loops.push_back({{"loop", k}, {"word", to_string(w)}, {"permutation", to_string(permutation_of(w))}});
        json branches = json::array();
        for (const auto& [k, w] : g.branch_loops) branches.push_back({{"vertex", k}, {"word", to_string(w)}, {"permutation", to_string(permutation_of(w))}});
        ctx.emit({{"command", "chart monodromy"}, {"schema_loops", loops}, {"branch_loops", branches}});
      } else {
        for (const auto& [k, w] : g.schema_loops) out << k << " " << to_string(w) << " " << to_string(permutation_of(w)) << "\n";
        for (const auto& [k, w] : g.branch_loops) out << "branch " << k << " " << to_string(w) << " " << to_string(permutation_of(w)) << "\n";
      }
      return 0;
    };
  });

  auto* inv = chart->add_subcommand("invariants", "Covering degree, branch points, Euler characteristic, components");
  inv->add_option("file", file)->required();
  inv->callback([&] {
    action = [&] {
      auto c = parse_chart(slurp(file));
      auto r = validate_chart(c);
      if (!r.ok()) throw ValidationError(r.violations.front().clause, r.summary());
      auto v = covering_invariants(c);
      if (ctx.as_json) {
        ctx.emit({{"command", "chart invariants"}, {"degree", v.degree}, {"branch_points", v.branch_count},
                  {"euler_characteristic", v.euler_characteristic}, {"components", v.component_count},
                  {"component_degrees", v.component_degrees}});
      } else {
        out << "degree " << v.degree << "\nbranch-points " << v.branch_count << "\neuler-characteristic "
            << v.euler_characteristic << "\ncomponents " << v.component_count << "\ncomponent-degrees";
        for (int d : v.component_degrees) out << " " << d;
        out << "\n";
      }
      return 0;
    };
  });

  auto* disk = chart->add_subcommand("certify-disk", "Sufficient test for equivalence of two disk charts");
  disk->add_option("lhs", file)->required();
  disk->add_option("rhs", file2)->required();
  disk->callback([&] {
    action = [&] {
      auto r = certify_disk_equivalence(parse_chart(slurp(file)), parse_chart(slurp(file2)));
      bool ok = r.status == DiskCertificate::certified;
      if (ctx.as_json) ctx.emit({{"command", "chart certify-disk"}, {"status", ok ? "certified" : "unknown"}, {"note", r.note}});
      else out << (ok ? "certified" : "unknown") << (r.note.empty() ? "" : ": " + r.note) << "\n";
      return ok ? 0 : 1;
    };
  });

  // diagram
  auto* diagram = app.add_subcommand("diagram", "Surface diagrams with charts")->require_subcommand(1);
  auto* dvalidate = diagram->add_subcommand("validate", "Check the complex and its chart");
  dvalidate->add_option("file", file)->required();
  dvalidate->callback([&] {
    action = [&] {
      auto d = parse_diagram(slurp(file));
      auto r = validate_complex(d.complex);
      if (r.ok() && d.chart) r = validate_diagram_chart(d.complex, *d.chart);
      if (ctx.as_json) ctx.emit({{"command", "diagram validate"}, {"valid", r.ok()}, {"violations", violations_json(r)}});
      else print_violations(out, r);
      return r.ok() ? 0 : 1;
    };
  });

  auto* color = diagram->add_subcommand("color", "Checkerboard coloring of the regions");
  color->add_option("file", file)->required();
  color->callback([&] {
    action = [&] {
      auto d = parse_diagram(slurp(file));
      auto colors = checkerboard(d.complex);
      if (ctx.as_json) {
        json c = json::object();
        for (const auto& r : d.complex.regions) c[r.id] = colors.at(r.id);
        ctx.emit({{"command", "diagram color"}, {"colors", c}});
      } else {
        for (const auto& r : d.complex.regions) out << r.id << " " << colors.at(r.id) << "\n";
      }
      return 0;
    };
  });

  std::string loop;
  auto* parity = diagram->add_subcommand("parity", "Crossing parity of a closed transverse loop");
  parity->add_option("file", file)->required();
  parity->add_option("--loop", loop, "Alternating cells and curves: \"s0 d1 s1 ... s0\"")->required();
  parity->callback([&] {
    action = [&] {
      auto d = parse_diagram(slurp(file));
      std::vector<std::string> steps;
      std::istringstream in(loop);
      for (std::string s; in >> s;) steps.push_back(s);
      auto r = loop_parity(d.complex, steps);
      if (ctx.as_json) ctx.emit({{"command", "diagram parity"}, {"crossings", r.crossings}, {"even", r.even()}, {"color_changes", r.color_changes}});
      else out << "crossings " << r.crossings << " " << (r.even() ? "even" : "odd") << "\ncolor-changes " << r.color_changes << "\n";
      return 0;
    };
  });

  std::string site;
  auto* lift = diagram->add_subcommand("lift", "Local lift of the chart at a site");
  lift->add_option("file", file)->required();
  lift->add_option("--site", site, "sheet:<id>, dcurve:<id>, bpoint:<id> or tpoint:<id>")->required();
  lift->add_option("-m", m, "Degree when the diagram carries no chart");
  lift->callback([&] {
    action = [&] {
      auto d = parse_diagram(slurp(file));
      DiagramChart empty;
      empty.m = m > 0 ? m : 1;
      if (d.chart && m > 0 && m != d.chart->m) throw UsageError("-m disagrees with the chart's degree");
      const auto& c = d.chart ? *d.chart : empty;
      auto r = local_lift(d.complex, site, c);
      if (ctx.as_json) {
        json chains = json::array();
        for (std::size_t k = 0; k < r.chains.size(); ++k) chains.push_back({{"name", r.chain_names[k]}, {"words", words_json(r.chains[k])}});
        ctx.emit({{"command", "diagram lift"}, {"site", site}, {"kind", std::string(to_string(r.kind))}, {"m", r.m},
                  {"words", words_json(r.words)}, {"chains", chains}, {"double_curves", r.double_curve_count},
                  {"branch_points", r.lifted_branch_points}, {"verified", r.verified}});
      } else {
        out << to_string(r.kind) << " m=" << r.m << " " << (r.verified ? "verified" : "FAILED") << "\n";
        for (const auto& w : r.words) out << "word " << to_string(w) << "\n";
        for (std::size_t k = 0; k < r.chains.size(); ++k) {
          out << "chain " << r.chain_names[k] << "\n";
          for (const auto& w : r.chains[k]) out << "  " << to_string(w) << "\n";
        }
        out << "double-curves " << r.double_curve_count << "\nbranch-points " << r.lifted_branch_points << "\n";
      }
      return r.verified ? 0 : 1;
    };
  });

  long long bm = 0, bb = 0;
  auto* bound = diagram->add_subcommand("bound", "Braid index bound m * Braid(F)");
  bound->add_option("-m", bm, "Degree m")->required();
  bound->add_option("-b", bb, "Braid index of the companion")->required();
  bound->callback([&] {
    action = [&] {
      auto v = braid_index_bound(bm, bb);
      if (ctx.as_json) ctx.emit({{"command", "diagram bound"}, {"m", bm}, {"braid_index", bb}, {"bound", v}});
      else out << v << "\n";
      return 0;
    };
  });

  // move
  auto* move = app.add_subcommand("move", "Roseman moves with charts");
  move->require_subcommand(1);
  move->add_option("--catalog", ctx.catalog_dir, "Catalog directory");
  std::string kind;
  bool backward = false, target = false, all = false;
  std::vector<std::string> params;

  auto kind_of = [&] {
    auto k = parse_move_kind(kind);
    if (backward) k.direction = Direction::backward;
    return k;
  };

  auto* list = move->add_subcommand("list", "Catalog entries");
  list->callback([&] {
    action = [&] {
      auto cat = ctx.catalog();
      json a = json::array();
      for (const auto& e : cat.entries()) {
        std::string note;
        for (const auto& c : e.comments) note += (note.empty() ? "" : " ") + c.substr(c.find_first_not_of("# "));
        if (ctx.as_json) {
          json ps = json::array();
          for (const auto& p : e.parameters) ps.push_back(p.sign ? p.name + " sign" : p.name + " " + p.low + ".." + p.high);
          a.push_back({{"id", e.id}, {"parameters", ps}, {"description", note}});
        } else {
          out << e.id << " " << note << "\n";
        }
      }
      if (ctx.as_json) ctx.emit({{"command", "move list"}, {"moves", a}});
      return 0;
    };
  });

  auto* match = move->add_subcommand("match", "Match a patch against one side of a move");
  match->add_option("patch", file)->required();
  match->add_option("kind", kind, "R1..R7, O1..O6, optionally :forward or :backward")->required();
  match->add_flag("--backward", backward, "Match the target side");
  match->callback([&] {
    action = [&] {
      auto k = kind_of();
      auto b = match_move(parse_diagram(slurp(file)), k, ctx.catalog());
      if (ctx.as_json) {
        json j{{"command", "move match"}, {"move", to_string(k)}, {"matched", b.has_value()}};
        if (b) {
          j["m"] = b->m;
          j["parameters"] = b->parameters;
          j["map"] = b->map;
        }
        ctx.emit(j);
      } else if (b) {
        out << "match " << to_string(k) << " m=" << b->m;
        for (const auto& [n, v] : b->parameters) out << " " << n << "=" << v;
        out << "\n";
        for (const auto& [from, to] : b->map) out << "  " << from << " -> " << to << "\n";
      } else {
        out << "no match\n";
      }
      return b ? 0 : 1;
    };
  });

  auto* apply = move->add_subcommand("apply", "Rewrite a patch by a move");
  apply->add_option("patch", file)->required();
  apply->add_option("kind", kind)->required();
  apply->add_flag("--backward", backward, "Rewrite target to source");
  apply->callback([&] {
    action = [&] {
      auto k = kind_of();
      auto r = apply_move(parse_diagram(slurp(file)), k, ctx.catalog());
      if (ctx.as_json) ctx.emit({{"command", "move apply"}, {"move", to_string(k)}, {"patch", serialize(r)}, {"interface", interface_lines(r)}});
      else out << serialize(r);
      return 0;
    };
  });

  auto* show = move->add_subcommand("show", "Print one side of a move with parameters substituted");
  show->add_option("kind", kind)->required();
  show->add_option("-m", m, "Degree m")->required();
  show->add_option("--param", params, "name=value");
  show->add_flag("--target", target, "Target side");
  show->callback([&] {
    action = [&] {
      auto cat = ctx.catalog();
      const auto& e = cat.entry(parse_move_kind(kind).id);
      auto a = parse_assignment(params);
      auto admissible = admissible_parameters(e, m);
      if (std::find(admissible.begin(), admissible.end(), a) == admissible.end()) throw UsageError("parameters out of range for " + e.id);
      auto p = serialize(instantiate(e, target, m, a));
      if (ctx.as_json) ctx.emit({{"command", "move show"}, {"move", e.id}, {"side", target ? "target" : "source"}, {"patch", p}});
      else out << p;
      return 0;
    };
  });

  auto* certify = move->add_subcommand("certify", "Check the well-definedness facts of a move");
  certify->add_option("kind", kind, "Move id, or omit with --all");
  certify->add_option("-m", m, "Degree m");
  certify->add_option("--param", params, "name=value; all admissible values when omitted");
  certify->add_flag("--all", all, "Every move at m = 1..4");
  certify->callback([&] {
    action = [&] {
      auto cat = ctx.catalog();
      std::vector<CertificationReport> reports;
      if (all) {
        if (!kind.empty() || m || !params.empty()) throw UsageError("--all takes no move, -m or --param");
        for (const auto& e : cat.entries()) {
          for (int d = 1; d <= 4; ++d) reports.push_back(certify_move(e, d));
        }
      } else {
        if (kind.empty() || m < 1) throw UsageError("certify needs a move and -m, or --all");
        const auto& e = cat.entry(parse_move_kind(kind).id);
        std::optional<Assignment> a;
        if (!params.empty()) a = parse_assignment(params);
        reports.push_back(certify_move(e, m, a));
      }
      bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
      if (ctx.as_json) {
        json rs = json::array();
        for (const auto& r : reports) rs.push_back(certification_json(r));
        ctx.emit({{"command", "move certify"}, {"passed", ok}, {"reports", rs}});
      } else {
        for (const auto& r : reports) print_certification(out, r);
      }
      return ok ? 0 : 1;
    };
  });

  // render
  auto* render = app.add_subcommand("render", "Text renderings")->require_subcommand(1);
  auto* dot = render->add_subcommand("dot", "Graphviz description of a chart or diagram file");
  dot->add_option("file", file)->required();
  dot->callback([&] {
    action = [&] {
      auto text = slurp(file);
      auto f = format_of(text);
      std::string d;
      if (f == "chart") d = render_dot(parse_chart(text));
      else if (f == "complex") d = render_dot(parse_diagram(text));
      else throw UsageError("'" + file + "' is neither a chart nor a diagram");
      if (ctx.as_json) ctx.emit({{"command", "render dot"}, {"dot", d}});
      else out << d;
      return 0;
    };
  });
  auto* text = render->add_subcommand("text", "Canonical re-serialization of a chart, diagram or catalog file");
  text->add_option("file", file)->required();
  text->callback([&] {
    action = [&] {
      auto t = slurp(file);
      auto f = format_of(t);
      std::string s;
      if (f == "chart") s = serialize(parse_chart(t));
      else if (f == "complex") s = serialize(parse_diagram(t));
      else if (f == "move") s = serialize(parse_catalog_entry(t));
      else throw UsageError("'" + file + "' is not a chart, diagram or catalog file");
      if (ctx.as_json) ctx.emit({{"command", "render text"}, {"format", f}, {"text", s}, {"identical", s == t}});
      else out << s;
      return 0;
    };
  });

  auto report = [&](const std::string& kind_name, const std::string& message, json extra = json::object()) {
    if (ctx.as_json) {
      json e{{"kind", kind_name}, {"message", message}};
      for (auto& [k, v] : extra.items()) e[k] = v;
      err << json{{"schema", 1}, {"error", e}}.dump(2) << "\n";
    } else {
      err << "error: " << kind_name << ": " << message << "\n";
    }
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    report("usage", e.what());
    return 2;
  }
  if (!action) {
    report("usage", "no command given");
    return 2;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    report("parse", e.what(), {{"line", e.line()}, {"column", e.column()}});
    return 2;
  } catch (const UsageError& e) {
    report("usage", e.what());
    return 2;
  } catch (const ValidationError& e) {
    report("validation", e.what(), {{"invariant", e.invariant()}});
    return 1;
  } catch (const ResourceError& e) {
    report("resource", e.what());
    return 3;
  } catch (const InternalError& e) {
    report("internal", e.what());
    return 1;
  }
}

}  // namespace chartbraid::cli
