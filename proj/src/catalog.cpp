#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "chartbraid/error.hpp"
#include "chartbraid/move.hpp"
#include "text.hpp"

namespace chartbraid {
namespace {

using detail::Line;

bool valid_move_id(std::string_view id) {
  if (id.size() != 2) return false;
  if (id[0] == 'R') return id[1] >= '1' && id[1] <= '7';
  if (id[0] == 'O') return id[1] >= '1' && id[1] <= '6';
  return false;
}

bool is_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// term ([+-] term)*, term = integer | name
int evaluate(std::string_view expr, int m, const Assignment& values) {
  int total = 0;
  int sign = 1;
  std::size_t p = 0;
  bool expect_term = true;
  while (p < expr.size()) {
    if (!expect_term) {
      if (expr[p] != '+' && expr[p] != '-') throw UsageError("bad expression '" + std::string(expr) + "'");
      sign = expr[p] == '+' ? 1 : -1;
      ++p;
      expect_term = true;
      continue;
    }
    std::size_t q = p;
    while (q < expr.size() && expr[q] != '+' && expr[q] != '-') ++q;
    auto term = expr.substr(p, q - p);
    int v = 0;
    if (detail::parse_int(term, v)) {
    } else if (term == "m") {
      v = m;
    } else {
      auto it = values.find(std::string(term));
      if (it == values.end()) throw UsageError("unknown parameter '" + std::string(term) + "'");
      v = it->second;
    }
    total += sign * v;
    p = q;
    expect_term = false;
  }
  if (expect_term) throw UsageError("bad expression '" + std::string(expr) + "'");
  return total;
}

std::string substitute(const std::string& text, int m, const Assignment& values) {
  auto lines = detail::split_lines(text);
  std::set<std::string> reversed;
  for (const auto& line : lines) {
    if (line.tokens.size() > 2 && line.tokens[0].text == "e") {
      auto last = line.tokens.back().text;
      if (last.rfind("sign=", 0) == 0 && evaluate(last.substr(5), m, values) < 0) reversed.insert(std::string(line.tokens[1].text));
    }
  }
  std::ostringstream out;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto& line = lines[n];
    if (n + 1 == lines.size() && line.tokens.empty()) break;
    std::vector<std::string> t;
    for (const auto& tok : line.tokens) t.emplace_back(tok.text);
    if (t.empty()) {
      out << "\n";
      continue;
    }
    auto keyed = [&](std::string& tok, std::string_view key) {
      if (tok.rfind(key, 0) == 0) tok = std::string(key) + std::to_string(evaluate(std::string_view(tok).substr(key.size()), m, values));
    };
    if (t[0] == "chart") {
      for (auto& tok : t) keyed(tok, "m=");
    } else if (t[0] == "d2") {
      for (auto& tok : t) keyed(tok, "label=");
    } else if (t[0] == "e" && t.size() > 4) {
      t[2] = std::to_string(evaluate(t[2], m, values));
      if (t.back().rfind("sign=", 0) == 0) t.pop_back();
      if (reversed.count(t[1])) std::swap(t[3], t[4]);
    } else if (t[0] == "rot") {
      for (std::size_t k = 2; k < t.size(); ++k) {
        auto colon = t[k].rfind(':');
        if (colon == std::string::npos || !reversed.count(t[k].substr(0, colon))) continue;
        t[k] = t[k].substr(0, colon) + (t[k].substr(colon + 1) == "s" ? ":t" : ":s");
      }
    }
    for (std::size_t k = 0; k < t.size(); ++k) out << (k ? " " : "") << t[k];
    out << "\n";
  }
  return out.str();
}

}  // namespace

MoveKind parse_move_kind(std::string_view text) {
  MoveKind k;
  auto colon = text.find(':');
  k.id = std::string(text.substr(0, colon));
  if (!valid_move_id(k.id)) throw UsageError("unknown move '" + std::string(text) + "'");
  if (colon != std::string_view::npos) {
    auto dir = text.substr(colon + 1);
    if (dir == "forward") k.direction = Direction::forward;
    else if (dir == "backward") k.direction = Direction::backward;
    else throw UsageError("move direction must be forward or backward");
  }
  return k;
}

std::string to_string(const MoveKind& k) {
  return k.id + (k.direction == Direction::forward ? ":forward" : ":backward");
}

CatalogEntry parse_catalog_entry(std::string_view text) {
  CatalogEntry entry;
  auto lines = detail::split_lines(text);
  std::size_t n = 0;
  for (; n < lines.size() && detail::is_comment(lines[n]); ++n) entry.comments.emplace_back(lines[n].text);
  enum { header, source, target } section = header;
  std::string* body = nullptr;
  bool have_id = false;
  for (; n < lines.size(); ++n) {
    const auto& line = lines[n];
    if (section != header) {
      if (section == source && line.tokens.size() == 1 && line.tokens[0].text == "target") {
        section = target;
        body = &entry.target;
        continue;
      }
      if (n + 1 == lines.size() && line.text.empty()) break;
      *body += std::string(line.text) + "\n";
      continue;
    }
    if (detail::is_blank(line)) continue;
    auto key = line.tokens[0].text;
    if (key == "move") {
      if (line.tokens.size() != 2) line.fail(line.tokens[0], "expected 'move <id>'");
      entry.id = std::string(line.tokens[1].text);
      if (!valid_move_id(entry.id)) line.fail(line.tokens[1], "unknown move id");
      have_id = true;
    } else if (key == "param") {
      Parameter p;
      p.name = std::string(line.at(1).text);
      if (!is_name(p.name) || p.name == "m") line.fail(line.tokens[1], "bad parameter name");
      if (line.tokens.size() == 3 && line.tokens[2].text == "sign") {
        p.sign = true;
      } else if (line.tokens.size() == 4) {
        p.low = std::string(line.tokens[2].text);
        p.high = std::string(line.tokens[3].text);
      } else {
        line.fail(line.tokens[0], "expected 'param <name> sign' or 'param <name> <low> <high>'");
      }
      entry.parameters.push_back(std::move(p));
    } else if (key == "far") {
      if (line.tokens.size() != 3) line.fail(line.tokens[0], "expected 'far <a> <b>'");
      entry.far.emplace_back(line.tokens[1].text, line.tokens[2].text);
    } else if (key == "fact") {
      if (line.tokens.size() != 2) line.fail(line.tokens[0], "expected 'fact <name>'");
      entry.facts.emplace_back(line.tokens[1].text);
    } else if (key == "assume") {
      auto rest = line.text.substr(line.at(1).column - 1);
      entry.assumptions.emplace_back(rest);
    } else if (key == "source") {
      if (line.tokens.size() != 1) line.fail(line.tokens[1], "unexpected text after 'source'");
      section = source;
      body = &entry.source;
    } else {
      line.fail(line.tokens[0], "unknown catalog keyword");
    }
  }
  if (!have_id) throw ParseError("missing 'move <id>' line");
  if (section != target) throw ParseError("a catalog entry needs 'source' and 'target' sections");
  return entry;
}

std::string serialize(const CatalogEntry& entry) {
  std::ostringstream out;
  for (const auto& c : entry.comments) out << c << "\n";
  out << "move " << entry.id << "\n";
  for (const auto& p : entry.parameters) {
    out << "param " << p.name << " " << (p.sign ? "sign" : p.low + " " + p.high) << "\n";
  }
  for (const auto& [a, b] : entry.far) out << "far " << a << " " << b << "\n";
  for (const auto& f : entry.facts) out << "fact " << f << "\n";
  for (const auto& a : entry.assumptions) out << "assume " << a << "\n";
  out << "source\n" << entry.source << "target\n" << entry.target;
  return out.str();
}

std::vector<Assignment> admissible_parameters(const CatalogEntry& entry, int m) {
  std::vector<Assignment> out{{}};
  for (const auto& p : entry.parameters) {
    std::vector<int> range;
    if (p.sign) {
      range = {1, -1};
    } else {
      for (int v = evaluate(p.low, m, {}); v <= evaluate(p.high, m, {}); ++v) range.push_back(v);
    }
    std::vector<Assignment> next;
    for (const auto& a : out) {
      for (int v : range) {
        auto b = a;
        b[p.name] = v;
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  std::erase_if(out, [&](const Assignment& a) {
    return std::any_of(entry.far.begin(), entry.far.end(), [&](const auto& f) {
      return std::abs(evaluate(f.first, m, a) - evaluate(f.second, m, a)) < 2;
    });
  });
  return out;
}

Patch instantiate(const CatalogEntry& entry, bool target_side, int m, const Assignment& values) {
  return parse_diagram(substitute(target_side ? entry.target : entry.source, m, values));
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("CHARTBRAID_CATALOG"); env && *env) return env;
  return CHARTBRAID_CATALOG_DIR;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw UsageError("catalog directory '" + dir.string() + "' not found");
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.path().extension() == ".move") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  Catalog c;
  std::set<std::string> seen;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      c.entries_.push_back(parse_catalog_entry(buffer.str()));
    } catch (const ParseError& e) {
      throw ParseError(f.filename().string() + ": " + e.what());
    }
    if (!seen.insert(c.entries_.back().id).second) throw UsageError("move " + c.entries_.back().id + " defined twice in the catalog");
  }
  return c;
}

const CatalogEntry& Catalog::entry(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return e;
  }
  throw UsageError("move '" + std::string(id) + "' is not in the catalog");
}

}  // namespace chartbraid
