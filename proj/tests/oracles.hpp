#pragma once

// Independent reference implementations used by the tests. None of these
// call into the library beyond constructing its value types.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "chartbraid/braid.hpp"

namespace oracle {

using Word = std::vector<int>;

inline std::string key(const Word& w) {
  std::string s;
  for (int x : w) s.push_back(static_cast<char>(x + 64));
  return s;
}

inline Word unkey(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(static_cast<int>(c) - 64);
  return w;
}

inline Word inverse(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

/// All defining relators of B_n with their inverses and cyclic rotations,
/// including the free cancellations x x^-1.
inline std::vector<Word> relator_rotations(int n) {
  std::vector<Word> base;
  for (int i = 1; i < n; ++i) base.push_back({i, -i});
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) base.push_back({i, j, -i, -j});
    if (i + 1 < n) base.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  }
  std::set<Word> all;
  for (const auto& r : base) {
    for (const Word& v : {r, inverse(r)}) {
      for (std::size_t s = 0; s < v.size(); ++s) {
        Word rot(v.begin() + static_cast<long>(s), v.end());
        rot.insert(rot.end(), v.begin(), v.begin() + static_cast<long>(s));
        all.insert(rot);
      }
    }
  }
  return {all.begin(), all.end()};
}

/// Every word reachable from the empty word by inserting and deleting relator
/// rotations without ever exceeding `max_length` letters. Every member is
/// trivial by construction.
inline std::unordered_set<std::string> trivial_closure(int n, std::size_t max_length) {
  auto rels = relator_rotations(n);
  std::unordered_set<std::string> seen{""};
  std::deque<std::string> queue{""};
  while (!queue.empty()) {
    std::string w = queue.front();
    queue.pop_front();
    auto push = [&](std::string v) {
      if (seen.insert(v).second) queue.push_back(std::move(v));
    };
    for (const auto& r : rels) {
      std::string rk = key(r);
      if (w.size() + rk.size() <= max_length) {
        for (std::size_t p = 0; p <= w.size(); ++p) push(w.substr(0, p) + rk + w.substr(p));
      }
      for (std::size_t p = w.find(rk); p != std::string::npos; p = w.find(rk, p + 1)) {
        push(w.substr(0, p) + w.substr(p + rk.size()));
      }
    }
  }
  return seen;
}

/// Reduced word in the free group on x_1..x_n (letters +-k).
inline Word free_mul(Word a, const Word& b) {
  for (int x : b) {
    if (!a.empty() && a.back() == -x) {
      a.pop_back();
    } else {
      a.push_back(x);
    }
  }
  return a;
}

/// Artin's faithful action of B_n on the free group F_n. sigma_i sends
/// x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i. A braid is trivial iff it
/// fixes every generator.
inline bool artin_trivial(int n, const Word& braid) {
  std::vector<Word> images;
  for (int k = 1; k <= n; ++k) images.push_back({k});
  // Apply letters right to left as substitutions on the current images, so
  // the resulting automorphism is that of the word read left to right.
  for (auto it = braid.rbegin(); it != braid.rend(); ++it) {
    int letter = *it;
    int i = std::abs(letter);
    auto subst = [&](const Word& w) {
      Word out;
      for (int x : w) {
        int g = std::abs(x);
        Word img;
        if (letter > 0) {
          if (g == i) img = {i, i + 1, -i};
          else if (g == i + 1) img = {i};
          else img = {g};
        } else {
          if (g == i) img = {i + 1};
          else if (g == i + 1) img = {-(i + 1), i, i + 1};
          else img = {g};
        }
        out = free_mul(out, x > 0 ? img : inverse(img));
      }
      return out;
    };
    for (auto& im : images) im = subst(im);
  }
  for (int k = 1; k <= n; ++k) {
    if (images[static_cast<std::size_t>(k - 1)] != Word{k}) return false;
  }
  return true;
}

/// All words of the given length over the generators of B_n.
inline std::vector<Word> all_words(int n, std::size_t length) {
  std::vector<int> alphabet;
  for (int i = 1; i < n; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<Word> out{{}};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (int a : alphabet) {
        Word v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Final position of each strand, by tracking strand labels through swaps:
/// result[k-1] is where the strand entering at position k leaves.
inline std::vector<int> strand_endpoints(int n, const Word& w) {
  std::vector<int> occupant(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) occupant[static_cast<std::size_t>(k)] = k + 1;
  for (int x : w) std::swap(occupant[static_cast<std::size_t>(std::abs(x) - 1)], occupant[static_cast<std::size_t>(std::abs(x))]);
  std::vector<int> result(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) result[static_cast<std::size_t>(occupant[static_cast<std::size_t>(pos)] - 1)] = pos + 1;
  return result;
}

/// Orbits by enumerating the whole generated group as explicit permutations.
inline std::set<std::set<int>> brute_orbits(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k)] = k + 1;
  std::set<std::vector<int>> group{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto g = queue.front();
    queue.pop_front();
    for (const auto& h : gens) {
      std::vector<int> gh(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) gh[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(g[static_cast<std::size_t>(k)] - 1)];
      if (group.insert(gh).second) queue.push_back(gh);
    }
  }
  std::set<std::set<int>> result;
  for (int k = 1; k <= n; ++k) {
    std::set<int> orbit;
    for (const auto& g : group) orbit.insert(g[static_cast<std::size_t>(k - 1)]);
    result.insert(orbit);
  }
  return result;
}

}  // namespace oracle
