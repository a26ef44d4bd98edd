#include <algorithm>
#include <charconv>

#include "chartbraid/braid.hpp"
#include "chartbraid/error.hpp"

namespace chartbraid {

StandardWords standard_words(int m) {
  if (m < 1) throw UsageError("standard words need m >= 1, got " + std::to_string(m));
  const int n = 2 * m;
  StandardWords w;
  w.m = m;
  for (int k = 1; k <= m - 1; ++k) {
    std::vector<int> pi, pi_prime;
    for (int j = 1; j <= k; ++j) {
      pi.push_back(m + j);
      pi_prime.push_back(m - j);
    }
    w.pi.emplace_back(n, std::move(pi));
    w.pi_prime.emplace_back(n, std::move(pi_prime));
  }
  w.delta = BraidWord(n);
  w.delta_prime = BraidWord(n);
  w.theta = BraidWord::generator(n, m);
  for (int k = m - 1; k >= 1; --k) {
    w.delta *= w.pi[static_cast<std::size_t>(k - 1)];
    w.delta_prime *= w.pi_prime[static_cast<std::size_t>(k - 1)];
    w.theta *= w.pi_prime[static_cast<std::size_t>(k - 1)];
    w.theta *= w.pi[static_cast<std::size_t>(k - 1)];
    w.theta *= BraidWord::generator(n, m);
  }
  w.c = w.delta_prime.inverse() * w.delta.inverse() * w.theta;
  return w;
}

BraidWord standard_word(const StandardWords& words, std::string_view name) {
  auto indexed = [&](std::string_view prefix, const std::vector<BraidWord>& list) -> const BraidWord* {
    if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return nullptr;
    int k = 0;
    auto rest = name.substr(prefix.size());
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc{} || p != rest.data() + rest.size()) return nullptr;
    if (k < 1 || k > static_cast<int>(list.size())) {
      throw UsageError(std::string(name) + ": index out of range 1.." + std::to_string(list.size()));
    }
    return &list[static_cast<std::size_t>(k - 1)];
  };
  if (name == "Delta") return words.delta;
  if (name == "Delta'") return words.delta_prime;
  if (name == "Theta") return words.theta;
  if (name == "C") return words.c;
  if (auto* w = indexed("Pi'", words.pi_prime)) return *w;
  if (auto* w = indexed("Pi", words.pi)) return *w;
  throw UsageError("unknown standard word '" + std::string(name) +
                   "' (expected Pi<k>, Pi'<k>, Delta, Delta', Theta or C)");
}

namespace {

void check_chain_args(int m, int i, int sign) {
  if (m < 1) throw UsageError("m must be >= 1");
  if (i < 1 || i > m - 1) {
    throw UsageError("label " + std::to_string(i) + " out of range 1.." + std::to_string(m - 1));
  }
  if (sign != 1 && sign != -1) throw UsageError("sign must be +1 or -1");
}

DoubleCurveReport chain_report(int m, int i, int sign, int left, int middle, int right) {
  const int n = 2 * m;
  StandardWords w = standard_words(m);
  BraidWord prefix = w.delta_prime.inverse() * w.delta.inverse();
  DoubleCurveReport r;
  r.m = m;
  r.index = i;
  r.sign = sign;
  r.chain.push_back(BraidWord::generator(n, left, sign) * w.c);
  r.chain.push_back(prefix * BraidWord::generator(n, middle, sign) * w.theta);
  r.chain.push_back(w.c * BraidWord::generator(n, right, sign));
  r.first_step = are_equal(r.chain[0], r.chain[1]);
  r.second_step = are_equal(r.chain[1], r.chain[2]);
  r.end_to_end = are_equal(r.chain[0], r.chain[2]);
  return r;
}

}  // namespace

DoubleCurveReport verify_double_curve_identities(int m, int i, int sign) {
  check_chain_args(m, i, sign);
  return chain_report(m, i, sign, i, m - i, 2 * m - i);
}

DoubleCurveReport verify_lower_sheet_identities(int m, int i, int sign) {
  check_chain_args(m, i, sign);
  return chain_report(m, i, sign, m + i, 2 * m - i, m - i);
}

BranchCollapseReport verify_branch_point_collapse(int m) {
  StandardWords w = standard_words(m);
  const int n = 2 * m;
  BranchCollapseReport r;
  r.m = m;
  std::vector<int> kept;
  for (int l : w.theta.letters()) {
    if (l == m) {
      ++r.removed_letters;
    } else {
      kept.push_back(l);
    }
  }
  BraidWord banded(n, std::move(kept));
  BraidWord collapsed = w.delta_prime.inverse() * w.delta.inverse() * w.delta_prime * w.delta;
  r.chain = {w.c, collapsed, BraidWord(n)};
  r.hyperbolic_step = are_equal(banded, w.delta_prime * w.delta);
  r.collapse_trivial = is_trivial(collapsed);
  return r;
}

}  // namespace chartbraid
