#include <cstdlib>
#include <vector>

#include "chartbraid/braid.hpp"
#include "chartbraid/error.hpp"

namespace chartbraid {

namespace {

// Simple elements (positive permutation braids) are stored as permutations.
// A starts with sigma_i iff the strands starting at i, i+1 cross, and ends
// with sigma_i iff the strands ending at i, i+1 cross.

bool starts_with(const Permutation& a, int i) { return a.image(i) > a.image(i + 1); }
bool ends_with(const Permutation& a, int i) { return a.preimage(i) > a.preimage(i + 1); }

Permutation tau(const Permutation& p) {
  const int n = p.size();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) images[static_cast<std::size_t>(k - 1)] = n + 1 - p.image(n + 1 - k);
  return Permutation(std::move(images));
}

// Makes (a, b) left-weighted by moving letters from the head of b onto the
// tail of a. Returns true if anything changed.
bool left_weight(Permutation& a, Permutation& b) {
  const int n = a.size();
  bool changed = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (starts_with(b, i) && !ends_with(a, i)) {
        Permutation s = Permutation::transposition(n, i);
        a = a.then(s);
        b = s.then(b);
        progress = changed = true;
      }
    }
  }
  return changed;
}

void normalize(NormalForm& nf) {
  const Permutation delta = Permutation::reversal(nf.degree);
  auto& f = nf.factors;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = f.size(); j-- > 1;) {
      if (left_weight(f[j - 1], f[j])) changed = true;
    }
    // Drop identities; a Delta moves to the front past X as X Delta = Delta tau(X).
    std::vector<Permutation> next;
    next.reserve(f.size());
    for (const auto& g : f) {
      if (g.is_identity()) {
        changed = true;
      } else if (g == delta) {
        for (auto& h : next) h = tau(h);
        ++nf.infimum;
        changed = true;
      } else {
        next.push_back(g);
      }
    }
    f = std::move(next);
  }
}

}  // namespace

NormalForm garside_normal_form(const BraidWord& w, const Limits& limits) {
  if (w.size() > limits.max_letters) {
    throw ResourceError("word length " + std::to_string(w.size()) + " exceeds the limit of " +
                        std::to_string(limits.max_letters) + " letters");
  }
  const int n = w.degree();
  NormalForm nf;
  nf.degree = n;
  if (n == 1) return nf;
  const Permutation delta = Permutation::reversal(n);

  // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1). Every Delta^-1 is pushed to the
  // front; a factor passes one Delta^-1 per negative letter to its right,
  // and X Delta^-1 = Delta^-1 tau(X).
  std::vector<int> negatives_after(w.size() + 1, 0);
  auto letters = w.letters();
  for (std::size_t k = letters.size(); k-- > 0;) {
    negatives_after[k] = negatives_after[k + 1] + (letters[k] < 0 ? 1 : 0);
  }
  nf.infimum = -negatives_after[0];
  std::vector<Permutation> factors;
  factors.reserve(letters.size());
  for (std::size_t k = 0; k < letters.size(); ++k) {
    int i = std::abs(letters[k]);
    Permutation s = Permutation::transposition(n, i);
    Permutation factor = letters[k] > 0 ? s : delta.then(s);
    if (negatives_after[k + 1] % 2 == 1) factor = tau(factor);
    factors.push_back(factor);
  }
  // Insert factors one at a time; each insertion needs one right-to-left pass.
  for (auto& factor : factors) {
    nf.factors.push_back(factor);
    normalize(nf);
  }
  return nf;
}

BraidWord to_word(const NormalForm& nf) {
  const int n = nf.degree;
  BraidWord d = garside_element(n);
  BraidWord out(n);
  if (nf.infimum > 0) {
    for (std::int64_t k = 0; k < nf.infimum; ++k) out *= d;
  } else {
    BraidWord dinv = d.inverse();
    for (std::int64_t k = 0; k < -nf.infimum; ++k) out *= dinv;
  }
  for (const auto& f : nf.factors) out *= permutation_braid(f);
  return out;
}

std::string to_string(const NormalForm& nf) {
  std::string s = "B" + std::to_string(nf.degree) + ": inf=" + std::to_string(nf.infimum);
  for (const auto& f : nf.factors) {
    s += " ";
    s += "[";
    auto imgs = f.images();
    for (std::size_t k = 0; k < imgs.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(imgs[k]);
    }
    s += "]";
  }
  return s;
}

}  // namespace chartbraid
