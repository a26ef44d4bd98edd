#include "chartbraid/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "chartbraid/error.hpp"

namespace chartbraid {

BraidWord::BraidWord(int degree, std::vector<int> letters)
    : degree_(degree), letters_(std::move(letters)) {
  if (degree < 1) throw UsageError("braid degree must be positive, got " + std::to_string(degree));
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > degree - 1) {
      throw UsageError("generator index " + std::to_string(l) + " out of range for B" +
                       std::to_string(degree));
    }
  }
}

BraidWord BraidWord::generator(int degree, int index, int sign) {
  if (sign != 1 && sign != -1) throw UsageError("generator sign must be +1 or -1");
  return BraidWord(degree, {sign * index});
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.degree_ = degree_;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

int BraidWord::exponent_sum() const {
  int s = 0;
  for (int l : letters_) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  BraidWord out = *this;
  out *= rhs;
  return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (rhs.degree_ != degree_) {
    throw UsageError("cannot multiply words in B" + std::to_string(degree_) + " and B" +
                     std::to_string(rhs.degree_));
  }
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::string to_string(const BraidWord& w) {
  std::string s = "B" + std::to_string(w.degree()) + ":";
  for (int l : w.letters()) {
    s += ' ';
    s += std::to_string(l);
  }
  return s;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

BraidWord parse_braid_word(std::string_view text) {
  std::size_t pos = 0;
  auto column = [&] { return pos + 1; };
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos >= text.size() || text[pos] != 'B') throw ParseError("expected 'B<degree>:'", 1, column());
  ++pos;
  int degree = 0;
  auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), degree);
  if (ec != std::errc{} || degree < 1) throw ParseError("expected positive degree after 'B'", 1, column());
  pos = static_cast<std::size_t>(p - text.data());
  if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':' after degree", 1, column());
  ++pos;
  std::vector<int> letters;
  while (true) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t start = pos;
    const char* first = text.data() + pos;
    if (*first == '+') ++first;
    int value = 0;
    auto [q, ec2] = std::from_chars(first, text.data() + text.size(), value);
    if (ec2 != std::errc{} || (q < text.data() + text.size() && !is_space(*q))) {
      throw ParseError("expected a signed generator index", 1, start + 1);
    }
    if (value == 0 || std::abs(value) > degree - 1) {
      throw ParseError("generator " + std::to_string(value) + " out of range for B" + std::to_string(degree),
                       1, start + 1);
    }
    letters.push_back(value);
    pos = static_cast<std::size_t>(q - text.data());
  }
  return BraidWord(degree, std::move(letters));
}

// ---------------------------------------------------------------------------

Permutation::Permutation(int size) : images_(static_cast<std::size_t>(size)) {
  if (size < 1) throw UsageError("permutation size must be positive");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int& v : images_) {
    --v;
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw UsageError("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (images_.empty()) throw UsageError("permutation size must be positive");
}

Permutation Permutation::transposition(int size, int i) {
  Permutation p(size);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::reversal(int size) {
  Permutation p(size);
  for (int k = 0; k < size; ++k) p.images_[static_cast<std::size_t>(k)] = size - 1 - k;
  return p;
}

int Permutation::preimage(int k) const {
  auto it = std::find(images_.begin(), images_.end(), k - 1);
  return static_cast<int>(it - images_.begin()) + 1;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_);
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw UsageError("permutation size mismatch");
  Permutation out = *this;
  for (auto& v : out.images_) v = next.images_[static_cast<std::size_t>(v)];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (std::size_t k = 0; k < images_.size(); ++k) out.images_[static_cast<std::size_t>(images_[k])] = static_cast<int>(k);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k)) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++inv;
  return inv;
}

std::string to_string(const Permutation& p) {
  std::string s;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  for (int k = 1; k <= p.size(); ++k) {
    if (seen[static_cast<std::size_t>(k - 1)] || p.image(k) == k) continue;
    s += '(';
    int j = k;
    bool first = true;
    while (!seen[static_cast<std::size_t>(j - 1)]) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      if (!first) s += ' ';
      s += std::to_string(j);
      first = false;
      j = p.image(j);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------------------

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.size());
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.degree(), std::move(stack));
}

Permutation permutation_of(const BraidWord& w) {
  // at[pos] = strand currently at position pos
  std::vector<int> at(static_cast<std::size_t>(w.degree()));
  std::iota(at.begin(), at.end(), 1);
  for (int l : w.letters()) {
    auto i = static_cast<std::size_t>(std::abs(l));
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> images(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) images[static_cast<std::size_t>(at[pos] - 1)] = static_cast<int>(pos) + 1;
  return Permutation(std::move(images));
}

BraidWord flip(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w.letters()) out.push_back(l > 0 ? w.degree() - l : -(w.degree() + l));
  return BraidWord(w.degree(), std::move(out));
}

BraidWord embed(const BraidWord& w, int degree, int offset) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w.letters()) out.push_back(l > 0 ? l + offset : l - offset);
  return BraidWord(degree, std::move(out));
}

BraidWord permutation_braid(const Permutation& p) {
  // Bubble-sort the final arrangement back to the identity; the reversed
  // sequence of swaps builds the arrangement one new crossing at a time.
  int n = p.size();
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) at[static_cast<std::size_t>(p.image(k) - 1)] = k;
  std::vector<int> swaps;
  for (int pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (int j = 0; j + 1 < n; ++j) {
      if (at[static_cast<std::size_t>(j)] > at[static_cast<std::size_t>(j + 1)]) {
        std::swap(at[static_cast<std::size_t>(j)], at[static_cast<std::size_t>(j + 1)]);
        swaps.push_back(j + 1);
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::reverse(swaps.begin(), swaps.end());
  return BraidWord(n, std::move(swaps));
}

BraidWord garside_element(int degree) { return permutation_braid(Permutation::reversal(degree)); }

bool are_equal(const BraidWord& lhs, const BraidWord& rhs, WordProblemMethod method, const Limits& limits) {
  if (lhs.degree() != rhs.degree()) {
    throw UsageError("degree mismatch: B" + std::to_string(lhs.degree()) + " vs B" + std::to_string(rhs.degree()));
  }
  return is_trivial(lhs * rhs.inverse(), method, limits);
}

}  // namespace chartbraid
