#include <cstdlib>

#include "chartbraid/braid.hpp"
#include "chartbraid/error.hpp"

namespace chartbraid {

namespace {

int sign_of(int l) { return l > 0 ? 1 : -1; }

void check_length(std::size_t size, const Limits& limits) {
  if (size > limits.max_letters) {
    throw ResourceError("word length " + std::to_string(size) + " exceeds the limit of " +
                        std::to_string(limits.max_letters) + " letters");
  }
}

// Position pair (open, close) of the handle that ends leftmost, or close < 0.
struct Handle {
  long open = -1;
  long close = -1;
};

Handle find_first_handle(const std::vector<int>& w, int degree) {
  std::vector<long> last(static_cast<std::size_t>(degree + 1), -1);
  std::vector<bool> blocked(static_cast<std::size_t>(degree + 1), false);
  for (std::size_t j = 0; j < w.size(); ++j) {
    auto i = static_cast<std::size_t>(std::abs(w[j]));
    long k = last[i];
    if (k >= 0 && !blocked[i] && sign_of(w[static_cast<std::size_t>(k)]) == -sign_of(w[j])) {
      return {k, static_cast<long>(j)};
    }
    last[i] = static_cast<long>(j);
    blocked[i] = false;
    // a sigma_i letter is forbidden inside a sigma_{i+1}-handle
    if (i + 1 < blocked.size()) blocked[i + 1] = true;
  }
  return {};
}

}  // namespace

BraidWord handle_reduce(const BraidWord& input, const Limits& limits) {
  check_length(input.size(), limits);
  BraidWord reduced = free_reduce(input);
  std::vector<int> w(reduced.letters().begin(), reduced.letters().end());
  const int n = input.degree();
  while (true) {
    Handle h = find_first_handle(w, n);
    if (h.close < 0) break;
    const int head = w[static_cast<std::size_t>(h.open)];
    const int i = std::abs(head);
    const int e = sign_of(head);
    std::vector<int> next;
    next.reserve(w.size() + 8);
    next.insert(next.end(), w.begin(), w.begin() + h.open);
    for (long p = h.open + 1; p < h.close; ++p) {
      int l = w[static_cast<std::size_t>(p)];
      if (std::abs(l) == i + 1) {
        // sigma_{i+1}^f  ->  sigma_{i+1}^{-e} sigma_i^f sigma_{i+1}^e
        next.push_back(-e * (i + 1));
        next.push_back(sign_of(l) * i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), w.begin() + h.close + 1, w.end());
    check_length(next.size(), limits);
    reduced = free_reduce(BraidWord(n, std::move(next)));
    w.assign(reduced.letters().begin(), reduced.letters().end());
  }
  return BraidWord(n, std::move(w));
}

bool is_trivial(const BraidWord& w, WordProblemMethod method, const Limits& limits) {
  check_length(w.size(), limits);
  bool result = false;
  switch (method) {
    case WordProblemMethod::handle_reduction:
      result = handle_reduce(w, limits).empty();
      break;
    case WordProblemMethod::garside: {
      NormalForm nf = garside_normal_form(w, limits);
      result = nf.infimum == 0 && nf.factors.empty();
      break;
    }
    case WordProblemMethod::cross_checked: {
      bool by_handles = handle_reduce(w, limits).empty();
      NormalForm nf = garside_normal_form(w, limits);
      bool by_garside = nf.infimum == 0 && nf.factors.empty();
      if (by_handles != by_garside) {
        throw InternalError("word problem algorithms disagree on " + to_string(w));
      }
      result = by_handles;
      break;
    }
  }
  if (result && (w.exponent_sum() != 0 || !permutation_of(w).is_identity())) {
    throw InternalError("word reported trivial but fails a necessary condition: " + to_string(w));
  }
  return result;
}

}  // namespace chartbraid
