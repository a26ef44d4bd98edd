#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chartbraid {

/// Bounds applied by word-problem operations.
struct Limits {
  std::size_t max_letters = 100000;
};

/// A word in the braid group B_n. Letters are signed generator indices:
/// +i stands for sigma_i, -i for its inverse, with 1 <= i <= n-1.
/// Products read left to right.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int degree, std::vector<int> letters = {});

  static BraidWord identity(int degree) { return BraidWord(degree); }
  static BraidWord generator(int degree, int index, int sign = 1);

  int degree() const { return degree_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  int exponent_sum() const;

  /// Concatenation; both factors must have the same degree.
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord& operator*=(const BraidWord& rhs);

  /// Literal (letter-by-letter) equality, not group equality.
  bool operator==(const BraidWord&) const = default;

 private:
  int degree_ = 1;
  std::vector<int> letters_;
};

/// Text form `B<n>: l1 l2 ...`, e.g. `B4: 1 -3 2`.
std::string to_string(const BraidWord& w);
BraidWord parse_braid_word(std::string_view text);

/// A bijection of {1..n}. image(k) is the final position of the strand that
/// starts at position k.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int size);
  /// 1-based images.
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int size, int i);  // swaps positions i, i+1
  static Permutation reversal(int size);              // k -> n+1-k

  int size() const { return static_cast<int>(images_.size()); }
  int image(int k) const { return images_[static_cast<std::size_t>(k - 1)] + 1; }
  int preimage(int k) const;
  std::vector<int> images() const;  // 1-based

  /// `this` first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Number of inversions, i.e. crossings of the positive permutation braid.
  int length() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;  // 0-based internally
};

/// Cycle notation, e.g. `(1 3)(2 4)`; identity prints as `()`.
std::string to_string(const Permutation& p);

BraidWord free_reduce(const BraidWord& w);
Permutation permutation_of(const BraidWord& w);

/// Dehornoy handle reduction. The result is handle-free and equal to `w`;
/// it is empty iff `w` is trivial.
BraidWord handle_reduce(const BraidWord& w, const Limits& limits = {});

enum class WordProblemMethod { handle_reduction, garside, cross_checked };

bool is_trivial(const BraidWord& w,
                WordProblemMethod method = WordProblemMethod::handle_reduction,
                const Limits& limits = {});
/// Throws UsageError when the degrees differ.
bool are_equal(const BraidWord& lhs, const BraidWord& rhs,
               WordProblemMethod method = WordProblemMethod::handle_reduction,
               const Limits& limits = {});

/// Left-greedy Garside normal form Delta^infimum * factors[0] * factors[1] ...
/// Each factor is a permutation braid other than the identity and Delta.
struct NormalForm {
  int degree = 1;
  std::int64_t infimum = 0;
  std::vector<Permutation> factors;

  bool operator==(const NormalForm&) const = default;
};

NormalForm garside_normal_form(const BraidWord& w, const Limits& limits = {});
BraidWord to_word(const NormalForm& nf);
std::string to_string(const NormalForm& nf);

/// Positive braid word in which every pair of strands crosses at most once.
BraidWord permutation_braid(const Permutation& p);
/// The half twist Delta_n, as the positive word of the reversal permutation.
BraidWord garside_element(int degree);
/// Image under sigma_i -> sigma_{n-i}.
BraidWord flip(const BraidWord& w);
/// Shifts every generator index by `offset` and places the word in B_degree.
BraidWord embed(const BraidWord& w, int degree, int offset);

/// The 2m-braids used to lift empty charts across double curves.
struct StandardWords {
  int m = 1;
  std::vector<BraidWord> pi;        // pi[k-1] = sigma_{m+1} ... sigma_{m+k}
  std::vector<BraidWord> pi_prime;  // pi_prime[k-1] = sigma_{m-1} ... sigma_{m-k}
  BraidWord delta;                  // pi_{m-1} ... pi_1
  BraidWord delta_prime;            // pi'_{m-1} ... pi'_1
  BraidWord theta;                  // sigma_m pi'_{m-1} pi_{m-1} sigma_m ... pi'_1 pi_1 sigma_m
  BraidWord c;                      // delta_prime^-1 delta^-1 theta
};

/// Throws UsageError for m < 1.
StandardWords standard_words(int m);

/// Looks up one of the words by name: Pi<k>, Pi'<k>, Delta, Delta', Theta, C.
BraidWord standard_word(const StandardWords& words, std::string_view name);

/// The identity chain carried across a double curve by a chart edge of
/// label i and sign eps on the upper sheet.
struct DoubleCurveReport {
  int m = 1;
  int index = 1;
  int sign = 1;
  std::vector<BraidWord> chain;  // three words
  bool first_step = false;       // sigma_i^e C  ==  D'^-1 D^-1 sigma_{m-i}^e Theta
  bool second_step = false;      // ... == C sigma_{2m-i}^e
  bool end_to_end = false;       // sigma_i^e C == C sigma_{2m-i}^e
  bool passed() const { return first_step && second_step && end_to_end; }
};

/// Throws UsageError unless 1 <= i <= m-1 and sign is +-1.
DoubleCurveReport verify_double_curve_identities(int m, int i, int sign);

/// Same chain for an edge on the lower sheet: sigma_{m+i}^e C == C sigma_{m-i}^e,
/// through D'^-1 D^-1 sigma_{2m-i}^e Theta.
DoubleCurveReport verify_lower_sheet_identities(int m, int i, int sign);

/// The motion picture at a positive branch point:
/// C  -(delete the m letters sigma_m from Theta)->  D'^-1 D^-1 D' D  ->  e_2m.
struct BranchCollapseReport {
  int m = 1;
  std::vector<BraidWord> chain;  // C, D'^-1 D^-1 D' D, e_2m
  std::size_t removed_letters = 0;
  bool hyperbolic_step = false;  // Theta minus its sigma_m letters == D' D
  bool collapse_trivial = false;  // D'^-1 D^-1 D' D == e_2m
  bool passed() const { return hyperbolic_step && collapse_trivial && removed_letters == static_cast<std::size_t>(m); }
};

BranchCollapseReport verify_branch_point_collapse(int m);

}  // namespace chartbraid
