#pragma once

#include <string>
#include <vector>

namespace covol {

// Permutation of {1, ..., p} in one-line notation: word[i] = w(i+1).
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int p);
  // Longest element (p, p-1, ..., 1).
  static Permutation longest(int p);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  // Number of inversions; equals the minimal transposition count.
  int length() const;
  Permutation inverse() const;
  // Right multiplication by the adjacent transposition s_i (1 <= i <= p-1):
  // swaps positions i and i+1 of the one-line word.
  Permutation right_multiply_transposition(int i) const;

  bool operator==(const Permutation& other) const { return word_ == other.word_; }
  bool operator!=(const Permutation& other) const { return word_ != other.word_; }
  bool operator<(const Permutation& other) const { return word_ < other.word_; }

  // "3412" for p <= 9, comma-separated otherwise.
  std::string to_string() const;
  // Accepts both digit strings ("3412") and comma-separated lists.
  static Permutation parse(const std::string& s);

 private:
  std::vector<int> word_;
};

// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

// Bruhat order via entrywise dominance of sorted prefix sets u[k] <= w[k].
bool bruhat_leq(const Permutation& u, const Permutation& w);

// All permutations of S_p in lexicographic one-line order.
std::vector<Permutation> all_permutations(int p);

// All ordered pairs (u, w) with u <= w in Bruhat order, u-major
// lexicographic order. Throws when p exceeds max_p.
std::vector<std::pair<Permutation, Permutation>> enumerate_bruhat_pairs(int p, int max_p = 6);

}  // namespace covol
