#include "covol/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace covol {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int p = static_cast<int>(word_.size());
  if (p == 0) throw std::invalid_argument("empty permutation");
  std::vector<char> seen(p + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > p || seen[v]) throw std::invalid_argument("not a permutation of 1..p");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int p) {
  std::vector<int> w(p);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int p) {
  std::vector<int> w(p);
  for (int i = 0; i < p; ++i) w[i] = p - i;
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int count = 0;
  const int p = size();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (word_[i] > word_[j]) ++count;
    }
  }
  return count;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int i = 1; i <= size(); ++i) inv[word_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::right_multiply_transposition(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("transposition index out of range");
  std::vector<int> w = word_;
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  if (size() <= 9) {
    for (int v : word_) out << v;
  } else {
    for (int i = 0; i < size(); ++i) {
      if (i) out << ",";
      out << word_[i];
    }
  }
  return out.str();
}

Permutation Permutation::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty permutation string");
  std::vector<int> w;
  if (s.find(',') != std::string::npos) {
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("malformed permutation: " + s);
      w.push_back(std::stoi(tok));
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed permutation: " + s);
      }
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> w(a.size());
  for (int i = 1; i <= a.size(); ++i) w[i - 1] = a(b(i));
  return Permutation(std::move(w));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("permutation size mismatch");
  const int p = u.size();
  std::vector<int> us, ws;
  us.reserve(p);
  ws.reserve(p);
  for (int k = 1; k <= p; ++k) {
    // Maintain the sorted prefix sets u[k], w[k] incrementally.
    us.insert(std::upper_bound(us.begin(), us.end(), u(k)), u(k));
    ws.insert(std::upper_bound(ws.begin(), ws.end(), w(k)), w(k));
    for (int m = 0; m < k; ++m) {
      if (us[m] > ws[m]) return false;
    }
  }
  return true;
}

std::vector<Permutation> all_permutations(int p) {
  std::vector<int> w(p);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<std::pair<Permutation, Permutation>> enumerate_bruhat_pairs(int p, int max_p) {
  if (p < 1) throw std::invalid_argument("permutation size must be positive");
  if (p > max_p) throw std::invalid_argument("symmetric group bound exceeded");
  auto perms = all_permutations(p);
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (const auto& u : perms) {
    for (const auto& w : perms) {
      if (bruhat_leq(u, w)) pairs.emplace_back(u, w);
    }
  }
  return pairs;
}

}  // namespace covol
