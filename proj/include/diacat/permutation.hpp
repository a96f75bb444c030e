#ifndef DIACAT_PERMUTATION_HPP_
#define DIACAT_PERMUTATION_HPP_

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace diacat {

// A permutation of strand positions 0..n-1. images()[i] is the top position
// reached by the strand that starts at bottom position i. Stacking f on top
// of g gives f * g (apply g first).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
        throw Error(ErrorCode::invalid_argument, "not a permutation");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  // The crossing of positions o and o+1.
  static Permutation transposition(int n, int o) {
    auto p = identity(n);
    std::swap(p.images_[o], p.images_[o + 1]);
    return p;
  }

  // Product of crossings listed bottom to top.
  static Permutation from_word(int n, std::vector<int> const& offsets) {
    auto p = identity(n);
    for (int o : offsets) p = transposition(n, o) * p;
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  std::vector<int> const& images() const { return images_; }
  int operator()(int i) const { return images_[i]; }

  friend Permutation operator*(Permutation const& f, Permutation const& g) {
    if (f.size() != g.size()) {
      throw Error(ErrorCode::shape_mismatch, "permutation size mismatch");
    }
    std::vector<int> r(f.size());
    for (int i = 0; i < f.size(); ++i) r[i] = f.images_[g.images_[i]];
    return Permutation(std::move(r));
  }

  Permutation inverse() const {
    std::vector<int> r(images_.size());
    for (int i = 0; i < size(); ++i) r[images_[i]] = i;
    return Permutation(std::move(r));
  }

  // Number of inversions = Coxeter length.
  int length() const {
    int l = 0;
    for (int i = 0; i < size(); ++i) {
      for (int j = i + 1; j < size(); ++j) {
        if (images_[i] > images_[j]) ++l;
      }
    }
    return l;
  }

  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  // Reduced word (crossing offsets, bottom to top) obtained by bubble-sorting
  // strands toward their target positions, leftmost inversion first.
  std::vector<int> reduced_word() const {
    std::vector<int> key = images_;  // key[p] = target of strand at p
    std::vector<int> word;
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (int o = 0; o + 1 < size(); ++o) {
        if (key[o] > key[o + 1]) {
          std::swap(key[o], key[o + 1]);
          word.push_back(o);
          swapped = true;
        }
      }
    }
    return word;
  }

  // Sorted cycle lengths, descending.
  std::vector<int> cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> type;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
  }

  // Lexicographic order on the image vector.
  friend auto operator<=>(Permutation const&, Permutation const&) = default;
  friend bool operator==(Permutation const&, Permutation const&) = default;

  std::string to_text() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(images_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> images_;
};

// All permutations of n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace diacat

#endif  // DIACAT_PERMUTATION_HPP_
