#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include "carter/common.hpp"

namespace carter {

/// An element of the rank-n reflection group of type D, stored as a monomial
/// matrix with entries in {-1,0,+1} and an even number of -1 entries.
///
/// image(i) is the signed column index of the nonzero entry of row i
/// (1-based).  Composition agrees with the matrix product, so cycles read
/// left to right: in u*v, the row of u is applied first.
class MarkedPermutation {
 public:
  explicit MarkedPermutation(std::vector<int> image) : image_(std::move(image)) {
    validate();
  }

  static MarkedPermutation identity(int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return MarkedPermutation(std::move(img));
  }

  int degree() const { return static_cast<int>(image_.size()); }

  /// Signed image of row i (1-based).
  int map(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& image() const { return image_; }

  bool is_identity() const {
    for (int i = 1; i <= degree(); ++i)
      if (map(i) != i) return false;
    return true;
  }

  MarkedPermutation inverse() const {
    std::vector<int> img(image_.size());
    for (int i = 1; i <= degree(); ++i) {
      int v = map(i);
      int col = std::abs(v);
      img[static_cast<std::size_t>(col - 1)] = v < 0 ? -i : i;
    }
    return MarkedPermutation(std::move(img));
  }

  friend bool operator==(const MarkedPermutation& a, const MarkedPermutation& b) = default;
  friend std::strong_ordering operator<=>(const MarkedPermutation& a,
                                          const MarkedPermutation& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.image_ <=> b.image_;
  }

 private:
  void validate() const {
    int n = degree();
    if (n < 1) throw std::invalid_argument("empty image");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int negatives = 0;
    for (int v : image_) {
      int a = std::abs(v);
      if (a < 1 || a > n) throw std::invalid_argument("image entry out of range");
      if (seen[static_cast<std::size_t>(a - 1)]++)
        throw std::invalid_argument("repeated image entry");
      if (v < 0) ++negatives;
    }
    if (negatives % 2 != 0)
      throw std::invalid_argument("odd number of sign flips (not in the +1-product group)");
  }

  std::vector<int> image_;
};

inline MarkedPermutation compose(const MarkedPermutation& u, const MarkedPermutation& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> img(static_cast<std::size_t>(u.degree()));
  for (int i = 1; i <= u.degree(); ++i) {
    int a = u.map(i);
    int b = v.map(std::abs(a));
    img[static_cast<std::size_t>(i - 1)] = a < 0 ? -b : b;
  }
  return MarkedPermutation(std::move(img));
}

inline MarkedPermutation conjugate(const MarkedPermutation& w, const MarkedPermutation& g) {
  return compose(g.inverse(), compose(w, g));
}

/// Reflection length per the cycle count rule: n minus the number of cycles
/// (fixed points included) carrying an even number of sign marks.
inline int reflection_length(const MarkedPermutation& w) {
  int n = w.degree();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  int even_cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (visited[static_cast<std::size_t>(i - 1)]) continue;
    int marks = 0;
    int j = i;
    do {
      visited[static_cast<std::size_t>(j - 1)] = 1;
      int v = w.map(j);
      if (v < 0) ++marks;
      j = std::abs(v);
    } while (j != i);
    if (marks % 2 == 0) ++even_cycles;
  }
  return n - even_cycles;
}

inline int element_order(const MarkedPermutation& w) {
  MarkedPermutation p = w;
  int k = 1;
  while (!p.is_identity()) {
    p = compose(p, w);
    ++k;
    if (k > 1'000'000) throw std::logic_error("element order runaway");
  }
  return k;
}

struct MarkedPermutationHash {
  std::size_t operator()(const MarkedPermutation& w) const {
    std::size_t h = static_cast<std::size_t>(w.degree());
    for (int v : w.image()) hash_mix(h, static_cast<std::size_t>(v + 64));
    return h;
  }
};

/// Matrix codec: row-major matrix with a single +-1 entry per row and column.
inline std::vector<std::vector<int>> to_matrix(const MarkedPermutation& w) {
  int n = w.degree();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i) {
    int v = w.map(i);
    rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(std::abs(v) - 1)] =
        v < 0 ? -1 : 1;
  }
  return rows;
}

inline MarkedPermutation from_matrix(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix is not square");
    int found = 0;
    for (int j = 0; j < n; ++j) {
      int e = row[static_cast<std::size_t>(j)];
      if (e == 0) continue;
      if (e != 1 && e != -1) throw std::invalid_argument("matrix entry not in {-1,0,1}");
      img[static_cast<std::size_t>(i)] = e < 0 ? -(j + 1) : (j + 1);
      ++found;
    }
    if (found != 1) throw std::invalid_argument("matrix row is not monomial");
  }
  return MarkedPermutation(std::move(img));  // column/parity checks in constructor
}

}  // namespace carter
