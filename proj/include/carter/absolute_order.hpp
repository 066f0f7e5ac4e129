#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "carter/reflection.hpp"

namespace carter {

enum class Side { left, right };

/// v divides w when reflection lengths add along the cofactor.
inline bool divides(const MarkedPermutation& v, const MarkedPermutation& w,
                    Side side = Side::left) {
  if (v.degree() != w.degree()) throw std::invalid_argument("degree mismatch in divides");
  const auto cofactor = side == Side::left ? compose(v.inverse(), w) : compose(w, v.inverse());
  return reflection_length(v) + reflection_length(cofactor) == reflection_length(w);
}

/// The interval [1,w] in absolute order, with ranks, covers, and the full
/// order relation packed into bitset rows.
class IntervalPoset {
 public:
  IntervalPoset(MarkedPermutation top, std::vector<MarkedPermutation> elements,
                std::vector<int> ranks)
      : top_(std::move(top)), elements_(std::move(elements)), ranks_(std::move(ranks)) {
    build_order();
  }

  const MarkedPermutation& top() const { return top_; }
  const std::vector<MarkedPermutation>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int rank(int a) const { return ranks_[static_cast<std::size_t>(a)]; }
  int top_rank() const { return reflection_length(top_); }

  int index_of(const MarkedPermutation& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
  }

  bool leq(int a, int b) const {  // elements[a] <= elements[b]
    return (below_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a) >> 6] >>
            (static_cast<std::size_t>(a) & 63)) & 1u;
  }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  /// Greatest lower bound, or -1 when none exists.
  int meet(int a, int b) const { return bound(a, b, below_, true); }
  /// Least upper bound, or -1.
  int join(int a, int b) const { return bound(a, b, above_, false); }

 private:
  void build_order() {
    int n = size();
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    below_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words_, 0));
    above_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words_, 0));
    for (int a = 0; a < n; ++a) index_[elements_[static_cast<std::size_t>(a)]] = a;
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) {
        if (rank(a) > rank(b)) continue;
        if (divides(elements_[static_cast<std::size_t>(a)],
                    elements_[static_cast<std::size_t>(b)])) {
          below_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a) >> 6] |=
              std::uint64_t{1} << (a & 63);
          above_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) >> 6] |=
              std::uint64_t{1} << (b & 63);
        }
      }
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a)
        if (a != b && rank(a) + 1 == rank(b) && leq(a, b)) covers_.emplace_back(a, b);
  }

  // Pick the extreme-rank candidate of the common bound set; it is the
  // meet/join exactly when it bounds the whole set.
  int bound(int a, int b, const std::vector<std::vector<std::uint64_t>>& dir,
            bool want_max) const {
    std::vector<std::uint64_t> common(words_);
    const auto& ra = dir[static_cast<std::size_t>(a)];
    const auto& rb = dir[static_cast<std::size_t>(b)];
    int best = -1;
    for (std::size_t k = 0; k < words_; ++k) {
      common[k] = ra[k] & rb[k];
      std::uint64_t bits = common[k];
      while (bits) {
        int idx = static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        if (best < 0 || (want_max ? rank(idx) > rank(best) : rank(idx) < rank(best))) best = idx;
      }
    }
    if (best < 0) return -1;
    const auto& reach = dir[static_cast<std::size_t>(best)];
    for (std::size_t k = 0; k < words_; ++k)
      if ((common[k] & ~reach[k]) != 0) return -1;
    return best;
  }

  MarkedPermutation top_;
  std::vector<MarkedPermutation> elements_;
  std::vector<int> ranks_;
  std::vector<std::pair<int, int>> covers_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> below_, above_;
  std::unordered_map<MarkedPermutation, int, MarkedPermutationHash> index_;
};

/// Enumerate [1,w] by walking down from w along length-decreasing right
/// multiplications by reflections.  Elements are sorted by (rank, cycle
/// string) for reproducible output.
inline IntervalPoset interval(const MarkedPermutation& w,
                              std::size_t cap = kDefaultIntervalCap) {
  const auto reflections = all_reflections(w.degree());
  std::unordered_map<MarkedPermutation, int, MarkedPermutationHash> seen;
  std::vector<MarkedPermutation> frontier{w};
  seen.emplace(w, reflection_length(w));
  while (!frontier.empty()) {
    std::vector<MarkedPermutation> next;
    for (const auto& v : frontier) {
      int len = reflection_length(v);
      if (len == 0) continue;
      for (const auto& t : reflections) {
        auto u = compose(v, t.to_permutation(w.degree()));
        if (reflection_length(u) != len - 1) continue;
        if (seen.emplace(u, len - 1).second) {
          if (seen.size() > cap) throw CapExceeded("interval cap exceeded");
          next.push_back(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<MarkedPermutation> elements;
  elements.reserve(seen.size());
  for (const auto& [v, r] : seen) elements.push_back(v);
  std::sort(elements.begin(), elements.end(),
            [](const MarkedPermutation& a, const MarkedPermutation& b) {
              int ra = reflection_length(a), rb = reflection_length(b);
              if (ra != rb) return ra < rb;
              return cycle_string(a) < cycle_string(b);
            });
  std::vector<int> ranks;
  ranks.reserve(elements.size());
  for (const auto& v : elements) ranks.push_back(reflection_length(v));
  return IntervalPoset(w, std::move(elements), std::move(ranks));
}

struct LatticeReport {
  bool is_lattice = true;
  std::optional<std::pair<int, int>> witness;  // first offending pair
  std::string failure;                         // "meet" or "join"
};

inline LatticeReport is_lattice(const IntervalPoset& p) {
  LatticeReport rep;
  for (int a = 0; a < p.size() && rep.is_lattice; ++a)
    for (int b = a + 1; b < p.size(); ++b) {
      if (p.meet(a, b) < 0) {
        rep = {false, std::make_pair(a, b), "meet"};
        break;
      }
      if (p.join(a, b) < 0) {
        rep = {false, std::make_pair(a, b), "join"};
        break;
      }
    }
  return rep;
}

/// Two commuting reflections below w whose product is not below w, if any.
inline std::optional<std::pair<Reflection, Reflection>> find_bowtie(
    const MarkedPermutation& w) {
  const auto ts = all_reflections(w.degree());
  const int n = w.degree();
  std::vector<char> below(ts.size(), 0);
  for (std::size_t k = 0; k < ts.size(); ++k)
    below[k] = divides(ts[k].to_permutation(n), w);
  for (std::size_t a = 0; a < ts.size(); ++a) {
    if (!below[a]) continue;
    for (std::size_t b = a + 1; b < ts.size(); ++b) {
      if (!below[b]) continue;
      if (order_of_product(ts[a], ts[b], n) != 2) continue;
      auto prod = compose(ts[a].to_permutation(n), ts[b].to_permutation(n));
      if (!divides(prod, w)) return std::make_pair(ts[a], ts[b]);
    }
  }
  return std::nullopt;
}

/// Left and right divisor sets coincide.
inline bool is_balanced(const MarkedPermutation& w, std::size_t cap = kDefaultIntervalCap) {
  const auto reflections = all_reflections(w.degree());
  auto enumerate = [&](Side side) {
    std::unordered_set<MarkedPermutation, MarkedPermutationHash> seen{w};
    std::vector<MarkedPermutation> frontier{w};
    while (!frontier.empty()) {
      std::vector<MarkedPermutation> next;
      for (const auto& v : frontier) {
        int len = reflection_length(v);
        if (len == 0) continue;
        for (const auto& t : reflections) {
          auto tp = t.to_permutation(w.degree());
          auto u = side == Side::left ? compose(v, tp) : compose(tp, v);
          if (reflection_length(u) != len - 1) continue;
          if (seen.insert(u).second) {
            if (seen.size() > cap) throw CapExceeded("interval cap exceeded");
            next.push_back(std::move(u));
          }
        }
      }
      frontier = std::move(next);
    }
    return seen;
  };
  return enumerate(Side::left) == enumerate(Side::right);
}

/// All pairs (t, w t) with the product one step below w, in the canonical
/// reflection order.
inline std::vector<std::pair<Reflection, MarkedPermutation>> maximal_divisors(
    const MarkedPermutation& w) {
  int len = reflection_length(w);
  if (len == 0) throw std::invalid_argument("identity has no maximal divisors");
  std::vector<std::pair<Reflection, MarkedPermutation>> out;
  for (const auto& t : all_reflections(w.degree())) {
    auto prod = compose(w, t.to_permutation(w.degree()));
    if (reflection_length(prod) == len - 1) out.emplace_back(t, std::move(prod));
  }
  return out;
}

}  // namespace carter
