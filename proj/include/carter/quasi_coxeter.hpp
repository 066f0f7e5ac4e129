#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "carter/diagram.hpp"
#include "carter/reflection.hpp"

namespace carter {

inline std::uint64_t type_d_order(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return (std::uint64_t{1} << (n - 1)) * f;
}

/// Breadth-first closure of a generating set; deterministic sorted output.
inline std::vector<MarkedPermutation> subgroup_closure(
    std::span<const MarkedPermutation> gens, std::size_t cap = kDefaultClosureCap) {
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  int degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("mixed degrees in generating set");

  std::unordered_set<MarkedPermutation, MarkedPermutationHash> seen;
  std::vector<MarkedPermutation> frontier{MarkedPermutation::identity(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<MarkedPermutation> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        auto p = compose(w, g);
        if (seen.insert(p).second) {
          if (seen.size() > cap) throw CapExceeded("subgroup closure cap exceeded");
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<MarkedPermutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<MarkedPermutation> reflection_closure(
    std::span<const Reflection> ts, int degree, std::size_t cap = kDefaultClosureCap) {
  std::vector<MarkedPermutation> gens;
  gens.reserve(ts.size());
  for (const auto& t : ts) gens.push_back(t.to_permutation(degree));
  return subgroup_closure(gens, cap);
}

inline bool generates_full_group(std::span<const Reflection> ts, int degree,
                                 std::size_t cap = kDefaultClosureCap) {
  return reflection_closure(ts, degree, cap).size() == type_d_order(degree);
}

/// Carter generating data for the m-th quasi-Coxeter class of rank n:
/// the class representative w, the generators s_1..s_n, and their diagram.
struct CarterData {
  int n = 0;
  int m = 0;
  MarkedPermutation w;
  std::vector<Reflection> generators;  // generators[k] is s_{k+1}
  Diagram diagram;

  const Reflection& s(int k) const {  // 1-based
    return generators[static_cast<std::size_t>(k - 1)];
  }
};

/// Diagram of an arbitrary generating set, labeled s1..sn; edges record the
/// actual product orders.
inline Diagram generator_diagram(std::span<const Reflection> gens, int degree) {
  Diagram d;
  for (std::size_t k = 0; k < gens.size(); ++k) d.labels.push_back("s" + std::to_string(k + 1));
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      int ord = order_of_product(gens[a], gens[b], degree);
      if (ord > 2) d.edges.push_back({static_cast<int>(a), static_cast<int>(b), ord});
    }
  return d;
}

inline CarterData representative(int n, int m) {
  if (n < 4) throw std::invalid_argument("rank must be at least 4");
  if (m < 1 || 2 * m > n) throw std::invalid_argument("class index out of range");
  // w = (m, m-1, ..., 2, ~1)(n, n-1, ..., ~(m+1))
  SignedCycle c1, c2;
  for (int v = m; v >= 1; --v) c1.push_back(v == 1 ? -1 : v);
  for (int v = n; v >= m + 1; --v) c2.push_back(v == m + 1 ? -v : v);
  CarterData data{n, m, from_cycles({c1, c2}, n), {}, {}};
  data.generators.push_back(barred_reflection(m, m + 1));
  for (int i = 1; i <= n - 1; ++i) data.generators.push_back(plain_reflection(i, i + 1));
  data.diagram = generator_diagram(data.generators, n);
  return data;
}

inline MarkedPermutation carter_product(const CarterData& c) {
  // s_2 s_3 ... s_m s_1 s_{m+1} ... s_n
  MarkedPermutation p = MarkedPermutation::identity(c.n);
  for (int k = 2; k <= c.m; ++k) p = compose(p, c.s(k).to_permutation(c.n));
  p = compose(p, c.s(1).to_permutation(c.n));
  for (int k = c.m + 1; k <= c.n; ++k) p = compose(p, c.s(k).to_permutation(c.n));
  return p;
}

inline Diagram carter_diagram(int n, int m) { return representative(n, m).diagram; }

/// Conjugacy invariant: the multiset of (cycle length, sign-mark parity)
/// over all cycles, fixed points included.
inline std::vector<std::pair<int, int>> signed_cycle_type(const MarkedPermutation& w) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : cycles_of(w))
    out.emplace_back(static_cast<int>(c.size()), cycle_mark_count(c) % 2);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace carter
