#pragma once

#include <set>
#include <vector>

#include "carter/absolute_order.hpp"
#include "carter/quasi_coxeter.hpp"
#include "carter/reflection.hpp"

namespace carter {

enum class HurwitzDirection { forward, inverse };

/// Braid generator action at position i (1-based, i < length):
/// forward sends (.., t_i, t_{i+1}, ..) to (.., t_i t_{i+1} t_i, t_i, ..),
/// inverse to (.., t_{i+1}, t_{i+1} t_i t_{i+1}, ..).  The product of the
/// tuple is unchanged.
inline ReflectionTuple hurwitz_move(const ReflectionTuple& tuple, int i,
                                    HurwitzDirection dir) {
  int len = static_cast<int>(tuple.factors.size());
  if (i < 1 || i >= len) throw std::invalid_argument("move position out of range");
  auto factors = tuple.factors;
  const Reflection a = factors[static_cast<std::size_t>(i - 1)];
  const Reflection b = factors[static_cast<std::size_t>(i)];
  if (dir == HurwitzDirection::forward) {
    // a b a, conjugation by an involution
    factors[static_cast<std::size_t>(i - 1)] = conjugate(b, a.to_permutation(tuple.degree));
    factors[static_cast<std::size_t>(i)] = a;
  } else {
    factors[static_cast<std::size_t>(i - 1)] = b;
    factors[static_cast<std::size_t>(i)] = conjugate(a, b.to_permutation(tuple.degree));
  }
  return ReflectionTuple(tuple.degree, std::move(factors));
}

/// Closure of {tuple} under all moves, as a sorted set of factor sequences.
inline std::set<std::vector<Reflection>> hurwitz_orbit(const ReflectionTuple& tuple,
                                                       std::size_t cap = kDefaultOrbitCap) {
  if (cap == 0) throw std::invalid_argument("orbit cap must be positive");
  std::set<std::vector<Reflection>> seen{tuple.factors};
  std::vector<ReflectionTuple> frontier{tuple};
  int len = static_cast<int>(tuple.factors.size());
  while (!frontier.empty()) {
    std::vector<ReflectionTuple> next;
    for (const auto& t : frontier) {
      for (int i = 1; i < len; ++i) {
        for (auto dir : {HurwitzDirection::forward, HurwitzDirection::inverse}) {
          auto moved = hurwitz_move(t, i, dir);
          if (seen.insert(moved.factors).second) {
            if (seen.size() > cap) throw CapExceeded("Hurwitz orbit cap exceeded");
            next.push_back(std::move(moved));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Brute-force oracle: every tuple of length l_T(w) multiplying to w, found
/// by depth-first search over length-additive prefixes dividing w.
inline std::set<std::vector<Reflection>> all_reduced_decompositions(
    const MarkedPermutation& w, std::size_t cap = kDefaultOrbitCap) {
  int n = w.degree();
  int len = reflection_length(w);
  const auto ts = all_reflections(n);
  std::vector<MarkedPermutation> tperm;
  tperm.reserve(ts.size());
  for (const auto& t : ts) tperm.push_back(t.to_permutation(n));

  std::set<std::vector<Reflection>> out;
  std::vector<Reflection> prefix;
  auto dfs = [&](auto&& self, const MarkedPermutation& acc, int depth) -> void {
    if (depth == len) {
      if (acc == w) {
        out.insert(prefix);
        if (out.size() > cap) throw CapExceeded("decomposition enumeration cap exceeded");
      }
      return;
    }
    for (std::size_t k = 0; k < ts.size(); ++k) {
      auto next = compose(acc, tperm[k]);
      if (reflection_length(next) != depth + 1) continue;
      if (!divides(next, w)) continue;
      prefix.push_back(ts[k]);
      self(self, next, depth + 1);
      prefix.pop_back();
    }
  };
  dfs(dfs, MarkedPermutation::identity(n), 0);
  return out;
}

/// Dual Matsumoto test: all reduced decompositions form a single orbit.
inline bool is_hurwitz_transitive(const MarkedPermutation& w,
                                  std::size_t cap = kDefaultOrbitCap) {
  auto all = all_reduced_decompositions(w, cap);
  if (all.empty()) return true;  // identity: nothing to connect
  auto orbit = hurwitz_orbit(ReflectionTuple(w.degree(), *all.begin()), cap);
  return orbit == all;
}

/// Subgroup generated by the factors of the first reduced decomposition in
/// canonical order; for parabolic quasi-Coxeter elements this set does not
/// depend on the decomposition.
inline std::vector<MarkedPermutation> parabolic_closure(const MarkedPermutation& w,
                                                        std::size_t cap = kDefaultClosureCap) {
  if (reflection_length(w) == 0)
    return {MarkedPermutation::identity(w.degree())};
  auto all = all_reduced_decompositions(w, cap);
  const auto& factors = *all.begin();
  return reflection_closure(factors, w.degree(), cap);
}

/// Full-length element some of whose reduced decompositions generate the
/// whole group.
inline bool is_quasi_coxeter(const MarkedPermutation& w,
                             std::size_t cap = kDefaultClosureCap) {
  int n = w.degree();
  if (reflection_length(w) != n) return false;
  auto target = type_d_order(n);
  for (const auto& factors : all_reduced_decompositions(w, kDefaultOrbitCap))
    if (reflection_closure(factors, n, cap).size() == target) return true;
  return false;
}

}  // namespace carter
