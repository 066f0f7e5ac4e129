#pragma once

#include <map>
#include <string>
#include <vector>

#include "carter/absolute_order.hpp"
#include "carter/quasi_coxeter.hpp"
#include "carter/words.hpp"

namespace carter {

enum class RelatorKind { braid, comm, tc, cc };

/// Relator templates.  braid and comm take two generators; tc and cc take
/// the four generators of a diagram cycle read in traversal order:
///   braid(x,y) = x y x (y x y)^-1
///   comm(x,y)  = x y (y x)^-1
///   tc(x,y,z,t) = [x, y^-1 z t z^-1 y]   (the twisted cycle commutator)
///   cc(x,y,z,t) = [x, y z t z^-1 y^-1]   (the cycle commutator)
inline GeneratorWord make_relator(RelatorKind kind, const std::vector<int>& gens) {
  auto L = [](int g, int e = 1) { return GeneratorWord::letter(g, e); };
  switch (kind) {
    case RelatorKind::braid: {
      if (gens.size() != 2) throw std::invalid_argument("braid relator takes 2 generators");
      auto x = L(gens[0]), y = L(gens[1]);
      return x * y * x * (y * x * y).inverse();
    }
    case RelatorKind::comm: {
      if (gens.size() != 2) throw std::invalid_argument("comm relator takes 2 generators");
      auto x = L(gens[0]), y = L(gens[1]);
      return x * y * (y * x).inverse();
    }
    case RelatorKind::tc: {
      if (gens.size() != 4) throw std::invalid_argument("tc relator takes 4 generators");
      auto x = L(gens[0]);
      auto conj = L(gens[1], -1) * L(gens[2]) * L(gens[3]) * L(gens[2], -1) * L(gens[1]);
      return GeneratorWord::commutator(x, conj);
    }
    case RelatorKind::cc: {
      if (gens.size() != 4) throw std::invalid_argument("cc relator takes 4 generators");
      auto x = L(gens[0]);
      auto conj = L(gens[1]) * L(gens[2]) * L(gens[3]) * L(gens[2], -1) * L(gens[1], -1);
      return GeneratorWord::commutator(x, conj);
    }
  }
  throw std::invalid_argument("unknown relator kind");
}

enum class PresentationSource { dual, claimed, cameron };

struct Presentation {
  PresentationSource source;
  int n = 0;
  int m = 0;  // 0 when not class-based (dual)
  std::string element;  // cycle string of w for dual presentations
  std::vector<std::string> generators;
  std::vector<GeneratorWord> relators;

  std::map<std::string, int> name_index() const {
    std::map<std::string, int> out;
    for (std::size_t k = 0; k < generators.size(); ++k)
      out[generators[k]] = static_cast<int>(k);
    return out;
  }
};

namespace detail {

inline std::vector<std::string> s_names(int n) {
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("s" + std::to_string(k));
  return names;
}

/// Diagram relators in deterministic pair order: braid on edges, commutator
/// on non-edges.
inline void append_diagram_relators(const Diagram& d, std::vector<GeneratorWord>& out) {
  int n = d.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      out.push_back(
          make_relator(d.adjacent(a, b) ? RelatorKind::braid : RelatorKind::comm, {a, b}));
}

}  // namespace detail

/// Presentation over s_1..s_n with the diagram relations plus, for m >= 2,
/// the twisted cycle commutator on the 4-cycle (s_1, s_m, s_{m+1}, s_{m+2}):
/// [s_1, s_m^-1 s_{m+1} s_{m+2} s_{m+1}^-1 s_m].
inline Presentation claimed_presentation(int n, int m) {
  auto data = representative(n, m);
  Presentation p{PresentationSource::claimed, n, m, cycle_string(data.w),
                 detail::s_names(n), {}};
  detail::append_diagram_relators(data.diagram, p.relators);
  if (m >= 2) p.relators.push_back(make_relator(RelatorKind::tc, {0, m - 1, m, m + 1}));
  return p;
}

/// The claimed presentation plus the quadratic relations, with the cycle
/// commutator in place of the twisted one; a presentation of the finite
/// group itself.
inline Presentation cameron_presentation(int n, int m) {
  auto data = representative(n, m);
  Presentation p{PresentationSource::cameron, n, m, cycle_string(data.w),
                 detail::s_names(n), {}};
  for (int k = 0; k < n; ++k)
    p.relators.push_back(GeneratorWord::letter(k) * GeneratorWord::letter(k));
  detail::append_diagram_relators(data.diagram, p.relators);
  // [s_m, s_{m+1} s_{m+2} s_1 s_{m+2} s_{m+1}] written as cc over the cycle
  if (m >= 2) p.relators.push_back(make_relator(RelatorKind::cc, {m - 1, m, m + 1, 0}));
  return p;
}

/// Presentation on a copy of all reflections with the dual braid relations:
/// for each ordered pair t != t' with t t' below w, the relator expressing
/// t t' = t' t'' with t'' = t' t t'; commutations are emitted once per
/// unordered pair.
inline Presentation dual_presentation(const MarkedPermutation& w) {
  int n = w.degree();
  auto ts = all_reflections(n);
  Presentation p{PresentationSource::dual, n, 0, cycle_string(w), {}, {}};
  std::vector<MarkedPermutation> perms;
  for (const auto& t : ts) {
    p.generators.push_back(t.str());
    perms.push_back(t.to_permutation(n));
  }
  auto id_of = [&](const Reflection& r) {
    for (std::size_t k = 0; k < ts.size(); ++k)
      if (ts[k] == r) return static_cast<int>(k);
    throw std::logic_error("reflection not found");
  };
  for (std::size_t a = 0; a < ts.size(); ++a)
    for (std::size_t b = 0; b < ts.size(); ++b) {
      if (a == b) continue;
      auto prod = compose(perms[a], perms[b]);
      if (!divides(prod, w)) continue;
      bool commute = prod == compose(perms[b], perms[a]);
      if (commute) {
        if (a < b)
          p.relators.push_back(make_relator(RelatorKind::comm,
                                            {static_cast<int>(a), static_cast<int>(b)}));
        continue;
      }
      // t t' = t' t''  with  t'' = t' t t'
      auto t2 = conjugate(ts[a], perms[b]);
      auto lhs = GeneratorWord::letter(static_cast<int>(a)) *
                 GeneratorWord::letter(static_cast<int>(b));
      auto rhs = GeneratorWord::letter(static_cast<int>(b)) *
                 GeneratorWord::letter(id_of(t2));
      p.relators.push_back(lhs * rhs.inverse());
    }
  return p;
}

/// Word over s_1..s_n evaluating to the reflection t in the group.  The
/// plain variant uses positive exponents throughout; the lifted variant is
/// the decomposition valid in the interval group.
inline GeneratorWord reflection_word(const Reflection& t, const CarterData& carter,
                                     bool lifted) {
  const int m = carter.m, n = carter.n, i = t.i, j = t.j;
  if (j > n) throw std::invalid_argument("reflection exceeds rank");
  auto L = [](int k, int e = 1) { return GeneratorWord::letter(k - 1, e); };  // s_k
  const int flip = lifted ? -1 : 1;
  GeneratorWord base, exp;
  if (!t.barred()) {
    base = L(j);
    for (int k = j - 1; k >= i + 1; --k) exp = exp * L(k, flip);
  } else if (i <= m && j >= m + 1) {
    base = L(1);
    for (int k = m + 2; k <= j; ++k) exp = exp * L(k);
    for (int k = m; k >= i + 1; --k) exp = exp * L(k, flip);
  } else if (j <= m) {
    base = L(1);
    for (int k = m; k >= i + 1; --k) exp = exp * L(k, flip);
    exp = exp * L(m + 1);
    for (int k = m; k >= j + 1; --k) exp = exp * L(k, flip);
  } else {
    base = L(1);
    for (int k = m + 2; k <= j; ++k) exp = exp * L(k);
    exp = exp * L(m + 1, flip);
    for (int k = m + 2; k <= i; ++k) exp = exp * L(k);
  }
  return base.conjugated_by(exp);
}

/// The four equivalent twisted cycle commutator relators read around the
/// diagram cycle, k = 0..3; k = 0 is the relator of the claimed presentation.
inline GeneratorWord tc_variant(int n, int m, int k) {
  if (m < 2 || 2 * m > n) throw std::invalid_argument("no diagram cycle for this class");
  const int s1 = 0, sm = m - 1, sm1 = m, sm2 = m + 1;
  switch (k) {
    case 0: return make_relator(RelatorKind::tc, {s1, sm, sm1, sm2});
    case 1: return make_relator(RelatorKind::tc, {sm, sm1, sm2, s1});
    case 2: return make_relator(RelatorKind::tc, {sm1, sm, s1, sm2});
    case 3: return make_relator(RelatorKind::tc, {sm2, sm1, sm, s1});
  }
  throw std::invalid_argument("variant index out of range");
}

/// Relator of the positive-word form: s_m commutes with
/// s_1 s_{m+1} s_{m+2} s_m s_{m+1} s_1.
inline GeneratorWord tc_positive_form(int n, int m) {
  if (m < 2 || 2 * m > n) throw std::invalid_argument("no diagram cycle for this class");
  auto L = [](int k) { return GeneratorWord::letter(k - 1); };
  auto c = L(1) * L(m + 1) * L(m + 2) * L(m) * L(m + 1) * L(1);
  return GeneratorWord::commutator(L(m), c);
}

/// Carter assignment s_k -> reflection, for evaluating presentation words.
inline std::vector<MarkedPermutation> carter_assignment(const CarterData& carter) {
  std::vector<MarkedPermutation> out;
  for (const auto& s : carter.generators) out.push_back(s.to_permutation(carter.n));
  return out;
}

}  // namespace carter
