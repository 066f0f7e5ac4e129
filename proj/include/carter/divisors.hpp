#pragma once

#include <string>
#include <vector>

#include "carter/diagram.hpp"
#include "carter/quasi_coxeter.hpp"

namespace carter {

enum class DivisorType { I, II, III };

inline std::string divisor_type_name(DivisorType t) {
  switch (t) {
    case DivisorType::I: return "I";
    case DivisorType::II: return "II";
    case DivisorType::III: return "III";
  }
  return "?";
}

/// One maximal divisor w0 = w t of the class representative w, together with
/// its closed-form cycle data.  For types II and III the three cycles are
/// x (ends in the sign-marked entry ~u, holds the rank n when possible),
/// y (ends in ~v), and z (evenly marked).
struct DivisorCase {
  DivisorType type;
  int equation;  // 1..11
  Reflection t;
  int i, j;
  MarkedPermutation w0;
  SignedCycle cycle;    // type I: the single n-cycle, rotated to start at n
  SignedCycle x, y, z;  // types II/III
};

namespace detail {

inline void append_desc(SignedCycle& out, int from, int to, bool mark_last = false) {
  if (from < to) return;
  for (int v = from; v >= to; --v) out.push_back(v);
  if (mark_last) out.back() = -out.back();
}

inline void append_asc(SignedCycle& out, int from, int to, bool mark_last = false) {
  if (from > to) return;
  for (int v = from; v <= to; ++v) out.push_back(v);
  if (mark_last) out.back() = -out.back();
}

inline SignedCycle rotate_mark_last(const SignedCycle& c) {
  auto it = std::find_if(c.begin(), c.end(), [](int v) { return v < 0; });
  if (it == c.end() || c.back() < 0) return c;
  SignedCycle out(it + 1, c.end());
  out.insert(out.end(), c.begin(), it + 1);
  return out;
}

}  // namespace detail

/// Closed forms for the n(n-1) products w t, one equation per index regime.
inline DivisorCase classify_divisor(const CarterData& carter, const Reflection& t) {
  using detail::append_desc;
  const int n = carter.n, m = carter.m, i = t.i, j = t.j;
  if (t.j > n) throw std::invalid_argument("reflection exceeds rank");

  DivisorCase out{DivisorType::I, 0, t, i, j, MarkedPermutation::identity(n), {}, {}, {}, {}};
  SignedCycle a, b, c;

  if (!t.barred()) {
    if (i <= m && j >= m + 1) {
      out.type = DivisorType::I;
      out.equation = 1;
      append_desc(a, n, j + 1);
      append_desc(a, i, 1, true);
      append_desc(a, m, i + 1);
      append_desc(a, j, m + 1, true);
    } else if (j <= m) {
      out.type = DivisorType::II;
      out.equation = 6;
      append_desc(a, m, j + 1);
      append_desc(a, i, 1, true);
      b.push_back(i + 1);
      append_desc(b, j, i + 2);
      append_desc(c, n, m + 1, true);
    } else {
      out.type = DivisorType::III;
      out.equation = 9;
      append_desc(a, m, 1, true);
      append_desc(b, n, j + 1);
      append_desc(b, i, m + 1, true);
      append_desc(c, j, i + 1);
    }
  } else {
    if (i <= m && j >= m + 1) {
      out.type = DivisorType::I;
      if (i != m && j != n) {
        out.equation = 2;
        append_desc(a, n, j + 1, true);
        append_desc(a, i, 1, true);
        append_desc(a, m, i + 1, true);
        append_desc(a, j, m + 1, true);
      } else if (i == m && j != n) {
        out.equation = 3;
        append_desc(a, n, j + 1, true);
        append_desc(a, m, 1);
        append_desc(a, j, m + 1, true);
      } else if (i != m && j == n) {
        out.equation = 4;
        append_desc(a, n, m + 1);
        append_desc(a, i, 1, true);
        append_desc(a, m, i + 1, true);
      } else {
        out.equation = 5;
        append_desc(a, n, 1);
      }
    } else if (j <= m) {
      out.type = DivisorType::II;
      if (j != m) {
        out.equation = 7;
        append_desc(a, m, j + 1, true);
        append_desc(a, i, 1, true);
        b.push_back(-(i + 1));
        append_desc(b, j, i + 2);
        append_desc(c, n, m + 1, true);
      } else {
        out.equation = 8;
        append_desc(a, i, 1);
        b.push_back(-(i + 1));
        append_desc(b, m, i + 2);
        append_desc(c, n, m + 1, true);
      }
    } else {
      out.type = DivisorType::III;
      if (j != n) {
        out.equation = 10;
        append_desc(a, m, 1, true);
        append_desc(b, n, j + 1, true);
        append_desc(b, i, m + 1, true);
        append_desc(c, j, i + 1, true);
      } else {
        out.equation = 11;
        append_desc(a, m, 1, true);
        append_desc(b, i, m + 1);
        append_desc(c, n, i + 1, true);
      }
    }
  }

  std::vector<SignedCycle> cycles;
  if (out.type == DivisorType::I) {
    out.cycle = rotate_cycle_to(a, n);
    cycles = {out.cycle};
  } else {
    cycles = {a, b, c};
    // role assignment: z is the evenly marked cycle; of the other two, x is
    // the one holding n (else the one with the larger support), y the other
    int zi = -1;
    for (int k = 0; k < 3; ++k)
      if (cycle_mark_count(cycles[static_cast<std::size_t>(k)]) % 2 == 0) zi = k;
    if (zi < 0) throw std::logic_error("no evenly marked cycle in type II/III case");
    std::vector<SignedCycle> odd;
    for (int k = 0; k < 3; ++k)
      if (k != zi) odd.push_back(cycles[static_cast<std::size_t>(k)]);
    bool first_is_x = cycle_max_abs(odd[0]) == n ||
                      (cycle_max_abs(odd[1]) != n &&
                       cycle_max_abs(odd[0]) > cycle_max_abs(odd[1]));
    out.z = cycles[static_cast<std::size_t>(zi)];
    out.x = detail::rotate_mark_last(first_is_x ? odd[0] : odd[1]);
    out.y = detail::rotate_mark_last(first_is_x ? odd[1] : odd[0]);
  }

  out.w0 = from_cycles(cycles, n);
  auto direct = compose(carter.w, t.to_permutation(n));
  if (out.w0 != direct)
    throw std::logic_error("closed form disagrees with direct product for " + t.str());
  return out;
}

inline std::vector<DivisorCase> classify_all_divisors(const CarterData& carter) {
  std::vector<DivisorCase> out;
  for (const auto& t : all_reflections(carter.n)) out.push_back(classify_divisor(carter, t));
  return out;
}

namespace detail {

/// Peeling pass: multiply the cycle to fixed points from the front; at a
/// sign-marked entry the matching barred reflection is used and the final
/// entry's mark toggles.  Returns the reflections in application order.
inline std::vector<Reflection> peel_cycle(SignedCycle work) {
  std::vector<Reflection> used;
  if (work.size() < 2) return used;
  for (std::size_t k = 0; k + 1 < work.size(); ++k) {
    int p = std::abs(work[k]);
    int q = std::abs(work[k + 1]);
    bool marked = work[k] < 0;
    used.push_back(marked ? barred_reflection(std::min(p, q), std::max(p, q))
                          : plain_reflection(std::min(p, q), std::max(p, q)));
    if (marked) work.back() = -work.back();
  }
  return used;
}

}  // namespace detail

/// Reduced decomposition of a single evenly marked cycle: the peeling
/// reflections in reverse order.
inline ReflectionTuple reduce_type_I(const SignedCycle& cycle, int degree) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle");
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  for (int v : cycle) {
    int a = std::abs(v);
    if (a < 1 || a > degree) throw std::invalid_argument("cycle entry out of range");
    if (seen[static_cast<std::size_t>(a - 1)]++) throw std::invalid_argument("repeated cycle entry");
  }
  if (cycle_mark_count(cycle) % 2 != 0)
    throw std::invalid_argument("cycle has an odd number of marks");
  auto used = detail::peel_cycle(cycle);
  std::reverse(used.begin(), used.end());
  return ReflectionTuple(degree, std::move(used));
}

/// Reduced decomposition for types II and III: peel z, then x, then y, and
/// prepend (u,v)(~u,~v) built from the leftover marked fixed points.
inline ReflectionTuple reduce_type_II_III(const DivisorCase& divisor, int degree) {
  if (divisor.type == DivisorType::I)
    throw std::invalid_argument("type I case passed to the type II/III procedure");
  std::vector<Reflection> used;
  for (const SignedCycle* c : {&divisor.z, &divisor.x, &divisor.y}) {
    auto part = detail::peel_cycle(*c);
    used.insert(used.end(), part.begin(), part.end());
  }
  int u = std::abs(divisor.x.back());
  int v = std::abs(divisor.y.back());
  if (u > v) std::swap(u, v);
  std::vector<Reflection> factors{plain_reflection(u, v), barred_reflection(u, v)};
  factors.insert(factors.end(), used.rbegin(), used.rend());
  return ReflectionTuple(degree, std::move(factors));
}

inline ReflectionTuple reduce_divisor(const DivisorCase& divisor, int degree) {
  return divisor.type == DivisorType::I ? reduce_type_I(divisor.cycle, degree)
                                        : reduce_type_II_III(divisor, degree);
}

}  // namespace carter
