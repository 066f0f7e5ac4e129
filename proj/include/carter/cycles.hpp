#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "carter/marked_permutation.hpp"

namespace carter {

/// A cycle is a sequence of signed entries; a negative entry i means the
/// coefficient in row |i| is -1 (printed with a leading `~`).
using SignedCycle = std::vector<int>;

inline int cycle_min_abs(const SignedCycle& c) {
  int m = std::abs(c.front());
  for (int v : c) m = std::min(m, std::abs(v));
  return m;
}

inline int cycle_max_abs(const SignedCycle& c) {
  int m = 0;
  for (int v : c) m = std::max(m, std::abs(v));
  return m;
}

inline int cycle_mark_count(const SignedCycle& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](int v) { return v < 0; }));
}

inline SignedCycle rotate_cycle_to(const SignedCycle& c, int start_abs) {
  auto it = std::find_if(c.begin(), c.end(),
                         [&](int v) { return std::abs(v) == start_abs; });
  SignedCycle out(it, c.end());
  out.insert(out.end(), c.begin(), it);
  return out;
}

/// All cycles of w, fixed points included.  Each cycle is rotated to start at
/// the rank n when it has length >= 3 and moves n, otherwise at its minimal
/// entry; the list is sorted by minimal entry.
inline std::vector<SignedCycle> cycles_of(const MarkedPermutation& w) {
  int n = w.degree();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<SignedCycle> cycles;
  for (int i = 1; i <= n; ++i) {
    if (visited[static_cast<std::size_t>(i - 1)]) continue;
    SignedCycle c;
    int j = i;
    do {
      visited[static_cast<std::size_t>(j - 1)] = 1;
      int v = w.map(j);
      c.push_back(v < 0 ? -j : j);
      j = std::abs(v);
    } while (j != i);
    if (c.size() >= 3 && cycle_max_abs(c) == n) {
      c = rotate_cycle_to(c, n);
    } else {
      c = rotate_cycle_to(c, cycle_min_abs(c));
    }
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const SignedCycle& a, const SignedCycle& b) {
              return cycle_min_abs(a) < cycle_min_abs(b);
            });
  return cycles;
}

/// Rebuild an element from disjoint cycles.  Unlisted indices are unmarked
/// fixed points.
inline MarkedPermutation from_cycles(const std::vector<SignedCycle>& cycles, int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree), 0);
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& c : cycles) {
    if (c.empty()) continue;
    for (std::size_t k = 0; k < c.size(); ++k) {
      int cur = c[k];
      int row = std::abs(cur);
      if (row < 1 || row > degree) throw std::invalid_argument("cycle entry out of range");
      if (used[static_cast<std::size_t>(row - 1)]++)
        throw std::invalid_argument("repeated index across cycles");
      int next = std::abs(c[(k + 1) % c.size()]);
      img[static_cast<std::size_t>(row - 1)] = cur < 0 ? -next : next;
    }
  }
  return MarkedPermutation(std::move(img));  // parity check happens here
}

inline std::string cycle_to_string(const SignedCycle& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ',';
    if (c[k] < 0) out += '~';
    out += std::to_string(std::abs(c[k]));
  }
  out += ')';
  return out;
}

/// Canonical text form: cycles sorted by minimal entry, a long cycle moving n
/// starts at n, unmarked fixed points suppressed.  The identity prints "()".
inline std::string cycle_string(const MarkedPermutation& w) {
  std::string out;
  for (const auto& c : cycles_of(w)) {
    if (c.size() == 1 && c.front() > 0) continue;
    out += cycle_to_string(c);
  }
  if (out.empty()) out = "()";
  return out;
}

/// Parse the cycle syntax, e.g. "(2,~1)(5,4,~3)".  Any cycle rotation and
/// order is accepted; "()" is the identity.
inline MarkedPermutation parse_cycles(std::string_view text, int degree) {
  std::vector<SignedCycle> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle string");
    ++pos;
    SignedCycle c;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      bool marked = false;
      if (text[pos] == '~') {
        marked = true;
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected index in cycle string");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      c.push_back(marked ? -v : v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;  // ')'
    if (!c.empty()) cycles.push_back(std::move(c));
    skip_ws();
  }
  return from_cycles(cycles, degree);
}

}  // namespace carter
