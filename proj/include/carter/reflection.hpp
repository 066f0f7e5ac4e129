#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "carter/cycles.hpp"
#include "carter/marked_permutation.hpp"

namespace carter {

enum class ReflectionKind { plain, barred };

/// A reflection: the transposition (i,j), or (~i,~j) which additionally
/// negates rows i and j.  Always normalized so i < j.
struct Reflection {
  ReflectionKind kind;
  int i;
  int j;

  Reflection(ReflectionKind k, int a, int b) : kind(k), i(a), j(b) {
    if (a == b) throw std::invalid_argument("reflection needs two distinct indices");
    if (i > j) std::swap(i, j);
    if (i < 1) throw std::invalid_argument("reflection index out of range");
  }

  bool barred() const { return kind == ReflectionKind::barred; }

  MarkedPermutation to_permutation(int degree) const {
    if (j > degree) throw std::invalid_argument("reflection exceeds degree");
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int k = 1; k <= degree; ++k) img[static_cast<std::size_t>(k - 1)] = k;
    int s = barred() ? -1 : 1;
    img[static_cast<std::size_t>(i - 1)] = s * j;
    img[static_cast<std::size_t>(j - 1)] = s * i;
    return MarkedPermutation(std::move(img));
  }

  std::string str() const {
    std::string out = "(";
    if (barred()) out += '~';
    out += std::to_string(i);
    out += ',';
    if (barred()) out += '~';
    out += std::to_string(j);
    out += ')';
    return out;
  }

  friend bool operator==(const Reflection&, const Reflection&) = default;
  friend std::strong_ordering operator<=>(const Reflection& a, const Reflection& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.i <=> b.i; c != 0) return c;
    return a.j <=> b.j;
  }
};

inline Reflection plain_reflection(int i, int j) {
  return Reflection(ReflectionKind::plain, i, j);
}
inline Reflection barred_reflection(int i, int j) {
  return Reflection(ReflectionKind::barred, i, j);
}

/// All n(n-1) reflections of rank n: plain pairs in lex order, then barred.
inline std::vector<Reflection> all_reflections(int n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<Reflection> out;
  out.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1));
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        out.emplace_back(kind ? ReflectionKind::barred : ReflectionKind::plain, i, j);
  return out;
}

inline std::optional<Reflection> as_reflection(const MarkedPermutation& w) {
  int n = w.degree();
  int a = 0, b = 0;
  for (int k = 1; k <= n; ++k) {
    if (w.map(k) == k) continue;
    if (a == 0)
      a = k;
    else if (b == 0)
      b = k;
    else
      return std::nullopt;
  }
  if (a == 0 || b == 0) return std::nullopt;
  if (w.map(a) == b && w.map(b) == a) return plain_reflection(a, b);
  if (w.map(a) == -b && w.map(b) == -a) return barred_reflection(a, b);
  return std::nullopt;
}

/// Conjugate t^g = g^-1 t g; the set of reflections is closed under this.
inline Reflection conjugate(const Reflection& t, const MarkedPermutation& g) {
  auto r = as_reflection(carter::conjugate(t.to_permutation(g.degree()), g));
  if (!r) throw std::logic_error("conjugate of a reflection is not a reflection");
  return *r;
}

inline int order_of_product(const Reflection& t, const Reflection& u, int degree = 0) {
  if (degree == 0) degree = std::max(t.j, u.j);
  return element_order(compose(t.to_permutation(degree), u.to_permutation(degree)));
}

/// An ordered factorization into reflections.
struct ReflectionTuple {
  int degree;
  std::vector<Reflection> factors;

  ReflectionTuple(int deg, std::vector<Reflection> f) : degree(deg), factors(std::move(f)) {
    for (const auto& t : factors)
      if (t.j > degree) throw std::invalid_argument("factor exceeds tuple degree");
  }

  MarkedPermutation product() const {
    MarkedPermutation p = MarkedPermutation::identity(degree);
    for (const auto& t : factors) p = compose(p, t.to_permutation(degree));
    return p;
  }

  std::string str() const {
    std::string out;
    for (const auto& t : factors) out += t.str();
    if (out.empty()) out = "()";
    return out;
  }

  friend bool operator==(const ReflectionTuple&, const ReflectionTuple&) = default;
};

/// Parse a factor sequence like "(2,3)(~1,~2)(1,4)"; "()" is the empty tuple.
inline ReflectionTuple parse_reflection_tuple(std::string_view text, int degree) {
  std::vector<Reflection> factors;
  if (text == "()") return ReflectionTuple(degree, std::move(factors));
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto close = text.find(')', pos);
    if (text[pos] != '(' || close == std::string_view::npos)
      throw std::invalid_argument("malformed reflection tuple");
    auto piece = text.substr(pos, close - pos + 1);
    auto perm = parse_cycles(piece, degree);
    auto r = as_reflection(perm);
    if (!r) throw std::invalid_argument("tuple factor is not a reflection");
    factors.push_back(*r);
    pos = close + 1;
  }
  return ReflectionTuple(degree, std::move(factors));
}

}  // namespace carter
