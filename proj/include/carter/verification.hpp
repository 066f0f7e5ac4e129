#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "carter/divisors.hpp"
#include "carter/presentation.hpp"
#include "carter/todd_coxeter.hpp"

namespace carter {

struct CheckReport {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
};

/// Deterministic parallel map: slot i always receives fn(i), whatever the
/// thread count.
template <class Fn>
inline void parallel_indexed(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t width = static_cast<std::size_t>(threads);
  for (std::size_t t = 0; t < width; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < count; k += width) fn(k);
    });
  for (auto& th : pool) th.join();
}

/// Both word variants of every reflection evaluate back to it in the group.
inline CheckReport verify_lifts(int n, int m) {
  auto carter = representative(n, m);
  auto assignment = carter_assignment(carter);
  CheckReport rep{"lifts(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"};
  for (const auto& t : all_reflections(n)) {
    for (bool lifted : {false, true}) {
      auto word = reflection_word(t, carter, lifted);
      auto value = evaluate_word(word, assignment, n);
      rep.expect(value == t.to_permutation(n),
                 t.str() + (lifted ? " lifted" : " plain") + " word evaluates incorrectly");
    }
  }
  return rep;
}

/// Divisibility and product-order facts about the generators that feed the
/// dual braid relations.
inline CheckReport verify_preparation(int n, int m) {
  auto carter = representative(n, m);
  const auto& w = carter.w;
  CheckReport rep{"preparation(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"};
  auto perm = [&](int k) { return carter.s(k).to_permutation(n); };
  auto check_pair = [&](int a, int b, int order, const std::string& label) {
    auto prod = compose(perm(a), perm(b));
    rep.expect(divides(prod, w), label + " does not divide w");
    rep.expect(element_order(prod) == order,
               label + " has order " + std::to_string(element_order(prod)));
  };
  // (1) commuting pairs in the tail s_2..s_n divide w
  for (int a = 2; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      check_pair(a, b, 2, "s" + std::to_string(a) + " s" + std::to_string(b));
  // (2) adjacent pairs divide w with order 3
  for (int a = 2; a <= n - 1; ++a)
    check_pair(a, a + 1, 3, "s" + std::to_string(a) + " s" + std::to_string(a + 1));
  // (3) pairs through s_1: order 3 along the diagram edges, order 2 otherwise
  std::vector<int> edge_partners = m >= 2 ? std::vector<int>{m, m + 2} : std::vector<int>{3};
  for (int b : edge_partners) {
    check_pair(1, b, 3, "s1 s" + std::to_string(b));
    check_pair(b, 1, 3, "s" + std::to_string(b) + " s1");
  }
  for (int b = 2; b <= n; ++b) {
    if (std::find(edge_partners.begin(), edge_partners.end(), b) != edge_partners.end())
      continue;
    check_pair(1, b, 2, "s1 s" + std::to_string(b));
  }
  // (4) t = s_1^{s_m s_{m+1}} = (~(m-1), ~m); t s_{m+2} divides w with order 2
  if (m >= 2) {
    auto t = conjugate(carter.s(1), compose(perm(m), perm(m + 1)));
    rep.expect(t == barred_reflection(m - 1, m), "conjugated s1 is not (~(m-1),~m)");
    auto prod = compose(t.to_permutation(n), perm(m + 2));
    rep.expect(divides(prod, w), "t s_(m+2) does not divide w");
    rep.expect(element_order(prod) == 2, "t s_(m+2) is not an involution");
  }
  return rep;
}

namespace detail {

/// Closed-form reduced decompositions for the type I divisors, spelled out
/// per index regime (s_k runs degenerate to nothing when empty).
inline std::vector<Reflection> type_I_closed_form(int n, int m, const Reflection& t) {
  const int i = t.i, j = t.j;
  std::vector<Reflection> out;
  auto s = [&](int k) { return k == 1 ? barred_reflection(m, m + 1) : plain_reflection(k - 1, k); };
  auto s_run_asc = [&](int from, int to) {
    for (int k = from; k <= to; ++k) out.push_back(s(k));
  };
  if (!t.barred()) {
    if (j < n && i != m) {
      s_run_asc(m + 2, j);
      out.push_back(plain_reflection(i + 1, j));
      s_run_asc(i + 2, m);
      out.push_back(barred_reflection(1, m));
      s_run_asc(2, i);
      out.push_back(plain_reflection(i, j + 1));
      s_run_asc(j + 2, n);
    } else if (j < n && i == m) {
      s_run_asc(m + 2, j);
      out.push_back(barred_reflection(1, j));
      s_run_asc(2, m);
      out.push_back(plain_reflection(m, j + 1));
      s_run_asc(j + 2, n);
    } else if (j == n && i != m) {
      s_run_asc(i + 2, m);
      out.push_back(barred_reflection(1, m));
      s_run_asc(2, i);
      out.push_back(barred_reflection(i, m + 1));
      s_run_asc(m + 2, n);
    } else {  // j == n, i == m
      s_run_asc(2, m);
      out.push_back(s(1));
      s_run_asc(m + 2, n);
    }
  } else {
    if (i != m && j != n) {
      s_run_asc(m + 2, j);
      out.push_back(barred_reflection(i + 1, j));
      s_run_asc(i + 2, m);
      out.push_back(barred_reflection(1, m));
      s_run_asc(2, i);
      out.push_back(barred_reflection(i, j + 1));
      s_run_asc(j + 2, n);
    } else if (i == m && j != n) {
      s_run_asc(m + 2, j);
      out.push_back(plain_reflection(1, j));
      s_run_asc(2, m);
      out.push_back(barred_reflection(m, j + 1));
      s_run_asc(j + 2, n);
    } else if (i != m && j == n) {
      s_run_asc(i + 2, m);
      out.push_back(barred_reflection(1, m));
      s_run_asc(2, i);
      out.push_back(plain_reflection(i, m + 1));
      s_run_asc(m + 2, n);
    } else {  // (~m,~n): the full descending cycle
      s_run_asc(2, n);
    }
  }
  return out;
}

}  // namespace detail

/// The procedure output for every type I divisor coincides factor by factor
/// with its closed form.
inline CheckReport verify_lemma_decompositions(int n, int m) {
  auto carter = representative(n, m);
  CheckReport rep{"lemma-decompositions(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                  ")"};
  for (const auto& divisor : classify_all_divisors(carter)) {
    if (divisor.type != DivisorType::I) continue;
    auto procedure = reduce_divisor(divisor, n);
    auto formula = detail::type_I_closed_form(n, m, divisor.t);
    rep.expect(procedure.factors == formula,
               "closed form mismatch at t = " + divisor.t.str());
    rep.expect(ReflectionTuple(n, formula).product() == divisor.w0,
               "closed form does not multiply to w0 at t = " + divisor.t.str());
  }
  return rep;
}

/// Check every divisor of every class at this rank: length, product, and
/// diagram classification.
inline CheckReport verify_divisors(int n, int threads = 1) {
  CheckReport rep{"divisors(n=" + std::to_string(n) + ")"};
  for (int m = 1; 2 * m <= n; ++m) {
    auto carter = representative(n, m);
    auto cases = classify_all_divisors(carter);
    std::vector<std::string> errors(cases.size());
    parallel_indexed(cases.size(), threads, [&](std::size_t k) {
      const auto& divisor = cases[k];
      std::ostringstream bad;
      auto tuple = reduce_divisor(divisor, n);
      if (static_cast<int>(tuple.factors.size()) != n - 1) bad << "length != n-1; ";
      if (tuple.product() != divisor.w0) bad << "product != w0; ";
      if (reflection_length(divisor.w0) != n - 1) bad << "w0 length != n-1; ";
      auto cls = classify_diagram(decomposition_diagram(tuple));
      if (divisor.type == DivisorType::I) {
        if (cls.name() != "A" + std::to_string(n - 1)) bad << "type I diagram not a string; ";
      } else {
        int p = static_cast<int>(divisor.x.size());
        int q = static_cast<int>(divisor.y.size());
        int r = static_cast<int>(divisor.z.size());
        std::vector<DiagramComponent> expected;
        using Shape = DiagramComponent::Shape;
        if (p >= 2 && q >= 2) {
          expected.push_back({Shape::carter_cycle, p + q});
        } else if (p + q == 2) {
          expected.push_back({Shape::a_string, 1});
          expected.push_back({Shape::a_string, 1});
        } else if (p + q == 3) {
          expected.push_back({Shape::a_string, 3});
        } else {
          expected.push_back({Shape::d_fork, p + q});
        }
        if (r >= 2) expected.push_back({Shape::a_string, r - 1});
        std::sort(expected.begin(), expected.end(),
                  [](const DiagramComponent& a, const DiagramComponent& b) {
                    if (a.size != b.size) return a.size > b.size;
                    return static_cast<int>(a.shape) > static_cast<int>(b.shape);
                  });
        DiagramClass want{expected, p >= 2 && q >= 2};
        if (cls.name() != want.name())
          bad << "diagram " << cls.name() << " != expected " << want.name() << "; ";
        if (want.proper_quasi_coxeter != cls.proper_quasi_coxeter) bad << "proper flag wrong; ";
      }
      if (!bad.str().empty()) errors[k] = divisor.t.str() + ": " + bad.str();
    });
    for (const auto& e : errors) rep.expect(e.empty(), "(m=" + std::to_string(m) + ") " + e);
  }
  return rep;
}

struct LiftTableRow {
  Reflection t;
  GeneratorWord word;  // lifted variant
};

struct DivisorTableRow {
  Reflection t;
  DivisorType type;
  int equation;
  MarkedPermutation w0;
  ReflectionTuple decomposition;
  std::string diagram_class;
  bool proper_quasi_coxeter;
};

struct PaperTables {
  int n = 0;
  int m = 0;
  std::vector<LiftTableRow> lifts;
  std::vector<DivisorTableRow> divisors;
};

/// Reflections in table order: the divisor types I, II, III in blocks,
/// plain before barred inside each block.
inline std::vector<Reflection> table_order_reflections(const CarterData& carter) {
  std::vector<Reflection> out;
  auto push_block = [&](DivisorType type) {
    for (const auto& t : all_reflections(carter.n))
      if (classify_divisor(carter, t).type == type) out.push_back(t);
  };
  push_block(DivisorType::I);
  push_block(DivisorType::II);
  push_block(DivisorType::III);
  return out;
}

/// The lift table and the maximal-divisor table for the proper class of the
/// given rank (m = 2), in the row order used throughout.
inline PaperTables reproduce_tables(int n, int threads = 1) {
  if (n != 4 && n != 5) throw std::invalid_argument("tables are reproduced for n = 4, 5 only");
  const int m = 2;
  auto carter = representative(n, m);
  PaperTables tables{n, m, {}, {}};
  auto order = table_order_reflections(carter);
  for (const auto& t : order) tables.lifts.push_back({t, reflection_word(t, carter, true)});
  std::vector<std::optional<DivisorTableRow>> slots(order.size());
  parallel_indexed(order.size(), threads, [&](std::size_t k) {
    auto divisor = classify_divisor(carter, order[k]);
    auto tuple = reduce_divisor(divisor, n);
    auto cls = classify_diagram(decomposition_diagram(tuple));
    slots[k] = DivisorTableRow{order[k],       divisor.type, divisor.equation, divisor.w0,
                               tuple,          cls.name(),   cls.proper_quasi_coxeter};
  });
  for (auto& slot : slots) tables.divisors.push_back(std::move(*slot));
  return tables;
}

inline std::string render_tables(const PaperTables& tables) {
  std::ostringstream os;
  auto names = detail::s_names(tables.n);
  os << "# reflection lifts (n=" << tables.n << ", m=" << tables.m << ")\n";
  for (std::size_t k = 0; k < tables.lifts.size(); ++k)
    os << k + 1 << ". " << tables.lifts[k].t.str() << " = "
       << word_to_string(tables.lifts[k].word, names) << '\n';
  os << "# maximal divisors (n=" << tables.n << ", m=" << tables.m << ")\n";
  for (std::size_t k = 0; k < tables.divisors.size(); ++k) {
    const auto& row = tables.divisors[k];
    os << k + 1 << ". w" << row.t.str() << " = " << cycle_string(row.w0) << " | "
       << row.decomposition.str() << " | " << row.diagram_class
       << (row.proper_quasi_coxeter ? " | proper" : "") << '\n';
  }
  return os.str();
}

}  // namespace carter
