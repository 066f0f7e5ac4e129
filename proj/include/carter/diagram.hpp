#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "carter/reflection.hpp"

namespace carter {

/// A labeled simple graph; vertices carry display labels, edges carry the
/// order of the product of the two reflections (3 is implicit in prints).
struct Diagram {
  std::vector<std::string> labels;
  std::vector<std::array<int, 3>> edges;  // {u, v, order}, u < v, 0-based

  int vertex_count() const { return static_cast<int>(labels.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  bool adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges)
      if (e[0] == u && e[1] == v) return true;
    return false;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(labels.size(), 0);
    for (const auto& e : edges) {
      ++d[static_cast<std::size_t>(e[0])];
      ++d[static_cast<std::size_t>(e[1])];
    }
    return d;
  }
};

/// Diagram of an ordered reflection factorization: one vertex per factor,
/// an edge whenever two factors do not commute.
inline Diagram decomposition_diagram(const ReflectionTuple& tuple) {
  Diagram d;
  for (const auto& t : tuple.factors) d.labels.push_back(t.str());
  int k = static_cast<int>(tuple.factors.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (tuple.factors[static_cast<std::size_t>(a)] ==
          tuple.factors[static_cast<std::size_t>(b)])
        continue;
      int ord = order_of_product(tuple.factors[static_cast<std::size_t>(a)],
                                 tuple.factors[static_cast<std::size_t>(b)], tuple.degree);
      if (ord > 2) d.edges.push_back({a, b, ord});
    }
  return d;
}

/// Structural classification of the diagrams produced by the divisor
/// reduction procedures: disjoint unions of strings, forks, and at most one
/// 4-cycle component.
struct DiagramComponent {
  enum class Shape { a_string, d_fork, carter_cycle } shape;
  int size = 0;

  std::string name() const {
    switch (shape) {
      case Shape::a_string:
        return "A" + std::to_string(size);
      case Shape::d_fork:
        return "D" + std::to_string(size);
      case Shape::carter_cycle:
        return "D" + std::to_string(size) + "*";
    }
    return "?";
  }
};

struct DiagramClass {
  std::vector<DiagramComponent> components;  // sorted: largest first
  bool proper_quasi_coxeter = false;

  std::string name() const {
    std::string out;
    for (const auto& c : components) {
      if (!out.empty()) out += '+';
      out += c.name();
    }
    if (out.empty()) out = "empty";
    return out;
  }
};

namespace detail {

inline std::vector<std::vector<int>> diagram_components(const Diagram& d) {
  int n = d.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : d.edges) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u : adj[static_cast<std::size_t>(v)])
        if (comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = static_cast<int>(out.size());
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace detail

/// Classify a decomposition diagram.  Throws if a component is not a string,
/// a fork of type D, or a single 4-cycle with two opposite tails (which would
/// signal a bug in the reduction procedures).
inline DiagramClass classify_diagram(const Diagram& d) {
  for (const auto& e : d.edges)
    if (e[2] != 3) throw std::logic_error("unexpected edge label in diagram");

  DiagramClass out;
  auto degs = d.degrees();
  for (const auto& members : detail::diagram_components(d)) {
    int v = static_cast<int>(members.size());
    int e = 0;
    for (const auto& edge : d.edges)
      if (std::binary_search(members.begin(), members.end(), edge[0])) ++e;
    DiagramComponent comp;
    comp.size = v;
    int deg3 = 0, deg_over = 0, leaves = 0;
    for (int m : members) {
      int dg = degs[static_cast<std::size_t>(m)];
      if (dg == 3) ++deg3;
      if (dg > 3) ++deg_over;
      if (dg <= 1) ++leaves;
    }
    if (deg_over > 0) throw std::logic_error("diagram vertex of degree > 3");
    if (e == v - 1 && deg3 == 0) {
      comp.shape = DiagramComponent::Shape::a_string;
    } else if (e == v - 1 && deg3 == 1 && v >= 4) {
      comp.shape = DiagramComponent::Shape::d_fork;
    } else if (e == v && v >= 4) {
      // exactly one cycle; find its vertices by stripping leaves, then check
      // it is a 4-cycle with tails on opposite cycle vertices
      std::vector<int> deg_local(degs.size());
      for (int m : members) deg_local[static_cast<std::size_t>(m)] = degs[static_cast<std::size_t>(m)];
      bool changed = true;
      std::vector<char> alive(degs.size(), 0);
      for (int m : members) alive[static_cast<std::size_t>(m)] = 1;
      while (changed) {
        changed = false;
        for (int m : members) {
          if (alive[static_cast<std::size_t>(m)] && deg_local[static_cast<std::size_t>(m)] <= 1) {
            alive[static_cast<std::size_t>(m)] = 0;
            changed = true;
            for (const auto& edge : d.edges) {
              int o = -1;
              if (edge[0] == m) o = edge[1];
              if (edge[1] == m) o = edge[0];
              if (o >= 0 && alive[static_cast<std::size_t>(o)])
                --deg_local[static_cast<std::size_t>(o)];
            }
          }
        }
      }
      int cycle_len = 0;
      std::vector<int> cycle_vertices;
      for (int m : members)
        if (alive[static_cast<std::size_t>(m)]) {
          ++cycle_len;
          cycle_vertices.push_back(m);
        }
      if (cycle_len != 4) throw std::logic_error("diagram cycle is not a 4-cycle");
      // tails attach at cycle vertices of degree 3; they must not be adjacent
      std::vector<int> attach;
      for (int m : cycle_vertices)
        if (degs[static_cast<std::size_t>(m)] == 3) attach.push_back(m);
      if (attach.size() > 2) throw std::logic_error("too many tails on diagram cycle");
      if (attach.size() == 2 && d.adjacent(attach[0], attach[1]))
        throw std::logic_error("diagram tails on adjacent cycle vertices");
      comp.shape = DiagramComponent::Shape::carter_cycle;
      out.proper_quasi_coxeter = true;
    } else {
      throw std::logic_error("unrecognized diagram component shape");
    }
    out.components.push_back(comp);
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const DiagramComponent& a, const DiagramComponent& b) {
              if (a.size != b.size) return a.size > b.size;
              return static_cast<int>(a.shape) > static_cast<int>(b.shape);
            });
  return out;
}

}  // namespace carter
