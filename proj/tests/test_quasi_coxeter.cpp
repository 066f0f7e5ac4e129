#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "carter/hurwitz.hpp"
#include "carter/quasi_coxeter.hpp"

using namespace carter;

namespace {

MarkedPermutation random_element(int n, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  int flips = 0;
  for (int i = 0; i < n; ++i)
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
      img[static_cast<std::size_t>(i)] = -img[static_cast<std::size_t>(i)];
      ++flips;
    }
  if (flips % 2 != 0) img[0] = -img[0];
  return MarkedPermutation(std::move(img));
}

bool has_four_cycle(const Diagram& d) {
  int n = d.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          auto adj = [&](int u, int v) { return d.adjacent(u, v); };
          int edges = adj(a, b) + adj(a, c) + adj(a, e) + adj(b, c) + adj(b, e) + adj(c, e);
          if (edges == 4) {
            // a 4-cycle on {a,b,c,e} means every vertex has两 two neighbors
            int da = adj(a, b) + adj(a, c) + adj(a, e);
            int db = adj(a, b) + adj(b, c) + adj(b, e);
            int dc = adj(a, c) + adj(b, c) + adj(c, e);
            int de = adj(a, e) + adj(b, e) + adj(c, e);
            if (da == 2 && db == 2 && dc == 2 && de == 2) return true;
          }
        }
  return false;
}

}  // namespace

TEST_CASE("class representatives") {
  CHECK(cycle_string(representative(6, 3).w) == "(~1,2,3)(6,5,~4)");
  CHECK(cycle_string(representative(4, 2).w) == "(~1,2)(~3,4)");
  CHECK(cycle_string(representative(6, 1).w) == "(~1)(6,5,4,3,~2)");
  CHECK_THROWS_AS(representative(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(representative(6, 4), std::invalid_argument);

  for (int n = 4; n <= 8; ++n)
    for (int m = 1; 2 * m <= n; ++m) {
      auto data = representative(n, m);
      CHECK(reflection_length(data.w) == n);
      CHECK(carter_product(data) == data.w);  // the generator word multiplies to w
      CHECK(data.s(1) == barred_reflection(m, m + 1));
    }
}

TEST_CASE("diagram shapes") {
  // rank 4, proper class: a bare 4-cycle
  auto d42 = carter_diagram(4, 2);
  CHECK(d42.vertex_count() == 4);
  CHECK(d42.edge_count() == 4);
  CHECK(has_four_cycle(d42));

  // rank 5, proper class: 4-cycle plus one pendant edge
  auto d52 = carter_diagram(5, 2);
  CHECK(d52.vertex_count() == 5);
  CHECK(d52.edge_count() == 5);
  CHECK(has_four_cycle(d52));

  for (int n = 4; n <= 8; ++n) {
    auto tree = carter_diagram(n, 1);
    CHECK(tree.vertex_count() == n);
    CHECK(tree.edge_count() == n - 1);
    CHECK(!has_four_cycle(tree));
    int forks = 0;
    for (int deg : tree.degrees()) {
      CHECK(deg <= 3);
      if (deg == 3) ++forks;
    }
    CHECK(forks == 1);

    for (int m = 2; 2 * m <= n; ++m) {
      auto d = carter_diagram(n, m);
      CHECK(d.vertex_count() == n);
      CHECK(d.edge_count() == n);
      CHECK(has_four_cycle(d));
    }
  }
}

TEST_CASE("full-group generation") {
  CHECK(generates_full_group(representative(4, 2).generators, 4));
  std::vector<Reflection> stuck{plain_reflection(1, 2), barred_reflection(1, 2),
                                plain_reflection(3, 4), barred_reflection(3, 4)};
  CHECK(!generates_full_group(stuck, 4));
  CHECK(reflection_closure(stuck, 4).size() == 16);
  std::vector<Reflection> simples{plain_reflection(1, 2), plain_reflection(2, 3),
                                  plain_reflection(3, 4), barred_reflection(1, 2)};
  CHECK(generates_full_group(simples, 4));
  CHECK(reflection_closure(simples, 4).size() == 192);

  for (int n = 4; n <= 6; ++n)
    for (int m = 1; 2 * m <= n; ++m)
      CHECK(generates_full_group(representative(n, m).generators, n));

  CHECK_THROWS_AS(reflection_closure(all_reflections(8), 8, 1000), CapExceeded);
}

TEST_CASE("quasi-Coxeter recognition") {
  CHECK(is_quasi_coxeter(representative(4, 2).w));
  CHECK(is_quasi_coxeter(representative(4, 1).w));
  CHECK(!is_quasi_coxeter(parse_cycles("(~1)(~2)(~3)(~4)", 4)));
  CHECK(!is_quasi_coxeter(plain_reflection(1, 2).to_permutation(4)));
}

TEST_CASE("signed cycle type") {
  auto type63 = signed_cycle_type(representative(6, 3).w);
  CHECK(type63 == std::vector<std::pair<int, int>>{{3, 1}, {3, 1}});

  std::mt19937_64 rng(4242);
  auto w = representative(5, 2).w;
  auto base = signed_cycle_type(w);
  for (int iter = 0; iter < 1000; ++iter) {
    auto g = random_element(5, rng);
    CHECK(signed_cycle_type(conjugate(w, g)) == base);
  }

  for (int n = 4; n <= 8; ++n) {
    std::set<std::vector<std::pair<int, int>>> types;
    for (int m = 1; 2 * m <= n; ++m) types.insert(signed_cycle_type(representative(n, m).w));
    CHECK(types.size() == static_cast<std::size_t>(n / 2));
  }
}

TEST_CASE("every interval member is parabolic quasi-Coxeter at rank 4") {
  for (int m : {1, 2}) {
    auto poset = interval(representative(4, m).w);
    for (const auto& v : poset.elements()) CHECK(is_hurwitz_transitive(v));
  }
}
