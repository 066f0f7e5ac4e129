#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "carter/hurwitz.hpp"

using namespace carter;

namespace {

ReflectionTuple tuple_of(int degree, std::initializer_list<Reflection> rs) {
  return ReflectionTuple(degree, std::vector<Reflection>(rs));
}

/// Orbit computed with a shuffled move schedule; must equal the BFS orbit.
std::set<std::vector<Reflection>> randomized_orbit(const ReflectionTuple& start,
                                                   std::mt19937_64& rng) {
  std::set<std::vector<Reflection>> seen{start.factors};
  std::vector<ReflectionTuple> stack{start};
  int len = static_cast<int>(start.factors.size());
  std::vector<std::pair<int, HurwitzDirection>> moves;
  for (int i = 1; i < len; ++i) {
    moves.emplace_back(i, HurwitzDirection::forward);
    moves.emplace_back(i, HurwitzDirection::inverse);
  }
  while (!stack.empty()) {
    auto idx = std::uniform_int_distribution<std::size_t>(0, stack.size() - 1)(rng);
    std::swap(stack[idx], stack.back());
    auto t = stack.back();
    stack.pop_back();
    std::shuffle(moves.begin(), moves.end(), rng);
    for (auto [pos, dir] : moves) {
      auto moved = hurwitz_move(t, pos, dir);
      if (seen.insert(moved.factors).second) stack.push_back(moved);
    }
  }
  return seen;
}

/// All parabolic subgroups of the rank-4 group as element sets, with ranks:
/// conjugates of subgroups generated by subsets of the simple reflections.
std::map<std::set<MarkedPermutation>, int> parabolic_family_rank4() {
  const int n = 4;
  std::vector<Reflection> simples{plain_reflection(1, 2), plain_reflection(2, 3),
                                  plain_reflection(3, 4), barred_reflection(1, 2)};
  auto group = reflection_closure(all_reflections(n), n);
  std::map<std::set<MarkedPermutation>, int> family;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<MarkedPermutation> gens;
    for (int b = 0; b < 4; ++b)
      if (mask & (1u << b)) gens.push_back(simples[static_cast<std::size_t>(b)].to_permutation(n));
    int rank = static_cast<int>(gens.size());
    std::vector<MarkedPermutation> base =
        gens.empty() ? std::vector<MarkedPermutation>{MarkedPermutation::identity(n)}
                     : subgroup_closure(gens);
    for (const auto& g : group) {
      std::set<MarkedPermutation> conj;
      for (const auto& h : base) conj.insert(conjugate(h, g));
      auto [it, inserted] = family.emplace(std::move(conj), rank);
      if (!inserted && it->second != rank) throw std::logic_error("parabolic rank is ambiguous");
    }
  }
  return family;
}

bool parabolic_quasi_coxeter_oracle(
    const MarkedPermutation& w, const std::map<std::set<MarkedPermutation>, int>& family) {
  int len = reflection_length(w);
  if (len == 0) return true;  // the trivial parabolic
  for (const auto& factors : all_reduced_decompositions(w)) {
    auto closure = reflection_closure(factors, w.degree());
    std::set<MarkedPermutation> key(closure.begin(), closure.end());
    auto it = family.find(key);
    if (it != family.end() && it->second == len) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("single moves") {
  auto t = tuple_of(4, {plain_reflection(1, 2), plain_reflection(2, 3)});
  auto moved = hurwitz_move(t, 1, HurwitzDirection::forward);
  CHECK(moved == tuple_of(4, {plain_reflection(1, 3), plain_reflection(1, 2)}));
  CHECK(hurwitz_move(moved, 1, HurwitzDirection::inverse) == t);
  CHECK(moved.product() == t.product());
  CHECK_THROWS_AS(hurwitz_move(t, 2, HurwitzDirection::forward), std::invalid_argument);

  std::mt19937_64 rng(7);
  auto ts = all_reflections(5);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<Reflection> factors;
    for (int k = 0; k < 4; ++k)
      factors.push_back(ts[std::uniform_int_distribution<std::size_t>(0, ts.size() - 1)(rng)]);
    ReflectionTuple tup(5, factors);
    int pos = std::uniform_int_distribution<int>(1, 3)(rng);
    for (auto dir : {HurwitzDirection::forward, HurwitzDirection::inverse}) {
      auto m = hurwitz_move(tup, pos, dir);
      CHECK(m.factors.size() == tup.factors.size());
      CHECK(m.product() == tup.product());
      CHECK(hurwitz_move(m, pos,
                         dir == HurwitzDirection::forward ? HurwitzDirection::inverse
                                                          : HurwitzDirection::forward) == tup);
    }
  }
}

TEST_CASE("small orbits") {
  CHECK(hurwitz_orbit(tuple_of(4, {barred_reflection(2, 3)})).size() == 1);
  CHECK(hurwitz_orbit(tuple_of(4, {plain_reflection(1, 2), plain_reflection(3, 4)})).size() == 2);
  CHECK_THROWS_AS(hurwitz_orbit(tuple_of(4, {plain_reflection(1, 2), plain_reflection(2, 3)}), 2),
                  CapExceeded);
}

TEST_CASE("orbit equals the decomposition set for the rank-4 proper class") {
  auto w = representative(4, 2).w;
  auto all = all_reduced_decompositions(w);

  // literal full scan over the 12^4 tuples as an independent oracle
  auto ts = all_reflections(4);
  std::set<std::vector<Reflection>> scan;
  for (const auto& a : ts)
    for (const auto& b : ts)
      for (const auto& c : ts)
        for (const auto& d : ts) {
          ReflectionTuple tup(4, {a, b, c, d});
          if (tup.product() == w) scan.insert(tup.factors);
        }
  CHECK(scan == all);

  auto orbit = hurwitz_orbit(ReflectionTuple(4, *all.begin()));
  CHECK(orbit == all);
  CHECK(is_hurwitz_transitive(w));
}

TEST_CASE("orbit is independent of traversal order") {
  std::mt19937_64 rng(2024);
  auto w = representative(4, 2).w;
  auto all = all_reduced_decompositions(w);
  ReflectionTuple start(4, *all.begin());
  auto reference = hurwitz_orbit(start);
  for (int run = 0; run < 3; ++run) CHECK(randomized_orbit(start, rng) == reference);
}

TEST_CASE("minus identity is not transitive") {
  auto minus_id = parse_cycles("(~1)(~2)(~3)(~4)", 4);
  CHECK(reflection_length(minus_id) == 4);
  CHECK(!is_hurwitz_transitive(minus_id));
  // all of its decompositions generate the same order-16 subgroup
  for (const auto& factors : all_reduced_decompositions(minus_id))
    CHECK(reflection_closure(factors, 4).size() == 16);
}

TEST_CASE("a parabolic quasi-Coxeter element is transitive") {
  auto v = parse_cycles("(1,2)(3,4)", 4);
  CHECK(reflection_length(v) == 2);
  CHECK(is_hurwitz_transitive(v));
}

TEST_CASE("reduced decompositions") {
  auto t = barred_reflection(1, 4);
  auto one = all_reduced_decompositions(t.to_permutation(5));
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->front() == t);
  auto w = representative(4, 2).w;
  for (const auto& factors : all_reduced_decompositions(w))
    CHECK(ReflectionTuple(4, factors).product() == w);
}

TEST_CASE("transitivity matches the parabolic oracle on the whole rank-4 group") {
  auto family = parabolic_family_rank4();
  for (const auto& w : reflection_closure(all_reflections(4), 4)) {
    bool transitive = is_hurwitz_transitive(w);
    bool parabolic_qc = parabolic_quasi_coxeter_oracle(w, family);
    if (transitive != parabolic_qc)
      FAIL("mismatch at " << cycle_string(w) << ": transitive=" << transitive);
  }
  SUCCEED();
}

TEST_CASE("parabolic closures") {
  auto t = plain_reflection(2, 4);
  auto p = parabolic_closure(t.to_permutation(4));
  CHECK(p.size() == 2);

  for (int m : {1, 2}) {
    auto w = representative(4, m).w;
    CHECK(parabolic_closure(w).size() == type_d_order(4));
  }

  // the subgroup generated by {(1,3),(~1,~3),(3,4),(4,5)} inside rank 5
  std::vector<Reflection> gens{plain_reflection(1, 3), barred_reflection(1, 3),
                               plain_reflection(3, 4), plain_reflection(4, 5)};
  CHECK(reflection_closure(gens, 5).size() == 192);
}

TEST_CASE("parabolic closure is constant along Hurwitz orbits at rank 4") {
  for (const auto& w : reflection_closure(all_reflections(4), 4)) {
    auto all = all_reduced_decompositions(w);
    if (all.empty()) continue;
    if (!is_hurwitz_transitive(w)) continue;  // closure is defined per orbit
    auto reference = reflection_closure(*all.begin(), 4);
    for (const auto& factors : all) {
      if (reflection_closure(factors, 4) != reference) {
        FAIL("closure varies along the orbit of " << cycle_string(w));
      }
    }
  }
  SUCCEED();
}
