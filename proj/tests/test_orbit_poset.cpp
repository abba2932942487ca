#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "matsuki/catalog.hpp"
#include "matsuki/orbit_poset.hpp"

using namespace matsuki;

namespace {

std::vector<Coweight> lambdas(const std::vector<OrbitIndex>& xs) {
  std::vector<Coweight> out;
  for (const auto& x : xs) out.push_back(x.lambda);
  return out;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PreconditionError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("enumerate orbits") {
  const auto& pgl2 = catalog("pgl2_so21").spec;
  // Heights in omega units: <2 rho, k omega> = k.
  CHECK(lambdas(enumerate_orbits(pgl2, 4)) == std::vector<Coweight>{Coweight{0}, Coweight{2}, Coweight{4}});
  CHECK(enumerate_orbits(pgl2, 8).size() == 5);
  CHECK(enumerate_orbits(pgl2, 20).size() == 11);
  CHECK(enumerate_orbits(catalog("sl2_compact").spec, 100).size() == 1);
  CHECK(lambdas(enumerate_orbits(catalog("sl2_split").spec, 4)) ==
        std::vector<Coweight>{Coweight{0}, Coweight{1}, Coweight{2}});
  for (const auto& e : catalog_entries()) {
    const auto xs = enumerate_orbits(e.spec, 6);
    CHECK(std::is_sorted(xs.begin(), xs.end()));
    CHECK(std::find(xs.begin(), xs.end(), OrbitIndex{Coweight::zero(e.spec.datum().rank())}) != xs.end());
  }
}

TEST_CASE("orbit index validation names the failing condition") {
  const auto& pgl2 = catalog("pgl2_so21").spec;
  CHECK(make_orbit_index(pgl2, Coweight{2}).lambda == Coweight{2});
  CHECK(message_of([&] { make_orbit_index(pgl2, Coweight{-2}); }).find("not dominant") != std::string::npos);
  CHECK(message_of([&] { make_orbit_index(pgl2, Coweight{1}); }).find("image") != std::string::npos);
  CHECK(message_of([&] { make_orbit_index(catalog("sl2C_as_real").spec, Coweight{1, 0}); }).find("theta-fixed") !=
        std::string::npos);
  CHECK_THROWS_AS(make_orbit_index(pgl2, Coweight{1, 1}), PreconditionError);
}

TEST_CASE("K and R orders") {
  const auto& pgl2 = catalog("pgl2_so21").spec;
  const OrbitIndex zero{Coweight{0}}, two{Coweight{2}};
  CHECK(k_leq(pgl2, zero, two));
  CHECK_FALSE(k_leq(pgl2, two, zero));
  CHECK(r_leq(pgl2, two, zero));
  CHECK(k_leq(pgl2, two, two));
  CHECK(r_leq(pgl2, two, two));
  CHECK_FALSE(r_leq(catalog("sl2_split").spec, zero, OrbitIndex{Coweight{1}}));
  CHECK_FALSE(k_leq(catalog("sl3_split").spec, OrbitIndex{Coweight{1, 1}}, OrbitIndex{Coweight{1, 0}}));

  for (const auto& e : catalog_entries()) {
    const auto xs = enumerate_orbits(e.spec, 10);
    for (const auto& a : xs)
      for (const auto& b : xs) CHECK(r_leq(e.spec, a, b) == k_leq(e.spec, b, a));
  }
}

TEST_CASE("dual pairs and cores") {
  const auto& pgl2 = catalog("pgl2_so21").spec;
  const auto pair = matsuki_dual(pgl2, OrbitIndex{Coweight{2}});
  CHECK(pair.k_orbit.lambda == Coweight{2});
  CHECK(pair.r_orbit.lambda == Coweight{2});
  CHECK(pair.core.flag_dimension == 1);
  CHECK(pair.core.parabolic_simple_roots.empty());

  const auto zero = matsuki_dual(catalog("sl2_split").spec, OrbitIndex{Coweight{0}});
  CHECK(zero.r_orbit.lambda == Coweight{0});
  CHECK(zero.core.flag_dimension == 0);
  CHECK(zero.core.parabolic_simple_roots == std::vector<std::size_t>{0});

  CHECK(core_data(catalog("sl3_split").spec, OrbitIndex{Coweight{1, 1}}).flag_dimension == 3);
  CHECK(core_data(catalog("sl3_split").spec, OrbitIndex{Coweight{1, 1}}).parabolic_simple_roots.empty());
  CHECK(core_data(catalog("sl2_split").spec, OrbitIndex{Coweight{1}}).flag_dimension == 1);
  // gl_3, lambda = (1,1,0): P has Levi GL2 x GL1; G/P = P^2.
  const auto p2 = core_data(*gl_datum(3), Coweight{1, 1, 0});
  CHECK(p2.parabolic_simple_roots == std::vector<std::size_t>{0});
  CHECK(p2.flag_dimension == 2);

  // flag_dimension == 0 exactly when lambda pairs to zero with every root.
  for (const auto& e : catalog_entries())
    for (const auto& x : enumerate_orbits(e.spec, 8)) {
      const auto core = core_data(e.spec, x);
      const auto& d = e.spec.datum();
      const bool central = std::all_of(d.roots().begin(), d.roots().end(),
                                       [&](const IntVector& a) { return dot(a, x.lambda.coords()) == 0; });
      CHECK((core.flag_dimension == 0) == central);
    }
}

TEST_CASE("real step order") {
  CHECK(real_step_leq(catalog("pgl2_so21").spec, Coweight{0}, Coweight{2}));
  CHECK(real_step_leq(catalog("pgl2_so21").spec, Coweight{4}, Coweight{4}));
  CHECK(real_step_leq(catalog("sl2C_as_real").spec, Coweight{0, 0}, Coweight{1, 1}));
  CHECK_FALSE(real_step_leq(catalog("sl2C_as_real").spec, Coweight{1, 1}, Coweight{0, 0}));

  // Equivalent to dominance on Lambda^+_S.
  for (const auto& e : catalog_entries()) {
    const auto xs = enumerate_real_dominant(e.spec, 12);
    RestrictedStepSemigroup steps(e.spec, 12);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        const bool dom = dominance_leq(e.spec.datum(), a, b);
        CHECK_MESSAGE(real_step_leq(e.spec, a, b) == dom, e.name << " " << a.to_string() << " " << b.to_string());
        CHECK(steps.contains(b - a) == dom);
      }
  }
}

TEST_CASE("step semigroup beyond its generated range") {
  const auto& sl3 = catalog("sl3_split").spec;
  RestrictedStepSemigroup small(sl3, 2);
  CHECK(small.contains(Coweight{7, 9}));
  CHECK_FALSE(small.contains(Coweight{-1, 3}));
  CHECK(small.contains(Coweight{0, 0}));
}

TEST_CASE("Hasse edges of a single element and of a chain") {
  const auto& pgl2 = catalog("pgl2_so21").spec;
  CHECK(primitive_relations(pgl2, {OrbitIndex{Coweight{0}}}).empty());
  const auto xs = enumerate_orbits(pgl2, 4);
  using E = std::pair<std::size_t, std::size_t>;
  CHECK(primitive_relations(pgl2, xs) == std::vector<E>{{0, 1}, {1, 2}});

  const auto slice = build_poset_slice(pgl2, 0);
  CHECK(slice.elements.size() == 1);
  CHECK(slice.hasse_edges.empty());
}

TEST_CASE("sl3 Hasse edges match a brute-force interval oracle") {
  const auto& sl3 = catalog("sl3_split").spec;
  for (Int h : {6, 10}) {
    const auto xs = enumerate_orbits(sl3, h);
    // Simple-coroot coordinates: dominance is the componentwise order.
    auto less = [&](std::size_t i, std::size_t j) {
      const auto& a = xs[i].lambda;
      const auto& b = xs[j].lambda;
      return a != b && a[0] <= b[0] && a[1] <= b[1];
    };
    // Every element strictly between a and b has smaller height than b, so
    // the slice already contains all candidates.
    std::vector<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (!less(i, j)) continue;
        bool covered = true;
        for (std::size_t k = 0; k < xs.size(); ++k)
          if (less(i, k) && less(k, j)) covered = false;
        if (covered) expected.emplace_back(i, j);
      }
    std::sort(expected.begin(), expected.end());
    CHECK(primitive_relations(sl3, xs) == expected);
  }
}

TEST_CASE("primitivity looks outside the slice") {
  // For gl_2 split the slice is cut by the central bound too; an interval
  // may contain image elements the slice dropped. Edges must agree with a
  // search over a larger slice.
  const auto& gl2 = catalog("gl2_split").spec;
  const auto small = enumerate_orbits(gl2, 6);
  const auto large = enumerate_orbits(gl2, 30);
  const auto small_edges = primitive_relations(gl2, small);
  const auto large_edges = primitive_relations(gl2, large);
  std::set<std::pair<Coweight, Coweight>> large_set;
  for (auto [a, b] : large_edges) large_set.insert({large[a].lambda, large[b].lambda});
  for (auto [a, b] : small_edges) CHECK(large_set.count({small[a].lambda, small[b].lambda}));
}

TEST_CASE("transitive closure of the Hasse edges is the order") {
  for (const auto& e : catalog_entries()) {
    const auto slice = build_poset_slice(e.spec, 10);
    const std::size_t n = slice.elements.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (auto [a, b] : slice.hasse_edges) reach[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK_MESSAGE(reach[i][j] == k_leq(e.spec, slice.elements[i], slice.elements[j]), e.name);
  }
}

TEST_CASE("components and minima") {
  const auto pgl2 = build_poset_slice(catalog("pgl2_so21").spec, 20);
  CHECK(pgl2.image_index == 2);
  CHECK(pgl2.elements.size() == 11);
  CHECK(pgl2.hasse_edges.size() == 10);
  REQUIRE(pgl2.components.size() == 1);
  CHECK(component_minima(pgl2, pgl2.components[0]) == std::vector<std::size_t>{0});

  // gl_2 split: dominance preserves the determinant, so the components are
  // the even values of a + b within the bound.
  const auto gl2 = build_poset_slice(catalog("gl2_split").spec, 6);
  std::set<Int> sums;
  for (const auto& x : gl2.elements) sums.insert(x.lambda[0] + x.lambda[1]);
  CHECK(gl2.components.size() == sums.size());
  for (const auto& c : gl2.components) CHECK(component_minima(gl2, c).size() == 1);

  // Nothing lies below 0.
  for (const auto& e : catalog_entries()) {
    const auto xs = enumerate_orbits(e.spec, 10);
    const OrbitIndex zero{Coweight::zero(e.spec.datum().rank())};
    for (const auto& x : xs)
      if (x != zero) CHECK_FALSE(k_leq(e.spec, x, zero));
  }
}

TEST_CASE("R-order slices reverse the edges") {
  const auto& sl3 = catalog("sl3_split").spec;
  const auto k = build_poset_slice(sl3, 8, PosetOrder::K);
  const auto r = build_poset_slice(sl3, 8, PosetOrder::R);
  CHECK(r.order == PosetOrder::R);
  CHECK(k.elements == r.elements);
  std::set<std::pair<std::size_t, std::size_t>> flipped;
  for (auto [a, b] : k.hasse_edges) flipped.insert({b, a});
  CHECK(std::set<std::pair<std::size_t, std::size_t>>(r.hasse_edges.begin(), r.hasse_edges.end()) == flipped);
  for (auto [a, b] : r.hasse_edges) CHECK(r_leq(sl3, r.elements[a], r.elements[b]));
}
