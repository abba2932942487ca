#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "matsuki/catalog.hpp"
#include "matsuki/fundamental_group.hpp"

using namespace matsuki;

TEST_CASE("restricted coroot generators") {
  CHECK(restricted_coroot_generators(catalog("sl2_split").spec) == std::vector<Coweight>{Coweight{1}, Coweight{2}});
  CHECK(restricted_coroot_generators(catalog("pgl2_so21").spec) == std::vector<Coweight>{Coweight{2}, Coweight{4}});
  CHECK(restricted_coroot_generators(catalog("sl2C_as_real").spec) == std::vector<Coweight>{Coweight{1, 1}});
  CHECK(restricted_coroot_generators(catalog("sl2_compact").spec).empty());
  for (const auto& e : catalog_entries())
    for (const auto& g : restricted_coroot_generators(e.spec)) {
      CHECK(e.spec.is_fixed(g));
      CHECK_FALSE(g.is_zero());
    }
}

TEST_CASE("pi_1 of the symmetric space") {
  CHECK(pi1_of_X(catalog("sl2_split").spec).is_trivial());
  CHECK(pi1_of_X(catalog("pgl2_so21").spec).describe() == "Z/2");
  CHECK(pi1_of_X(catalog("sl2_compact").spec).is_trivial());
  CHECK(pi1_of_X(catalog("sl2C_as_real").spec).is_trivial());
  // Z^n modulo the sum-zero coroot lattice (and 2 e_i): the determinant line.
  CHECK(pi1_of_X(catalog("gl2_split").spec).describe() == "Z");
}

TEST_CASE("image of pi_1(G)") {
  const auto pgl2 = pi_star_image(catalog("pgl2_so21").spec);
  CHECK(pgl2.pi1G.describe() == "Z/2");
  CHECK(pgl2.pi1X.describe() == "Z/2");
  CHECK(pgl2.image_index == 2);
  for (const auto& c : pgl2.image_classes) CHECK(pgl2.pi1X.reduce(c) == IntVector(c.size(), 0));

  const auto sl2 = pi_star_image(catalog("sl2_split").spec);
  CHECK(sl2.pi1G.is_trivial());
  CHECK(sl2.pi1X.is_trivial());
  CHECK(sl2.image_index == 1);

  CHECK(pi_star_image(catalog("sl2C_as_real").spec).image_index == 1);
  CHECK(pi_star_image(catalog("gl2_split").spec).image_index == 2);
  CHECK(pi_star_image(catalog("gl1_split").spec).image_index == 2);
}

TEST_CASE("image index divides the torsion order and is 1 for connected K") {
  for (const auto& e : catalog_entries()) {
    const auto m = pi_star_image(e.spec);
    CHECK(m.image_index >= 1);
    if (auto order = m.pi1X.order()) CHECK(*order % m.image_index == 0);
    if (e.expected_k_connected) CHECK_MESSAGE(m.image_index == 1, e.name);
    // lambda + theta(lambda) is theta-fixed for every basis vector.
    for (const auto& g : m.image_generators) CHECK(e.spec.is_fixed(g));
  }
}

TEST_CASE("projection kills the relations") {
  for (const auto& e : catalog_entries()) {
    const auto x = pi1_of_X(e.spec);
    for (const auto& g : restricted_coroot_generators(e.spec))
      CHECK(x.project(g.coords()) == IntVector(x.invariant_factors().size(), 0));
  }
}

TEST_CASE("membership in the image") {
  const auto& pgl2 = catalog("pgl2_so21").spec;
  CHECK_FALSE(in_image(pgl2, Coweight{1}));
  CHECK(in_image(pgl2, Coweight{2}));
  CHECK(in_image(pgl2, Coweight{0}));
  CHECK_FALSE(in_image(pgl2, Coweight{3}));
  for (const auto& e : catalog_entries()) CHECK(in_image(e.spec, Coweight::zero(e.spec.datum().rank())));

  CHECK_THROWS_AS(in_image(pgl2, Coweight{-2}), PreconditionError);
  CHECK_THROWS_AS(in_image(catalog("sl2C_as_real").spec, Coweight{1, 0}), PreconditionError);

  // gl_n split: the parity of the determinant.
  const auto& gl2 = catalog("gl2_split").spec;
  CHECK(in_image(gl2, Coweight{1, 1}));
  CHECK(in_image(gl2, Coweight{2, 0}));
  CHECK_FALSE(in_image(gl2, Coweight{1, 0}));
  CHECK_FALSE(in_image(gl2, Coweight{0, -1}));
}

TEST_CASE("image is closed under addition") {
  for (const auto& e : catalog_entries()) {
    const auto model = pi_star_image(e.spec);
    std::vector<Coweight> members;
    for (const auto& l : enumerate_real_dominant(e.spec, 8))
      if (in_image(e.spec, model, l)) members.push_back(l);
    for (const auto& a : members)
      for (const auto& b : members) CHECK(in_image(e.spec, model, a + b));
  }
}

TEST_CASE("connected K: the image is everything") {
  for (const auto& e : catalog_entries()) {
    if (!e.expected_k_connected) continue;
    for (const auto& l : enumerate_real_dominant(e.spec, 20)) CHECK_MESSAGE(in_image(e.spec, l), e.name);
  }
}
