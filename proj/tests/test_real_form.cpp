#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "matsuki/catalog.hpp"
#include "matsuki/real_form.hpp"

using namespace matsuki;

namespace {

InvolutionSpec make(const RootDatumPtr& d, std::vector<IntVector> rows) {
  return InvolutionSpec("t", d, IntMatrix::from_rows(rows));
}

// Longest element by brute force: closure of the simple reflections in
// `subset`, keeping the element with the most inversions.
IntMatrix brute_longest(const RootDatum& d, const std::vector<std::size_t>& subset) {
  std::vector<IntMatrix> group{IntMatrix::identity(d.rank())};
  for (std::size_t head = 0; head < group.size(); ++head)
    for (std::size_t k : subset) {
      IntMatrix next = d.reflection(k) * group[head];
      if (std::find(group.begin(), group.end(), next) == group.end()) group.push_back(next);
    }
  std::set<IntVector> positive;
  for (std::size_t i : d.positive_indices()) positive.insert(d.coroots()[i]);
  auto inv = [&](const IntMatrix& w) {
    std::size_t n = 0;
    for (const auto& p : positive) {
      IntVector img = w * p;
      for (auto& x : img) x = -x;
      n += positive.count(img);
    }
    return n;
  };
  return *std::max_element(group.begin(), group.end(),
                           [&](const IntMatrix& a, const IntMatrix& b) { return inv(a) < inv(b); });
}

}  // namespace

TEST_CASE("involution validation") {
  CHECK(validate_involution(make(sl2_datum(), {{1}})).ok());
  CHECK(validate_involution(make(sl2_datum(), {{-1}})).ok());
  CHECK(validate_involution(make(sl2_x_sl2_datum(), {{0, 1}, {1, 0}})).ok());

  const auto not_involution = validate_involution(make(sl3_datum(), {{1, 1}, {0, 1}}));
  CHECK_FALSE(not_involution.ok());
  // theta = 2 on SL2: neither an involution nor a coroot permutation.
  CHECK(validate_involution(make(sl2_datum(), {{2}})).violations.size() >= 2);
  // Shape mismatch is a constructor error, not a report entry.
  CHECK_THROWS_AS(make(sl3_datum(), {{1}}), PreconditionError);
}

TEST_CASE("every catalog entry validates") {
  for (const auto& e : catalog_entries()) CHECK_MESSAGE(validate_involution(e.spec).ok(), e.name);
}

TEST_CASE("lambda_S bases") {
  CHECK(lambda_S_basis(catalog("sl2_split").spec) == std::vector<Coweight>{Coweight{1}});
  CHECK(lambda_S_basis(catalog("sl2_compact").spec).empty());
  const auto swap = lambda_S_basis(catalog("sl2C_as_real").spec);
  REQUIRE(swap.size() == 1);
  CHECK((swap[0] == Coweight{1, 1} || swap[0] == Coweight{-1, -1}));
}

TEST_CASE("lambda_S bases are saturated") {
  for (const auto& e : catalog_entries()) {
    const auto basis = lambda_S_basis(e.spec);
    for (const auto& b : basis) CHECK(e.spec.is_fixed(b));
    if (basis.empty()) continue;
    std::vector<IntVector> cols;
    for (const auto& b : basis) cols.push_back(b.coords());
    for (Int d : smith_normal_form(IntMatrix::from_columns(cols)).diagonal_entries()) CHECK(d == 1);
  }
}

TEST_CASE("Levi of the minimal parabolic and w_M") {
  CHECK(levi_M_simple_roots(catalog("sl2_split").spec).empty());
  CHECK(levi_M_simple_roots(catalog("sl2_compact").spec) == std::vector<std::size_t>{0});
  CHECK(levi_M_simple_roots(catalog("sl2C_as_real").spec).empty());
  CHECK(levi_M_simple_roots(catalog("su21").spec).empty());
  CHECK(levi_M_simple_roots(catalog("su30").spec) == std::vector<std::size_t>{0, 1});

  CHECK(w_M(catalog("sl2_split").spec).is_identity());
  CHECK(w_M(catalog("sl2_compact").spec) == IntMatrix::from_rows({{-1}}));
  for (const auto& e : catalog_entries())
    CHECK_MESSAGE(w_M(e.spec) == brute_longest(e.spec.datum(), levi_M_simple_roots(e.spec)), e.name);
}

TEST_CASE("roots of M are imaginary: theta transpose negates the simple roots of M") {
  for (const auto& e : catalog_entries()) {
    const auto& d = e.spec.datum();
    const IntMatrix tt = e.spec.theta().transpose();
    for (std::size_t k : levi_M_simple_roots(e.spec)) {
      IntVector neg = d.simple_root(k);
      for (auto& x : neg) x = -x;
      CHECK_MESSAGE(tt * d.simple_root(k) == neg, e.name << " simple " << k);
    }
  }
}

TEST_CASE("theta_tau_on_dominant examples") {
  CHECK(theta_tau_on_dominant(catalog("sl2_split").spec, Coweight{3}) == Coweight{3});
  CHECK(theta_tau_on_dominant(catalog("sl2_compact").spec, Coweight{4}) == Coweight{4});
  CHECK(theta_tau_on_dominant(catalog("sl2C_as_real").spec, Coweight{2, 5}) == Coweight{5, 2});
  CHECK_THROWS_AS(theta_tau_on_dominant(catalog("sl2_split").spec, Coweight{-1}), PreconditionError);
}

TEST_CASE("theta_tau_on_dominant is an involution on the dominant cone") {
  for (const auto& e : catalog_entries())
    for (const auto& lambda : enumerate_dominant(e.spec.datum(), 12)) {
      const Coweight once = theta_tau_on_dominant(e.spec, lambda);
      CHECK(e.spec.datum().is_dominant(once));
      CHECK(theta_tau_on_dominant(e.spec, once) == lambda);
    }
}

TEST_CASE("real coweight criterion") {
  CHECK(real_criterion(catalog("sl2_split").spec, Coweight{5}));
  CHECK_FALSE(real_criterion(catalog("sl2_compact").spec, Coweight{1}));
  CHECK(real_criterion(catalog("sl2_compact").spec, Coweight{0}));
  CHECK(real_criterion(catalog("pgl2_so21").spec, Coweight{2}));
  CHECK_THROWS_AS(real_criterion(catalog("sl3_split").spec, Coweight{-1, 0}), PreconditionError);

  for (const auto& e : catalog_entries())
    for (const auto& lambda : enumerate_dominant(e.spec.datum(), 12))
      CHECK_MESSAGE(real_criterion(e.spec, lambda) == e.spec.is_fixed(lambda), e.name << " " << lambda.to_string());
}

TEST_CASE("enumerate_real_dominant filters by theta") {
  for (const auto& e : catalog_entries()) {
    std::vector<Coweight> expected;
    for (const auto& lambda : enumerate_dominant(e.spec.datum(), 10))
      if (e.spec.is_fixed(lambda)) expected.push_back(lambda);
    CHECK(enumerate_real_dominant(e.spec, 10) == expected);
  }
  CHECK(enumerate_real_dominant(catalog("sl2_compact").spec, 100) == std::vector<Coweight>{Coweight{0}});
}

TEST_CASE("catalog lookup") {
  const auto& pgl2 = catalog("pgl2_so21");
  CHECK(pgl2.spec.datum().rank() == 1);
  CHECK(pgl2.spec.theta().is_identity());
  CHECK(pgl2.spec.datum().simple_coroot(0) == IntVector{2});
  CHECK_FALSE(pgl2.expected_k_connected);

  CHECK(catalog("sl2_split").spec.theta().is_identity());
  CHECK(catalog("sl2_split").spec.datum().simple_coroot(0) == IntVector{1});
  CHECK(catalog("sl2C_as_real").spec.theta() == IntMatrix::from_rows({{0, 1}, {1, 0}}));

  CHECK_THROWS_AS(catalog("no_such_form"), PreconditionError);
  CHECK(find_catalog_entry("no_such_form") == nullptr);
  CHECK(find_catalog_entry("su21") != nullptr);
}
