#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "matsuki/abelian_group.hpp"
#include "matsuki/lattice.hpp"

using namespace matsuki;

namespace {

// Leibniz-free cofactor determinant, used only as an oracle on small matrices.
Int det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, mj = 0; j < n; ++j)
        if (j != c) minor(i - 1, mj++) = m(i, j);
    total += (c % 2 ? -1 : 1) * m(0, c) * det(minor);
  }
  return total;
}

// gcd of all k x k minors (the k-th determinantal divisor).
Int minor_gcd(const IntMatrix& m, std::size_t k) {
  Int g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t idx, std::size_t start) {
    if (idx == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t r = start; r < m.rows(); ++r) {
      rows[idx] = r;
      pick_rows(idx + 1, r + 1);
    }
  };
  pick_cols = [&](std::size_t idx, std::size_t start) {
    if (idx == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = std::gcd(g, det(sub));
      return;
    }
    for (std::size_t c = start; c < m.cols(); ++c) {
      cols[idx] = c;
      pick_cols(idx + 1, c + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Int spread) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<Int>(rng() % static_cast<std::uint64_t>(2 * spread + 1)) - spread;
  return m;
}

}  // namespace

TEST_CASE("checked arithmetic throws on overflow") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2 + 1, 2), std::overflow_error);
  CHECK(floor_mod(-3, 2) == 1);
  CHECK(floor_mod(5, 3) == 2);
}

TEST_CASE("coweight arithmetic and formatting") {
  const Coweight a{1, -2}, b{3, 4};
  CHECK(a + b == Coweight{4, 2});
  CHECK(a - b == Coweight{-2, -6});
  CHECK(-a == Coweight{-1, 2});
  CHECK(3 * a == Coweight{3, -6});
  CHECK(a.to_string() == "(1,-2)");
  CHECK(Coweight::zero(3).is_zero());
  CHECK(Coweight{0, 1} < Coweight{1, 0});
}

TEST_CASE("smith form of a known matrix") {
  const IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal_entries() == std::vector<Int>{2, 6, 12});
  CHECK(s.left * m * s.right == s.diagonal);
  CHECK(s.rank == 3);
}

TEST_CASE("smith form small cases") {
  CHECK(smith_normal_form(IntMatrix::from_rows({{2}})).diagonal_entries() == std::vector<Int>{2});
  CHECK(smith_normal_form(IntMatrix::from_rows({{1, 0}, {0, 0}})).diagonal_entries() == std::vector<Int>{1, 0});
  const IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const auto s = smith_normal_form(m);
  CHECK(s.diagonal_entries() == std::vector<Int>{2, 4});
  CHECK(s.diagonal_entries()[0] == minor_gcd(m, 1));
  CHECK(s.diagonal_entries()[0] * s.diagonal_entries()[1] == std::abs(det(m)));
  // Same input, same transforms.
  const auto again = smith_normal_form(m);
  CHECK(again.left == s.left);
  CHECK(again.right == s.right);
}

TEST_CASE("smith form agrees with the gcd-of-minors oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, rows, cols, 6);
    const SmithForm s = smith_normal_form(m);
    REQUIRE(s.left * m * s.right == s.diagonal);
    CHECK(std::abs(det(s.left)) == 1);
    CHECK(std::abs(det(s.right)) == 1);
    const auto d = s.diagonal_entries();
    Int product = 1;
    for (std::size_t k = 1; k <= d.size(); ++k) {
      product *= d[k - 1];
      CHECK(product == minor_gcd(m, k));
      if (k < d.size() && d[k - 1] != 0) CHECK(d[k] % d[k - 1] == 0);
      CHECK(d[k - 1] >= 0);
    }
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(s.diagonal(i, j) == 0);
  }
}

TEST_CASE("kernel basis is saturated and spans the kernel") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, rows, cols, 4);
    const auto basis = kernel_basis(m);
    const std::size_t rank = smith_normal_form(m).rank;
    CHECK(basis.size() == cols - rank);
    for (const auto& v : basis) CHECK(m * v == IntVector(rows, 0));
    if (!basis.empty()) {
      // Saturated: the basis matrix has all invariant factors 1.
      const auto d = smith_normal_form(IntMatrix::from_columns(basis)).diagonal_entries();
      for (Int x : d) CHECK(x == 1);
    }
    // Every small kernel vector is an integral combination.
    const IntMatrix b = basis.empty() ? IntMatrix(cols, 0) : IntMatrix::from_columns(basis);
    IntVector x(cols, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == cols) {
        if (m * x == IntVector(rows, 0)) CHECK(lattice_coordinates(b, x).has_value());
        return;
      }
      for (Int v = -2; v <= 2; ++v) {
        x[i] = v;
        walk(i + 1);
      }
    };
    if (cols <= 3) walk(0);
  }
}

TEST_CASE("lattice coordinates reject vectors outside the lattice") {
  const IntMatrix gens = IntMatrix::from_columns({{2, 0}, {0, 3}});
  CHECK(lattice_coordinates(gens, {4, 9}) == IntVector{2, 3});
  CHECK_FALSE(lattice_coordinates(gens, {1, 0}).has_value());
  CHECK_FALSE(lattice_coordinates(IntMatrix::from_columns({{1, 1}}), {1, 0}).has_value());
}

TEST_CASE("integral inverse and exact solve") {
  const IntMatrix m = IntMatrix::from_rows({{2, -1}, {-1, 2}});
  const auto inv = integral_inverse(m);
  CHECK(inv.determinant == 3);
  CHECK(m * inv.adjugate == IntMatrix::from_rows({{3, 0}, {0, 3}}));
  CHECK(solve_integral(inv, {1, 1}) == IntVector{1, 1});
  CHECK_FALSE(solve_integral(inv, {1, 0}).has_value());
  CHECK(integral_inverse(IntMatrix::from_rows({{1, 2}, {2, 4}})).determinant == 0);
}

TEST_CASE("finite abelian quotients") {
  const auto z2 = FiniteAbelianGroup::quotient(IntMatrix::from_columns({{2}}), 1);
  CHECK(z2.describe() == "Z/2");
  CHECK(z2.order() == 2);
  CHECK(z2.subgroup_index({z2.project({2})}) == 2);
  CHECK(z2.subgroup_index({z2.project({1})}) == 1);
  CHECK(z2.in_subgroup({z2.project({2})}, z2.project({4})));
  CHECK_FALSE(z2.in_subgroup({z2.project({2})}, z2.project({3})));

  const auto free_part = FiniteAbelianGroup::quotient(IntMatrix::from_columns({{1, -1}}), 2);
  CHECK(free_part.describe() == "Z");
  CHECK_FALSE(free_part.order().has_value());
  CHECK(free_part.subgroup_index({free_part.project({1, 1})}) == 2);
  CHECK_FALSE(free_part.subgroup_index({free_part.project({1, -1})}).has_value());

  const auto trivial = FiniteAbelianGroup::quotient(IntMatrix::identity(2), 2);
  CHECK(trivial.is_trivial());
  CHECK(trivial.describe() == "0");
  CHECK(trivial.subgroup_index({}) == 1);

  const auto mixed = FiniteAbelianGroup::quotient(IntMatrix::from_columns({{2, 0, 0}, {0, 4, 0}}), 3);
  CHECK(mixed.describe() == "Z/2 x Z/4 x Z");
}

TEST_CASE("quotient order matches the determinant oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const IntMatrix m = random_matrix(rng, n, n, 5);
    const Int d = std::abs(det(m));
    const auto q = FiniteAbelianGroup::quotient(m, n);
    if (d == 0)
      CHECK_FALSE(q.order().has_value());
    else
      CHECK(q.order() == d);
  }
}
