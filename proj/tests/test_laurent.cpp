#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matsuki/laurent.hpp"

using namespace matsuki;

namespace {

const LaurentPoly t = LaurentPoly::t_power(1);
const LaurentPoly tinv = LaurentPoly::t_power(-1);

LaurentMatrix mat2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
  LaurentMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 3);
  for (int k = 0; k < terms; ++k) {
    const int e = static_cast<int>(rng() % 5) - 2;
    p += LaurentPoly::monomial(GaussRational(mpq_class(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3),
                                             mpq_class(static_cast<long>(rng() % 3) - 1)),
                               e);
  }
  return p;
}

}  // namespace

TEST_CASE("Gaussian rationals") {
  const GaussRational a(mpq_class(1, 2), 1), b(3, -2);
  CHECK(a * a.inverse() == GaussRational(1));
  CHECK((a / b) * b == a);
  CHECK(a.conj() == GaussRational(mpq_class(1, 2), -1));
  CHECK(a.norm() == mpq_class(5, 4));
  CHECK((a - a).is_zero());
  CHECK(GaussRational::i_unit() * GaussRational::i_unit() == GaussRational(-1));
  CHECK_THROWS_AS(GaussRational(0).inverse(), PreconditionError);
}

TEST_CASE("Laurent polynomial arithmetic") {
  const LaurentPoly p = t + tinv;
  CHECK(p * p == LaurentPoly::t_power(2) + LaurentPoly(2) + LaurentPoly::t_power(-2));
  CHECK(p.min_exponent() == -1);
  CHECK(p.max_exponent() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).terms().empty());
  CHECK(p.tau() == p);
  CHECK(t.tau() == tinv);
  CHECK(LaurentPoly::monomial(GaussRational(0, 1), 3).conj() == LaurentPoly::monomial(GaussRational(0, -1), 3));
  CHECK(p.shifted(2) == LaurentPoly::t_power(3) + t);
  CHECK(LaurentPoly::monomial(5, 2).is_monomial());
  CHECK(p.coefficient(1) == GaussRational(1));
  CHECK(p.coefficient(0).is_zero());
  LaurentPoly q = p;
  q.set(1, 0);
  CHECK(q == tinv);
}

TEST_CASE("polynomial division") {
  // (t^2 - 1) / (t - 1) = t + 1.
  const LaurentPoly a = LaurentPoly::t_power(2) - LaurentPoly(1);
  const LaurentPoly b = t - LaurentPoly(1);
  auto [quot, rem] = poly_divmod(a, b);
  CHECK(quot == t + LaurentPoly(1));
  CHECK(rem.is_zero());

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly x = random_poly(rng), y = random_poly(rng);
    if (x.is_zero() || y.is_zero()) continue;
    x = x.shifted(-x.min_exponent());
    y = y.shifted(-y.min_exponent());
    auto [qq, rr] = poly_divmod(x, y);
    CHECK(qq * y + rr == x);
    if (!rr.is_zero()) CHECK(rr.max_exponent() < y.max_exponent());
  }
}

TEST_CASE("matrix inverse examples") {
  CHECK(mat_inverse(LaurentMatrix::identity(3)).is_identity());
  CHECK(mat_inverse(LaurentMatrix::t_power({1, -1})) == LaurentMatrix::t_power({-1, 1}));

  const LaurentMatrix u = mat2(1, tinv, 0, 1);
  const LaurentMatrix v = mat_inverse(u);
  CHECK(v == mat2(1, -tinv, 0, 1));
  CHECK(mat_mul(u, v).is_identity());
  CHECK(mat_mul(v, u).is_identity());

  CHECK_THROWS_AS(mat_inverse(mat2(t + LaurentPoly(1), 0, 0, 1)), PreconditionError);
  CHECK_FALSE(is_invertible_loop(mat2(t + LaurentPoly(1), 0, 0, 1)));
  CHECK(is_invertible_loop(mat2(t, 1, 0, tinv)));
}

TEST_CASE("determinant is multiplicative on random matrices") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentMatrix a(3), b(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = random_poly(rng);
        b(i, j) = random_poly(rng);
      }
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    CHECK(determinant(a.transpose()) == determinant(a));
  }
}

TEST_CASE("tau and conjugation") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentMatrix a(2), b(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = random_poly(rng);
        b(i, j) = random_poly(rng);
      }
    CHECK(apply_tau(apply_tau(a)) == a);
    CHECK(apply_conjugation(apply_conjugation(a)) == a);
    CHECK(apply_tau(a * b) == apply_tau(a) * apply_tau(b));
    CHECK(apply_conjugation(a * b) == apply_conjugation(a) * apply_conjugation(b));
  }
  CHECK(apply_tau(LaurentMatrix::t_power({2, -1})) == LaurentMatrix::t_power({-2, 1}));
}

TEST_CASE("dense Q(i) linear algebra") {
  GaussMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, GaussRational(0, 1)}};
  CHECK(gauss_rank(m) == 2);
  const auto v = gauss_kernel_vector(m, 3);
  REQUIRE(v.has_value());
  for (const auto& row : m) {
    GaussRational s;
    for (std::size_t j = 0; j < 3; ++j) s += row[j] * (*v)[j];
    CHECK(s.is_zero());
  }
  CHECK_FALSE(gauss_kernel_vector(GaussMatrix{{1, 0}, {0, 1}}, 2).has_value());
  CHECK(gauss_rank(GaussMatrix{}) == 0);
}

TEST_CASE("text forms") {
  CHECK(GaussRational(mpq_class(1, 2)).to_string() == "1/2");
  CHECK(GaussRational(0, -3).to_string() == "-3i");
  CHECK(LaurentPoly().to_string() == "0");
  const auto range = mat2(t, 1, 0, tinv).exponent_range();
  REQUIRE(range.has_value());
  CHECK(range->first == -1);
  CHECK(range->second == 1);
  CHECK_FALSE(LaurentMatrix(2).exponent_range().has_value());
}
