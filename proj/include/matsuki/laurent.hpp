#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matsuki/errors.hpp"

namespace matsuki {

/// Exact element of Q(i).
struct GaussRational {
  mpq_class re;
  mpq_class im;

  GaussRational() = default;
  /// Canonicalizes, so hand-built fractions like 2/4 compare equal to 1/2.
  GaussRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  GaussRational(long r) : re(r), im(0) {}

  static GaussRational i_unit() { return GaussRational(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return GaussRational(re, -im); }
  mpq_class norm() const { return re * re + im * im; }
  GaussRational inverse() const;

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return GaussRational(a.re + b.re, a.im + b.im);
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return GaussRational(a.re - b.re, a.im - b.im);
  }
  friend GaussRational operator-(const GaussRational& a) { return GaussRational(-a.re, -a.im); }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return GaussRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) { return a * b.inverse(); }
  GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
  GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }

  /// "a/b" or "a/b+c/di" style, e.g. "1/2", "-3i", "1+1/2i".
  std::string to_string() const;
};

/// Element of Q(i)[t, t^-1]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(GaussRational c) { set(0, std::move(c)); }
  LaurentPoly(long c) : LaurentPoly(GaussRational(c)) {}
  static LaurentPoly monomial(GaussRational c, int exponent);
  static LaurentPoly t_power(int exponent) { return monomial(1, exponent); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, GaussRational>& terms() const { return terms_; }
  GaussRational coefficient(int exponent) const;
  void set(int exponent, GaussRational c);

  /// Lowest / highest exponent; requires a non-zero polynomial.
  int min_exponent() const;
  int max_exponent() const;
  /// A single term c t^k.
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly shifted(int k) const;  // times t^k
  LaurentPoly tau() const;           // t -> t^-1
  LaurentPoly conj() const;          // coefficientwise conjugation

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<int, GaussRational> terms_;
};

/// Quotient and remainder in Q(i)[t]; both inputs must have no negative
/// exponents and the divisor must be non-zero.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Square matrix over Q(i)[t, t^-1].
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static LaurentMatrix identity(std::size_t n);
  /// diag(t^e_0, ..., t^e_{n-1}).
  static LaurentMatrix t_power(const std::vector<long>& exponents);

  std::size_t size() const { return n_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  bool is_identity() const;
  /// Lowest / highest exponent over all non-zero entries; nullopt for the
  /// zero matrix.
  std::optional<std::pair<int, int>> exponent_range() const;

  LaurentMatrix transpose() const;
  LaurentMatrix shifted(int k) const;  // times t^k

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentPoly& s, const LaurentMatrix& a);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentPoly determinant(const LaurentMatrix& g);
/// Throws PreconditionError unless det(g) is a non-zero monomial.
LaurentMatrix mat_inverse(const LaurentMatrix& g);
LaurentMatrix apply_tau(const LaurentMatrix& g);
LaurentMatrix apply_conjugation(const LaurentMatrix& g);
/// Whether det(g) is c t^k with c != 0.
bool is_invertible_loop(const LaurentMatrix& g);

/// Dense matrix over Q(i) for the finite linear systems.
using GaussMatrix = std::vector<std::vector<GaussRational>>;

/// Rank by Gaussian elimination (destroys nothing; works on a copy).
std::size_t gauss_rank(GaussMatrix m);
/// A non-zero vector v with m v = 0, or nullopt if m has full column rank.
std::optional<std::vector<GaussRational>> gauss_kernel_vector(GaussMatrix m, std::size_t cols);

}  // namespace matsuki
