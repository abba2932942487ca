#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace matsuki {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

// Overflow-checked arithmetic; throws std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int dot(const IntVector& a, const IntVector& b);
Int floor_mod(Int a, Int m);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Cocharacter-lattice vector. Ordered lexicographically.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(IntVector coords) : coords_(std::move(coords)) {}
  Coweight(std::initializer_list<Int> coords) : coords_(coords) {}
  static Coweight zero(std::size_t rank) { return Coweight(IntVector(rank, 0)); }

  std::size_t size() const { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;

  friend Coweight operator+(const Coweight& a, const Coweight& b);
  friend Coweight operator-(const Coweight& a, const Coweight& b);
  friend Coweight operator-(const Coweight& a);
  friend Coweight operator*(Int s, const Coweight& a);
  friend Coweight operator*(const IntMatrix& m, const Coweight& a) { return Coweight(m * a.coords_); }
  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  /// "(a,b,c)" with no spaces; the node-label format of graph output.
  std::string to_string() const;

 private:
  IntVector coords_;
};

/// Result of smith_normal_form: left * M * right == diagonal.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;

  /// Diagonal entries d_0 | d_1 | ... (length min(rows, cols)).
  std::vector<Int> diagonal_entries() const;
};

/// Deterministic Smith normal form. Pivot is the smallest non-zero entry by
/// absolute value in the active block, ties broken by row-major position;
/// diagonal entries are non-negative.
SmithForm smith_normal_form(const IntMatrix& m);

/// Basis (as a saturated sublattice) of {x in Z^cols : m x = 0}.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Integer coefficients c with generators * c == x (generators as columns),
/// or nullopt when x is outside the lattice they span.
std::optional<IntVector> lattice_coordinates(const IntMatrix& generators, const IntVector& x);

/// det(m) and adj(m) for a square matrix, so m^{-1} = adjugate / det.
struct IntegralInverse {
  IntMatrix adjugate;
  Int determinant = 0;
};
IntegralInverse integral_inverse(const IntMatrix& m);

/// Exact solution of m x = b when it is integral; nullopt otherwise (or
/// when det(m) == 0).
std::optional<IntVector> solve_integral(const IntegralInverse& inv, const IntVector& b);

std::string format_vector(const IntVector& v);

}  // namespace matsuki
