#include "matsuki/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace matsuki {

Int checked_add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + (m < 0 ? -m : m) : r;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  if (!columns.empty()) rows = columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        p(i, j) = checked_add(p(i, j), checked_mul(aik, b(k, j)));
    }
  return p;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  IntVector out(a.rows_, 0);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] = checked_add(out[i], checked_mul(a(i, k), v[k]));
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  IntMatrix d(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) d.data_[i] = checked_add(a.data_[i], -b.data_[i]);
  return d;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << format_vector(row(r));
  }
  os << ']';
  return os.str();
}

// ----------------------------------------------------------------- Coweight

bool Coweight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

Coweight operator+(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("coweight sum: rank mismatch");
  IntVector v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(a[i], b[i]);
  return Coweight(std::move(v));
}

Coweight operator-(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("coweight difference: rank mismatch");
  IntVector v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(a[i], -b[i]);
  return Coweight(std::move(v));
}

Coweight operator-(const Coweight& a) { return Coweight::zero(a.size()) - a; }

Coweight operator*(Int s, const Coweight& a) {
  IntVector v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_mul(s, a[i]);
  return Coweight(std::move(v));
}

std::string Coweight::to_string() const { return format_vector(coords_); }

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += ')';
  return s;
}

// ---------------------------------------------------------------- Smith form

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    std::size_t rank = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        clear_row_and_column(t);
        if (!has_residue(t)) {
          if (enforce_divisibility(t)) continue;
          break;
        }
        place_pivot(t);
      }
      if (a_(t, t) < 0) negate_row(t);
      ++rank;
    }
    return SmithForm{u_, a_, v_, rank};
  }

 private:
  // Moves the smallest non-zero |entry| of the block (t.., t..) to (t, t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t r = t; r < a_.rows(); ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const Int x = a_(r, c);
        if (x == 0) continue;
        const Int ax = x < 0 ? -x : x;
        if (!best || ax < best_abs) {
          best = {r, c};
          best_abs = ax;
        }
      }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void clear_row_and_column(std::size_t t) {
    const Int p = a_(t, t);
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      if (const Int q = a_(r, t) / p; q != 0) add_row(r, t, -q);
    for (std::size_t c = t + 1; c < a_.cols(); ++c)
      if (const Int q = a_(t, c) / p; q != 0) add_col(c, t, -q);
  }

  bool has_residue(std::size_t t) const {
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      if (a_(r, t) != 0) return true;
    for (std::size_t c = t + 1; c < a_.cols(); ++c)
      if (a_(t, c) != 0) return true;
    return false;
  }

  // If some entry of the remaining block is not divisible by the pivot, fold
  // its row into the pivot row so the next pass lowers the pivot.
  bool enforce_divisibility(std::size_t t) {
    const Int p = a_(t, t);
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      for (std::size_t c = t + 1; c < a_.cols(); ++c)
        if (a_(r, c) % p != 0) {
          add_row(t, r, 1);
          return true;
        }
    return false;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
  }
  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, Int k) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(dst, c) = checked_add(a_(dst, c), checked_mul(k, a_(src, c)));
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) = checked_add(u_(dst, c), checked_mul(k, u_(src, c)));
  }
  void add_col(std::size_t dst, std::size_t src, Int k) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, dst) = checked_add(a_(r, dst), checked_mul(k, a_(r, src)));
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) = checked_add(v_(r, dst), checked_mul(k, v_(r, src)));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

std::vector<Int> SmithForm::diagonal_entries() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) d.push_back(diagonal(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t c = s.rank; c < m.cols(); ++c) basis.push_back(s.right.column(c));
  return basis;
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& generators, const IntVector& x) {
  if (x.size() != generators.rows()) throw std::invalid_argument("lattice_coordinates: dimension mismatch");
  const SmithForm s = smith_normal_form(generators);
  const IntVector y = s.left * x;
  IntVector z(generators.cols(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < s.rank) {
      const Int d = s.diagonal(i, i);
      if (y[i] % d != 0) return std::nullopt;
      z[i] = y[i] / d;
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return s.right * z;
}

IntegralInverse integral_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("integral_inverse: matrix not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
    a[i][n + i] = 1;
  }
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return IntegralInverse{IntMatrix(n, n), 0};
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    const mpq_class p = a[col][col];
    det *= p;
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  IntegralInverse out{IntMatrix(n, n), 0};
  out.determinant = det.get_num().get_si();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class v = a[i][n + j] * det;
      if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw std::overflow_error("integral_inverse: adjugate entry");
      out.adjugate(i, j) = v.get_num().get_si();
    }
  return out;
}

std::optional<IntVector> solve_integral(const IntegralInverse& inv, const IntVector& b) {
  if (inv.determinant == 0) return std::nullopt;
  IntVector num = inv.adjugate * b;
  for (auto& x : num) {
    if (x % inv.determinant != 0) return std::nullopt;
    x /= inv.determinant;
  }
  return num;
}

}  // namespace matsuki
