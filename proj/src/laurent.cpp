#include "matsuki/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace matsuki {

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero in Q(i)");
  const mpq_class n = norm();
  return GaussRational(re / n, -im / n);
}

std::string GaussRational::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re) != 0) out = re.get_str();
  if (sgn(im) != 0) {
    if (!out.empty() && sgn(im) > 0) out += "+";
    if (im == 1)
      out += "i";
    else if (im == -1)
      out += "-i";
    else
      out += im.get_str() + "i";
  }
  return out;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(GaussRational c, int exponent) {
  LaurentPoly p;
  p.set(exponent, std::move(c));
  return p;
}

GaussRational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? GaussRational() : it->second;
}

void LaurentPoly::set(int exponent, GaussRational c) {
  if (c.is_zero())
    terms_.erase(exponent);
  else
    terms_[exponent] = std::move(c);
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw PreconditionError("exponent of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw PreconditionError("exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

LaurentPoly LaurentPoly::tau() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

LaurentPoly LaurentPoly::conj() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c.conj());
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p = a;
  for (const auto& [e, c] : b.terms_) p.set(e, p.coefficient(e) + c);
  return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p = a;
  for (const auto& [e, c] : b.terms_) p.set(e, p.coefficient(e) - c);
  return p;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p;
  for (const auto& [e, c] : a.terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, GaussRational> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  LaurentPoly p;
  for (auto& [e, c] : acc) p.set(e, std::move(c));
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const bool compound = sgn(c.re) != 0 && sgn(c.im) != 0;
    out << (compound ? "(" + c.to_string() + ")" : c.to_string());
    if (e != 0) out << "*t^" << e;
  }
  return out.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if ((!a.is_zero() && a.min_exponent() < 0) || b.min_exponent() < 0)
    throw PreconditionError("poly_divmod needs polynomials in t");
  const int db = b.max_exponent();
  const GaussRational lead_inv = b.coefficient(db).inverse();
  LaurentPoly q, r = a;
  while (!r.is_zero() && r.max_exponent() >= db) {
    const int shift = r.max_exponent() - db;
    const LaurentPoly term = LaurentPoly::monomial(r.coefficient(r.max_exponent()) * lead_inv, shift);
    q += term;
    r -= term * b;
  }
  return {q, r};
}

// -------------------------------------------------------------- LaurentMatrix

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

LaurentMatrix LaurentMatrix::t_power(const std::vector<long>& exponents) {
  LaurentMatrix m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m(i, i) = LaurentPoly::t_power(static_cast<int>(exponents[i]));
  return m;
}

bool LaurentMatrix::is_identity() const { return *this == identity(n_); }

std::optional<std::pair<int, int>> LaurentMatrix::exponent_range() const {
  std::optional<std::pair<int, int>> range;
  for (const auto& p : entries_) {
    if (p.is_zero()) continue;
    if (!range)
      range = std::make_pair(p.min_exponent(), p.max_exponent());
    else
      range = std::make_pair(std::min(range->first, p.min_exponent()), std::max(range->second, p.max_exponent()));
  }
  return range;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

LaurentMatrix LaurentMatrix::shifted(int k) const {
  LaurentMatrix m(n_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].shifted(k);
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  LaurentMatrix m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  LaurentMatrix m(a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = a.entries_[i] + b.entries_[i];
  return m;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  LaurentMatrix m(a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = a.entries_[i] - b.entries_[i];
  return m;
}

LaurentMatrix operator*(const LaurentPoly& s, const LaurentMatrix& a) {
  LaurentMatrix m(a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = s * a.entries_[i];
  return m;
}

std::string LaurentMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) { return a * b; }

namespace {

LaurentPoly minor_determinant(const LaurentMatrix& g, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.empty()) return LaurentPoly(1);
  LaurentPoly total;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (g(row, c).is_zero()) continue;
    cols.erase(cols.begin() + static_cast<long>(k));
    LaurentPoly term = g(row, c) * minor_determinant(g, cols, row + 1);
    cols.insert(cols.begin() + static_cast<long>(k), c);
    if (k % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

LaurentMatrix without(const LaurentMatrix& g, std::size_t row, std::size_t col) {
  LaurentMatrix m(g.size() - 1);
  for (std::size_t i = 0, mi = 0; i < g.size(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < g.size(); ++j) {
      if (j == col) continue;
      m(mi, mj++) = g(i, j);
    }
    ++mi;
  }
  return m;
}

}  // namespace

LaurentPoly determinant(const LaurentMatrix& g) {
  std::vector<std::size_t> cols(g.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return minor_determinant(g, cols, 0);
}

bool is_invertible_loop(const LaurentMatrix& g) { return determinant(g).is_monomial(); }

LaurentMatrix mat_inverse(const LaurentMatrix& g) {
  const LaurentPoly det = determinant(g);
  if (!det.is_monomial())
    throw PreconditionError("matrix is not an invertible loop: determinant " + det.to_string() +
                            " is not a non-zero monomial");
  const int k = det.min_exponent();
  const LaurentPoly det_inv = LaurentPoly::monomial(det.coefficient(k).inverse(), -k);
  const std::size_t n = g.size();
  LaurentMatrix inv(n);
  if (n == 1) {
    inv(0, 0) = det_inv;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly cof = determinant(without(g, j, i));
      inv(i, j) = ((i + j) % 2 ? -cof : cof) * det_inv;
    }
  return inv;
}

LaurentMatrix apply_tau(const LaurentMatrix& g) {
  LaurentMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g(i, j).tau();
  return m;
}

LaurentMatrix apply_conjugation(const LaurentMatrix& g) {
  LaurentMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g(i, j).conj();
  return m;
}

// ------------------------------------------------------------ dense Q(i) algebra

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(GaussMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const GaussRational inv = m[row][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[row][j] = m[row][j] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const GaussRational f = m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[row][j].is_zero()) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t gauss_rank(GaussMatrix m) {
  if (m.empty()) return 0;
  return echelon(m, m.front().size()).size();
}

std::optional<std::vector<GaussRational>> gauss_kernel_vector(GaussMatrix m, std::size_t cols) {
  const auto pivots = echelon(m, cols);
  if (pivots.size() == cols) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t k = 0; k <= pivots.size(); ++k, ++free_col)
    if (k == pivots.size() || pivots[k] != free_col) break;
  std::vector<GaussRational> v(cols);
  v[free_col] = GaussRational(1);
  // Reduced echelon: pivot variable = -(entry in the free column).
  for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free_col];
  return v;
}

}  // namespace matsuki
