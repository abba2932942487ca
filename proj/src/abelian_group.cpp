#include "matsuki/abelian_group.hpp"

#include <stdexcept>

namespace matsuki {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> invariant_factors, IntMatrix projection)
    : factors_(std::move(invariant_factors)), projection_(std::move(projection)) {
  if (projection_.rows() != factors_.size())
    throw std::invalid_argument("FiniteAbelianGroup: projection rows must match factor count");
}

FiniteAbelianGroup FiniteAbelianGroup::quotient(const IntMatrix& generators, std::size_t ambient_dim) {
  IntMatrix gens = generators;
  if (gens.cols() == 0) gens = IntMatrix(ambient_dim, 0);
  if (gens.rows() != ambient_dim) throw std::invalid_argument("quotient: generator dimension mismatch");

  const SmithForm s = smith_normal_form(gens);
  std::vector<Int> factors;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    const Int d = i < s.rank ? s.diagonal(i, i) : 0;
    if (d == 1) continue;
    factors.push_back(d);
    rows.push_back(s.left.row(i));
  }
  return FiniteAbelianGroup(std::move(factors), IntMatrix::from_rows(rows, ambient_dim));
}

IntVector FiniteAbelianGroup::reduce(IntVector cls) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i] != 0) cls[i] = floor_mod(cls[i], factors_[i]);
  return cls;
}

IntVector FiniteAbelianGroup::project(const IntVector& x) const {
  if (factors_.empty()) return {};
  return reduce(projection_ * x);
}

std::optional<Int> FiniteAbelianGroup::order() const {
  Int n = 1;
  for (Int d : factors_) {
    if (d == 0) return std::nullopt;
    n = checked_mul(n, d);
  }
  return n;
}

IntMatrix FiniteAbelianGroup::relation_lattice(const std::vector<IntVector>& classes) const {
  // Columns: the subgroup generators, then d_i e_i for every factor.
  std::vector<IntVector> cols = classes;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    IntVector e(factors_.size(), 0);
    e[i] = factors_[i];
    cols.push_back(std::move(e));
  }
  return IntMatrix::from_columns(cols, factors_.size());
}

std::optional<Int> FiniteAbelianGroup::subgroup_index(const std::vector<IntVector>& classes) const {
  if (factors_.empty()) return 1;
  const SmithForm s = smith_normal_form(relation_lattice(classes));
  if (s.rank < factors_.size()) return std::nullopt;
  Int index = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) index = checked_mul(index, s.diagonal(i, i));
  return index;
}

bool FiniteAbelianGroup::in_subgroup(const std::vector<IntVector>& classes, const IntVector& cls) const {
  if (factors_.empty()) return true;
  return lattice_coordinates(relation_lattice(classes), cls).has_value();
}

std::string FiniteAbelianGroup::describe() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += factors_[i] == 0 ? "Z" : "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

}  // namespace matsuki
