#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matsuki/lattice.hpp"

namespace matsuki {

/// Finitely generated abelian group Z/d_0 x Z/d_1 x ... (d_i = 0 is a free
/// factor, trivial factors dropped) together with a projection from an
/// ambient lattice onto normal-form coordinates.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  FiniteAbelianGroup(std::vector<Int> invariant_factors, IntMatrix projection);

  /// Z^ambient_dim / (lattice spanned by the columns of `generators`).
  static FiniteAbelianGroup quotient(const IntMatrix& generators, std::size_t ambient_dim);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  const IntMatrix& projection() const { return projection_; }
  std::size_t ambient_dim() const { return projection_.cols(); }

  /// Normal-form class of an ambient vector (torsion coordinates reduced).
  IntVector project(const IntVector& x) const;
  IntVector reduce(IntVector cls) const;

  bool is_trivial() const { return factors_.empty(); }
  /// Group order; nullopt when there is a free factor.
  std::optional<Int> order() const;

  /// Index of the subgroup generated by `classes` (normal-form vectors);
  /// nullopt when the index is infinite.
  std::optional<Int> subgroup_index(const std::vector<IntVector>& classes) const;
  bool in_subgroup(const std::vector<IntVector>& classes, const IntVector& cls) const;

  /// "0", "Z/2", "Z x Z/2", ...
  std::string describe() const;

 private:
  IntMatrix relation_lattice(const std::vector<IntVector>& classes) const;

  std::vector<Int> factors_;
  IntMatrix projection_;
};

}  // namespace matsuki
