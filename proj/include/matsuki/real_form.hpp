#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "matsuki/root_datum.hpp"

namespace matsuki {

/// A real form, seen through the integer involution theta it induces on the
/// cocharacter lattice of a theta-stable maximally split torus.
class InvolutionSpec {
 public:
  /// Throws PreconditionError on a shape mismatch; the algebraic invariants
  /// are checked by validate_involution.
  InvolutionSpec(std::string name, RootDatumPtr datum, IntMatrix theta);

  const std::string& name() const { return name_; }
  const RootDatum& datum() const { return *datum_; }
  const RootDatumPtr& datum_ptr() const { return datum_; }
  const IntMatrix& theta() const { return theta_; }

  Coweight apply(const Coweight& lambda) const { return theta_ * lambda; }
  bool is_fixed(const Coweight& lambda) const { return apply(lambda) == lambda; }

 private:
  std::string name_;
  RootDatumPtr datum_;
  IntMatrix theta_;
};

ValidationReport validate_involution(const InvolutionSpec& spec);

/// Basis of Lambda_S = ker(theta - 1), a saturated sublattice of Lambda_T.
std::vector<Coweight> lambda_S_basis(const InvolutionSpec& spec);

/// Simple positions whose roots vanish on Lambda_S (the Levi M of the
/// minimal parabolic).
std::vector<std::size_t> levi_M_simple_roots(const InvolutionSpec& spec);

IntMatrix w_M(const InvolutionSpec& spec);

/// Dominant representative of theta(lambda). Requires dominant lambda.
Coweight theta_tau_on_dominant(const InvolutionSpec& spec, const Coweight& lambda);

/// theta_tau_on_dominant(lambda) == lambda and w_M lambda == lambda.
/// Requires dominant lambda.
bool real_criterion(const InvolutionSpec& spec, const Coweight& lambda);

/// Dominant theta-fixed coweights within the height bound, sorted.
std::vector<Coweight> enumerate_real_dominant(const InvolutionSpec& spec, Int bound);

}  // namespace matsuki
