#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matsuki/errors.hpp"
#include "matsuki/lattice.hpp"

namespace matsuki {

class FiniteAbelianGroup;

/// A reductive root datum on Lambda_T = Z^rank. Roots are characters (dual
/// copy of Z^rank), coroots are cocharacters; the pairing is the dot product.
/// `roots` must list every root (both signs); roots[i] pairs with coroots[i].
///
/// Simple roots are addressed by their position k in `simple_indices()`, not
/// by root index, throughout the library.
class RootDatum {
 public:
  /// Throws PreconditionError on shape errors or linearly dependent simple
  /// roots. Axiom violations are left to validate_root_datum.
  RootDatum(std::string name, std::size_t rank, std::vector<IntVector> roots, std::vector<IntVector> coroots,
            std::vector<std::size_t> simple_indices);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_.size(); }

  const std::vector<IntVector>& roots() const { return roots_; }
  const std::vector<IntVector>& coroots() const { return coroots_; }
  const std::vector<std::size_t>& simple_indices() const { return simple_; }
  const std::vector<std::size_t>& positive_indices() const { return positive_; }

  const IntVector& simple_root(std::size_t k) const { return roots_[simple_[k]]; }
  const IntVector& simple_coroot(std::size_t k) const { return coroots_[simple_[k]]; }

  /// Coordinates of root i in the simple-root basis, when it lies in their
  /// rational span and the coordinates are integral.
  const std::optional<IntVector>& root_simple_coordinates(std::size_t i) const { return root_coords_[i]; }

  /// C(j, k) = <alpha_j, alpha_k^vee> over simple positions.
  const IntMatrix& cartan_matrix() const { return cartan_; }

  /// Sum of the positive roots.
  const IntVector& two_rho() const { return two_rho_; }
  Int height(const Coweight& lambda) const { return dot(two_rho_, lambda.coords()); }

  /// Integer basis of the characters that vanish on every coroot.
  const std::vector<IntVector>& central_functionals() const { return central_; }

  bool is_dominant(const Coweight& lambda) const;

  /// Matrix of the simple reflection at position k acting on cocharacters:
  /// lambda -> lambda - <alpha_k, lambda> alpha_k^vee.
  IntMatrix reflection(std::size_t k) const;

  /// Integer coordinates of d in the simple-coroot basis; nullopt when d lies
  /// outside their rational span or the coordinates are not integral.
  std::optional<IntVector> simple_coroot_coordinates(const Coweight& d) const;

  /// Recovers x from (<alpha_k, x>)_k followed by (<c_j, x>)_j for the
  /// central functionals; nullopt when x is not integral.
  std::optional<Coweight> from_frame_coordinates(const IntVector& frame) const;

 private:
  std::string name_;
  std::size_t rank_;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> positive_;
  std::vector<std::optional<IntVector>> root_coords_;
  IntMatrix cartan_;
  IntegralInverse cartan_inverse_;
  IntVector two_rho_;
  std::vector<IntVector> central_;
  IntegralInverse frame_inverse_;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

/// Appends the negatives of any listed roots (and their coroots) that are
/// missing, so files may list just a positive system.
std::pair<std::vector<IntVector>, std::vector<IntVector>> close_under_negation(std::vector<IntVector> roots,
                                                                              std::vector<IntVector> coroots);

ValidationReport validate_root_datum(const RootDatum& datum);

struct DominantRepresentative {
  Coweight coweight;
  /// Simple positions in application order: coweight = s_{w[m-1]} ... s_{w[0]} (lambda).
  std::vector<std::size_t> word;
};

DominantRepresentative dominant_representative(const RootDatum& datum, const Coweight& lambda);

/// mu <= lambda: lambda - mu is a non-negative integral combination of
/// simple coroots. False when lambda - mu leaves the rational coroot span.
bool dominance_leq(const RootDatum& datum, const Coweight& mu, const Coweight& lambda);

/// Longest element of the parabolic Weyl subgroup generated by the simple
/// positions in `subset`, as a matrix on Lambda_T.
IntMatrix weyl_longest_element(const RootDatum& datum, const std::vector<std::size_t>& subset);

/// pi_1(G) = Lambda_T / (coroot lattice).
FiniteAbelianGroup pi1_of_G(const RootDatum& datum);

/// Every dominant coweight with height <= bound and |<c, lambda>| <= bound
/// for each central functional c. Sorted lexicographically.
std::vector<Coweight> enumerate_dominant(const RootDatum& datum, Int bound);

/// True when height(lambda) and the central functionals respect `bound`.
bool within_bound(const RootDatum& datum, const Coweight& lambda, Int bound);

}  // namespace matsuki
