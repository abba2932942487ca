#pragma once

#include <vector>

#include "matsuki/abelian_group.hpp"
#include "matsuki/real_form.hpp"

namespace matsuki {

/// {alpha^vee positive, theta-fixed} together with {alpha^vee + theta(alpha^vee)}
/// over positive coroots; zero vectors dropped, deduplicated, sorted.
std::vector<Coweight> restricted_coroot_generators(const InvolutionSpec& spec);

/// pi_1(X) modelled as Lambda_S / <restricted coroot generators>. The
/// projection accepts ambient Lambda_T vectors and is meaningful on Lambda_S.
FiniteAbelianGroup pi1_of_X(const InvolutionSpec& spec);

/// The diagram pi_1(G) -> pi_1(X) <- Lambda_S^+. On cocharacters pi_* is
/// lambda -> lambda + theta(lambda).
struct PiOneModel {
  FiniteAbelianGroup pi1G;
  FiniteAbelianGroup pi1X;
  /// lambda + theta(lambda) for lambda running over the standard basis of Lambda_T.
  std::vector<Coweight> image_generators;
  /// Their classes in pi1X.
  std::vector<IntVector> image_classes;
  /// Index of the image in pi1X, equal to the index of Lambda^+_{S,im}.
  Int image_index = 1;

  /// Whether the class of a real coweight lies in the image. No
  /// dominance or theta-fixedness check; see in_image.
  bool contains(const Coweight& lambda) const;
};

PiOneModel pi_star_image(const InvolutionSpec& spec);

/// Membership in Lambda^+_{S,im}. Throws PreconditionError when lambda is not
/// dominant or not theta-fixed.
bool in_image(const InvolutionSpec& spec, const Coweight& lambda);
bool in_image(const InvolutionSpec& spec, const PiOneModel& model, const Coweight& lambda);

}  // namespace matsuki
