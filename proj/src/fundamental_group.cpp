#include "matsuki/fundamental_group.hpp"

#include <algorithm>
#include <set>

namespace matsuki {

std::vector<Coweight> restricted_coroot_generators(const InvolutionSpec& spec) {
  const RootDatum& datum = spec.datum();
  std::set<Coweight> gens;
  for (std::size_t i : datum.positive_indices()) {
    const Coweight a(datum.coroots()[i]);
    const Coweight ta = spec.apply(a);
    if (ta == a) gens.insert(a);
    if (Coweight s = a + ta; !s.is_zero()) gens.insert(std::move(s));
  }
  return {gens.begin(), gens.end()};
}

FiniteAbelianGroup pi1_of_X(const InvolutionSpec& spec) {
  const std::size_t rank = spec.datum().rank();
  const auto basis = lambda_S_basis(spec);
  if (basis.empty()) return FiniteAbelianGroup({}, IntMatrix(0, rank));

  std::vector<IntVector> cols;
  for (const auto& b : basis) cols.push_back(b.coords());
  const IntMatrix b = IntMatrix::from_columns(cols, rank);
  const std::size_t s = basis.size();

  // Integral left inverse of the (saturated) basis: V [I_s | 0] U.
  const SmithForm snf = smith_normal_form(b);
  IntMatrix select(s, rank);
  for (std::size_t i = 0; i < s; ++i) select(i, i) = 1;
  const IntMatrix left_inverse = snf.right * select * snf.left;

  std::vector<IntVector> gen_coords;
  for (const auto& g : restricted_coroot_generators(spec)) gen_coords.push_back(left_inverse * g.coords());
  const FiniteAbelianGroup q = FiniteAbelianGroup::quotient(IntMatrix::from_columns(gen_coords, s), s);
  return FiniteAbelianGroup(q.invariant_factors(), q.projection() * left_inverse);
}

bool PiOneModel::contains(const Coweight& lambda) const {
  return pi1X.in_subgroup(image_classes, pi1X.project(lambda.coords()));
}

PiOneModel pi_star_image(const InvolutionSpec& spec) {
  const RootDatum& datum = spec.datum();
  PiOneModel model{pi1_of_G(datum), pi1_of_X(spec), {}, {}, 1};
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    Coweight e = Coweight::zero(datum.rank());
    e[i] = 1;
    Coweight g = e + spec.apply(e);
    model.image_classes.push_back(model.pi1X.project(g.coords()));
    model.image_generators.push_back(std::move(g));
  }
  const auto index = model.pi1X.subgroup_index(model.image_classes);
  if (!index)
    throw TheoremViolation("finite index sub-semigroup",
                           "image of pi_1(G) has infinite index in pi_1(X) for " + spec.name());
  model.image_index = *index;
  return model;
}

bool in_image(const InvolutionSpec& spec, const PiOneModel& model, const Coweight& lambda) {
  if (lambda.size() != spec.datum().rank())
    throw PreconditionError("in_image: " + lambda.to_string() + " has the wrong rank");
  if (!spec.datum().is_dominant(lambda)) throw PreconditionError("in_image: " + lambda.to_string() + " is not dominant");
  if (!spec.is_fixed(lambda)) throw PreconditionError("in_image: " + lambda.to_string() + " is not theta-fixed");
  return model.contains(lambda);
}

bool in_image(const InvolutionSpec& spec, const Coweight& lambda) {
  return in_image(spec, pi_star_image(spec), lambda);
}

}  // namespace matsuki
