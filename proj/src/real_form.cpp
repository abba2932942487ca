#include "matsuki/real_form.hpp"

#include <algorithm>
#include <set>

namespace matsuki {

InvolutionSpec::InvolutionSpec(std::string name, RootDatumPtr datum, IntMatrix theta)
    : name_(std::move(name)), datum_(std::move(datum)), theta_(std::move(theta)) {
  if (!datum_) throw PreconditionError("involution " + name_ + ": missing root datum");
  if (theta_.rows() != datum_->rank() || theta_.cols() != datum_->rank())
    throw PreconditionError("involution " + name_ + ": theta must be " + std::to_string(datum_->rank()) + "x" +
                            std::to_string(datum_->rank()));
}

ValidationReport validate_involution(const InvolutionSpec& spec) {
  ValidationReport report;
  const RootDatum& datum = spec.datum();
  for (const auto& v : validate_root_datum(datum).violations) report.add("datum: " + v);

  const IntMatrix& theta = spec.theta();
  if (!(theta * theta).is_identity()) report.add("involution: theta^2 is not the identity");

  const std::set<IntVector> coroots(datum.coroots().begin(), datum.coroots().end());
  std::set<IntVector> image;
  for (const auto& c : datum.coroots()) image.insert(theta * c);
  if (image != coroots) report.add("coroots: theta does not permute the coroots");

  const IntMatrix theta_t = theta.transpose();
  const std::set<IntVector> roots(datum.roots().begin(), datum.roots().end());
  std::set<IntVector> root_image;
  for (const auto& r : datum.roots()) root_image.insert(theta_t * r);
  if (root_image != roots) report.add("roots: theta^T does not permute the roots");

  // Positive roots that are non-zero on Lambda_S must be permuted by theta^T.
  const auto basis = lambda_S_basis(spec);
  std::set<IntVector> restricted_positive;
  for (std::size_t i : datum.positive_indices()) {
    const auto& a = datum.roots()[i];
    if (std::any_of(basis.begin(), basis.end(), [&](const Coweight& b) { return dot(a, b.coords()) != 0; }))
      restricted_positive.insert(a);
  }
  std::set<IntVector> restricted_image;
  for (const auto& a : restricted_positive) restricted_image.insert(theta_t * a);
  if (restricted_image != restricted_positive)
    report.add("compatibility: theta^T does not permute the positive roots that are non-zero on Lambda_S");
  return report;
}

std::vector<Coweight> lambda_S_basis(const InvolutionSpec& spec) {
  const IntMatrix m = spec.theta() - IntMatrix::identity(spec.datum().rank());
  std::vector<Coweight> basis;
  for (auto& v : kernel_basis(m)) basis.emplace_back(std::move(v));
  return basis;
}

std::vector<std::size_t> levi_M_simple_roots(const InvolutionSpec& spec) {
  const RootDatum& datum = spec.datum();
  const auto basis = lambda_S_basis(spec);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < datum.semisimple_rank(); ++k)
    if (std::all_of(basis.begin(), basis.end(),
                    [&](const Coweight& b) { return dot(datum.simple_root(k), b.coords()) == 0; }))
      out.push_back(k);
  return out;
}

IntMatrix w_M(const InvolutionSpec& spec) { return weyl_longest_element(spec.datum(), levi_M_simple_roots(spec)); }

Coweight theta_tau_on_dominant(const InvolutionSpec& spec, const Coweight& lambda) {
  if (!spec.datum().is_dominant(lambda))
    throw PreconditionError("theta_tau_on_dominant: " + lambda.to_string() + " is not dominant");
  return dominant_representative(spec.datum(), spec.apply(lambda)).coweight;
}

bool real_criterion(const InvolutionSpec& spec, const Coweight& lambda) {
  if (!spec.datum().is_dominant(lambda))
    throw PreconditionError("real_criterion: " + lambda.to_string() + " is not dominant");
  return theta_tau_on_dominant(spec, lambda) == lambda && w_M(spec) * lambda == lambda;
}

std::vector<Coweight> enumerate_real_dominant(const InvolutionSpec& spec, Int bound) {
  std::vector<Coweight> out;
  for (auto& lambda : enumerate_dominant(spec.datum(), bound))
    if (spec.is_fixed(lambda)) out.push_back(std::move(lambda));
  return out;
}

}  // namespace matsuki
