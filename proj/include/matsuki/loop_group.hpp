#pragma once

#include <cstdint>
#include <string>

#include "matsuki/laurent.hpp"
#include "matsuki/real_form.hpp"

namespace matsuki {

/// Matrix model of a type-A real form: gl_n or sl_n split, or u(p,q) for the
/// Hermitian form J' pairing e_i with e_{n-1-i} (i < q) and equal to the
/// identity on the middle p - q coordinates.
class LoopForm {
 public:
  enum class Kind { GlSplit, SlSplit, Unitary };

  static LoopForm gl_split(std::size_t n);
  static LoopForm sl_split(std::size_t n);
  static LoopForm unitary(std::size_t p, std::size_t q);
  /// "gl_split", "sl_split" (size from n) or "u(p,q)" with p + q == n.
  static LoopForm parse(const std::string& name, std::size_t n);

  Kind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  /// "gl_split", "sl_split" or "u(p,q)"; round-trips through parse.
  std::string name() const;
  const LaurentMatrix& J() const { return J_; }

  /// Pairing permutation of J' on coordinates (identity for split forms).
  std::size_t partner(std::size_t i) const;

  /// The coweight lattice side: gl_n datum on diagonal coordinates with this
  /// form's involution.
  const InvolutionSpec& lattice_spec() const { return *spec_; }

  /// Real-form conjugation (coefficientwise; t is real).
  LaurentMatrix theta(const LaurentMatrix& g) const;
  /// Holomorphic involution with fixed points K.
  LaurentMatrix eta(const LaurentMatrix& g) const;
  /// Compact conjugation delta = theta o eta.
  LaurentMatrix delta(const LaurentMatrix& g) const;
  /// theta composed with t -> t^-1.
  LaurentMatrix theta_tau(const LaurentMatrix& g) const;
  /// Anti-involution g -> theta_tau(g)^-1.
  LaurentMatrix theta_tau_anti(const LaurentMatrix& g) const;
  /// Anti-involution g -> eta(g)^-1.
  LaurentMatrix eta_anti(const LaurentMatrix& g) const;
  /// pi(g) = eta(g^-1) g.
  LaurentMatrix pi(const LaurentMatrix& g) const;

  /// Differentials on Lie algebra elements: Y -> d(theta_tau)(Y), d(eta)(Y).
  LaurentMatrix lie_theta_tau(const LaurentMatrix& y) const;
  LaurentMatrix lie_eta(const LaurentMatrix& y) const;

  /// Throws PreconditionError unless g has this form's size and is an
  /// invertible loop of the group (det = 1 for sl_n).
  void require_group_element(const LaurentMatrix& g) const;

 private:
  LoopForm(Kind kind, std::size_t n, std::size_t p, std::size_t q);

  Kind kind_;
  std::size_t n_, p_, q_;
  LaurentMatrix J_;
  std::shared_ptr<const InvolutionSpec> spec_;
};

/// Cartan invariant: the dominant coweight of the G(C[t])-double coset,
/// from the t-adic orders of a diagonal form of t^N g over Q(i)[t].
Coweight stratum_invariant(const LaurentMatrix& g);

/// Birkhoff invariant: the dominant coweight of the G(C[t^-1]) x G(C[t])
/// double coset, by column reduction of t^N g over C[t].
Coweight splitting_type(const LaurentMatrix& g);

/// The same invariant recovered from h(k) = dim{u in C[t^-1]^n : t^k u g
/// polynomial}, which equals sum_i max(0, lambda_i + k + 1). Slow; kept as an
/// independent route.
Coweight splitting_type_from_rank_function(const LaurentMatrix& g);

/// h(k) above, for one twist k.
std::size_t splitting_rank_function(const LaurentMatrix& g, int k);

/// stratum_invariant(pi(g)); throws TheoremViolation if the result is not a
/// theta-fixed coweight in the image of pi_1(G).
Coweight k_orbit_invariant(const LoopForm& form, const LaurentMatrix& g);

/// splitting_type(theta_tau_anti(g) g); throws TheoremViolation if the
/// result is not a dominant theta-fixed coweight.
Coweight r_orbit_invariant(const LoopForm& form, const LaurentMatrix& g);

/// A loop c with theta_tau_anti(c) c = t^lambda and pi(c) = t^lambda, checked
/// exactly before returning. Throws PreconditionError when lambda is not a
/// dominant theta-fixed coweight in the image (for split forms: an odd
/// number of odd entries).
LaurentMatrix geodesic_representative(const LoopForm& form, const Coweight& lambda);

/// Seeded generators. `factors` counts the random factors in the product;
/// zero factors give the identity. Each result is checked against its
/// defining symmetry before returning.
LaurentMatrix random_real_loop(const LoopForm& form, std::uint64_t seed, std::size_t factors = 3);
LaurentMatrix random_k_loop(const LoopForm& form, std::uint64_t seed, std::size_t factors = 3);
LaurentMatrix random_gO_loop(const LoopForm& form, std::uint64_t seed, std::size_t factors = 3);
/// tau of random_gO_loop: an element of G(C[t^-1]).
LaurentMatrix random_gO_minus_loop(const LoopForm& form, std::uint64_t seed, std::size_t factors = 3);
/// a(t) t^mu b(t^-1) for random polynomial loops a, b and a small mu.
LaurentMatrix random_loop(const LoopForm& form, std::uint64_t seed);

}  // namespace matsuki
