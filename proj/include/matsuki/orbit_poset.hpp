#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matsuki/fundamental_group.hpp"

namespace matsuki {

/// An element of Lambda^+_{S,im}: indexes both a K(K)-orbit and its dual
/// LG_R-orbit on the affine Grassmannian.
struct OrbitIndex {
  Coweight lambda;

  friend bool operator==(const OrbitIndex&, const OrbitIndex&) = default;
  friend auto operator<=>(const OrbitIndex&, const OrbitIndex&) = default;
};

/// Checks dominance, theta-fixedness and image membership, in that order;
/// the PreconditionError names the first failing condition.
OrbitIndex make_orbit_index(const InvolutionSpec& spec, const PiOneModel& model, const Coweight& lambda);
OrbitIndex make_orbit_index(const InvolutionSpec& spec, const Coweight& lambda);

enum class PosetOrder { K, R };
const char* to_string(PosetOrder order);

/// The core C^lambda = G . lambda, a flag variety G/P(lambda).
struct CoreData {
  Coweight lambda;
  /// Simple positions k with <alpha_k, lambda> = 0.
  std::vector<std::size_t> parabolic_simple_roots;
  /// Number of positive roots positive on lambda; dim G/P(lambda).
  std::size_t flag_dimension = 0;
};

struct PosetSlice {
  std::string spec_name;
  Int height_bound = 0;
  PosetOrder order = PosetOrder::K;
  std::vector<OrbitIndex> elements;
  /// (lower, upper) positions into `elements`, lower < upper in `order`.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
  /// Connected components of the comparability graph restricted to the
  /// slice, each sorted; components ordered by their first element.
  std::vector<std::vector<std::size_t>> components;
  Int image_index = 1;
};

/// Lambda^+_{S,im} within the height bound, sorted lexicographically.
std::vector<OrbitIndex> enumerate_orbits(const InvolutionSpec& spec, Int height_bound);
std::vector<OrbitIndex> enumerate_orbits(const InvolutionSpec& spec, const PiOneModel& model, Int height_bound);

/// Closure order on K(K)-orbits: coroot dominance.
bool k_leq(const InvolutionSpec& spec, const OrbitIndex& a, const OrbitIndex& b);
/// Closure order on LG_R-orbits: reversed dominance.
bool r_leq(const InvolutionSpec& spec, const OrbitIndex& a, const OrbitIndex& b);

struct DualPair {
  OrbitIndex k_orbit;
  OrbitIndex r_orbit;
  /// The two orbits meet along a single LK_c-orbit inside this core.
  CoreData core;
};

DualPair matsuki_dual(const InvolutionSpec& spec, const OrbitIndex& a);

CoreData core_data(const InvolutionSpec& spec, const OrbitIndex& a);
CoreData core_data(const RootDatum& datum, const Coweight& lambda);

/// Non-negative integer combinations of the restricted coroot generators.
/// Everything of height <= cap is generated up front; larger queries fall
/// back to a memoized descent. Immutable after construction.
class RestrictedStepSemigroup {
 public:
  RestrictedStepSemigroup(const InvolutionSpec& spec, Int height_cap);

  bool contains(const Coweight& d) const;
  const std::vector<Coweight>& generators() const { return generators_; }
  std::size_t generated_size() const { return members_.size(); }

 private:
  bool descend(const Coweight& d, std::map<Coweight, bool>& memo) const;

  RootDatumPtr datum_;
  std::vector<Coweight> generators_;
  Int cap_;
  std::vector<Coweight> members_;  // sorted
};

/// b - a is a non-negative integral combination of restricted coroot
/// generators. Requires a, b in Lambda^+_S.
bool real_step_leq(const InvolutionSpec& spec, const Coweight& a, const Coweight& b);

/// Pairs a < b (K-order) with nothing of Lambda^+_{S,im} strictly between,
/// as positions into `elements`. Betweenness is searched over the whole
/// dominance interval, not just the given elements.
std::vector<std::pair<std::size_t, std::size_t>> primitive_relations(const InvolutionSpec& spec,
                                                                     const PiOneModel& model,
                                                                     const std::vector<OrbitIndex>& elements);
std::vector<std::pair<std::size_t, std::size_t>> primitive_relations(const InvolutionSpec& spec,
                                                                     const std::vector<OrbitIndex>& elements);

std::vector<std::vector<std::size_t>> comparability_components(const InvolutionSpec& spec,
                                                               const std::vector<OrbitIndex>& elements);

PosetSlice build_poset_slice(const InvolutionSpec& spec, Int height_bound, PosetOrder order = PosetOrder::K);

/// Positions of the minimal elements of one component.
std::vector<std::size_t> component_minima(const PosetSlice& slice, const std::vector<std::size_t>& component);

}  // namespace matsuki
