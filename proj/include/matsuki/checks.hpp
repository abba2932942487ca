#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matsuki/catalog.hpp"
#include "matsuki/loop_group.hpp"

namespace matsuki {

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::size_t cases = 0;
  /// First counterexample on failure, or a note ("not applicable ...").
  std::string detail;
};

SuiteResult check_datum_axioms(const InvolutionSpec& spec);
/// Every theta-fixed element of the positive coroot cone with height <= bound
/// is a non-negative combination of restricted coroot generators.
SuiteResult check_restricted_generation(const InvolutionSpec& spec, Int bound = 12);
SuiteResult check_semigroup_closure(const InvolutionSpec& spec, Int bound = 10);
/// |Lambda^+_S| / |Lambda^+_{S,im}| at the bound is within 10% of the image
/// index; only run for rank <= 2.
SuiteResult check_index_stabilization(const InvolutionSpec& spec, Int bound = 20);
/// in_image holds on all of Lambda^+_S when K is expected to be connected.
SuiteResult check_connected_k(const RealFormCatalogEntry& entry, Int bound = 20);
/// real_criterion(lambda) iff theta(lambda) == lambda on dominant lambda.
SuiteResult check_real_criterion(const InvolutionSpec& spec, Int bound = 12);
/// r_leq(a,b) iff k_leq(b,a) on the slice, and real_step_leq iff
/// dominance_leq on all pairs of Lambda^+_S up to the bound.
SuiteResult check_order_duality(const InvolutionSpec& spec, Int bound = 20);
/// Transitive closure of the Hasse edges equals k_leq; nothing lies below 0.
SuiteResult check_hasse_diagram(const InvolutionSpec& spec, Int bound = 12);
/// The pgl2_so21 slice at height 20 is the chain 0 < 2 < ... < 20 (omega
/// units) with image index 2.
SuiteResult check_pgl2_chain(const InvolutionSpec& spec);

/// Double-coset laws on `count` seeded loops: invariance of the four
/// invariants under the matching subgroup products, splitting type <=
/// stratum invariant, and the involution identities.
SuiteResult check_loop_laws(const LoopForm& form, std::uint64_t seed, std::size_t count = 200);
/// For every lambda in Lambda^+_{S,im} up to the bound, the geodesic loop has
/// both orbit invariants equal to lambda; for real dominant lambda outside
/// the image the constructor refuses.
SuiteResult check_geodesic_duality(const LoopForm& form, Int bound = 8);

/// Lattice suites for one spec; `entry` may be null for file inputs.
std::vector<SuiteResult> check_spec(const InvolutionSpec& spec, const RealFormCatalogEntry* entry);
/// Loop-model forms exercised by `check --all`.
std::vector<LoopForm> supported_loop_forms();
/// Every catalog entry plus every supported loop form.
std::vector<SuiteResult> check_all(std::uint64_t seed);

}  // namespace matsuki
