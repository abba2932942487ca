#include "matsuki/orbit_poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace matsuki {

OrbitIndex make_orbit_index(const InvolutionSpec& spec, const PiOneModel& model, const Coweight& lambda) {
  const RootDatum& datum = spec.datum();
  if (lambda.size() != datum.rank())
    throw PreconditionError(lambda.to_string() + " has " + std::to_string(lambda.size()) + " coordinates; " +
                            spec.name() + " expects " + std::to_string(datum.rank()));
  if (!datum.is_dominant(lambda)) throw PreconditionError(lambda.to_string() + " is not dominant");
  if (!spec.is_fixed(lambda)) throw PreconditionError(lambda.to_string() + " is not theta-fixed (not a real coweight)");
  if (!model.contains(lambda))
    throw PreconditionError(lambda.to_string() + " is not in the image of pi_1(G) in pi_1(X)");
  return OrbitIndex{lambda};
}

OrbitIndex make_orbit_index(const InvolutionSpec& spec, const Coweight& lambda) {
  return make_orbit_index(spec, pi_star_image(spec), lambda);
}

const char* to_string(PosetOrder order) { return order == PosetOrder::K ? "K" : "R"; }

std::vector<OrbitIndex> enumerate_orbits(const InvolutionSpec& spec, const PiOneModel& model, Int height_bound) {
  std::vector<OrbitIndex> out;
  for (auto& lambda : enumerate_real_dominant(spec, height_bound))
    if (model.contains(lambda)) out.push_back(OrbitIndex{std::move(lambda)});
  return out;
}

std::vector<OrbitIndex> enumerate_orbits(const InvolutionSpec& spec, Int height_bound) {
  return enumerate_orbits(spec, pi_star_image(spec), height_bound);
}

bool k_leq(const InvolutionSpec& spec, const OrbitIndex& a, const OrbitIndex& b) {
  return dominance_leq(spec.datum(), a.lambda, b.lambda);
}

bool r_leq(const InvolutionSpec& spec, const OrbitIndex& a, const OrbitIndex& b) { return k_leq(spec, b, a); }

CoreData core_data(const RootDatum& datum, const Coweight& lambda) {
  CoreData core{lambda, {}, 0};
  for (std::size_t k = 0; k < datum.semisimple_rank(); ++k)
    if (dot(datum.simple_root(k), lambda.coords()) == 0) core.parabolic_simple_roots.push_back(k);
  for (std::size_t i : datum.positive_indices())
    if (dot(datum.roots()[i], lambda.coords()) > 0) ++core.flag_dimension;
  return core;
}

CoreData core_data(const InvolutionSpec& spec, const OrbitIndex& a) { return core_data(spec.datum(), a.lambda); }

DualPair matsuki_dual(const InvolutionSpec& spec, const OrbitIndex& a) {
  const OrbitIndex checked = make_orbit_index(spec, a.lambda);
  return DualPair{checked, checked, core_data(spec, checked)};
}

// ------------------------------------------------------------ step semigroup

RestrictedStepSemigroup::RestrictedStepSemigroup(const InvolutionSpec& spec, Int height_cap)
    : datum_(spec.datum_ptr()), generators_(restricted_coroot_generators(spec)), cap_(height_cap) {
  for (const auto& g : generators_)
    if (datum_->height(g) <= 0)
      throw PreconditionError("restricted coroot generator " + g.to_string() + " has non-positive height");

  std::set<Coweight> seen{Coweight::zero(datum_->rank())};
  std::deque<Coweight> queue{Coweight::zero(datum_->rank())};
  while (!queue.empty()) {
    const Coweight x = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      Coweight y = x + g;
      if (datum_->height(y) > cap_) continue;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  members_.assign(seen.begin(), seen.end());
}

bool RestrictedStepSemigroup::descend(const Coweight& d, std::map<Coweight, bool>& memo) const {
  const Int h = datum_->height(d);
  if (h <= cap_) return std::binary_search(members_.begin(), members_.end(), d);
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  bool found = false;
  for (const auto& g : generators_)
    if (descend(d - g, memo)) {
      found = true;
      break;
    }
  memo.emplace(d, found);
  return found;
}

bool RestrictedStepSemigroup::contains(const Coweight& d) const {
  std::map<Coweight, bool> memo;
  return descend(d, memo);
}

bool real_step_leq(const InvolutionSpec& spec, const Coweight& a, const Coweight& b) {
  const Coweight d = b - a;
  return RestrictedStepSemigroup(spec, std::max<Int>(0, spec.datum().height(d))).contains(d);
}

// ------------------------------------------------------------- Hasse diagram

namespace {

// Whether some nu in Lambda^+_{S,im} satisfies a < nu < b, searching the box
// of simple-coroot coordinates of b - a.
bool has_intermediate(const InvolutionSpec& spec, const PiOneModel& model, const Coweight& a,
                      const IntVector& coords) {
  const RootDatum& datum = spec.datum();
  const std::size_t r = coords.size();
  IntVector m(r, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < r && m[k] == coords[k]) m[k++] = 0;
    if (k == r) return false;
    ++m[k];
    if (m == coords) continue;
    Coweight nu = a;
    for (std::size_t j = 0; j < r; ++j)
      if (m[j] != 0) nu = nu + m[j] * Coweight(datum.simple_coroot(j));
    if (datum.is_dominant(nu) && spec.is_fixed(nu) && model.contains(nu)) return true;
  }
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> primitive_relations(const InvolutionSpec& spec,
                                                                     const PiOneModel& model,
                                                                     const std::vector<OrbitIndex>& elements) {
  const RootDatum& datum = spec.datum();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i == j) continue;
      const auto coords = datum.simple_coroot_coordinates(elements[j].lambda - elements[i].lambda);
      if (!coords || std::any_of(coords->begin(), coords->end(), [](Int x) { return x < 0; })) continue;
      if (!has_intermediate(spec, model, elements[i].lambda, *coords)) edges.emplace_back(i, j);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::pair<std::size_t, std::size_t>> primitive_relations(const InvolutionSpec& spec,
                                                                     const std::vector<OrbitIndex>& elements) {
  return primitive_relations(spec, pi_star_image(spec), elements);
}

std::vector<std::vector<std::size_t>> comparability_components(const InvolutionSpec& spec,
                                                               const std::vector<OrbitIndex>& elements) {
  std::vector<std::size_t> parent(elements.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (find(i) != find(j) && (k_leq(spec, elements[i], elements[j]) || k_leq(spec, elements[j], elements[i])))
        parent[find(i)] = find(j);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < elements.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

PosetSlice build_poset_slice(const InvolutionSpec& spec, Int height_bound, PosetOrder order) {
  const PiOneModel model = pi_star_image(spec);
  PosetSlice slice;
  slice.spec_name = spec.name();
  slice.height_bound = height_bound;
  slice.order = order;
  slice.image_index = model.image_index;
  slice.elements = enumerate_orbits(spec, model, height_bound);
  slice.hasse_edges = primitive_relations(spec, model, slice.elements);
  if (order == PosetOrder::R) {
    for (auto& [lo, hi] : slice.hasse_edges) std::swap(lo, hi);
    std::sort(slice.hasse_edges.begin(), slice.hasse_edges.end());
  }
  slice.components = comparability_components(spec, slice.elements);
  return slice;
}

std::vector<std::size_t> component_minima(const PosetSlice& slice, const std::vector<std::size_t>& component) {
  std::set<std::size_t> covered;
  for (const auto& [lo, hi] : slice.hasse_edges) covered.insert(hi);
  std::vector<std::size_t> minima;
  for (std::size_t i : component)
    if (!covered.count(i)) minima.push_back(i);
  return minima;
}

}  // namespace matsuki
