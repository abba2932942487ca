#include "matsuki/checks.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "matsuki/fundamental_group.hpp"
#include "matsuki/orbit_poset.hpp"

namespace matsuki {

namespace {

// Non-negative integer combinations of simple coroots with height <= bound.
std::vector<Coweight> positive_cone(const RootDatum& datum, Int bound) {
  const std::size_t r = datum.semisimple_rank();
  std::vector<Int> step(r);
  for (std::size_t k = 0; k < r; ++k) step[k] = datum.height(Coweight(datum.simple_coroot(k)));
  std::vector<Coweight> out;
  std::function<void(std::size_t, Coweight, Int)> walk = [&](std::size_t k, Coweight acc, Int h) {
    if (k == r) {
      out.push_back(std::move(acc));
      return;
    }
    for (Int m = 0; h + m * step[k] <= bound; ++m) walk(k + 1, acc + m * Coweight(datum.simple_coroot(k)), h + m * step[k]);
  };
  walk(0, Coweight::zero(datum.rank()), 0);
  return out;
}

struct Tally {
  SuiteResult result;
  explicit Tally(std::string name) { result.suite = std::move(name); }
  void pass() { ++result.cases; }
  void fail(const std::string& what) {
    ++result.cases;
    if (result.passed) result.detail = what;
    result.passed = false;
  }
  void expect(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }
  SuiteResult done() { return std::move(result); }
};

SuiteResult not_applicable(std::string name, std::string why) {
  SuiteResult r;
  r.suite = std::move(name);
  r.detail = "not applicable: " + std::move(why);
  return r;
}

}  // namespace

SuiteResult check_datum_axioms(const InvolutionSpec& spec) {
  Tally t("datum axioms");
  for (const auto& v : validate_involution(spec).violations) t.fail(v);
  if (t.result.passed) t.pass();
  return t.done();
}

SuiteResult check_restricted_generation(const InvolutionSpec& spec, Int bound) {
  Tally t("restricted coroot generation (height <= " + std::to_string(bound) + ")");
  const RestrictedStepSemigroup semigroup(spec, bound);
  for (const auto& x : positive_cone(spec.datum(), bound)) {
    if (!spec.is_fixed(x)) continue;
    t.expect(semigroup.contains(x), [&] { return x.to_string() + " is not a combination of restricted generators"; });
  }
  return t.done();
}

SuiteResult check_semigroup_closure(const InvolutionSpec& spec, Int bound) {
  Tally t("Lambda^+_{S,im} closed under addition (height <= " + std::to_string(bound) + ")");
  const PiOneModel model = pi_star_image(spec);
  const auto elements = enumerate_orbits(spec, model, bound);
  for (const auto& a : elements)
    for (const auto& b : elements) {
      const Coweight s = a.lambda + b.lambda;
      t.expect(spec.datum().is_dominant(s) && spec.is_fixed(s) && model.contains(s),
               [&] { return a.lambda.to_string() + " + " + b.lambda.to_string() + " leaves Lambda^+_{S,im}"; });
    }
  return t.done();
}

SuiteResult check_index_stabilization(const InvolutionSpec& spec, Int bound) {
  const std::string name = "sub-semigroup index stabilization (height " + std::to_string(bound) + ")";
  if (spec.datum().rank() > 2) return not_applicable(name, "rank > 2");
  Tally t(name);
  const PiOneModel model = pi_star_image(spec);
  const double all = static_cast<double>(enumerate_real_dominant(spec, bound).size());
  const double image = static_cast<double>(enumerate_orbits(spec, model, bound).size());
  const double ratio = all / image;
  t.expect(std::abs(ratio / static_cast<double>(model.image_index) - 1.0) <= 0.1, [&] {
    std::ostringstream out;
    out << "ratio " << ratio << " vs image_index " << model.image_index;
    return out.str();
  });
  return t.done();
}

SuiteResult check_connected_k(const RealFormCatalogEntry& entry, Int bound) {
  const std::string name = "connected K: image is all of Lambda^+_S (height <= " + std::to_string(bound) + ")";
  if (!entry.expected_k_connected) return not_applicable(name, "K is disconnected");
  Tally t(name);
  const PiOneModel model = pi_star_image(entry.spec);
  t.expect(model.image_index == 1, [&] { return "image_index " + std::to_string(model.image_index); });
  for (const auto& lambda : enumerate_real_dominant(entry.spec, bound))
    t.expect(in_image(entry.spec, model, lambda), [&] { return lambda.to_string() + " is not in the image"; });
  return t.done();
}

SuiteResult check_real_criterion(const InvolutionSpec& spec, Int bound) {
  Tally t("real coweight criterion (height <= " + std::to_string(bound) + ")");
  for (const auto& lambda : enumerate_dominant(spec.datum(), bound))
    t.expect(real_criterion(spec, lambda) == spec.is_fixed(lambda),
             [&] { return "criterion disagrees with theta-fixedness at " + lambda.to_string(); });
  return t.done();
}

SuiteResult check_order_duality(const InvolutionSpec& spec, Int bound) {
  Tally t("order reversal and step order (height <= " + std::to_string(bound) + ")");
  const auto slice = enumerate_orbits(spec, bound);
  for (const auto& a : slice)
    for (const auto& b : slice)
      t.expect(r_leq(spec, a, b) == k_leq(spec, b, a),
               [&] { return "r_leq/k_leq mismatch at " + a.lambda.to_string() + ", " + b.lambda.to_string(); });

  const RestrictedStepSemigroup semigroup(spec, bound);
  const auto real = enumerate_real_dominant(spec, bound);
  for (const auto& a : real)
    for (const auto& b : real)
      t.expect(semigroup.contains(b - a) == dominance_leq(spec.datum(), a, b),
               [&] { return "step order and dominance disagree at " + a.to_string() + ", " + b.to_string(); });
  return t.done();
}

SuiteResult check_hasse_diagram(const InvolutionSpec& spec, Int bound) {
  Tally t("Hasse diagram regenerates the order (height <= " + std::to_string(bound) + ")");
  const PosetSlice slice = build_poset_slice(spec, bound);
  const std::size_t n = slice.elements.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [lo, hi] : slice.hasse_edges) reach[lo][hi] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.expect(reach[i][j] == k_leq(spec, slice.elements[i], slice.elements[j]), [&] {
        return "closure of Hasse edges disagrees with k_leq at " + slice.elements[i].lambda.to_string() + ", " +
               slice.elements[j].lambda.to_string();
      });
  const OrbitIndex zero{Coweight::zero(spec.datum().rank())};
  for (const auto& e : slice.elements)
    t.expect(e == zero || !k_leq(spec, e, zero), [&] { return e.lambda.to_string() + " lies below 0"; });
  return t.done();
}

SuiteResult check_pgl2_chain(const InvolutionSpec& spec) {
  Tally t("pgl2_so21 chain at height 20");
  const PosetSlice slice = build_poset_slice(spec, 20);
  t.expect(slice.image_index == 2, [&] { return "image_index " + std::to_string(slice.image_index); });
  std::vector<OrbitIndex> expected;
  for (Int n = 0; n <= 10; ++n) expected.push_back(OrbitIndex{Coweight{2 * n}});
  t.expect(slice.elements == expected, [] { return "elements are not 0, 2, ..., 20"; });
  std::vector<std::pair<std::size_t, std::size_t>> chain;
  for (std::size_t i = 0; i + 1 < expected.size(); ++i) chain.emplace_back(i, i + 1);
  t.expect(slice.hasse_edges == chain, [] { return "Hasse edges do not form the chain"; });
  t.expect(slice.components.size() == 1, [] { return "slice is not connected"; });
  return t.done();
}

// -------------------------------------------------------------- loop suites

SuiteResult check_loop_laws(const LoopForm& form, std::uint64_t seed, std::size_t count) {
  Tally t(form.name() + " n=" + std::to_string(form.n()) + ": double-coset laws on " + std::to_string(count) +
          " loops (seed " + std::to_string(seed) + ")");
  const RootDatum& datum = form.lattice_spec().datum();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = seed * 1000003u + 7u * i;
    const LaurentMatrix g = random_loop(form, s);
    const LaurentMatrix a = random_gO_loop(form, s + 1);
    const LaurentMatrix b = random_gO_loop(form, s + 2);
    const LaurentMatrix a_minus = random_gO_minus_loop(form, s + 3);
    const LaurentMatrix h = random_real_loop(form, s + 4);
    const LaurentMatrix k = random_k_loop(form, s + 5);
    const std::string where = " (loop " + std::to_string(i) + ", seed " + std::to_string(s) + ")";

    const Coweight cartan = stratum_invariant(g);
    const Coweight birkhoff = splitting_type(g);
    t.expect(stratum_invariant(a * g * b) == cartan, [&] { return "stratum invariant not G(O)-biinvariant" + where; });
    t.expect(splitting_type(a_minus * g * b) == birkhoff,
             [&] { return "splitting type not G(C[1/t]) x G(C[t]) invariant" + where; });
    t.expect(dominance_leq(datum, birkhoff, cartan), [&] {
      return "splitting type " + birkhoff.to_string() + " not below stratum invariant " + cartan.to_string() + where;
    });

    const Coweight r = r_orbit_invariant(form, g);
    t.expect(r_orbit_invariant(form, h * g) == r, [&] { return "r-orbit invariant changed under LG_R" + where; });
    t.expect(r_orbit_invariant(form, g * b) == r, [&] { return "r-orbit invariant changed under G(C[t])" + where; });
    const Coweight kk = k_orbit_invariant(form, g);
    t.expect(k_orbit_invariant(form, k * g * b) == kk,
             [&] { return "k-orbit invariant changed under K(K) x G(O)" + where; });

    t.expect(apply_tau(apply_tau(g)) == g, [&] { return "tau is not an involution" + where; });
    t.expect(form.theta_tau_anti(form.theta_tau_anti(g)) == g,
             [&] { return "theta_tau anti-involution is not an involution" + where; });
    t.expect(form.theta(form.theta(g)) == g, [&] { return "theta is not an involution" + where; });
    t.expect(form.eta(form.eta(g)) == g, [&] { return "eta is not an involution" + where; });
  }
  return t.done();
}

SuiteResult check_geodesic_duality(const LoopForm& form, Int bound) {
  Tally t(form.name() + " n=" + std::to_string(form.n()) + ": geodesic duality (height <= " + std::to_string(bound) +
          ")");
  const InvolutionSpec& spec = form.lattice_spec();
  const PiOneModel model = pi_star_image(spec);
  for (const auto& lambda : enumerate_real_dominant(spec, bound)) {
    if (form.kind() == LoopForm::Kind::SlSplit) {
      Int sum = 0;
      for (std::size_t i = 0; i < lambda.size(); ++i) sum += lambda[i];
      if (sum != 0) continue;
    }
    if (model.contains(lambda)) {
      const LaurentMatrix c = geodesic_representative(form, lambda);
      t.expect(r_orbit_invariant(form, c) == lambda, [&] { return "r-orbit invariant of geodesic " + lambda.to_string(); });
      t.expect(k_orbit_invariant(form, c) == lambda, [&] { return "k-orbit invariant of geodesic " + lambda.to_string(); });
      t.expect(form.theta_tau_anti(c) == form.eta_anti(c),
               [&] { return "anti-involutions disagree on geodesic " + lambda.to_string(); });
    } else {
      bool refused = false;
      try {
        geodesic_representative(form, lambda);
      } catch (const PreconditionError&) {
        refused = true;
      }
      t.expect(refused, [&] { return "geodesic constructed outside the image at " + lambda.to_string(); });
    }
  }
  return t.done();
}

// ---------------------------------------------------------------- drivers

std::vector<SuiteResult> check_spec(const InvolutionSpec& spec, const RealFormCatalogEntry* entry) {
  std::vector<SuiteResult> out;
  out.push_back(check_datum_axioms(spec));
  if (!out.back().passed) return out;
  out.push_back(check_restricted_generation(spec));
  out.push_back(check_semigroup_closure(spec));
  out.push_back(check_index_stabilization(spec));
  if (entry) out.push_back(check_connected_k(*entry));
  out.push_back(check_real_criterion(spec));
  out.push_back(check_order_duality(spec));
  out.push_back(check_hasse_diagram(spec));
  if (entry && entry->name == "pgl2_so21") out.push_back(check_pgl2_chain(spec));
  return out;
}

std::vector<LoopForm> supported_loop_forms() {
  return {LoopForm::gl_split(2), LoopForm::gl_split(3), LoopForm::sl_split(2),
          LoopForm::sl_split(3), LoopForm::unitary(1, 1), LoopForm::unitary(2, 1)};
}

std::vector<SuiteResult> check_all(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (const auto& entry : catalog_entries())
    for (auto r : check_spec(entry.spec, &entry)) {
      r.suite = entry.name + ": " + r.suite;
      out.push_back(std::move(r));
    }
  for (const auto& form : supported_loop_forms()) {
    out.push_back(check_loop_laws(form, seed));
    out.push_back(check_geodesic_duality(form));
  }
  return out;
}

}  // namespace matsuki
