#include "matsuki/root_datum.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "matsuki/abelian_group.hpp"

namespace matsuki {

RootDatum::RootDatum(std::string name, std::size_t rank, std::vector<IntVector> roots, std::vector<IntVector> coroots,
                     std::vector<std::size_t> simple_indices)
    : name_(std::move(name)),
      rank_(rank),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      simple_(std::move(simple_indices)) {
  if (rank_ == 0) throw PreconditionError("root datum " + name_ + ": rank must be positive");
  if (roots_.size() != coroots_.size())
    throw PreconditionError("root datum " + name_ + ": roots and coroots must be index-paired");
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].size() != rank_ || coroots_[i].size() != rank_)
      throw PreconditionError("root datum " + name_ + ": root/coroot " + std::to_string(i) + " has wrong length");
  std::set<std::size_t> seen;
  for (std::size_t s : simple_) {
    if (s >= roots_.size()) throw PreconditionError("root datum " + name_ + ": simple index out of range");
    if (!seen.insert(s).second) throw PreconditionError("root datum " + name_ + ": repeated simple index");
  }

  std::vector<IntVector> simple_roots;
  for (std::size_t s : simple_) simple_roots.push_back(roots_[s]);
  const IntMatrix simple_cols = IntMatrix::from_columns(simple_roots, rank_);
  if (smith_normal_form(simple_cols).rank != simple_.size())
    throw PreconditionError("root datum " + name_ + ": simple roots are linearly dependent");

  root_coords_.reserve(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    root_coords_.push_back(lattice_coordinates(simple_cols, roots_[i]));
    const auto& c = root_coords_.back();
    if (c && std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; }) &&
        std::any_of(c->begin(), c->end(), [](Int x) { return x > 0; }))
      positive_.push_back(i);
  }

  const std::size_t r = simple_.size();
  cartan_ = IntMatrix(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) cartan_(j, k) = dot(simple_root(j), simple_coroot(k));
  cartan_inverse_ = integral_inverse(cartan_);

  two_rho_.assign(rank_, 0);
  for (std::size_t i : positive_)
    for (std::size_t c = 0; c < rank_; ++c) two_rho_[c] = checked_add(two_rho_[c], roots_[i][c]);

  central_ = kernel_basis(IntMatrix::from_rows(coroots_, rank_));

  std::vector<IntVector> frame = simple_roots;
  frame.insert(frame.end(), central_.begin(), central_.end());
  frame_inverse_ = integral_inverse(IntMatrix::from_rows(frame, rank_));
}

bool RootDatum::is_dominant(const Coweight& lambda) const {
  for (std::size_t k = 0; k < simple_.size(); ++k)
    if (dot(simple_root(k), lambda.coords()) < 0) return false;
  return true;
}

IntMatrix RootDatum::reflection(std::size_t k) const {
  const IntVector& a = simple_root(k);
  const IntVector& av = simple_coroot(k);
  IntMatrix m = IntMatrix::identity(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) m(i, j) = checked_add(m(i, j), -checked_mul(av[i], a[j]));
  return m;
}

std::optional<IntVector> RootDatum::simple_coroot_coordinates(const Coweight& d) const {
  IntVector pairings(simple_.size());
  for (std::size_t k = 0; k < simple_.size(); ++k) pairings[k] = dot(simple_root(k), d.coords());
  auto coords = solve_integral(cartan_inverse_, pairings);
  if (!coords) return std::nullopt;
  IntVector back(rank_, 0);
  for (std::size_t k = 0; k < simple_.size(); ++k)
    for (std::size_t c = 0; c < rank_; ++c)
      back[c] = checked_add(back[c], checked_mul((*coords)[k], simple_coroot(k)[c]));
  if (back != d.coords()) return std::nullopt;
  return coords;
}

std::optional<Coweight> RootDatum::from_frame_coordinates(const IntVector& frame) const {
  auto x = solve_integral(frame_inverse_, frame);
  if (!x) return std::nullopt;
  return Coweight(std::move(*x));
}

std::pair<std::vector<IntVector>, std::vector<IntVector>> close_under_negation(std::vector<IntVector> roots,
                                                                              std::vector<IntVector> coroots) {
  const std::size_t n = roots.size();
  for (std::size_t i = 0; i < n; ++i) {
    IntVector neg = roots[i];
    for (auto& x : neg) x = -x;
    if (std::find(roots.begin(), roots.end(), neg) != roots.end()) continue;
    IntVector coneg = coroots[i];
    for (auto& x : coneg) x = -x;
    roots.push_back(std::move(neg));
    coroots.push_back(std::move(coneg));
  }
  return {std::move(roots), std::move(coroots)};
}

ValidationReport validate_root_datum(const RootDatum& datum) {
  ValidationReport report;
  const auto& roots = datum.roots();
  const auto& coroots = datum.coroots();

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Int p = dot(roots[i], coroots[i]);
    if (p != 2)
      report.add("pairing: <root " + std::to_string(i) + ", coroot " + std::to_string(i) + "> = " +
                 std::to_string(p) + " (expected 2)");
  }

  const std::set<IntVector> coroot_set(coroots.begin(), coroots.end());
  const std::set<IntVector> root_set(roots.begin(), roots.end());
  for (std::size_t k = 0; k < datum.semisimple_rank(); ++k) {
    const IntMatrix s = datum.reflection(k);
    std::set<IntVector> image;
    for (const auto& c : coroots) image.insert(s * c);
    if (image != coroot_set) report.add("reflection: s_" + std::to_string(k) + " does not permute the coroots");

    // Dual action on characters: alpha -> alpha - <alpha, alpha_k^vee> alpha_k.
    std::set<IntVector> root_image;
    for (const auto& a : roots) {
      const Int p = dot(a, datum.simple_coroot(k));
      IntVector b = a;
      for (std::size_t c = 0; c < b.size(); ++c) b[c] = checked_add(b[c], -checked_mul(p, datum.simple_root(k)[c]));
      root_image.insert(std::move(b));
    }
    if (root_image != root_set) report.add("reflection: s_" + std::to_string(k) + " does not permute the roots");
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& c = datum.root_simple_coordinates(i);
    const bool nonneg = c && std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
    const bool nonpos = c && std::all_of(c->begin(), c->end(), [](Int x) { return x <= 0; });
    if (!nonneg && !nonpos)
      report.add("positivity: root " + std::to_string(i) + " " + format_vector(roots[i]) +
                 " is not a sign-coherent integral combination of simple roots");
  }
  return report;
}

DominantRepresentative dominant_representative(const RootDatum& datum, const Coweight& lambda) {
  DominantRepresentative out{lambda, {}};
  // Each step adds a positive multiple of a simple coroot, so <rho, .> grows
  // strictly; the cap only guards against invalid data.
  constexpr std::size_t kMaxSteps = 100000;
  for (std::size_t step = 0; step < kMaxSteps; ++step) {
    std::optional<std::size_t> bad;
    for (std::size_t k = 0; k < datum.semisimple_rank(); ++k)
      if (dot(datum.simple_root(k), out.coweight.coords()) < 0) {
        bad = k;
        break;
      }
    if (!bad) return out;
    out.coweight = datum.reflection(*bad) * out.coweight;
    out.word.push_back(*bad);
  }
  throw PreconditionError("dominant_representative: no dominant chamber reached; is the datum valid?");
}

bool dominance_leq(const RootDatum& datum, const Coweight& mu, const Coweight& lambda) {
  const auto coords = datum.simple_coroot_coordinates(lambda - mu);
  return coords && std::all_of(coords->begin(), coords->end(), [](Int x) { return x >= 0; });
}

IntMatrix weyl_longest_element(const RootDatum& datum, const std::vector<std::size_t>& subset) {
  const std::set<std::size_t> in_subset(subset.begin(), subset.end());
  for (std::size_t k : in_subset)
    if (k >= datum.semisimple_rank()) throw PreconditionError("weyl_longest_element: simple position out of range");

  // Regular dominant point of the sub-system: the sum of its positive coroots.
  Coweight x = Coweight::zero(datum.rank());
  for (std::size_t i : datum.positive_indices()) {
    const auto& c = *datum.root_simple_coordinates(i);
    bool supported = true;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0 && !in_subset.count(k)) supported = false;
    if (supported) x = x + Coweight(datum.coroots()[i]);
  }

  IntMatrix w = IntMatrix::identity(datum.rank());
  for (;;) {
    std::optional<std::size_t> up;
    for (std::size_t k : in_subset)
      if (dot(datum.simple_root(k), x.coords()) > 0) {
        up = k;
        break;
      }
    if (!up) return w;
    const IntMatrix s = datum.reflection(*up);
    x = s * x;
    w = s * w;
  }
}

FiniteAbelianGroup pi1_of_G(const RootDatum& datum) {
  return FiniteAbelianGroup::quotient(IntMatrix::from_columns(datum.coroots(), datum.rank()), datum.rank());
}

bool within_bound(const RootDatum& datum, const Coweight& lambda, Int bound) {
  if (datum.height(lambda) > bound) return false;
  for (const auto& c : datum.central_functionals()) {
    const Int v = dot(c, lambda.coords());
    if (v > bound || v < -bound) return false;
  }
  return true;
}

std::vector<Coweight> enumerate_dominant(const RootDatum& datum, Int bound) {
  std::vector<Coweight> out;
  if (bound < 0) return out;
  const std::size_t r = datum.semisimple_rank();
  const std::size_t z = datum.central_functionals().size();

  // Height in frame coordinates is sum_k m_k y_k with 2 rho = sum_k m_k alpha_k.
  IntVector m(r, 0);
  for (std::size_t i : datum.positive_indices()) {
    const auto& c = *datum.root_simple_coordinates(i);
    for (std::size_t k = 0; k < r; ++k) m[k] += c[k];
  }

  IntVector frame(r + z, 0);
  std::function<void(std::size_t, Int)> walk = [&](std::size_t pos, Int height) {
    if (pos == r + z) {
      if (auto x = datum.from_frame_coordinates(frame); x && datum.is_dominant(*x) && within_bound(datum, *x, bound))
        out.push_back(std::move(*x));
      return;
    }
    if (pos < r) {
      for (Int y = 0; y <= bound && height + m[pos] * y <= bound; ++y) {
        frame[pos] = y;
        walk(pos + 1, height + m[pos] * y);
      }
    } else {
      for (Int y = -bound; y <= bound; ++y) {
        frame[pos] = y;
        walk(pos + 1, height);
      }
    }
  };
  walk(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matsuki
