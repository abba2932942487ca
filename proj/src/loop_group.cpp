#include "matsuki/loop_group.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <random>
#include <regex>
#include <stdexcept>

#include "matsuki/catalog.hpp"
#include "matsuki/fundamental_group.hpp"

namespace matsuki {

namespace {

LaurentMatrix elementary(std::size_t n, std::size_t i, std::size_t j, const LaurentPoly& p) {
  LaurentMatrix m(n);
  m(i, j) = p;
  return m;
}

Coweight sorted_decreasing(std::vector<Int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return Coweight(std::move(v));
}

// Hermitian-adjoint: conjugate coefficients, transpose, t -> t^-1.
LaurentMatrix loop_adjoint(const LaurentMatrix& g) { return apply_tau(apply_conjugation(g)).transpose(); }

}  // namespace

// ------------------------------------------------------------------- LoopForm

LoopForm::LoopForm(Kind kind, std::size_t n, std::size_t p, std::size_t q)
    : kind_(kind), n_(n), p_(p), q_(q), J_(LaurentMatrix(n)) {
  if (n == 0) throw PreconditionError("loop form of size 0");
  for (std::size_t i = 0; i < n; ++i) J_(i, partner(i)) = LaurentPoly(1);

  IntMatrix theta(n, n);
  for (std::size_t i = 0; i < n; ++i) theta(i, partner(i)) = kind == Kind::Unitary ? -1 : 1;
  spec_ = std::make_shared<const InvolutionSpec>(name(), gl_datum(n), theta);
  const auto report = validate_involution(*spec_);
  if (!report.ok()) throw PreconditionError("lattice involution for " + name() + ": " + report.violations.front());
}

LoopForm LoopForm::gl_split(std::size_t n) { return LoopForm(Kind::GlSplit, n, n, 0); }
LoopForm LoopForm::sl_split(std::size_t n) { return LoopForm(Kind::SlSplit, n, n, 0); }

LoopForm LoopForm::unitary(std::size_t p, std::size_t q) {
  if (p < q) throw PreconditionError("u(p,q) needs p >= q; u(q,p) is the same form");
  return LoopForm(Kind::Unitary, p + q, p, q);
}

LoopForm LoopForm::parse(const std::string& name, std::size_t n) {
  if (name == "gl_split") return gl_split(n);
  if (name == "sl_split") return sl_split(n);
  static const std::regex unitary_re(R"(u\((\d+),(\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, unitary_re)) {
    const std::size_t p = std::stoul(m[1]), q = std::stoul(m[2]);
    if (p + q != n)
      throw PreconditionError("form " + name + " has size " + std::to_string(p + q) + ", matrix has size " +
                              std::to_string(n));
    return unitary(p, q);
  }
  throw PreconditionError("unknown matrix form '" + name + "' (expected gl_split, sl_split or u(p,q))");
}

std::string LoopForm::name() const {
  switch (kind_) {
    case Kind::GlSplit:
      return "gl_split";
    case Kind::SlSplit:
      return "sl_split";
    case Kind::Unitary:
      break;
  }
  return "u(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

std::size_t LoopForm::partner(std::size_t i) const {
  if (kind_ != Kind::Unitary) return i;
  if (i < q_) return n_ - 1 - i;
  if (i >= n_ - q_) return n_ - 1 - i;
  return i;
}

LaurentMatrix LoopForm::theta(const LaurentMatrix& g) const {
  if (kind_ != Kind::Unitary) return apply_conjugation(g);
  return J_ * mat_inverse(apply_conjugation(g).transpose()) * J_;
}

LaurentMatrix LoopForm::eta(const LaurentMatrix& g) const {
  if (kind_ != Kind::Unitary) return mat_inverse(g.transpose());
  return J_ * g * J_;
}

LaurentMatrix LoopForm::delta(const LaurentMatrix& g) const { return theta(eta(g)); }

LaurentMatrix LoopForm::theta_tau(const LaurentMatrix& g) const { return theta(apply_tau(g)); }

LaurentMatrix LoopForm::theta_tau_anti(const LaurentMatrix& g) const {
  if (kind_ != Kind::Unitary) return mat_inverse(apply_tau(apply_conjugation(g)));
  return J_ * loop_adjoint(g) * J_;
}

LaurentMatrix LoopForm::eta_anti(const LaurentMatrix& g) const {
  if (kind_ != Kind::Unitary) return g.transpose();
  return J_ * mat_inverse(g) * J_;
}

LaurentMatrix LoopForm::pi(const LaurentMatrix& g) const { return eta(mat_inverse(g)) * g; }

LaurentMatrix LoopForm::lie_theta_tau(const LaurentMatrix& y) const {
  if (kind_ != Kind::Unitary) return apply_tau(apply_conjugation(y));
  return LaurentPoly(-1) * (J_ * loop_adjoint(y) * J_);
}

LaurentMatrix LoopForm::lie_eta(const LaurentMatrix& y) const {
  if (kind_ != Kind::Unitary) return LaurentPoly(-1) * y.transpose();
  return J_ * y * J_;
}

void LoopForm::require_group_element(const LaurentMatrix& g) const {
  if (g.size() != n_)
    throw PreconditionError("matrix of size " + std::to_string(g.size()) + " for form " + name() + " of size " +
                            std::to_string(n_));
  const LaurentPoly det = determinant(g);
  if (!det.is_monomial())
    throw PreconditionError("matrix is not an invertible loop: determinant " + det.to_string() +
                            " is not a non-zero monomial");
  if (kind_ == Kind::SlSplit && !(det == LaurentPoly(1)))
    throw PreconditionError("sl_split loop must have determinant 1, got " + det.to_string());
}

// ----------------------------------------------------------------- invariants

namespace {

using PolyGrid = std::vector<std::vector<LaurentPoly>>;

int shift_to_polynomial(const LaurentMatrix& g) {
  if (!is_invertible_loop(g)) throw PreconditionError("matrix is not an invertible loop");
  return -g.exponent_range()->first;
}

PolyGrid grid_of(const LaurentMatrix& g) {
  PolyGrid a(g.size(), std::vector<LaurentPoly>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) a[i][j] = g(i, j);
  return a;
}

}  // namespace

Coweight stratum_invariant(const LaurentMatrix& g) {
  const int shift = shift_to_polynomial(g);
  PolyGrid a = grid_of(g.shifted(shift));
  const std::size_t n = a.size();

  IntVector orders;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pr = n, pc = n;
      for (std::size_t r = t; r < n; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (!a[r][c].is_zero() && (pr == n || a[r][c].max_exponent() < a[pr][pc].max_exponent())) {
            pr = r;
            pc = c;
          }
      if (pr == n) throw std::logic_error("stratum_invariant: singular block in an invertible loop");
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool cleared = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        const auto [q, rem] = poly_divmod(a[i][t], a[t][t]);
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        cleared = cleared && rem.is_zero();
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        const auto [q, rem] = poly_divmod(a[t][j], a[t][t]);
        for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        cleared = cleared && rem.is_zero();
      }
      if (cleared) break;
    }
    orders.push_back(a[t][t].min_exponent() - shift);
  }
  return sorted_decreasing(std::move(orders));
}

Coweight splitting_type(const LaurentMatrix& g) {
  const int shift = shift_to_polynomial(g);
  PolyGrid a = grid_of(g.shifted(shift));
  const std::size_t n = a.size();
  const int det_degree = determinant(g).min_exponent() + static_cast<int>(n) * shift;

  std::vector<int> degree(n);
  auto column_degree = [&](std::size_t j) {
    int d = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i][j].is_zero()) d = std::max(d, a[i][j].max_exponent());
    if (d < 0) throw std::logic_error("splitting_type: zero column in an invertible loop");
    return d;
  };
  for (std::size_t j = 0; j < n; ++j) degree[j] = column_degree(j);

  // Each reduction lowers the total column degree, which never drops below
  // the degree of the determinant.
  for (;;) {
    int total = 0;
    for (int d : degree) total += d;
    GaussMatrix lead(n, std::vector<GaussRational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lead[i][j] = a[i][j].coefficient(degree[j]);
    const auto v = gauss_kernel_vector(lead, n);
    if (!v) break;
    if (total <= det_degree) throw std::logic_error("splitting_type: column reduction failed to terminate");

    std::size_t top = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!(*v)[j].is_zero() && (top == n || degree[j] > degree[top])) top = j;
    const GaussRational scale = (*v)[top].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == top || (*v)[j].is_zero()) continue;
      const LaurentPoly factor = LaurentPoly::monomial((*v)[j] * scale, degree[top] - degree[j]);
      for (std::size_t i = 0; i < n; ++i) a[i][top] += factor * a[i][j];
    }
    degree[top] = column_degree(top);
  }

  IntVector lambda;
  for (int d : degree) lambda.push_back(d - shift);
  return sorted_decreasing(std::move(lambda));
}

std::size_t splitting_rank_function(const LaurentMatrix& g, int k) {
  if (!is_invertible_loop(g)) throw PreconditionError("matrix is not an invertible loop");
  const std::size_t n = g.size();
  const auto [emin, emax] = *g.exponent_range();
  const int det_exp = determinant(g).min_exponent();
  // u = w adj(g) t^{-k-d} / c with w polynomial, so the lowest exponent of u is
  // at least (n-1) emin - k - d.
  const int depth = std::max(0, k + det_exp - static_cast<int>(n - 1) * emin);
  const std::size_t unknowns = n * static_cast<std::size_t>(depth + 1);

  // Unknown (i, m) is the coefficient of t^{-m} in u_i; equation (j, e) asks the
  // coefficient of t^e (e < 0) in (t^k u g)_j to vanish.
  const int lowest = k - depth + emin;
  GaussMatrix system;
  for (std::size_t j = 0; j < n; ++j)
    for (int e = lowest; e < 0; ++e) {
      std::vector<GaussRational> row(unknowns);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i)
        for (int m = 0; m <= depth; ++m) {
          GaussRational c = g(i, j).coefficient(e - k + m);
          if (c.is_zero()) continue;
          row[i * static_cast<std::size_t>(depth + 1) + static_cast<std::size_t>(m)] = std::move(c);
          any = true;
        }
      if (any) system.push_back(std::move(row));
    }
  return unknowns - gauss_rank(std::move(system));
}

Coweight splitting_type_from_rank_function(const LaurentMatrix& g) {
  if (!is_invertible_loop(g)) throw PreconditionError("matrix is not an invertible loop");
  const std::size_t n = g.size();
  // Column degrees of t^{-emin} g lie in [0, emax - emin], so every lambda_i
  // lies in [emin, emax]: h vanishes for k <= -emax - 1.
  const auto [emin, emax] = *g.exponent_range();
  std::vector<long> h;  // h[k + emax + 1] for k in [-emax - 1, -emin]
  for (int k = -emax - 1; k <= -emin; ++k) h.push_back(static_cast<long>(splitting_rank_function(g, k)));
  if (h.front() != 0) throw std::logic_error("splitting rank function: window exhausted below");

  IntVector lambda;
  long previous_jump = 0;
  for (std::size_t idx = 1; idx < h.size(); ++idx) {
    const long jump = h[idx] - h[idx - 1];  // #{i : lambda_i >= -k}
    const int k = static_cast<int>(idx) - emax - 1;
    for (long c = 0; c < jump - previous_jump; ++c) lambda.push_back(-k);
    previous_jump = jump;
  }
  if (lambda.size() != n) throw std::logic_error("splitting rank function: window exhausted above");
  return sorted_decreasing(std::move(lambda));
}

namespace {

std::shared_ptr<const PiOneModel> model_for(const LoopForm& form) {
  // Forms are rebuilt freely; the model depends only on the lattice spec.
  static std::map<std::string, std::shared_ptr<const PiOneModel>> cache;
  static std::mutex mutex;
  const std::lock_guard<std::mutex> lock(mutex);
  const std::string key = form.name() + "/" + std::to_string(form.n());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_shared<const PiOneModel>(pi_star_image(form.lattice_spec()))).first;
  return it->second;
}

}  // namespace

Coweight k_orbit_invariant(const LoopForm& form, const LaurentMatrix& g) {
  form.require_group_element(g);
  const Coweight lambda = stratum_invariant(form.pi(g));
  const InvolutionSpec& spec = form.lattice_spec();
  if (!spec.is_fixed(lambda))
    throw TheoremViolation("K-orbit invariant is a real coweight",
                           lambda.to_string() + " is not theta-fixed for " + form.name());
  if (!model_for(form)->contains(lambda))
    throw TheoremViolation("K-orbit invariant lies in the image of pi_1(G)",
                           lambda.to_string() + " is outside the image for " + form.name());
  return lambda;
}

Coweight r_orbit_invariant(const LoopForm& form, const LaurentMatrix& g) {
  form.require_group_element(g);
  const Coweight lambda = splitting_type(form.theta_tau_anti(g) * g);
  const InvolutionSpec& spec = form.lattice_spec();
  if (!spec.is_fixed(lambda) || !spec.datum().is_dominant(lambda))
    throw TheoremViolation("LG_R-orbit invariant is a dominant real coweight",
                           lambda.to_string() + " is not in Lambda^+_S for " + form.name());
  return lambda;
}

// --------------------------------------------------------- geodesic loops

LaurentMatrix geodesic_representative(const LoopForm& form, const Coweight& lambda) {
  const std::size_t n = form.n();
  const InvolutionSpec& spec = form.lattice_spec();
  if (lambda.size() != n)
    throw PreconditionError(lambda.to_string() + " has " + std::to_string(lambda.size()) + " coordinates; form " +
                            form.name() + " has size " + std::to_string(n));
  if (!spec.datum().is_dominant(lambda)) throw PreconditionError(lambda.to_string() + " is not dominant");
  if (!spec.is_fixed(lambda)) throw PreconditionError(lambda.to_string() + " is not theta-fixed");
  if (form.kind() == LoopForm::Kind::SlSplit) {
    Int sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += lambda[i];
    if (sum != 0) throw PreconditionError(lambda.to_string() + " is not a coweight of SL_n (entries sum to " +
                                          std::to_string(sum) + ")");
  }

  LaurentMatrix c(n);
  if (form.kind() == LoopForm::Kind::Unitary) {
    for (std::size_t i = 0; i < n; ++i) c(i, i) = LaurentPoly::t_power(i < form.q() ? static_cast<int>(lambda[i]) : 0);
  } else {
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < n; ++i) {
      if (lambda[i] % 2 == 0)
        c(i, i) = LaurentPoly::t_power(static_cast<int>(lambda[i] / 2));
      else
        odd.push_back(i);
    }
    if (odd.size() % 2)
      throw PreconditionError(lambda.to_string() + " is not in the image of pi_1(G): it has " +
                              std::to_string(odd.size()) + " odd entries, an odd number");
    // Rotation by the angle with cos = (s + 1/s)/2, sin = (s - 1/s)/2i at
    // s = t^{1/2}, times diag(s^a, s^b).
    const GaussRational half(mpq_class(1, 2));
    const GaussRational half_over_i(0, mpq_class(-1, 2));  // 1/(2i)
    for (std::size_t k = 0; k < odd.size(); k += 2) {
      const std::size_t i = odd[k], j = odd[k + 1];
      const int a = static_cast<int>((lambda[i] - 1) / 2), b = static_cast<int>((lambda[j] - 1) / 2);
      auto up = [](int e, const GaussRational& s, int sign) {
        return LaurentPoly::monomial(s, e + 1) + LaurentPoly::monomial(sign * s, e);
      };
      c(i, i) = up(a, half, 1);
      c(j, j) = up(b, half, 1);
      c(j, i) = up(a, half_over_i, -1);
      c(i, j) = -up(b, half_over_i, -1);
    }
  }

  const LaurentMatrix target = LaurentMatrix::t_power(std::vector<long>(lambda.coords().begin(), lambda.coords().end()));
  if (!(form.theta_tau_anti(c) * c == target))
    throw TheoremViolation("geodesic representative", "theta_tau(c)^-1 c != t^lambda for " + lambda.to_string());
  if (!(form.pi(c) == target))
    throw TheoremViolation("geodesic representative", "pi(c) != t^lambda for " + lambda.to_string());
  return c;
}

// ------------------------------------------------------------ random loops

namespace {

struct LoopRng {
  std::mt19937_64 engine;
  explicit LoopRng(std::uint64_t seed) : engine(seed) {}

  long uniform(long lo, long hi) { return lo + static_cast<long>(engine() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
  // Small non-zero rational.
  mpq_class rational() {
    static const long nums[] = {1, -1, 2, -2, 3, 1, -1};
    static const long dens[] = {1, 1, 1, 2, 1, 3, 2};
    const std::size_t k = index(7);
    mpq_class q(nums[k], dens[k]);
    q.canonicalize();
    return q;
  }
  GaussRational gaussian() {
    switch (index(3)) {
      case 0:
        return GaussRational(rational());
      case 1:
        return GaussRational(0, rational());
      default:
        return GaussRational(rational(), rational());
    }
  }
  std::pair<std::size_t, std::size_t> off_diagonal(std::size_t n) {
    const std::size_t i = index(n);
    std::size_t j = index(n - 1);
    if (j >= i) ++j;
    return {i, j};
  }
};

std::optional<LaurentMatrix> nilpotent_exp(const LaurentMatrix& x) {
  const std::size_t n = x.size();
  std::vector<LaurentMatrix> powers{LaurentMatrix::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(powers.back() * x);
  if (!(powers.back() == LaurentMatrix(n))) return std::nullopt;
  LaurentMatrix e(n);
  mpz_class factorial = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    e = e + LaurentPoly(GaussRational(mpq_class(1, factorial))) * powers[k];
  }
  return e;
}

// Signed permutation; determinant +1 when `unimodular`.
LaurentMatrix signed_permutation(LoopRng& rng, std::size_t n, bool unimodular) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = LaurentPoly(rng.index(2) ? 1 : -1);
  if (unimodular && !(determinant(m) == LaurentPoly(1))) m(0, perm[0]) = -m(0, perm[0]);
  return m;
}

// exp(Y + d(Y)) for Y = c t^k E_ij, redrawing until the sum is nilpotent.
template <class Differential>
LaurentMatrix symmetric_exponential(LoopRng& rng, std::size_t n, int kmin, int kmax, Differential d) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto [i, j] = rng.off_diagonal(n);
    const int k = static_cast<int>(rng.uniform(kmin, kmax));
    const LaurentMatrix y = elementary(n, i, j, LaurentPoly::monomial(rng.gaussian(), k));
    if (auto e = nilpotent_exp(y + d(y))) return *e;
  }
  return LaurentMatrix::identity(n);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("random loop generator: " + what);
}

bool is_polynomial(const LaurentMatrix& g) {
  auto range = g.exponent_range();
  return range && range->first >= 0;
}

}  // namespace

LaurentMatrix random_real_loop(const LoopForm& form, std::uint64_t seed, std::size_t factors) {
  LoopRng rng(seed);
  const std::size_t n = form.n();
  const bool split = form.kind() != LoopForm::Kind::Unitary;
  LaurentMatrix g = LaurentMatrix::identity(n);
  for (std::size_t f = 0; f < factors; ++f) {
    LaurentMatrix h;
    switch (rng.index(3)) {
      case 0:
        if (split) {
          h = signed_permutation(rng, n, form.kind() == LoopForm::Kind::SlSplit);
        } else {
          // Phases constant on J'-pairs.
          static const GaussRational phases[] = {GaussRational(1), GaussRational(-1), GaussRational(0, 1),
                                                 GaussRational(0, -1)};
          h = LaurentMatrix(n);
          for (std::size_t i = 0; i < n; ++i)
            if (form.partner(i) >= i) h(i, i) = h(form.partner(i), form.partner(i)) = LaurentPoly(phases[rng.index(4)]);
        }
        break;
      case 1:
        h = symmetric_exponential(rng, n, 0, 0, [&](const LaurentMatrix& y) { return form.lie_theta_tau(y); });
        break;
      default:
        h = symmetric_exponential(rng, n, 1, 2, [&](const LaurentMatrix& y) { return form.lie_theta_tau(y); });
        break;
    }
    g = g * h;
  }
  require(form.theta_tau(g) == g, "real loop is not theta_tau-fixed");
  form.require_group_element(g);
  return g;
}

LaurentMatrix random_k_loop(const LoopForm& form, std::uint64_t seed, std::size_t factors) {
  LoopRng rng(seed);
  const std::size_t n = form.n();
  LaurentMatrix g = LaurentMatrix::identity(n);
  for (std::size_t f = 0; f < factors; ++f) {
    LaurentMatrix h;
    if (form.kind() != LoopForm::Kind::Unitary) {
      if (n == 1 || rng.index(3) == 0) {
        h = signed_permutation(rng, n, form.kind() == LoopForm::Kind::SlSplit);
      } else {
        // Rotation with cos = (c t^k + 1/(c t^k))/2 and sin = (c t^k - 1/(c t^k))/2i.
        const auto [i, j] = rng.off_diagonal(n);
        const mpq_class c = abs(rng.rational());
        const int k = static_cast<int>(rng.uniform(-2, 2));
        const LaurentPoly plus = LaurentPoly::monomial(GaussRational(c / 2), k);
        const LaurentPoly minus = LaurentPoly::monomial(GaussRational(1 / (2 * c)), -k);
        const LaurentPoly cosine = plus + minus;
        const LaurentPoly sine = LaurentPoly(GaussRational(0, -1)) * (plus - minus);
        h = LaurentMatrix::identity(n);
        h(i, i) = cosine;
        h(j, j) = cosine;
        h(i, j) = -sine;
        h(j, i) = sine;
      }
    } else {
      switch (rng.index(3)) {
        case 0: {
          h = LaurentMatrix(n);
          for (std::size_t i = 0; i < n; ++i)
            if (form.partner(i) >= i) {
              const LaurentPoly entry = LaurentPoly::monomial(rng.gaussian(), static_cast<int>(rng.uniform(-2, 2)));
              h(i, i) = h(form.partner(i), form.partner(i)) = entry;
            }
          if (rng.index(2)) h = h * form.J();
          break;
        }
        default:
          h = symmetric_exponential(rng, n, -2, 2, [&](const LaurentMatrix& y) { return form.lie_eta(y); });
          break;
      }
    }
    g = g * h;
  }
  require(form.eta(g) == g, "K loop is not eta-fixed");
  form.require_group_element(g);
  return g;
}

LaurentMatrix random_gO_loop(const LoopForm& form, std::uint64_t seed, std::size_t factors) {
  LoopRng rng(seed);
  const std::size_t n = form.n();
  LaurentMatrix g = LaurentMatrix::identity(n);
  for (std::size_t f = 0; f < factors; ++f) {
    LaurentMatrix h = LaurentMatrix::identity(n);
    if (n > 1 && rng.index(3) != 0) {
      const auto [i, j] = rng.off_diagonal(n);
      LaurentPoly p;
      for (int e = 0; e <= 1; ++e)
        if (rng.index(2)) p += LaurentPoly::monomial(rng.gaussian(), e);
      h(i, j) = p;
    } else if (form.kind() == LoopForm::Kind::SlSplit) {
      h = signed_permutation(rng, n, true);
      if (n > 1) {
        const GaussRational d = rng.gaussian();
        LaurentMatrix scale = LaurentMatrix::identity(n);
        scale(0, 0) = LaurentPoly(d);
        scale(1, 1) = LaurentPoly(d.inverse());
        h = h * scale;
      }
    } else {
      h = signed_permutation(rng, n, false);
      LaurentMatrix scale = LaurentMatrix::identity(n);
      const std::size_t i = rng.index(n);
      scale(i, i) = LaurentPoly(rng.gaussian());
      h = h * scale;
    }
    g = g * h;
  }
  require(is_polynomial(g) && determinant(g).is_monomial() && determinant(g).max_exponent() == 0,
          "gO loop is not in G(C[t])");
  form.require_group_element(g);
  return g;
}

LaurentMatrix random_gO_minus_loop(const LoopForm& form, std::uint64_t seed, std::size_t factors) {
  return apply_tau(random_gO_loop(form, seed, factors));
}

LaurentMatrix random_loop(const LoopForm& form, std::uint64_t seed) {
  LoopRng rng(seed);
  const std::uint64_t seed_a = rng.engine(), seed_b = rng.engine();
  const std::size_t n = form.n();
  std::vector<long> mu(n, 0);
  if (form.kind() == LoopForm::Kind::SlSplit) {
    for (std::size_t i = 0; i + 1 < n; i += 2) {
      mu[i] = rng.uniform(-2, 2);
      mu[i + 1] = -mu[i];
    }
  } else {
    for (auto& m : mu) m = rng.uniform(-2, 2);
  }
  return random_gO_loop(form, seed_a, 2) * LaurentMatrix::t_power(mu) * random_gO_minus_loop(form, seed_b, 2);
}

}  // namespace matsuki
