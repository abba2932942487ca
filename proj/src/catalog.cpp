#include "matsuki/catalog.hpp"

#include <memory>

namespace matsuki {

namespace {

RootDatumPtr make_datum(std::string name, std::size_t rank, std::vector<IntVector> positive_roots,
                        std::vector<IntVector> positive_coroots, std::vector<std::size_t> simple) {
  auto [roots, coroots] = close_under_negation(std::move(positive_roots), std::move(positive_coroots));
  return std::make_shared<const RootDatum>(std::move(name), rank, std::move(roots), std::move(coroots),
                                           std::move(simple));
}

IntMatrix scalar(std::size_t n, Int s) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

IntMatrix swap2() { return IntMatrix::from_rows({{0, 1}, {1, 0}}); }

std::vector<RealFormCatalogEntry> build_catalog() {
  std::vector<RealFormCatalogEntry> c;
  auto add = [&](std::string name, RootDatumPtr datum, IntMatrix theta, bool k_connected, std::string theta_desc,
                 std::string notes) {
    InvolutionSpec spec(name, std::move(datum), std::move(theta));
    const auto report = validate_involution(spec);
    if (!report.ok())
      throw PreconditionError("catalog entry " + name + " is invalid: " + report.violations.front());
    c.push_back({std::move(name), std::move(spec), k_connected, std::move(theta_desc), std::move(notes)});
  };

  add("sl2_split", sl2_datum(), scalar(1, 1), true, "identity",
      "SL2(R) in SL2(C); Lambda_T = Z alpha^vee, coordinates in alpha^vee units.");
  add("sl2_compact", sl2_datum(), scalar(1, -1), true, "-identity",
      "SU(2) in SL2(C); Lambda_S = 0, so the only orbit index is 0.");
  add("pgl2_so21", pgl2_datum(), scalar(1, 1), false, "identity",
      "SO(2,1) in SO3(C) = PGL2(C); Lambda_T = Z omega with alpha^vee = 2 omega, coordinates in omega units. "
      "K = O2(C) is disconnected; the K-orbit chain index n corresponds to the coweight 2n omega.");
  add("sl2C_as_real", sl2_x_sl2_datum(), swap2(), true, "swap factors",
      "SL2(C) viewed as a real group; complexification SL2 x SL2 with theta exchanging the factors. "
      "Coordinates (a,b) = a alpha_1^vee + b alpha_2^vee.");
  add("sl3_split", sl3_datum(), scalar(2, 1), true, "identity",
      "SL3(R) in SL3(C); coordinates in the simple-coroot basis (alpha_1^vee, alpha_2^vee).");
  add("su11", sl2_datum(), scalar(1, 1), true, "identity",
      "SU(1,1) = SL2(R) up to isomorphism; split torus from the hyperbolic pair, Lambda_T = Z alpha^vee.");
  add("su20", sl2_datum(), scalar(1, -1), true, "-identity", "SU(2), compact; Lambda_T = Z alpha^vee.");
  add("su21", sl3_datum(), swap2(), true, "swap simple coroots",
      "SU(2,1) in SL3(C), quasi-split real rank one; theta exchanges alpha_1^vee and alpha_2^vee, "
      "Lambda_S = Z(alpha_1^vee + alpha_2^vee), M is the maximal torus. Simple-coroot coordinates.");
  add("su30", sl3_datum(), scalar(2, -1), true, "-identity", "SU(3), compact; simple-coroot coordinates.");
  add("gl1_split", gl_datum(1), scalar(1, 1), false, "identity",
      "GL1(R) = R^x in C^x; K = O1 = {+1,-1} is disconnected. Coordinates on Z.");
  add("gl2_split", gl_datum(2), scalar(2, 1), false, "identity",
      "GL2(R) in GL2(C); K = O2(C) is disconnected. Diagonal coordinates on Z^2.");
  add("gl3_split", gl_datum(3), scalar(3, 1), false, "identity",
      "GL3(R) in GL3(C); K = O3(C) is disconnected. Diagonal coordinates on Z^3.");
  return c;
}

}  // namespace

RootDatumPtr sl2_datum() { return make_datum("SL2", 1, {{2}}, {{1}}, {0}); }

RootDatumPtr pgl2_datum() { return make_datum("PGL2", 1, {{1}}, {{2}}, {0}); }

RootDatumPtr sl3_datum() {
  return make_datum("SL3", 2, {{2, -1}, {-1, 2}, {1, 1}}, {{1, 0}, {0, 1}, {1, 1}}, {0, 1});
}

RootDatumPtr sl2_x_sl2_datum() { return make_datum("SL2xSL2", 2, {{2, 0}, {0, 2}}, {{1, 0}, {0, 1}}, {0, 1}); }

RootDatumPtr gl_datum(std::size_t n) {
  std::vector<IntVector> roots;
  std::vector<std::size_t> simple;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector a(n, 0);
    a[i] = 1;
    a[i + 1] = -1;
    simple.push_back(roots.size());
    roots.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      IntVector a(n, 0);
      a[i] = 1;
      a[j] = -1;
      roots.push_back(std::move(a));
    }
  auto coroots = roots;
  return make_datum("GL" + std::to_string(n), n, std::move(roots), std::move(coroots), std::move(simple));
}

const std::vector<RealFormCatalogEntry>& catalog_entries() {
  static const std::vector<RealFormCatalogEntry> entries = build_catalog();
  return entries;
}

const RealFormCatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

const RealFormCatalogEntry& catalog(std::string_view name) {
  if (const auto* e = find_catalog_entry(name)) return *e;
  throw PreconditionError("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace matsuki
