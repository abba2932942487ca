// Command-line front end: catalog, orbit slices, duality, pi_1 and loop invariants.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "matsuki/checks.hpp"
#include "matsuki/text_format.hpp"

using namespace matsuki;

namespace {

struct ResolvedSpec {
  InvolutionSpec spec;
  const RealFormCatalogEntry* entry;  // null for file inputs
};

// A path to an existing file wins over a catalog name.
ResolvedSpec resolve_spec(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    SpecFile file = load_spec_file(source);
    if (file.involutions.size() != 1)
      throw PreconditionError(source + " defines " + std::to_string(file.involutions.size()) +
                              " involutions; exactly one is needed");
    return {std::move(file.involutions.front()), nullptr};
  }
  const auto& entry = catalog(source);
  return {entry.spec, &entry};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
}

int cmd_catalog(const std::string& name, const std::string& export_dir) {
  std::vector<const RealFormCatalogEntry*> entries;
  if (name.empty()) {
    for (const auto& e : catalog_entries()) entries.push_back(&e);
  } else {
    entries.push_back(&catalog(name));
  }
  if (!export_dir.empty()) {
    std::filesystem::create_directories(export_dir);
    for (const auto* e : entries) {
      const auto path = std::filesystem::path(export_dir) / (e->name + ".spec");
      write_output(format_catalog_entry(*e), path.string());
      std::cout << path.string() << "\n";
    }
    return 0;
  }
  if (!name.empty()) {
    std::cout << describe_catalog_entry(*entries.front());
    return 0;
  }
  for (const auto* e : entries)
    std::cout << e->name << " rank=" << e->spec.datum().rank() << " theta=\"" << e->theta_description
              << "\" k_connected=" << (e->expected_k_connected ? "true" : "false") << "\n";
  return 0;
}

int cmd_orbits(const std::string& source, Int height) {
  const auto r = resolve_spec(source);
  const PosetSlice slice = build_poset_slice(r.spec, height);
  std::cout << "spec " << slice.spec_name << "\n";
  std::cout << "height_bound " << slice.height_bound << "\n";
  std::cout << "image_index " << slice.image_index << "\n";
  std::cout << "element_count " << slice.elements.size() << "\n";
  std::cout << "component_count " << slice.components.size() << "\n";
  for (const auto& e : slice.elements) std::cout << e.lambda.to_string() << "\n";
  return 0;
}

int cmd_poset(const std::string& source, Int height, const std::string& format, const std::string& order,
              const std::string& output) {
  const auto r = resolve_spec(source);
  const PosetSlice slice = build_poset_slice(r.spec, height, order == "R" ? PosetOrder::R : PosetOrder::K);
  write_output(format == "graph" ? format_slice_graph(slice) : format_slice_report(slice), output);
  return 0;
}

int cmd_dual(const std::string& source, const std::string& lambda_text, bool with_dual) {
  const auto r = resolve_spec(source);
  const OrbitIndex index = make_orbit_index(r.spec, parse_coweight(lambda_text));
  const DualPair pair = matsuki_dual(r.spec, index);
  std::cout << "spec " << r.spec.name() << "\n";
  std::cout << "lambda " << index.lambda.to_string() << "\n";
  if (with_dual) {
    std::cout << "k_orbit " << pair.k_orbit.lambda.to_string() << "\n";
    std::cout << "r_orbit " << pair.r_orbit.lambda.to_string() << "\n";
  }
  std::cout << "core_parabolic_simple_roots";
  if (pair.core.parabolic_simple_roots.empty()) std::cout << " none";
  for (std::size_t k : pair.core.parabolic_simple_roots) std::cout << " " << k;
  std::cout << "\n";
  std::cout << "core_flag_dimension " << pair.core.flag_dimension << "\n";
  return 0;
}

int cmd_pi1(const std::string& source) {
  const auto r = resolve_spec(source);
  std::cout << format_pi1_report(r.spec, pi_star_image(r.spec), r.entry != nullptr);
  return 0;
}

int cmd_invariant(const std::string& path) {
  const LoopFile file = load_loop_file(path);
  file.form.require_group_element(file.matrix);
  std::cout << "form " << file.form.name() << "\n";
  std::cout << "size " << file.matrix.size() << "\n";
  std::cout << "stratum_invariant " << stratum_invariant(file.matrix).to_string() << "\n";
  std::cout << "splitting_type " << splitting_type(file.matrix).to_string() << "\n";
  std::cout << "k_orbit_invariant " << k_orbit_invariant(file.form, file.matrix).to_string() << "\n";
  std::cout << "r_orbit_invariant " << r_orbit_invariant(file.form, file.matrix).to_string() << "\n";
  return 0;
}

int cmd_check(const std::string& source, bool all, std::uint64_t seed) {
  std::vector<SuiteResult> results;
  if (all) {
    results = check_all(seed);
  } else {
    if (source.empty()) throw PreconditionError("check needs a spec or --all");
    const auto r = resolve_spec(source);
    results = check_spec(r.spec, r.entry);
  }
  std::size_t failed = 0;
  for (const auto& s : results) {
    std::cout << (s.passed ? "PASS " : "FAIL ") << s.suite << " [" << s.cases << " cases]";
    if (!s.detail.empty()) std::cout << (s.passed ? " " : " counterexample: ") << s.detail;
    std::cout << "\n";
    failed += s.passed ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "OK ") << results.size() - failed << "/" << results.size() << " suites passed\n";
  return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit posets of real forms on the affine Grassmannian"};
  app.require_subcommand(1);

  std::string name, export_dir, source, lambda, format = "report", order = "K", output, matrix;
  Int height = 0;
  bool all = false;
  std::uint64_t seed = 7;

  auto* catalog_cmd = app.add_subcommand("catalog", "List the shipped real forms");
  catalog_cmd->add_option("--name", name, "Show one entry in detail");
  catalog_cmd->add_option("--export", export_dir, "Write entries as spec files into this directory");

  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit indices up to a height bound");
  orbits_cmd->add_option("spec", source, "Catalog name or spec file")->required();
  orbits_cmd->add_option("--height", height, "Height bound")->required()->check(CLI::NonNegativeNumber);

  auto* poset_cmd = app.add_subcommand("poset", "Hasse diagram of an orbit slice");
  poset_cmd->add_option("spec", source, "Catalog name or spec file")->required();
  poset_cmd->add_option("--height", height, "Height bound")->required()->check(CLI::NonNegativeNumber);
  poset_cmd->add_option("--format", format, "report or graph")->check(CLI::IsMember({"report", "graph"}));
  poset_cmd->add_option("--order", order, "K (closure order of K(K)-orbits) or R (reversed)")
      ->check(CLI::IsMember({"K", "R"}));
  poset_cmd->add_option("--output", output, "Write to a file instead of stdout");

  auto* dual_cmd = app.add_subcommand("dual", "Dual orbit and core of an orbit index");
  dual_cmd->add_option("spec", source, "Catalog name or spec file")->required();
  dual_cmd->add_option("lambda", lambda, "Coweight a,b,... in the entry's coordinates")->required();

  auto* core_cmd = app.add_subcommand("core", "Core flag variety data of an orbit index");
  core_cmd->add_option("spec", source, "Catalog name or spec file")->required();
  core_cmd->add_option("lambda", lambda, "Coweight a,b,... in the entry's coordinates")->required();

  auto* pi1_cmd = app.add_subcommand("pi1", "pi_1(G), pi_1(X) and the image index");
  pi1_cmd->add_option("spec", source, "Catalog name or spec file")->required();

  auto* invariant_cmd = app.add_subcommand("invariant", "Double-coset invariants of a loop matrix file");
  invariant_cmd->add_option("matrix", matrix, "Loop matrix file")->required()->check(CLI::ExistingFile);

  auto* check_cmd = app.add_subcommand("check", "Run the property suites");
  check_cmd->add_option("spec", source, "Catalog name or spec file");
  check_cmd->add_flag("--all", all, "Every catalog entry and every loop form");
  check_cmd->add_option("--seed", seed, "Seed for the random loop suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(name, export_dir);
    if (*orbits_cmd) return cmd_orbits(source, height);
    if (*poset_cmd) return cmd_poset(source, height, format, order, output);
    if (*dual_cmd) return cmd_dual(source, lambda, true);
    if (*core_cmd) return cmd_dual(source, lambda, false);
    if (*pi1_cmd) return cmd_pi1(source);
    if (*invariant_cmd) return cmd_invariant(matrix);
    if (*check_cmd) return cmd_check(source, all, seed);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
