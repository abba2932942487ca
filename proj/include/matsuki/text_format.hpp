#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "matsuki/catalog.hpp"
#include "matsuki/fundamental_group.hpp"
#include "matsuki/loop_group.hpp"
#include "matsuki/orbit_poset.hpp"

namespace matsuki {

// Spec files are line oriented; '#' starts a comment.
//
//   name SL2               # root datum
//   rank 1
//   roots                  # one vector per line; negatives are added
//   2
//   end
//   coroots                # same order as roots
//   1
//   end
//   simple 0               # positions in the roots block
//
//   involution sl2_split
//   datum SL2              # this file's datum, or SL2 PGL2 SL3 SL2xSL2 GL<n>
//   theta                  # rank x rank, one row per line
//   1
//   end
struct SpecFile {
  RootDatumPtr datum;  // null when the file declares none
  std::vector<InvolutionSpec> involutions;
};

/// Throws ParseError (with the line) for syntax problems and
/// PreconditionError when the parsed datum or involution is invalid.
SpecFile parse_spec_text(std::string_view text);
SpecFile load_spec_file(const std::string& path);

std::string format_datum(const RootDatum& datum);
/// Datum block followed by the involution block; parses back to the entry.
std::string format_catalog_entry(const RealFormCatalogEntry& entry);
/// Human-readable detail for `catalog --name`.
std::string describe_catalog_entry(const RealFormCatalogEntry& entry);

// Loop matrix files:
//
//   size 2
//   form gl_split           # or sl_split, u(p,q)
//   entry 0 1 : (-1, 1, 0) (2, 1/2, -3/4)
//
// Each tuple is (exponent, real part, imaginary part); rows and columns
// are 0-based and unlisted entries are zero.
struct LoopFile {
  LoopForm form;
  LaurentMatrix matrix;
};

LoopFile parse_loop_text(std::string_view text);
LoopFile load_loop_file(const std::string& path);
std::string format_loop_file(const LoopForm& form, const LaurentMatrix& g);

std::string format_slice_report(const PosetSlice& slice);
/// Graphviz digraph: every node on its own line, then one
/// "(a,b)" -> "(c,d)" edge per line, lower to upper in the slice's order.
std::string format_slice_graph(const PosetSlice& slice);
/// `exact_model` is false for specs that do not come from the catalog; the
/// report then flags the lattice model of pi_1(X) as unverified.
std::string format_pi1_report(const InvolutionSpec& spec, const PiOneModel& model, bool exact_model);

/// Parses "a,b,c" (spaces allowed) into a coweight.
Coweight parse_coweight(std::string_view text);

}  // namespace matsuki
