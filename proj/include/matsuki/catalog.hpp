#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "matsuki/real_form.hpp"

namespace matsuki {

struct RealFormCatalogEntry {
  std::string name;
  InvolutionSpec spec;
  bool expected_k_connected = true;
  std::string theta_description;
  /// Coordinate conventions for the entry; coweights on the command line are
  /// read in this basis.
  std::string notes;
};

/// Every shipped entry, in a fixed order. Each involution is validated when
/// the catalog is first built.
const std::vector<RealFormCatalogEntry>& catalog_entries();

/// Throws PreconditionError for an unknown name.
const RealFormCatalogEntry& catalog(std::string_view name);
const RealFormCatalogEntry* find_catalog_entry(std::string_view name);

// Root data used by the catalog.
RootDatumPtr sl2_datum();         // Lambda_T = Z alpha^vee
RootDatumPtr pgl2_datum();        // Lambda_T = Z omega, alpha^vee = 2 omega
RootDatumPtr sl3_datum();         // simple-coroot coordinates
RootDatumPtr sl2_x_sl2_datum();   // (alpha_1^vee, alpha_2^vee) coordinates
RootDatumPtr gl_datum(std::size_t n);  // diagonal coordinates on Z^n

}  // namespace matsuki
