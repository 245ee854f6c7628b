#ifndef SPECTRAL_CATALOG_HPP
#define SPECTRAL_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "spectral/spectra.hpp"

namespace spectral {

struct MembershipAssertion {
    SpectrumKind kind = SpectrumKind::sigma;
    GaussianRational point;
    bool is_member = false;
};

// One fixture operator: the base spectra handed to the engine and the values
// the derivation must reproduce. Membership-assertion entries carry point
// facts instead of full regions.
struct CatalogEntry {
    std::string name;
    std::string description;
    SpectraProfile given;
    std::vector<std::pair<SpectrumKind, SpectralRegion>> expected;
    std::vector<MembershipAssertion> assertions;
    std::optional<bool> meromorphic;
    std::vector<std::string> citations;
};

// Loads the shipped fixture files (environment variable SPECTRAL_CATALOG_DIR
// overrides the build-time default directory).
std::vector<CatalogEntry> catalog_entries();
std::string catalog_directory();
CatalogEntry catalog_entry_from_json_text(const std::string& text);

struct CatalogMismatch {
    SpectrumKind kind = SpectrumKind::sigma;
    std::string expected;
    std::string derived; // "(unassigned)" when the engine never reached the kind
    std::string rule;
};

struct CatalogEntryResult {
    std::string name;
    bool passed = false;
    bool full_profile = false; // all fourteen hull kinds present after derivation
    std::vector<CatalogMismatch> mismatches;
    std::vector<std::string> notes;
    SpectraProfile derived;
};

struct CatalogValidationReport {
    std::vector<CatalogEntryResult> entries;
    bool all_passed = true;
};

// For every entry: derive from the given spectra, compare kind-for-kind with
// exact region equality, and on full profiles run the hull, boundary-diagram
// and moved-boundary verifications. Failures are report content, not errors.
CatalogValidationReport run_catalog_validation(const std::vector<CatalogEntry>& entries);
CatalogValidationReport run_catalog_validation();

} // namespace spectral

#endif
