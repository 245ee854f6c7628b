#ifndef SPECTRAL_SPECTRA_HPP
#define SPECTRAL_SPECTRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectral/region.hpp"

namespace spectral {

// Closed vocabulary of spectrum kinds handled by the calculus.
enum class SpectrumKind {
    sigma, p, ap, su, cp,
    Phi_plus, Phi_minus, Phi,
    W_plus, W_minus, W,
    B_plus, B_minus, B,
    LD, RD, D,
    LDe, RDe,
    dsc, dsce,
    BPhi_plus, BPhi_minus, BPhi,
    BW_plus, BW_minus, BW,
    TUD, qPhi, Kt,
};

constexpr int kSpectrumKindCount = 30;

const std::vector<SpectrumKind>& all_spectrum_kinds();
std::string kind_name(SpectrumKind k);
std::optional<SpectrumKind> kind_from_name(const std::string& name);

// The 14 spectra whose connected hulls coincide.
const std::vector<SpectrumKind>& eta_kinds();

enum class Provenance { Given, Derived };

struct ProfileEntry {
    SpectralRegion region;
    Provenance provenance = Provenance::Given;
    std::string rule; // id of the deriving rule; empty for given entries
};

// Named record of one operator's spectra as plane regions. Assignments are
// checked against the standing inclusion lattice on insert.
class SpectraProfile {
public:
    SpectraProfile() = default;
    explicit SpectraProfile(std::string operator_name)
        : operator_name_(std::move(operator_name)) {}

    const std::string& operator_name() const { return operator_name_; }
    void set_operator_name(std::string name) { operator_name_ = std::move(name); }

    bool has(SpectrumKind k) const { return entries_.count(k) > 0; }
    const SpectralRegion& region(SpectrumKind k) const;
    const ProfileEntry& entry(SpectrumKind k) const;
    const std::map<SpectrumKind, ProfileEntry>& entries() const { return entries_; }

    void assign_given(SpectrumKind k, SpectralRegion r);
    void assign_derived(SpectrumKind k, SpectralRegion r, const std::string& rule);
    // No lattice check; for loading raw data and fault injection in tests.
    void assign_raw(SpectrumKind k, SpectralRegion r, Provenance prov = Provenance::Given,
                    std::string rule = "");

    // Optional finite point set E of resolvent poles (hull-component check).
    std::optional<SpectralRegion> poles;

private:
    void check_lattice(SpectrumKind k, const SpectralRegion& r) const;

    std::string operator_name_;
    std::map<SpectrumKind, ProfileEntry> entries_;
};

// Inclusion edges sigma_a subset-of sigma_b of the standing lattice.
const std::vector<std::pair<SpectrumKind, SpectrumKind>>& inclusion_lattice();
bool lattice_reachable(SpectrumKind from, SpectrumKind to);

// An executable set identity: output kind = expression over assigned kinds.
// eval returns the derived region, or nullopt when inputs are missing or a
// guard fails.
struct DerivationRule {
    std::string id;
    SpectrumKind output = SpectrumKind::sigma;
    std::string citation;
    std::vector<SpectrumKind> inputs;
    std::function<std::optional<SpectralRegion>(const SpectraProfile&)> eval;
};

const std::vector<DerivationRule>& derivation_rules();

struct DerivationStep {
    std::string rule;
    SpectrumKind kind = SpectrumKind::sigma;
};

struct ApplyResult {
    SpectraProfile profile;
    std::vector<DerivationStep> steps;
};

// Applies the rule set (plus lattice squeezing and the countable-hull rule) to
// a fixed point. Rules deriving unequal regions for an already-assigned kind
// abort with RuleConflict.
ApplyResult apply_rules(const SpectraProfile& profile);

// Same fixed point computation with a caller-supplied rule order; used to
// check confluence.
ApplyResult apply_rules_ordered(const SpectraProfile& profile,
                                const std::vector<size_t>& rule_order);

// Like apply_rules, but a conflict or unsupported configuration stops the run
// and returns whatever was derived up to that point, with the diagnostic
// stored in *diagnostic (left empty on clean completion).
ApplyResult apply_rules_partial(const SpectraProfile& profile, std::string* diagnostic);

struct CheckItem {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckItem> items;
    bool all_pass = true; // skipped items do not fail the report

    void add(CheckItem item);
};

// Theorem: the 14 connected hulls coincide; sigma_D is each sigma_* plus
// filled holes. Requires all 14 kinds assigned.
struct EtaReport {
    VerificationReport checks;
    SpectralRegion common_hull;
};
EtaReport verify_eta_theorem(const SpectraProfile& profile);

// Boundary inclusion diagrams (three diagrams plus the boundary-into-TUD and
// boundary-into-qPhi clauses). Missing kinds skip their arrows with a notice.
VerificationReport verify_boundary_diagrams(const SpectraProfile& profile);

// Moved-boundary inclusions of the form bd(s) cap acc(s) subset bd(TUD) etc.
VerificationReport verify_moved_boundary(const SpectraProfile& profile);

// Meromorphic test: each assigned kind of {TUD, BPhi, D} against subset {0};
// the verdicts must agree.
bool meromorphic_check(const SpectraProfile& profile);

// If sigma_BW has no holes, sigma_D = sigma_BW. Returns the report and, when
// applicable, extends the profile.
struct BwSimplyConnectedReport {
    bool applicable = false;
    bool derived = false;
    std::string detail;
};
BwSimplyConnectedReport bw_simply_connected_check(SpectraProfile& profile);

// Optional resolvent-pole component check: every hole of sigma_TUD lies in
// sigma_D or avoids sigma away from the pole set. Skipped unless the profile
// carries poles.
VerificationReport omega_check(const SpectraProfile& profile);

} // namespace spectral

#endif
