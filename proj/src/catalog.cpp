#include "spectral/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spectral/json_io.hpp"

#ifndef SPECTRAL_DATA_DIR
#define SPECTRAL_DATA_DIR "."
#endif

namespace spectral {

std::string catalog_directory() {
    if (const char* env = std::getenv("SPECTRAL_CATALOG_DIR")) return env;
    return std::string(SPECTRAL_DATA_DIR) + "/catalog";
}

CatalogEntry catalog_entry_from_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, true, true);
    CatalogEntry entry;
    entry.name = j.at("name").get<std::string>();
    entry.description = j.value("description", std::string());
    entry.given.set_operator_name(entry.name);
    if (j.contains("given"))
        for (const auto& [name, region] : j.at("given").items()) {
            auto kind = kind_from_name(name);
            if (!kind) throw ParseError(entry.name + ": unknown kind \"" + name + "\"");
            entry.given.assign_given(*kind, region_from_json(region));
        }
    if (j.contains("expected"))
        for (const auto& [name, region] : j.at("expected").items()) {
            auto kind = kind_from_name(name);
            if (!kind) throw ParseError(entry.name + ": unknown kind \"" + name + "\"");
            entry.expected.emplace_back(*kind, region_from_json(region));
        }
    if (j.contains("assertions"))
        for (const Json& aj : j.at("assertions")) {
            MembershipAssertion a;
            auto kind = kind_from_name(aj.at("kind").get<std::string>());
            if (!kind) throw ParseError(entry.name + ": unknown kind in assertion");
            a.kind = *kind;
            const Json& pt = aj.at("point");
            a.point = {parse_rational(pt[0].get<std::string>()),
                       parse_rational(pt[1].get<std::string>())};
            a.is_member = aj.at("member").get<bool>();
            entry.assertions.push_back(a);
        }
    if (j.contains("meromorphic")) entry.meromorphic = j.at("meromorphic").get<bool>();
    if (j.contains("citations"))
        for (const Json& c : j.at("citations")) entry.citations.push_back(c.get<std::string>());
    return entry;
}

std::vector<CatalogEntry> catalog_entries() {
    namespace fs = std::filesystem;
    fs::path dir = catalog_directory();
    if (!fs::exists(dir))
        throw Error("io_error", "catalog directory not found: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<CatalogEntry> entries;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw Error("io_error", "cannot read " + f.string());
        std::stringstream ss;
        ss << in.rdbuf();
        entries.push_back(catalog_entry_from_json_text(ss.str()));
    }
    return entries;
}

namespace {

void check_assertions(const CatalogEntry& entry, const SpectraProfile& derived,
                      CatalogEntryResult& result) {
    // Point facts must respect the inclusion lattice among themselves ...
    for (const auto& a1 : entry.assertions)
        for (const auto& a2 : entry.assertions) {
            if (!(a1.point == a2.point)) continue;
            if (!lattice_reachable(a1.kind, a2.kind)) continue;
            if (a1.is_member && !a2.is_member) {
                result.passed = false;
                result.notes.push_back(
                    "assertion conflict: " + format_gaussian(a1.point) + " in sigma_" +
                    kind_name(a1.kind) + " but not in the larger sigma_" +
                    kind_name(a2.kind));
            }
        }
    // ... and against any region actually assigned.
    for (const auto& a : entry.assertions) {
        if (!derived.has(a.kind)) continue;
        bool got = member(a.point, derived.region(a.kind));
        if (got != a.is_member) {
            result.passed = false;
            result.notes.push_back("membership of " + format_gaussian(a.point) +
                                   " in sigma_" + kind_name(a.kind) + " is " +
                                   (got ? "true" : "false") + ", asserted " +
                                   (a.is_member ? "true" : "false"));
        }
    }
}

} // namespace

CatalogValidationReport run_catalog_validation(const std::vector<CatalogEntry>& entries) {
    CatalogValidationReport report;
    for (const CatalogEntry& entry : entries) {
        CatalogEntryResult result;
        result.name = entry.name;
        result.passed = true;

        std::string diagnostic;
        SpectraProfile derived = apply_rules_partial(entry.given, &diagnostic).profile;
        if (!diagnostic.empty()) {
            result.passed = false;
            result.notes.push_back("derivation aborted: " + diagnostic);
        }

        for (const auto& [kind, expected_region] : entry.expected) {
            if (!derived.has(kind)) {
                result.passed = false;
                result.mismatches.push_back({kind, describe(expected_region),
                                             "(unassigned)", ""});
                continue;
            }
            const ProfileEntry& e = derived.entry(kind);
            if (e.region != expected_region) {
                result.passed = false;
                result.mismatches.push_back(
                    {kind, describe(expected_region), describe(e.region), e.rule});
            }
        }

        result.full_profile = std::all_of(eta_kinds().begin(), eta_kinds().end(),
                                          [&](SpectrumKind k) { return derived.has(k); });
        if (result.full_profile) {
            try {
                EtaReport eta = verify_eta_theorem(derived);
                if (!eta.checks.all_pass) {
                    result.passed = false;
                    result.notes.push_back("hull verification failed");
                }
                VerificationReport bd = verify_boundary_diagrams(derived);
                if (!bd.all_pass) {
                    result.passed = false;
                    for (const auto& item : bd.items)
                        if (!item.pass && !item.skipped)
                            result.notes.push_back("boundary arrow failed: " + item.name);
                }
                VerificationReport moved = verify_moved_boundary(derived);
                if (!moved.all_pass) {
                    result.passed = false;
                    for (const auto& item : moved.items)
                        if (!item.pass && !item.skipped)
                            result.notes.push_back("moved-boundary check failed: " +
                                                   item.name);
                }
            } catch (const Error& e) {
                result.passed = false;
                result.notes.push_back(std::string("verification aborted: ") + e.what());
            }
        } else if (!entry.expected.empty()) {
            result.notes.push_back("partial profile; hull verifications not applicable");
        }

        if (entry.meromorphic) {
            try {
                bool got = meromorphic_check(derived);
                if (got != *entry.meromorphic) {
                    result.passed = false;
                    result.notes.push_back("meromorphic check returned " +
                                           std::string(got ? "true" : "false"));
                }
            } catch (const Error& e) {
                result.passed = false;
                result.notes.push_back(std::string("meromorphic check aborted: ") + e.what());
            }
        }

        check_assertions(entry, derived, result);
        result.derived = std::move(derived);
        report.all_passed = report.all_passed && result.passed;
        report.entries.push_back(std::move(result));
    }
    return report;
}

CatalogValidationReport run_catalog_validation() {
    return run_catalog_validation(catalog_entries());
}

} // namespace spectral
