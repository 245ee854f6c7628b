#include "spectral/spectra.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace spectral {

namespace {

using K = SpectrumKind;

struct KindInfo {
    K kind;
    const char* name;
};

constexpr std::array<KindInfo, kSpectrumKindCount> kKindTable{{
    {K::sigma, "sigma"},     {K::p, "p"},
    {K::ap, "ap"},           {K::su, "su"},
    {K::cp, "cp"},           {K::Phi_plus, "Phi+"},
    {K::Phi_minus, "Phi-"},  {K::Phi, "Phi"},
    {K::W_plus, "W+"},       {K::W_minus, "W-"},
    {K::W, "W"},             {K::B_plus, "B+"},
    {K::B_minus, "B-"},      {K::B, "B"},
    {K::LD, "LD"},           {K::RD, "RD"},
    {K::D, "D"},             {K::LDe, "LDe"},
    {K::RDe, "RDe"},         {K::dsc, "dsc"},
    {K::dsce, "dsce"},       {K::BPhi_plus, "BPhi+"},
    {K::BPhi_minus, "BPhi-"},{K::BPhi, "BPhi"},
    {K::BW_plus, "BW+"},     {K::BW_minus, "BW-"},
    {K::BW, "BW"},           {K::TUD, "TUD"},
    {K::qPhi, "qPhi"},       {K::Kt, "Kt"},
}};

} // namespace

const std::vector<SpectrumKind>& all_spectrum_kinds() {
    static const std::vector<SpectrumKind> kinds = [] {
        std::vector<SpectrumKind> v;
        for (const auto& info : kKindTable) v.push_back(info.kind);
        return v;
    }();
    return kinds;
}

std::string kind_name(SpectrumKind k) {
    for (const auto& info : kKindTable)
        if (info.kind == k) return info.name;
    return "?";
}

std::optional<SpectrumKind> kind_from_name(const std::string& name) {
    for (const auto& info : kKindTable)
        if (name == info.name) return info.kind;
    return std::nullopt;
}

const std::vector<SpectrumKind>& eta_kinds() {
    static const std::vector<SpectrumKind> kinds{
        K::TUD, K::qPhi, K::Kt,  K::BPhi, K::BW,  K::D,   K::LDe,
        K::BW_plus, K::LD, K::RDe, K::BW_minus, K::RD, K::dsce, K::dsc};
    return kinds;
}

const std::vector<std::pair<SpectrumKind, SpectrumKind>>& inclusion_lattice() {
    static const std::vector<std::pair<K, K>> edges = [] {
        std::vector<std::pair<K, K>> e;
        auto add = [&](K a, K b) { e.emplace_back(a, b); };
        // B-regularity spine and branches
        add(K::TUD, K::qPhi);
        add(K::qPhi, K::Kt);
        add(K::Kt, K::BPhi);
        add(K::BPhi, K::BW);
        add(K::BW, K::D);
        add(K::qPhi, K::LDe);
        add(K::LDe, K::BW_plus);
        add(K::BW_plus, K::LD);
        add(K::LD, K::D);
        add(K::qPhi, K::RDe);
        add(K::RDe, K::BW_minus);
        add(K::BW_minus, K::RD);
        add(K::RD, K::D);
        add(K::LDe, K::BPhi);
        add(K::RDe, K::BPhi);
        add(K::BW_plus, K::BW);
        add(K::BW_minus, K::BW);
        // descent family
        add(K::TUD, K::dsce);
        add(K::dsce, K::dsc);
        add(K::dsce, K::RDe);
        add(K::dsce, K::Phi_minus);
        add(K::dsc, K::RD);
        add(K::dsc, K::B_minus);
        add(K::dsc, K::su);
        // classical lattice
        add(K::Phi_plus, K::W_plus);
        add(K::W_plus, K::B_plus);
        add(K::B_plus, K::ap);
        add(K::ap, K::sigma);
        add(K::Phi_minus, K::W_minus);
        add(K::W_minus, K::B_minus);
        add(K::B_minus, K::su);
        add(K::su, K::sigma);
        add(K::Phi, K::W);
        add(K::W, K::B);
        add(K::B, K::sigma);
        add(K::Phi_plus, K::Phi);
        add(K::Phi_minus, K::Phi);
        add(K::W_plus, K::W);
        add(K::W_minus, K::W);
        add(K::B_plus, K::B);
        add(K::B_minus, K::B);
        add(K::p, K::ap);
        add(K::cp, K::su);
        // B-spectra under their classical counterparts
        add(K::BW_plus, K::W_plus);
        add(K::BW_minus, K::W_minus);
        add(K::BW, K::W);
        add(K::BPhi, K::Phi);
        add(K::LDe, K::Phi_plus);
        add(K::RDe, K::Phi_minus);
        add(K::LD, K::B_plus);
        add(K::RD, K::B_minus);
        add(K::D, K::B);
        // identifications BPhi+ = LDe, BPhi- = RDe
        add(K::BPhi_plus, K::LDe);
        add(K::LDe, K::BPhi_plus);
        add(K::BPhi_minus, K::RDe);
        add(K::RDe, K::BPhi_minus);
        return e;
    }();
    return edges;
}

namespace {

const std::array<std::array<bool, kSpectrumKindCount>, kSpectrumKindCount>& reach_matrix() {
    static const auto matrix = [] {
        std::array<std::array<bool, kSpectrumKindCount>, kSpectrumKindCount> m{};
        for (int i = 0; i < kSpectrumKindCount; ++i) m[i][i] = true;
        for (const auto& [a, b] : inclusion_lattice())
            m[static_cast<int>(a)][static_cast<int>(b)] = true;
        for (int k = 0; k < kSpectrumKindCount; ++k)
            for (int i = 0; i < kSpectrumKindCount; ++i)
                if (m[i][k])
                    for (int j = 0; j < kSpectrumKindCount; ++j)
                        if (m[k][j]) m[i][j] = true;
        return m;
    }();
    return matrix;
}

} // namespace

bool lattice_reachable(SpectrumKind from, SpectrumKind to) {
    return reach_matrix()[static_cast<int>(from)][static_cast<int>(to)];
}

const SpectralRegion& SpectraProfile::region(SpectrumKind k) const {
    auto it = entries_.find(k);
    if (it == entries_.end())
        throw MissingKind("spectrum kind " + kind_name(k) + " is not assigned");
    return it->second.region;
}

const ProfileEntry& SpectraProfile::entry(SpectrumKind k) const {
    auto it = entries_.find(k);
    if (it == entries_.end())
        throw MissingKind("spectrum kind " + kind_name(k) + " is not assigned");
    return it->second;
}

void SpectraProfile::check_lattice(SpectrumKind k, const SpectralRegion& r) const {
    for (const auto& [a, b] : inclusion_lattice()) {
        try {
            if (a == k && has(b) && !subset(r, region(b)))
                throw ProfileInconsistent(
                    operator_name_ + ": sigma_" + kind_name(a) + " = " + describe(r) +
                    " is not contained in sigma_" + kind_name(b) + " = " +
                    describe(region(b)));
            if (b == k && has(a) && !subset(region(a), r))
                throw ProfileInconsistent(
                    operator_name_ + ": sigma_" + kind_name(a) + " = " +
                    describe(region(a)) + " is not contained in sigma_" + kind_name(b) +
                    " = " + describe(r));
        } catch (const UnsupportedConfiguration&) {
            // undecidable pair: no verdict, no veto
        }
    }
}

void SpectraProfile::assign_given(SpectrumKind k, SpectralRegion r) {
    check_lattice(k, r);
    entries_[k] = ProfileEntry{std::move(r), Provenance::Given, ""};
}

void SpectraProfile::assign_derived(SpectrumKind k, SpectralRegion r,
                                    const std::string& rule) {
    check_lattice(k, r);
    entries_[k] = ProfileEntry{std::move(r), Provenance::Derived, rule};
}

void SpectraProfile::assign_raw(SpectrumKind k, SpectralRegion r, Provenance prov,
                                std::string rule) {
    entries_[k] = ProfileEntry{std::move(r), prov, std::move(rule)};
}

namespace {

SpectralRegion point_zero_region() {
    return SpectralRegion::make({RegionPrimitive::point(GaussianRational(0))});
}

// base union interior(star) as a closed region: each open interior disk is
// closed over, provided its boundary circle already lies in the union.
std::optional<SpectralRegion> union_with_interior(const SpectralRegion& base,
                                                  const SpectralRegion& star) {
    OpenRegion open = interior(star);
    std::vector<RegionPrimitive> parts = base.primitives();
    for (const auto& d : open.disks) {
        SpectralRegion ring =
            SpectralRegion::make({RegionPrimitive::circle(d.a, d.radius)});
        bool covered = false;
        try {
            covered = subset(ring, base);
        } catch (const UnsupportedConfiguration&) {
            covered = false;
        }
        if (!covered) {
            for (const auto& other : open.disks) {
                if (other == d) continue;
                if (strictly_inside_open_disk(ring.primitives().front(), other.a,
                                              other.radius)) {
                    covered = true;
                    break;
                }
            }
        }
        if (!covered) return std::nullopt;
        parts.push_back(d);
    }
    return SpectralRegion::make(std::move(parts));
}

DerivationRule union_rule(const std::string& family, K base, K star, K output,
                          const std::string& citation) {
    DerivationRule rule;
    rule.id = family + "[" + kind_name(star) + "]";
    rule.output = output;
    rule.citation = citation;
    rule.inputs = {base, star};
    rule.eval = [base, star, id = rule.id](const SpectraProfile& profile)
        -> std::optional<SpectralRegion> {
        if (!profile.has(base) || !profile.has(star)) return std::nullopt;
        const SpectralRegion& b = profile.region(base);
        const SpectralRegion& s = profile.region(star);
        SpectralRegion acc_form = region_union(b, accumulation(s));
        auto int_form = union_with_interior(b, s);
        if (!int_form)
            throw UnsupportedConfiguration(
                id + ": interior form of the identity is not representable");
        if (*int_form != acc_form)
            throw RuleConflict(id + ": acc form " + describe(acc_form) +
                               " and int form " + describe(*int_form) + " disagree");
        return acc_form;
    };
    return rule;
}

DerivationRule check_rule_interior_equal(const std::string& id, K a, K b,
                                         const std::string& citation) {
    DerivationRule rule;
    rule.id = id;
    rule.output = b;
    rule.citation = citation;
    rule.inputs = {a, b};
    rule.eval = [a, b, id](const SpectraProfile& profile) -> std::optional<SpectralRegion> {
        if (!profile.has(a) || !profile.has(b)) return std::nullopt;
        if (interior(profile.region(a)) != interior(profile.region(b)))
            throw RuleConflict(id + ": interiors of sigma_" + kind_name(a) +
                               " and sigma_" + kind_name(b) + " differ");
        return std::nullopt;
    };
    return rule;
}

DerivationRule line_rule(K base_kind, K input, K output) {
    DerivationRule rule;
    rule.id = std::string("line-rule[") + kind_name(input) + "->" + kind_name(output) + "]";
    rule.output = output;
    rule.citation = "a line-contained sigma_" + kind_name(input) +
                    " collapses sigma_" + kind_name(output) + " to sigma_" +
                    kind_name(base_kind);
    rule.inputs = {base_kind, input};
    bool countable_ok = (input == K::p || input == K::cp);
    rule.eval = [base_kind, input, countable_ok](const SpectraProfile& profile)
        -> std::optional<SpectralRegion> {
        if (!profile.has(base_kind) || !profile.has(input)) return std::nullopt;
        const SpectralRegion& in = profile.region(input);
        bool guard = line_contained(in) || (countable_ok && in.is_finite_point_set());
        if (!guard) return std::nullopt;
        return profile.region(base_kind);
    };
    return rule;
}

DerivationRule boundary_acc_rule(K star) {
    DerivationRule rule;
    rule.id = std::string("boundary-acc-rule[") + kind_name(star) + "]";
    rule.output = K::TUD;
    rule.citation = "sigma_" + kind_name(star) +
                    " = bd sigma = acc sigma forces sigma_TUD = sigma_" + kind_name(star);
    rule.inputs = {star};
    rule.eval = [star](const SpectraProfile& profile) -> std::optional<SpectralRegion> {
        if (!profile.has(star)) return std::nullopt;
        const SpectralRegion& s = profile.region(star);
        if (boundary(s) != s || accumulation(s) != s) return std::nullopt;
        return s;
    };
    return rule;
}

DerivationRule one_component_rule(K star) {
    DerivationRule rule;
    rule.id = std::string("one-component-rule[") + kind_name(star) + "]";
    rule.output = K::D;
    rule.citation = "complement of sigma_" + kind_name(star) +
                    " with a single component forces sigma_D = sigma_" + kind_name(star);
    rule.inputs = {star};
    rule.eval = [star](const SpectraProfile& profile) -> std::optional<SpectralRegion> {
        if (!profile.has(star)) return std::nullopt;
        const SpectralRegion& s = profile.region(star);
        if (!connected_hull(s).holes.empty()) return std::nullopt;
        return s;
    };
    return rule;
}

DerivationRule alias_rule(K from, K to) {
    DerivationRule rule;
    rule.id = std::string("ident[") + kind_name(from) + "=" + kind_name(to) + "]";
    rule.output = to;
    rule.citation = "sigma_" + kind_name(from) + " = sigma_" + kind_name(to) +
                    " (same operator class)";
    rule.inputs = {from};
    rule.eval = [from](const SpectraProfile& profile) -> std::optional<SpectralRegion> {
        if (!profile.has(from)) return std::nullopt;
        return profile.region(from);
    };
    return rule;
}

DerivationRule split_union_rule(K whole, K left, K right) {
    DerivationRule rule;
    rule.id = std::string("split-union[") + kind_name(whole) + "]";
    rule.output = whole;
    rule.citation = "sigma_" + kind_name(whole) + " = sigma_" + kind_name(left) +
                    " union sigma_" + kind_name(right);
    rule.inputs = {left, right};
    rule.eval = [left, right](const SpectraProfile& profile)
        -> std::optional<SpectralRegion> {
        if (!profile.has(left) || !profile.has(right)) return std::nullopt;
        return region_union(profile.region(left), profile.region(right));
    };
    return rule;
}

DerivationRule split_fill_rule(K whole, K known, K output) {
    DerivationRule rule;
    rule.id = std::string("split-fill[") + kind_name(whole) + "->" + kind_name(output) + "]";
    rule.output = output;
    rule.citation = "sigma_" + kind_name(whole) + " = sigma_" + kind_name(known) +
                    " union sigma_" + kind_name(output) + "; the closed sigma_" +
                    kind_name(output) + " must cover the closure of the complement part";
    rule.inputs = {whole, known};
    rule.eval = [whole, known](const SpectraProfile& profile)
        -> std::optional<SpectralRegion> {
        if (!profile.has(whole) || !profile.has(known)) return std::nullopt;
        const SpectralRegion& w = profile.region(whole);
        DifferenceResult diff = difference(w, profile.region(known));
        if (!diff.closure || *diff.closure != w) return std::nullopt;
        return w;
    };
    return rule;
}

DerivationRule weyl_fill_rule(bool upper) {
    DerivationRule rule;
    rule.id = upper ? "weyl-index-fill[W+]" : "weyl-index-fill[W-]";
    rule.output = upper ? K::W_plus : K::W_minus;
    rule.citation = upper
        ? "points surjective but not bounded below are upper semi-Weyl singular: "
          "closure(sigma_ap \\ sigma_su) = sigma_ap forces sigma_W+ = sigma_ap"
        : "points bounded below but not surjective are lower semi-Weyl singular: "
          "closure(sigma_su \\ sigma_ap) = sigma_su forces sigma_W- = sigma_su";
    rule.inputs = {K::ap, K::su};
    rule.eval = [upper](const SpectraProfile& profile) -> std::optional<SpectralRegion> {
        if (!profile.has(K::ap) || !profile.has(K::su)) return std::nullopt;
        const SpectralRegion& ap = profile.region(K::ap);
        const SpectralRegion& su = profile.region(K::su);
        const SpectralRegion& target = upper ? ap : su;
        DifferenceResult diff =
            upper ? difference(ap, su) : difference(su, ap);
        if (!diff.closure || *diff.closure != target) return std::nullopt;
        return target;
    };
    return rule;
}

DerivationRule phi_boundary_squeeze(K output) {
    DerivationRule rule;
    rule.id = std::string("phi-boundary-squeeze[") + kind_name(output) + "]";
    rule.output = output;
    rule.citation = "bd sigma_Phi subset sigma_" + kind_name(output) +
                    " subset sigma_Phi; a boundary-only sigma_Phi pins sigma_" +
                    kind_name(output);
    rule.inputs = {K::Phi};
    rule.eval = [](const SpectraProfile& profile) -> std::optional<SpectralRegion> {
        if (!profile.has(K::Phi)) return std::nullopt;
        const SpectralRegion& phi = profile.region(K::Phi);
        if (boundary(phi) != phi) return std::nullopt;
        return phi;
    };
    return rule;
}

} // namespace

const std::vector<DerivationRule>& derivation_rules() {
    static const std::vector<DerivationRule> rules = [] {
        std::vector<DerivationRule> r;
        const std::string acc_int = " (both the acc and int forms are computed and compared)";

        for (K star : {K::W_plus, K::BW_plus})
            r.push_back(union_rule("cor-W-1", K::TUD, star, K::BW_plus,
                                   "sigma_BW+ = sigma_TUD union acc sigma_" +
                                       kind_name(star) + acc_int));
        for (K star : {K::W_minus, K::BW_minus})
            r.push_back(union_rule("cor-W-2", K::qPhi, star, K::BW_minus,
                                   "sigma_BW- = sigma_qPhi union acc sigma_" +
                                       kind_name(star) + acc_int));
        for (K star : {K::W, K::BW})
            r.push_back(union_rule("cor-W-3", K::TUD, star, K::BW,
                                   "sigma_BW = sigma_TUD union acc sigma_" +
                                       kind_name(star) + acc_int));
        r.push_back(check_rule_interior_equal("cor-W-4[W+]", K::W_plus, K::BW_plus,
                                              "int sigma_W+ = int sigma_BW+"));
        r.push_back(check_rule_interior_equal("cor-W-4[W-]", K::W_minus, K::BW_minus,
                                              "int sigma_W- = int sigma_BW-"));
        r.push_back(check_rule_interior_equal("cor-W-4[W]", K::W, K::BW,
                                              "int sigma_W = int sigma_BW"));

        for (K star : {K::Phi_plus, K::LDe})
            r.push_back(union_rule("cor-F-1", K::TUD, star, K::LDe,
                                   "sigma_LDe = sigma_TUD union acc sigma_" +
                                       kind_name(star) + acc_int));
        for (K star : {K::Phi_minus, K::RDe, K::dsce})
            r.push_back(union_rule("cor-F-2", K::TUD, star, K::dsce,
                                   "sigma_dsce = sigma_TUD union acc sigma_" +
                                       kind_name(star) + acc_int));
        for (K star : {K::Phi_minus, K::RDe, K::dsce})
            r.push_back(union_rule("cor-F-3", K::qPhi, star, K::RDe,
                                   "sigma_RDe = sigma_qPhi union acc sigma_" +
                                       kind_name(star) + acc_int));
        for (K star : {K::Phi, K::BPhi})
            r.push_back(union_rule("cor-F-4", K::TUD, star, K::BPhi,
                                   "sigma_BPhi = sigma_TUD union acc sigma_" +
                                       kind_name(star) + acc_int));

        for (K star : {K::p, K::ap, K::B_plus, K::LD})
            r.push_back(union_rule("cor-Dra-1", K::TUD, star, K::LD,
                                   "sigma_LD = sigma_TUD union acc sigma_" +
                                       kind_name(star) + acc_int));
        for (K star : {K::su, K::cp, K::B_minus, K::RD, K::dsc})
            r.push_back(union_rule("cor-Dra-2", K::TUD, star, K::dsc,
                                   "sigma_dsc = sigma_TUD union acc sigma_" +
                                       kind_name(star) + acc_int));
        for (K star : {K::su, K::cp, K::B_minus, K::RD, K::dsc})
            r.push_back(union_rule("cor-Dra-3", K::qPhi, star, K::RD,
                                   "sigma_RD = sigma_qPhi union acc sigma_" +
                                       kind_name(star) + acc_int));
        for (K star : {K::sigma, K::B, K::D})
            r.push_back(union_rule("cor-Dra-4", K::TUD, star, K::D,
                                   "sigma_D = sigma_TUD union acc sigma_" +
                                       kind_name(star) + acc_int));

        // line-contained base spectra collapse their B-regularity spectra
        const std::pair<K, K> tud_family[] = {
            {K::ap, K::LD},        {K::B_plus, K::LD},   {K::LD, K::LD},
            {K::p, K::LD},         {K::Phi_plus, K::LDe},{K::LDe, K::LDe},
            {K::dsc, K::dsc},      {K::dsce, K::dsce},   {K::cp, K::dsc},
            {K::W_plus, K::BW_plus}, {K::BW_plus, K::BW_plus},
            {K::W, K::BW},         {K::BW, K::BW},
            {K::Phi, K::BPhi},     {K::BPhi, K::BPhi},
            {K::B, K::D},          {K::sigma, K::D},     {K::D, K::D},
        };
        for (const auto& [in, out] : tud_family) r.push_back(line_rule(K::TUD, in, out));
        const std::pair<K, K> qphi_family[] = {
            {K::su, K::RD},         {K::B_minus, K::RD}, {K::RD, K::RD},
            {K::cp, K::RD},         {K::Phi_minus, K::RDe}, {K::RDe, K::RDe},
            {K::W_minus, K::BW_minus}, {K::BW_minus, K::BW_minus},
        };
        for (const auto& [in, out] : qphi_family) r.push_back(line_rule(K::qPhi, in, out));

        for (K star : {K::W_plus, K::W_minus, K::W, K::BW_minus, K::Phi_plus,
                       K::Phi_minus, K::Phi, K::RDe, K::ap, K::su, K::B_plus,
                       K::B_minus, K::B, K::RD, K::sigma})
            r.push_back(boundary_acc_rule(star));

        for (K star : eta_kinds())
            if (star != K::D) r.push_back(one_component_rule(star));

        r.push_back(alias_rule(K::LDe, K::BPhi_plus));
        r.push_back(alias_rule(K::BPhi_plus, K::LDe));
        r.push_back(alias_rule(K::RDe, K::BPhi_minus));
        r.push_back(alias_rule(K::BPhi_minus, K::RDe));

        const std::array<std::array<K, 3>, 7> splits{{
            {K::sigma, K::ap, K::su},
            {K::Phi, K::Phi_plus, K::Phi_minus},
            {K::W, K::W_plus, K::W_minus},
            {K::B, K::B_plus, K::B_minus},
            {K::D, K::LD, K::RD},
            {K::BW, K::BW_plus, K::BW_minus},
            {K::BPhi, K::LDe, K::RDe},
        }};
        for (const auto& t : splits) {
            r.push_back(split_union_rule(t[0], t[1], t[2]));
            r.push_back(split_fill_rule(t[0], t[1], t[2]));
            r.push_back(split_fill_rule(t[0], t[2], t[1]));
        }

        r.push_back(weyl_fill_rule(true));
        r.push_back(weyl_fill_rule(false));

        r.push_back(phi_boundary_squeeze(K::Phi_plus));
        r.push_back(phi_boundary_squeeze(K::Phi_minus));
        return r;
    }();
    return rules;
}

namespace {

void record(ApplyResult& res, const std::string& rule, SpectrumKind kind,
            const SpectralRegion& region) {
    res.profile.assign_derived(kind, region, rule);
    res.steps.push_back({rule, kind});
}

bool squeeze_pass(ApplyResult& res) {
    bool changed = false;
    const auto& entries = res.profile.entries();
    for (K b : all_spectrum_kinds()) {
        if (res.profile.has(b)) continue;
        for (const auto& [a, ea] : entries) {
            if (!lattice_reachable(a, b)) continue;
            bool done = false;
            for (const auto& [c, ec] : entries) {
                if (!lattice_reachable(b, c)) continue;
                if (ea.region != ec.region) continue;
                record(res, "squeeze[" + kind_name(a) + "," + kind_name(c) + "]", b,
                       ea.region);
                changed = true;
                done = true;
                break;
            }
            if (done) break;
        }
    }
    return changed;
}

bool countable_pass(ApplyResult& res) {
    // If one of the fourteen hull-equal spectra is countable, they all equal it.
    const SpectralRegion* src = nullptr;
    K src_kind = K::TUD;
    for (K k : eta_kinds()) {
        if (!res.profile.has(k)) continue;
        const SpectralRegion& r = res.profile.region(k);
        if (r.is_finite_point_set()) {
            src = &r;
            src_kind = k;
            break;
        }
    }
    if (!src) return false;
    SpectralRegion value = *src;
    bool changed = false;
    for (K k : eta_kinds()) {
        if (res.profile.has(k)) {
            if (res.profile.region(k) != value)
                throw RuleConflict("countable-eta: sigma_" + kind_name(src_kind) + " = " +
                                   describe(value) + " but sigma_" + kind_name(k) +
                                   " = " + describe(res.profile.region(k)));
            continue;
        }
        record(res, "countable-eta[" + kind_name(src_kind) + "]", k, value);
        changed = true;
    }
    return changed;
}

ApplyResult apply_rules_impl(const SpectraProfile& profile,
                             const std::vector<size_t>* order,
                             std::string* diagnostic) {
    const auto& rules = derivation_rules();
    std::vector<size_t> idx;
    if (order) {
        idx = *order;
    } else {
        idx.resize(rules.size());
        std::iota(idx.begin(), idx.end(), 0);
    }

    ApplyResult res;
    res.profile = profile;
    try {
        bool changed = true;
        int rounds = 0;
        while (changed) {
            if (++rounds > 3 * kSpectrumKindCount)
                throw Error("internal_invariant", "rule application failed to stabilize");
            changed = false;
            for (size_t i : idx) {
                const DerivationRule& rule = rules[i];
                std::optional<SpectralRegion> derived = rule.eval(res.profile);
                if (!derived) continue;
                if (!res.profile.has(rule.output)) {
                    record(res, rule.id, rule.output, *derived);
                    changed = true;
                } else if (res.profile.region(rule.output) != *derived) {
                    throw RuleConflict(rule.id + " derives sigma_" +
                                       kind_name(rule.output) + " = " +
                                       describe(*derived) + " but the profile has " +
                                       describe(res.profile.region(rule.output)));
                }
            }
            if (squeeze_pass(res)) changed = true;
            if (countable_pass(res)) changed = true;
        }
    } catch (const Error& e) {
        if (!diagnostic) throw;
        *diagnostic = e.what();
    }
    return res;
}

} // namespace

ApplyResult apply_rules(const SpectraProfile& profile) {
    return apply_rules_impl(profile, nullptr, nullptr);
}

ApplyResult apply_rules_ordered(const SpectraProfile& profile,
                                const std::vector<size_t>& rule_order) {
    return apply_rules_impl(profile, &rule_order, nullptr);
}

ApplyResult apply_rules_partial(const SpectraProfile& profile, std::string* diagnostic) {
    if (diagnostic) diagnostic->clear();
    return apply_rules_impl(profile, nullptr, diagnostic);
}

void VerificationReport::add(CheckItem item) {
    if (!item.skipped) all_pass = all_pass && item.pass;
    items.push_back(std::move(item));
}

EtaReport verify_eta_theorem(const SpectraProfile& profile) {
    std::string missing;
    for (K k : eta_kinds())
        if (!profile.has(k)) missing += (missing.empty() ? "" : ", ") + kind_name(k);
    if (!missing.empty())
        throw MissingKind("verify_eta_theorem requires all fourteen kinds; missing: " +
                          missing);

    EtaReport rep;
    rep.common_hull = connected_hull(profile.region(K::TUD)).hull;
    for (K k : eta_kinds()) {
        SpectralRegion hull = connected_hull(profile.region(k)).hull;
        rep.checks.add({"eta(sigma_" + kind_name(k) + ") equals eta(sigma_TUD)",
                        hull == rep.common_hull, false,
                        describe(hull) + " vs " + describe(rep.common_hull)});
    }

    // sigma_D consists of sigma_* and possibly some of its holes.
    const SpectralRegion& d = profile.region(K::D);
    for (K k : eta_kinds()) {
        if (k == K::TUD || k == K::D) continue;
        std::string name = "sigma_D is sigma_" + kind_name(k) + " plus filled holes";
        try {
            PocetnaReport pr = check_pocetna(profile.region(k), d);
            std::string detail;
            for (const auto& c : pr.conclusions)
                if (!c.pass) detail += c.name + " failed; ";
            rep.checks.add({name, pr.all_pass, false, detail});
        } catch (const Error& e) {
            rep.checks.add({name, false, false, e.what()});
        }
    }
    return rep;
}

namespace {

struct Arrow {
    const char* label;
    K from;
    K to;
};

} // namespace

VerificationReport verify_boundary_diagrams(const SpectraProfile& profile) {
    VerificationReport rep;
    static const Arrow arrows[] = {
        // diagram I: boundaries funnel into bd sigma_TUD
        {"d1", K::D, K::LD},        {"d1", K::LD, K::BW_plus},
        {"d1", K::BW_plus, K::LDe}, {"d1", K::LDe, K::TUD},
        {"d1", K::D, K::BW},        {"d1", K::BW, K::BW_plus},
        {"d1", K::BW, K::BPhi},     {"d1", K::BPhi, K::LDe},
        {"d1", K::BPhi, K::TUD},    {"d1", K::D, K::dsc},
        {"d1", K::dsc, K::dsce},    {"d1", K::dsce, K::TUD},
        // diagram II: funnel into bd sigma_qPhi, with the lower branch
        {"d2", K::LDe, K::qPhi},    {"d2", K::D, K::RD},
        {"d2", K::RD, K::BW_minus}, {"d2", K::BW_minus, K::RDe},
        {"d2", K::RDe, K::qPhi},    {"d2", K::BW, K::BW_minus},
        {"d2", K::BPhi, K::RDe},    {"d2", K::BPhi, K::qPhi},
        // diagram III: funnel into bd sigma_Kt
        {"d3", K::D, K::BW},        {"d3", K::BW, K::BPhi},
        {"d3", K::BPhi, K::Kt},
    };
    for (const auto& a : arrows) {
        std::string name = std::string(a.label) + ": bd(sigma_" + kind_name(a.from) +
                           ") subset bd(sigma_" + kind_name(a.to) + ")";
        if (!profile.has(a.from) || !profile.has(a.to)) {
            rep.add({name, false, true, "kind not assigned"});
            continue;
        }
        SpectralRegion lhs = boundary(profile.region(a.from));
        SpectralRegion rhs = boundary(profile.region(a.to));
        rep.add({name, subset(lhs, rhs), false, describe(lhs) + " vs " + describe(rhs)});
    }

    static const std::pair<K, const char*> rub_tud[] = {
        {K::BW_plus, "rub1"}, {K::BW, "rub1"},  {K::LDe, "rub1"}, {K::dsce, "rub1"},
        {K::BPhi, "rub1"},    {K::LD, "rub1"},  {K::dsc, "rub1"}, {K::D, "rub1"},
    };
    for (const auto& [k, label] : rub_tud) {
        std::string name = std::string(label) + ": bd(sigma_" + kind_name(k) +
                           ") subset bd(sigma_TUD)";
        if (!profile.has(k) || !profile.has(K::TUD)) {
            rep.add({name, false, true, "kind not assigned"});
            continue;
        }
        SpectralRegion lhs = boundary(profile.region(k));
        SpectralRegion rhs = boundary(profile.region(K::TUD));
        rep.add({name, subset(lhs, rhs), false, describe(lhs) + " vs " + describe(rhs)});
    }
    for (K k : {K::BW_minus, K::RD, K::RDe}) {
        std::string name = "rub2: bd(sigma_" + kind_name(k) + ") subset bd(sigma_qPhi)";
        if (!profile.has(k) || !profile.has(K::qPhi)) {
            rep.add({name, false, true, "kind not assigned"});
            continue;
        }
        SpectralRegion lhs = boundary(profile.region(k));
        SpectralRegion rhs = boundary(profile.region(K::qPhi));
        rep.add({name, subset(lhs, rhs), false, describe(lhs) + " vs " + describe(rhs)});
    }
    return rep;
}

namespace {

enum class MovedTerm { Region, Boundary, Acc };

struct MovedSide {
    K kind;
    MovedTerm term;
};

SpectralRegion moved_region(const SpectraProfile& profile, const MovedSide& s) {
    const SpectralRegion& r = profile.region(s.kind);
    switch (s.term) {
        case MovedTerm::Region: return r;
        case MovedTerm::Boundary: return boundary(r);
        case MovedTerm::Acc: return accumulation(r);
    }
    return r;
}

std::string moved_name(const MovedSide& s) {
    switch (s.term) {
        case MovedTerm::Region: return "sigma_" + kind_name(s.kind);
        case MovedTerm::Boundary: return "bd(sigma_" + kind_name(s.kind) + ")";
        case MovedTerm::Acc: return "acc(sigma_" + kind_name(s.kind) + ")";
    }
    return "";
}

// One clause: (a cap b) subset-or-equal (c cap d), or against a plain region.
struct MovedClause {
    const char* label;
    MovedSide a, b;          // left intersection
    bool rhs_intersection;   // true: right side is c cap d; false: plain c
    MovedSide c, d;
    bool equality;           // equality instead of inclusion
};

} // namespace

VerificationReport verify_moved_boundary(const SpectraProfile& profile) {
    VerificationReport rep;
    auto B = [](K k) { return MovedSide{k, MovedTerm::Boundary}; };
    auto A = [](K k) { return MovedSide{k, MovedTerm::Acc}; };
    auto R = [](K k) { return MovedSide{k, MovedTerm::Region}; };

    static const K TUDk = K::TUD;
    const std::vector<MovedClause> clauses = {
        // upper/lower/weyl moved boundaries
        {"W-moved-1a", B(K::W_plus), A(K::W_plus), true, B(K::W_plus), R(K::BW_plus), false},
        {"W-moved-1b", B(K::W_plus), R(K::BW_plus), false, B(TUDk), {}, false},
        {"W-moved-2", B(K::W_minus), A(K::W_minus), false, B(TUDk), {}, false},
        {"W-moved-3a", B(K::BW_minus), A(K::BW_minus), true, B(K::BW_minus), A(K::W_minus), false},
        {"W-moved-3b", B(K::BW_minus), A(K::W_minus), false, B(TUDk), {}, false},
        {"W-moved-4a", B(K::W), A(K::W), true, B(K::W), R(K::BW), false},
        {"W-moved-4b", B(K::W), R(K::BW), false, B(TUDk), {}, false},
        // essential Drazin moved boundaries
        {"LDe-moved-1a", B(K::Phi_plus), A(K::Phi_plus), true, B(K::Phi_plus), R(K::LDe), false},
        {"LDe-moved-1b", B(K::Phi_plus), R(K::LDe), false, B(TUDk), {}, false},
        {"LDe-moved-2a", B(K::Phi_minus), A(K::Phi_minus), true, B(K::Phi_minus), R(K::dsce), false},
        {"LDe-moved-2b", B(K::Phi_minus), R(K::dsce), false, B(TUDk), {}, false},
        {"LDe-moved-3a", B(K::RDe), A(K::RDe), true, B(K::RDe), A(K::Phi_minus), false},
        {"LDe-moved-3b", B(K::RDe), A(K::Phi_minus), true, B(K::RDe), R(K::dsce), false},
        {"LDe-moved-3c", B(K::RDe), R(K::dsce), true, B(K::RDe), R(TUDk), true},
        {"LDe-moved-3d", B(K::RDe), R(TUDk), false, B(TUDk), {}, false},
        {"LDe-moved-4a", B(K::Phi_minus), R(K::RDe), true, B(K::Phi_minus), R(K::qPhi), true},
        {"LDe-moved-4b", B(K::Phi_minus), R(K::qPhi), false, B(K::qPhi), {}, false},
        {"LDe-moved-5a", B(K::Phi), A(K::Phi), true, B(K::Phi), R(K::BPhi), false},
        {"LDe-moved-5b", B(K::Phi), R(K::BPhi), false, B(TUDk), {}, false},
        // point/approximate/surjectivity moved boundaries
        {"a-moved-1a", B(K::ap), A(K::ap), true, B(K::ap), R(K::LD), false},
        {"a-moved-1b", B(K::ap), R(K::LD), false, B(TUDk), {}, false},
        {"a-moved-2a", B(K::B_plus), A(K::B_plus), true, B(K::B_plus), R(K::LD), false},
        {"a-moved-2b", B(K::B_plus), R(K::LD), false, B(TUDk), {}, false},
        {"a-moved-3a", B(K::p), A(K::p), true, B(K::p), R(K::LD), false},
        {"a-moved-3b", B(K::p), R(K::LD), false, R(TUDk), {}, false},
        {"a-moved-4a", B(K::su), A(K::su), true, B(K::su), R(K::dsc), false},
        {"a-moved-4b", B(K::su), R(K::dsc), false, B(TUDk), {}, false},
        {"a-moved-5a", B(K::cp), A(K::cp), true, B(K::cp), R(K::dsc), false},
        {"a-moved-5b", B(K::cp), R(K::dsc), false, R(TUDk), {}, false},
        {"a-moved-6a", B(K::B_minus), A(K::B_minus), true, B(K::B_minus), R(K::dsc), false},
        {"a-moved-6b", B(K::B_minus), R(K::dsc), false, B(TUDk), {}, false},
        {"a-moved-7a", B(K::RD), A(K::RD), true, B(K::RD), R(K::dsc), false},
        {"a-moved-7b", B(K::RD), R(K::dsc), true, B(K::RD), R(TUDk), true},
        {"a-moved-7c", B(K::RD), R(TUDk), false, B(TUDk), {}, false},
        {"a-moved-8", B(K::su), R(K::RD), false, B(K::qPhi), {}, false},
        {"a-moved-9a", B(K::cp), R(K::RD), true, B(K::cp), R(K::qPhi), true},
        {"a-moved-9b", B(K::cp), R(K::qPhi), false, R(K::qPhi), {}, false},
        {"a-moved-10a", B(K::sigma), A(K::sigma), true, B(K::sigma), R(K::D), false},
        {"a-moved-10b", B(K::sigma), R(K::D), false, B(TUDk), {}, false},
        {"a-moved-11a", B(K::B), A(K::B), true, B(K::B), R(K::D), false},
        {"a-moved-11b", B(K::B), R(K::D), false, B(TUDk), {}, false},
    };

    for (const auto& clause : clauses) {
        std::vector<K> needed{clause.a.kind, clause.b.kind, clause.c.kind};
        if (clause.rhs_intersection) needed.push_back(clause.d.kind);
        bool missing = std::any_of(needed.begin(), needed.end(),
                                   [&](K k) { return !profile.has(k); });
        std::string name = std::string(clause.label) + ": " + moved_name(clause.a) +
                           " cap " + moved_name(clause.b) +
                           (clause.equality ? " equals " : " subset ") +
                           moved_name(clause.c) +
                           (clause.rhs_intersection ? " cap " + moved_name(clause.d) : "");
        if (missing) {
            rep.add({name, false, true, "kind not assigned"});
            continue;
        }
        try {
            SpectralRegion a = moved_region(profile, clause.a);
            SpectralRegion b = moved_region(profile, clause.b);
            bool pass = false;
            if (!clause.rhs_intersection) {
                SpectralRegion c = moved_region(profile, clause.c);
                pass = intersection_subset(a, b, c);
            } else {
                SpectralRegion c = moved_region(profile, clause.c);
                SpectralRegion d = moved_region(profile, clause.d);
                auto rhs = try_intersection(c, d);
                if (!rhs)
                    throw UnsupportedConfiguration(
                        "right-hand intersection not representable");
                if (clause.equality) {
                    auto lhs = try_intersection(a, b);
                    if (!lhs)
                        throw UnsupportedConfiguration(
                            "left-hand intersection not representable");
                    pass = (*lhs == *rhs);
                } else {
                    pass = intersection_subset(a, b, *rhs);
                }
            }
            rep.add({name, pass, false, ""});
        } catch (const UnsupportedConfiguration& e) {
            rep.add({name, false, true, e.what()});
        }
    }
    return rep;
}

bool meromorphic_check(const SpectraProfile& profile) {
    SpectralRegion zero = point_zero_region();
    std::optional<bool> verdict;
    for (K k : {K::TUD, K::BPhi, K::D}) {
        if (!profile.has(k)) continue;
        bool v = subset(profile.region(k), zero);
        if (verdict && *verdict != v)
            throw RuleConflict(
                "meromorphic criteria disagree across sigma_TUD / sigma_BPhi / sigma_D");
        verdict = v;
    }
    if (!verdict)
        throw MissingKind("meromorphic_check needs one of sigma_TUD, sigma_BPhi, sigma_D");
    return *verdict;
}

BwSimplyConnectedReport bw_simply_connected_check(SpectraProfile& profile) {
    if (!profile.has(K::BW))
        throw MissingKind("bw_simply_connected_check requires sigma_BW");
    BwSimplyConnectedReport rep;
    const SpectralRegion bw = profile.region(K::BW);
    HullReport hull = connected_hull(bw);
    if (!hull.holes.empty()) {
        rep.detail = "sigma_BW has " + std::to_string(hull.holes.size()) +
                     " hole(s); rule not applicable";
        return rep;
    }
    rep.applicable = true;
    if (profile.has(K::D)) {
        if (profile.region(K::D) != bw)
            throw RuleConflict("bw-simply-connected: sigma_D differs from hole-free sigma_BW");
        rep.detail = "sigma_D already equals sigma_BW";
    } else {
        profile.assign_derived(K::D, bw, "bw-simply-connected");
        rep.derived = true;
        rep.detail = "derived sigma_D = sigma_BW";
    }
    return rep;
}

VerificationReport omega_check(const SpectraProfile& profile) {
    VerificationReport rep;
    if (!profile.poles || !profile.has(K::TUD) || !profile.has(K::D) ||
        !profile.has(K::sigma)) {
        rep.add({"omega: components of the TUD resolvent set", false, true,
                 "needs poles plus sigma, sigma_TUD, sigma_D"});
        return rep;
    }
    HullReport hull = connected_hull(profile.region(K::TUD));
    const SpectralRegion& d = profile.region(K::D);
    const SpectralRegion& sigma = profile.region(K::sigma);
    const SpectralRegion& poles = *profile.poles;
    const SpectralRegion& tud = profile.region(K::TUD);
    int idx = 0;
    for (const auto& hole : hull.holes) {
        ++idx;
        bool ok = true;
        bool inside_d = true, outside_sigma = true;
        for (const auto& z : sample_points(RegionPrimitive::disk(hole.outer.a,
                                                                 hole.outer.radius),
                                           48)) {
            if (!hole.member(z, tud)) continue;
            if (!member(z, d)) inside_d = false;
            if (member(z, sigma) && !member(z, poles)) outside_sigma = false;
        }
        ok = inside_d || outside_sigma;
        rep.add({"omega: hole " + std::to_string(idx) + " of sigma_TUD lies in sigma_D " +
                     "or misses sigma away from the poles",
                 ok, false, "sampled check"});
    }
    if (hull.holes.empty())
        rep.add({"omega: sigma_TUD has no holes", true, false, "vacuous"});
    return rep;
}

} // namespace spectral
