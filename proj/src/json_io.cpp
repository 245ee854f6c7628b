#include "spectral/json_io.hpp"

namespace spectral {

namespace {

GaussianRational entry_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError("matrix entry must be a [\"re\",\"im\"] pair of fraction strings");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

Json entry_to_json(const GaussianRational& z) {
    return Json::array({format_rational(z.re), format_rational(z.im)});
}

GaussianRational point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("point must be a [\"re\",\"im\"] pair");
    return entry_from_json(j);
}

} // namespace

ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw ParseError("matrix JSON needs rows, cols and entries");
    long rows = j.at("rows").get<long>();
    long cols = j.at("cols").get<long>();
    if (rows <= 0 || cols <= 0) throw ParseError("matrix dimensions must be positive");
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<size_t>(rows * cols))
        throw ParseError("entries length must equal rows*cols");
    ExactMatrix m(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c)
            m(r, c) = entry_from_json(entries[static_cast<size_t>(r * cols + c)]);
    return m;
}

Json matrix_to_json(const ExactMatrix& m) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(entry_to_json(m(r, c)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

SpectralRegion region_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("primitives"))
        throw ParseError("region JSON needs a primitives array");
    std::vector<RegionPrimitive> prims;
    for (const Json& pj : j.at("primitives")) {
        std::string kind = pj.at("kind").get<std::string>();
        if (kind == "point") {
            prims.push_back(RegionPrimitive::point(point_from_json(pj.at("center"))));
        } else if (kind == "segment") {
            prims.push_back(RegionPrimitive::segment(point_from_json(pj.at("from")),
                                                     point_from_json(pj.at("to"))));
        } else if (kind == "circle" || kind == "disk") {
            GaussianRational c = point_from_json(pj.at("center"));
            Rational r = parse_rational(pj.at("radius").get<std::string>());
            prims.push_back(kind == "circle" ? RegionPrimitive::circle(c, r)
                                             : RegionPrimitive::disk(c, r));
        } else {
            throw ParseError("unknown primitive kind \"" + kind + "\"");
        }
    }
    return SpectralRegion::make(std::move(prims));
}

Json region_to_json(const SpectralRegion& r) {
    Json prims = Json::array();
    for (const auto& p : r.primitives()) {
        Json pj;
        switch (p.kind) {
            case PrimitiveKind::Point:
                pj = {{"kind", "point"}, {"center", entry_to_json(p.a)}};
                break;
            case PrimitiveKind::Segment:
                pj = {{"kind", "segment"},
                      {"from", entry_to_json(p.a)},
                      {"to", entry_to_json(p.b)}};
                break;
            case PrimitiveKind::Circle:
                pj = {{"kind", "circle"},
                      {"center", entry_to_json(p.a)},
                      {"radius", format_rational(p.radius)}};
                break;
            case PrimitiveKind::Disk:
                pj = {{"kind", "disk"},
                      {"center", entry_to_json(p.a)},
                      {"radius", format_rational(p.radius)}};
                break;
        }
        prims.push_back(pj);
    }
    return Json{{"primitives", prims}};
}

Json chain_report_to_json(const ChainReport& rep) {
    return Json{{"dim", rep.dim},
                {"c", rep.c},
                {"c_prime", rep.c_prime},
                {"k", rep.k},
                {"ascent", rep.ascent},
                {"descent", rep.descent},
                {"uniform_descent_degree", rep.uniform_descent_degree},
                {"drazin_index", rep.drazin_index},
                // finite in every finite-dimensional space, hence identically 0
                {"essential_ascent", 0},
                {"essential_descent", 0}};
}

Json drazin_to_json(const DrazinData& data) {
    return Json{{"index", data.index},
                {"inverse", matrix_to_json(data.inverse)},
                {"core_part", matrix_to_json(data.core_part)},
                {"nilpotent_part", matrix_to_json(data.nilpotent_part)}};
}

Json classification_to_json(const PointClassification& pc) {
    return Json{{"lambda", entry_to_json(pc.lambda)},
                {"in_spectrum", pc.in_spectrum},
                {"pole_order", pc.pole_order},
                {"algebraic_multiplicity", pc.algebraic_multiplicity},
                {"chain", chain_report_to_json(pc.chain)}};
}

Json spectrum_to_json(const SpectrumClassification& sc, const ExactMatrix& m) {
    Json evs = Json::array();
    for (size_t i = 0; i < sc.eigenvalues.items.size(); ++i) {
        const auto& item = sc.eigenvalues.items[i];
        Json ej{{"value", entry_to_json(item.value)},
                {"multiplicity", item.multiplicity}};
        if (i < sc.points.size()) {
            ej["pole_order"] = sc.points[i].pole_order;
            ej["chain"] = chain_report_to_json(sc.points[i].chain);
        }
        evs.push_back(ej);
    }
    Json out{{"eigenvalues", evs}, {"complete", sc.eigenvalues.complete}};
    if (sc.eigenvalues.complete) out["region"] = region_to_json(point_spectrum_region(m));
    return out;
}

Json open_region_to_json(const OpenRegion& r) {
    SpectralRegion closure = SpectralRegion::make(r.disks);
    Json j = region_to_json(closure);
    j["open"] = true;
    return j;
}

Json hull_report_to_json(const HullReport& rep) {
    Json holes = Json::array();
    for (const auto& hole : rep.holes) {
        Json hj{{"closure", region_to_json(SpectralRegion::make(
                                {RegionPrimitive::disk(hole.outer.a, hole.outer.radius)}))},
                {"open", true}};
        if (!hole.removed.empty()) hj["excluding"] = region_to_json(hole.removed);
        holes.push_back(hj);
    }
    return Json{{"hull", region_to_json(rep.hull)},
                {"holes", holes},
                {"component_count", rep.component_count}};
}

Json difference_to_json(const DifferenceResult& d) {
    Json j;
    if (d.exact) {
        j["exact"] = true;
        j["region"] = region_to_json(*d.exact);
    } else {
        j["exact"] = false;
        j["open_flagged"] = d.open_flagged;
        if (d.closure) j["closure"] = region_to_json(*d.closure);
    }
    j["empty"] = d.empty();
    return j;
}

Json pocetna_to_json(const PocetnaReport& rep) {
    Json items = Json::array();
    for (const auto& c : rep.conclusions)
        items.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"conclusions", items}, {"all_pass", rep.all_pass}};
}

SpectraProfile profile_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("spectra"))
        throw ParseError("profile JSON needs a spectra object");
    SpectraProfile p(j.value("operator", std::string("unnamed")));
    for (const auto& [name, region] : j.at("spectra").items()) {
        auto kind = kind_from_name(name);
        if (!kind) throw ParseError("unknown spectrum kind \"" + name + "\"");
        p.assign_given(*kind, region_from_json(region));
    }
    if (j.contains("poles")) p.poles = region_from_json(j.at("poles"));
    return p;
}

Json profile_to_json(const SpectraProfile& p) {
    Json spectra = Json::object();
    for (SpectrumKind kind : all_spectrum_kinds()) {
        if (!p.has(kind)) continue;
        const ProfileEntry& e = p.entry(kind);
        Json ej = region_to_json(e.region);
        ej["provenance"] = e.provenance == Provenance::Given ? "given" : "derived";
        if (!e.rule.empty()) ej["rule"] = e.rule;
        spectra[kind_name(kind)] = ej;
    }
    Json out{{"operator", p.operator_name()}, {"spectra", spectra}};
    if (p.poles) out["poles"] = region_to_json(*p.poles);
    return out;
}

Json verification_to_json(const VerificationReport& rep) {
    Json items = Json::array();
    for (const auto& item : rep.items)
        items.push_back(Json{{"name", item.name},
                             {"pass", item.pass},
                             {"skipped", item.skipped},
                             {"detail", item.detail}});
    return Json{{"items", items}, {"all_pass", rep.all_pass}};
}

Json eta_report_to_json(const EtaReport& rep) {
    Json j = verification_to_json(rep.checks);
    j["common_hull"] = region_to_json(rep.common_hull);
    return j;
}

Json error_to_json(const Error& e) {
    return Json{{"schema", kSchemaTag},
                {"error", Json{{"code", e.code()}, {"message", e.what()}}}};
}

} // namespace spectral
