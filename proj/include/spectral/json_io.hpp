#ifndef SPECTRAL_JSON_IO_HPP
#define SPECTRAL_JSON_IO_HPP

#include <json.hpp>

#include "spectral/chain.hpp"
#include "spectral/eigenvalues.hpp"
#include "spectral/spectra.hpp"

namespace spectral {

inline constexpr const char* kSchemaTag = "spectral-chain/1";

using Json = nlohmann::ordered_json;

// Matrix format: {"rows": r, "cols": c, "entries": [["a/b","c/d"], ...]},
// entries row-major, each entry [real, imaginary] as fraction strings
// ("3" is accepted for "3/1").
ExactMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ExactMatrix& m);

// Region format: {"primitives": [{"kind": "disk", "center": ["0","0"],
// "radius": "1"}, ...]}; segments carry "from"/"to", points "center".
SpectralRegion region_from_json(const Json& j);
Json region_to_json(const SpectralRegion& r);

Json chain_report_to_json(const ChainReport& rep);
Json drazin_to_json(const DrazinData& data);
Json classification_to_json(const PointClassification& pc);
Json spectrum_to_json(const SpectrumClassification& sc, const ExactMatrix& m);
Json hull_report_to_json(const HullReport& rep);
Json open_region_to_json(const OpenRegion& r);
Json difference_to_json(const DifferenceResult& d);
Json pocetna_to_json(const PocetnaReport& rep);

// Profile: {"operator": name, "spectra": {"ap": region, ...},
// "poles": region (optional)}.
SpectraProfile profile_from_json(const Json& j);
Json profile_to_json(const SpectraProfile& p);

Json verification_to_json(const VerificationReport& rep);
Json eta_report_to_json(const EtaReport& rep);

Json error_to_json(const Error& e);

} // namespace spectral

#endif
