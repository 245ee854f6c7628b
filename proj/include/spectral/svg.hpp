#ifndef SPECTRAL_SVG_HPP
#define SPECTRAL_SVG_HPP

#include <string>

#include "spectral/region.hpp"

namespace spectral {

// Deterministic SVG for a region: viewport from the exact extents with a 5%
// margin, fixed style per primitive kind, coordinates printed as exact
// 6-decimal strings. Identical input yields byte-identical output.
std::string render_svg(const SpectralRegion& r);

} // namespace spectral

#endif
