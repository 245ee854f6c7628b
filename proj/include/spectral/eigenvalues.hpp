#ifndef SPECTRAL_EIGENVALUES_HPP
#define SPECTRAL_EIGENVALUES_HPP

#include <vector>

#include "spectral/chain.hpp"
#include "spectral/region.hpp"

namespace spectral {

struct EigenvalueList {
    struct Item {
        GaussianRational value;
        Eigen::Index multiplicity = 0;
    };
    std::vector<Item> items; // sorted lexicographically, deterministic
    bool complete = false;   // true iff the characteristic polynomial split into
                             // linear factors over the Gaussian rationals
    Eigen::Index total_multiplicity() const;
};

// All Gaussian-rational roots of det(lambda I - m) with multiplicities, via
// the rational root test over Z[i] (norm factorization + divisor enumeration).
EigenvalueList rational_eigenvalues(const ExactMatrix& m);

// The finite point region of the eigenvalue set. Requires a complete
// factorization; throws IncompleteFactorization otherwise.
SpectralRegion point_spectrum_region(const ExactMatrix& m);

struct SpectrumClassification {
    EigenvalueList eigenvalues;
    std::vector<PointClassification> points; // one per distinct eigenvalue
};

// classify_point at every rational eigenvalue; `parallel` may fan the
// per-eigenvalue work out to threads without changing the result.
SpectrumClassification classify_spectrum(const ExactMatrix& m, bool parallel = false);

} // namespace spectral

#endif
