#ifndef SPECTRAL_CHAIN_HPP
#define SPECTRAL_CHAIN_HPP

#include <vector>

#include "spectral/linalg.hpp"

namespace spectral {

// Chain dimension record for one square matrix T:
//   c[n]  = dim R(T^n)/R(T^{n+1})   (computed as codim(R(T)+N(T^n)), cross-checked)
//   cp[n] = dim N(T^{n+1})/N(T^n)   (computed as dim(N(T) cap R(T^n)), cross-checked)
//   k[n]  = c[n]-c[n+1] = cp[n]-cp[n+1]
// Lists are truncated at n = dim: stabilization is guaranteed by then.
//
// Essential ascent and descent are 0 for every matrix (all c_n, c'_n are
// finite in finite dimension); they are reported as such and not stored.
struct ChainReport {
    Eigen::Index dim = 0;
    std::vector<Eigen::Index> c;       // c_0 .. c_dim
    std::vector<Eigen::Index> c_prime; // c'_0 .. c'_dim
    std::vector<Eigen::Index> k;       // k_0 .. k_{dim-1}
    Eigen::Index ascent = 0;           // min n with c'_n = 0
    Eigen::Index descent = 0;          // min n with c_n = 0
    Eigen::Index uniform_descent_degree = 0; // min d with k_n = 0 for all n >= d
    Eigen::Index drazin_index = 0;     // = ascent = descent in finite dimension
};

ChainReport chain_report(const ExactMatrix& m);

// Core-nilpotent data at k = drazin_index: T = core + nilpotent along
// X = R(T^k) + N(T^k), inverse = Drazin inverse of T.
struct DrazinData {
    Eigen::Index index = 0;
    ExactMatrix inverse;
    ExactMatrix core_part;
    ExactMatrix nilpotent_part;
};

DrazinData drazin(const ExactMatrix& m);

struct PointClassification {
    GaussianRational lambda;
    bool in_spectrum = false;
    Eigen::Index pole_order = 0;             // 0 iff resolvent point
    Eigen::Index algebraic_multiplicity = 0; // dim N((T - lambda I)^dim)
    ChainReport chain;                       // chain of T - lambda I
};

PointClassification classify_point(const ExactMatrix& m, const GaussianRational& lambda);

} // namespace spectral

#endif
