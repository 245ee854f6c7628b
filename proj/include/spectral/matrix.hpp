#ifndef SPECTRAL_MATRIX_HPP
#define SPECTRAL_MATRIX_HPP

#include <Eigen/Core>

#include "spectral/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<spectral::GaussianRational> {
    using Real = spectral::GaussianRational;
    using NonInteger = spectral::GaussianRational;
    using Literal = spectral::GaussianRational;
    using Nested = spectral::GaussianRational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 16,
        MulCost = 32
    };
    static spectral::GaussianRational epsilon() { return {}; }
    static spectral::GaussianRational dummy_precision() { return {}; }
    static int digits10() { return 0; }
};

} // namespace Eigen

namespace spectral {

using ExactMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;

inline bool is_square(const ExactMatrix& m) { return m.rows() == m.cols(); }

inline void require_square(const ExactMatrix& m, const char* op) {
    if (!is_square(m))
        throw DimensionMismatch(std::string(op) + " requires a square matrix");
}

inline ExactMatrix exact_identity(Eigen::Index n) {
    ExactMatrix id = ExactMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) id(i, i) = GaussianRational(1);
    return id;
}

inline bool is_zero_matrix(const ExactMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

} // namespace spectral

#endif
