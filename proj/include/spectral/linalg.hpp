#ifndef SPECTRAL_LINALG_HPP
#define SPECTRAL_LINALG_HPP

#include <optional>
#include <vector>

#include "spectral/matrix.hpp"

namespace spectral {

// A subspace of C^n in canonical form: the basis matrix is the unique reduced
// column echelon form of any spanning set, so two Subspace values are equal as
// sets iff they compare equal structurally.
class Subspace {
public:
    Subspace(Eigen::Index ambient_dim, ExactMatrix basis);

    static Subspace zero(Eigen::Index ambient_dim);
    static Subspace full(Eigen::Index ambient_dim);
    static Subspace span(const ExactMatrix& vectors); // columns, any rank

    Eigen::Index ambient_dim() const { return ambient_; }
    Eigen::Index dim() const { return basis_.cols(); }
    const ExactMatrix& basis() const { return basis_; }

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const ExactVector& v) const;
    bool contains(const Subspace& o) const;

private:
    Eigen::Index ambient_;
    ExactMatrix basis_; // ambient_ x dim, reduced column echelon
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<Eigen::Index> row_reduce(ExactMatrix& m);

// Unique reduced column echelon form of the column space (zero columns dropped).
ExactMatrix column_echelon(const ExactMatrix& m);

Eigen::Index rank(const ExactMatrix& m);

Subspace kernel(const ExactMatrix& m);
Subspace range(const ExactMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

ExactMatrix matrix_power(const ExactMatrix& m, unsigned n);

// Inverse of a nonsingular matrix; nullopt when singular.
std::optional<ExactMatrix> try_inverse(const ExactMatrix& m);

// Monic characteristic polynomial of det(lambda*I - m), low-order-first
// coefficients c[0] + c[1]*lambda + ... + c[n]*lambda^n (Faddeev-LeVerrier).
std::vector<GaussianRational> characteristic_polynomial(const ExactMatrix& m);

GaussianRational determinant(const ExactMatrix& m);

} // namespace spectral

#endif
