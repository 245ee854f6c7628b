#include "spectral/linalg.hpp"

#include <algorithm>

namespace spectral {

std::vector<Eigen::Index> row_reduce(ExactMatrix& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        GaussianRational inv = m(row, col).inverse();
        for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GaussianRational factor = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

ExactMatrix column_echelon(const ExactMatrix& m) {
    ExactMatrix t = m.transpose();
    row_reduce(t);
    Eigen::Index nonzero = 0;
    for (Eigen::Index r = 0; r < t.rows(); ++r) {
        bool zero = true;
        for (Eigen::Index c = 0; c < t.cols(); ++c)
            if (!t(r, c).is_zero()) {
                zero = false;
                break;
            }
        if (!zero) nonzero = r + 1;
    }
    return t.topRows(nonzero).transpose();
}

Eigen::Index rank(const ExactMatrix& m) {
    ExactMatrix copy = m;
    return static_cast<Eigen::Index>(row_reduce(copy).size());
}

Subspace::Subspace(Eigen::Index ambient_dim, ExactMatrix basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
    if (basis_.size() != 0 && basis_.rows() != ambient_)
        throw DimensionMismatch("basis rows do not match ambient dimension");
    if (basis_.size() == 0) basis_ = ExactMatrix(ambient_, 0);
}

Subspace Subspace::zero(Eigen::Index ambient_dim) {
    return Subspace(ambient_dim, ExactMatrix(ambient_dim, 0));
}

Subspace Subspace::full(Eigen::Index ambient_dim) {
    return Subspace(ambient_dim, exact_identity(ambient_dim));
}

Subspace Subspace::span(const ExactMatrix& vectors) {
    return Subspace(vectors.rows(), column_echelon(vectors));
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_.rows() == o.basis_.rows() &&
           basis_.cols() == o.basis_.cols() && basis_ == o.basis_;
}

bool Subspace::contains(const ExactVector& v) const {
    ExactMatrix aug(ambient_, dim() + 1);
    aug.leftCols(dim()) = basis_;
    aug.col(dim()) = v;
    return rank(aug) == dim();
}

bool Subspace::contains(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("ambient dimension mismatch");
    ExactMatrix aug(ambient_, dim() + o.dim());
    aug.leftCols(dim()) = basis_;
    aug.rightCols(o.dim()) = o.basis_;
    return rank(aug) == dim();
}

Subspace kernel(const ExactMatrix& m) {
    ExactMatrix r = m;
    std::vector<Eigen::Index> pivots = row_reduce(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (Eigen::Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    Eigen::Index nullity = m.cols() - static_cast<Eigen::Index>(pivots.size());
    ExactMatrix basis = ExactMatrix::Zero(m.cols(), nullity);
    Eigen::Index k = 0;
    for (Eigen::Index free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        basis(free_col, k) = GaussianRational(1);
        for (size_t p = 0; p < pivots.size(); ++p)
            basis(pivots[p], k) = -r(static_cast<Eigen::Index>(p), free_col);
        ++k;
    }
    return Subspace::span(basis);
}

Subspace range(const ExactMatrix& m) { return Subspace::span(m); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspace_sum: ambient dimension mismatch");
    ExactMatrix joined(a.ambient_dim(), a.dim() + b.dim());
    joined.leftCols(a.dim()) = a.basis();
    joined.rightCols(b.dim()) = b.basis();
    return Subspace::span(joined);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspace_intersect: ambient dimension mismatch");
    // Solve A x = B y; the x-part of the kernel of [A | -B] parametrizes the
    // intersection as A x.
    ExactMatrix joined(a.ambient_dim(), a.dim() + b.dim());
    joined.leftCols(a.dim()) = a.basis();
    joined.rightCols(b.dim()) = -b.basis();
    Subspace null = kernel(joined);
    ExactMatrix vectors(a.ambient_dim(), null.dim());
    if (null.dim() > 0) vectors = a.basis() * null.basis().topRows(a.dim());
    return Subspace::span(vectors);
}

ExactMatrix matrix_power(const ExactMatrix& m, unsigned n) {
    require_square(m, "matrix_power");
    ExactMatrix result = exact_identity(m.rows());
    ExactMatrix base = m;
    unsigned e = n;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

std::optional<ExactMatrix> try_inverse(const ExactMatrix& m) {
    require_square(m, "inverse");
    Eigen::Index n = m.rows();
    ExactMatrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = exact_identity(n);
    auto pivots = row_reduce(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n) return std::nullopt;
    return aug.rightCols(n).eval();
}

std::vector<GaussianRational> characteristic_polynomial(const ExactMatrix& m) {
    require_square(m, "characteristic_polynomial");
    const Eigen::Index n = m.rows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1),
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<GaussianRational> coeff(static_cast<size_t>(n) + 1);
    coeff[static_cast<size_t>(n)] = GaussianRational(1);
    ExactMatrix mk = ExactMatrix::Zero(n, n);
    GaussianRational ck(1);
    for (Eigen::Index k = 1; k <= n; ++k) {
        for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += ck;
        mk = (m * mk).eval();
        GaussianRational trace(0);
        for (Eigen::Index i = 0; i < n; ++i) trace += mk(i, i);
        ck = -(trace / GaussianRational(Rational(k)));
        coeff[static_cast<size_t>(n - k)] = ck;
    }
    return coeff;
}

GaussianRational determinant(const ExactMatrix& m) {
    auto chi = characteristic_polynomial(m);
    GaussianRational det = chi[0]; // chi(0) = det(-m) = (-1)^n det(m)
    if (m.rows() % 2 != 0) det = -det;
    return det;
}

} // namespace spectral
