#include "spectral/chain.hpp"

namespace spectral {

ChainReport chain_report(const ExactMatrix& m) {
    require_square(m, "chain_report");
    const Eigen::Index n = m.rows();

    std::vector<ExactMatrix> powers;
    powers.reserve(static_cast<size_t>(n) + 3);
    powers.push_back(exact_identity(n));
    for (Eigen::Index i = 0; i < n + 2; ++i) powers.push_back(powers.back() * m);

    std::vector<Eigen::Index> power_rank(powers.size());
    std::vector<Subspace> power_range;
    std::vector<Subspace> power_kernel;
    power_range.reserve(powers.size());
    power_kernel.reserve(powers.size());
    for (size_t i = 0; i < powers.size(); ++i) {
        power_range.push_back(range(powers[i]));
        power_kernel.push_back(kernel(powers[i]));
        power_rank[i] = power_range.back().dim();
    }

    const Subspace rng = power_range[1];  // R(T)
    const Subspace ker = power_kernel[1]; // N(T)

    ChainReport rep;
    rep.dim = n;
    rep.c.resize(static_cast<size_t>(n) + 1);
    rep.c_prime.resize(static_cast<size_t>(n) + 1);
    rep.k.resize(static_cast<size_t>(n));

    for (Eigen::Index i = 0; i <= n; ++i) {
        size_t s = static_cast<size_t>(i);
        // c_n = codim(R(T) + N(T^n)); the quotient form dim R(T^n)/R(T^{n+1})
        // must agree.
        Eigen::Index c_sum = n - subspace_sum(rng, power_kernel[s]).dim();
        Eigen::Index c_quot = power_rank[s] - power_rank[s + 1];
        if (c_sum != c_quot)
            throw Error("internal_invariant",
                        "c_n: codim(R(T)+N(T^n)) disagrees with rank chain");
        rep.c[s] = c_sum;

        // c'_n = dim(N(T) cap R(T^n)); quotient form dim N(T^{n+1})/N(T^n).
        Eigen::Index cp_int = subspace_intersect(ker, power_range[s]).dim();
        Eigen::Index cp_quot = power_kernel[s + 1].dim() - power_kernel[s].dim();
        if (cp_int != cp_quot)
            throw Error("internal_invariant",
                        "c'_n: dim(N(T) cap R(T^n)) disagrees with kernel chain");
        rep.c_prime[s] = cp_int;
    }

    for (Eigen::Index i = 0; i < n; ++i) {
        size_t s = static_cast<size_t>(i);
        Eigen::Index from_c = rep.c[s] - rep.c[s + 1];
        Eigen::Index from_cp = rep.c_prime[s] - rep.c_prime[s + 1];
        // k_n via Grabiner's intersection form, independent of the telescoping.
        Eigen::Index direct = subspace_intersect(ker, power_range[s]).dim() -
                              subspace_intersect(ker, power_range[s + 1]).dim();
        if (from_c != from_cp || from_c != direct)
            throw Error("internal_invariant", "k_n: telescoped forms disagree");
        rep.k[s] = direct;
    }

    auto first_zero = [](const std::vector<Eigen::Index>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] == 0) return static_cast<Eigen::Index>(i);
        return static_cast<Eigen::Index>(v.size()); // unreachable for square matrices
    };
    rep.ascent = first_zero(rep.c_prime);
    rep.descent = first_zero(rep.c);

    Eigen::Index degree = 0;
    for (size_t i = 0; i < rep.k.size(); ++i)
        if (rep.k[i] != 0) degree = static_cast<Eigen::Index>(i) + 1;
    rep.uniform_descent_degree = degree;

    if (rep.ascent != rep.descent)
        throw Error("internal_invariant", "finite-dimensional ascent != descent");
    rep.drazin_index = rep.ascent;
    return rep;
}

DrazinData drazin(const ExactMatrix& m) {
    require_square(m, "drazin");
    const Eigen::Index n = m.rows();
    ChainReport rep = chain_report(m);
    const Eigen::Index k = rep.drazin_index;

    DrazinData data;
    data.index = k;
    if (k == 0) {
        auto inv = try_inverse(m);
        if (!inv)
            throw Error("internal_invariant", "drazin index 0 but matrix is singular");
        data.inverse = *inv;
        data.core_part = m;
        data.nilpotent_part = ExactMatrix::Zero(n, n);
        return data;
    }

    // X = R(T^k) + N(T^k); in that basis T is block-diag(invertible, nilpotent).
    ExactMatrix tk = matrix_power(m, static_cast<unsigned>(k));
    Subspace rng = range(tk);
    Subspace ker = kernel(tk);
    ExactMatrix p(n, n);
    p.leftCols(rng.dim()) = rng.basis();
    p.rightCols(ker.dim()) = ker.basis();
    auto p_inv = try_inverse(p);
    if (!p_inv)
        throw Error("internal_invariant", "core-nilpotent basis is singular");

    ExactMatrix t_block = *p_inv * m * p;
    const Eigen::Index r = rng.dim();
    ExactMatrix core_block = ExactMatrix::Zero(n, n);
    core_block.topLeftCorner(r, r) = t_block.topLeftCorner(r, r);
    auto a_inv = try_inverse(t_block.topLeftCorner(r, r).eval());
    if (!a_inv)
        throw Error("internal_invariant", "core block is singular");

    ExactMatrix inv_block = ExactMatrix::Zero(n, n);
    inv_block.topLeftCorner(r, r) = *a_inv;

    data.inverse = p * inv_block * *p_inv;
    data.core_part = p * core_block * *p_inv;
    data.nilpotent_part = m - data.core_part;
    return data;
}

PointClassification classify_point(const ExactMatrix& m, const GaussianRational& lambda) {
    require_square(m, "classify_point");
    ExactMatrix shifted = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;

    PointClassification pc;
    pc.lambda = lambda;
    pc.chain = chain_report(shifted);
    pc.pole_order = pc.chain.ascent;
    pc.in_spectrum = pc.pole_order > 0;
    pc.algebraic_multiplicity =
        kernel(matrix_power(shifted, static_cast<unsigned>(m.rows()))).dim();
    return pc;
}

} // namespace spectral
