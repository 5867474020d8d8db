#pragma once

// Finite-dimensional model of the Fredholm stratification: the Schur
// reduction I(T) = D - C A^{-1} B against a base splitting X = V + K,
// Y = I + C, plus the Brill-Noether codimension arithmetic.

#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "orbifold.hpp"

namespace mtc {

struct FiniteOperator {
    QMatrix matrix;
    std::vector<int> v_cols, k_cols;  // X = V + K as column index sets
    std::vector<int> i_rows, c_rows;  // Y = I + C as row index sets

    void validate() const {
        if (static_cast<int>(v_cols.size() + k_cols.size()) != matrix.cols())
            throw std::invalid_argument("FiniteOperator: column splitting does not cover X");
        if (static_cast<int>(i_rows.size() + c_rows.size()) != matrix.rows())
            throw std::invalid_argument("FiniteOperator: row splitting does not cover Y");
    }

    QMatrix block(const std::vector<int>& rows, const std::vector<int>& cols) const {
        QMatrix b(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) b.at(static_cast<int>(i), static_cast<int>(j)) = matrix.at(rows[i], cols[j]);
        return b;
    }
};

// I(T) = D - C A^{-1} B, a map K -> C; throws when the A-block degenerates
inline QMatrix schur_reduce(const FiniteOperator& t) {
    t.validate();
    QMatrix a = t.block(t.i_rows, t.v_cols);
    QMatrix b = t.block(t.i_rows, t.k_cols);
    QMatrix c = t.block(t.c_rows, t.v_cols);
    QMatrix d = t.block(t.c_rows, t.k_cols);
    if (a.rows() != a.cols() || exact_rank(a) != a.rows())
        throw std::runtime_error("schur_reduce: A-block is not invertible");
    QMatrix ainv_b = solve(a, b);
    QMatrix c_ainv_b = multiply(c, ainv_b);
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) d.at(i, j) -= c_ainv_b.at(i, j);
    return d;
}

inline bool verify_kernel_equivalence(const FiniteOperator& t) {
    QMatrix reduced = schur_reduce(t);
    int ker_t = t.matrix.cols() - exact_rank(t.matrix);
    int coker_t = t.matrix.rows() - exact_rank(t.matrix);
    int ker_r = reduced.cols() - exact_rank(reduced);
    int coker_r = reduced.rows() - exact_rank(reduced);
    return ker_t == ker_r && coker_t == coker_r;
}

inline long long codim_plain(long long d, long long c) {
    if (d < 0 || c < 0) throw std::invalid_argument("codim_plain: negative dimension");
    return d * c;
}

struct StratumComponent {
    long long k = 1;  // dim of the endomorphism algebra
    long long d = 0;  // kernel dimension
    long long c = 0;  // cokernel dimension
};

struct StratumQuery {
    std::vector<StratumComponent> components;
    int n = 0;  // ambient dimension
};

inline long long codim_equivariant(const StratumQuery& q) {
    long long s = 0;
    for (auto& c : q.components) {
        if (c.k < 0 || c.d < 0 || c.c < 0)
            throw std::invalid_argument("codim_equivariant: negative entry");
        s += c.k * c.d * c.c;
    }
    return s;
}

struct StratumBound {
    long long codim = 0;
    long long bound = 0;  // (n-2)/2 * s + 1
    bool top_stratum = false;
    bool satisfied = false;  // codim >= bound
};

// codim = sum_i k_i d_i (d_i - index_i) with the twisted index
// index_i = -((n-2)/2) * sum of the quotient dimensions; the top stratum is
// exactly codim == 2s+1.
inline StratumBound codim_stratum_bound(const StratumQuery& q,
                                        const std::vector<int>& per_point_quotient_dims) {
    if (q.n < 6) throw std::invalid_argument("codim_stratum_bound: requires ambient dimension >= 6");
    if (q.n % 2 != 0)
        throw std::invalid_argument("codim_stratum_bound: odd ambient dimension leaves the index fractional");
    long long s = static_cast<long long>(per_point_quotient_dims.size());
    long long total_quotient = 0;
    for (int qd : per_point_quotient_dims) {
        if (qd < 1)
            throw std::invalid_argument("codim_stratum_bound: quotient dimensions must be >= 1");
        total_quotient += qd;
    }
    LocalSystem ls = LocalSystem::with_quotients(per_point_quotient_dims);
    Rational index = twisted_index(q.n - 2, ls, IndexConvention::Proof);

    StratumBound out;
    Rational codim = 0;
    for (auto& c : q.components) {
        if (c.k < 0 || c.d < 0) throw std::invalid_argument("codim_stratum_bound: negative entry");
        codim += Rational(c.k) * Rational(c.d) * (Rational(c.d) - index);
    }
    if (den(codim) != 1) throw std::runtime_error("codim_stratum_bound: non-integral codimension");
    out.codim = static_cast<long long>(num(codim));
    out.bound = (static_cast<long long>(q.n) - 2) / 2 * s + 1;
    out.top_stratum = out.codim == 2 * s + 1;
    out.satisfied = out.codim >= out.bound;
    return out;
}

}  // namespace mtc
