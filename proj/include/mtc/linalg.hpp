#pragma once

// Exact rational linear algebra. Two independent elimination routines live
// here on purpose: exact_rank (fraction-free Bareiss on denominator-cleared
// integer rows) and rref_rank (plain rational Gauss-Jordan). Tests hold them
// against each other.

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace mtc {

class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Fraction-free Bareiss elimination. Rows are scaled to integers first (row
// scaling does not change the rank), pivots are taken in row order within
// each column, columns left to right.
inline int exact_rank(const QMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<BigInt>> w(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (int j = 0; j < cols; ++j) l = boost::multiprecision::lcm(l, den(m.at(i, j)));
        for (int j = 0; j < cols; ++j) w[i][j] = num(m.at(i, j)) * (l / den(m.at(i, j)));
    }
    BigInt prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (w[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[rank], w[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                w[i][j] = (w[rank][c] * w[i][j] - w[i][c] * w[rank][j]) / prev;
            w[i][c] = 0;
        }
        prev = w[rank][c];
        ++rank;
    }
    return rank;
}

// Independent oracle: rational row reduction, no fraction-free tricks.
inline int rref_rank(QMatrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        Rational p = m.at(rank, c);
        for (int j = c; j < m.cols(); ++j) m.at(rank, j) /= p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Basis of the right nullspace, via Gauss-Jordan; deterministic.
inline std::vector<std::vector<Rational>> nullspace_basis(QMatrix m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        Rational p = m.at(rank, c);
        for (int j = c; j < cols; ++j) m.at(rank, j) /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A X = B for square invertible A; throws if A is singular.
inline QMatrix solve(QMatrix a, QMatrix b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw std::invalid_argument("solve: shape mismatch");
    int n = a.rows();
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::runtime_error("solve: singular matrix");
        for (int j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(pivot, j));
        for (int j = 0; j < b.cols(); ++j) std::swap(b.at(c, j), b.at(pivot, j));
        Rational p = a.at(c, c);
        for (int j = 0; j < n; ++j) a.at(c, j) /= p;
        for (int j = 0; j < b.cols(); ++j) b.at(c, j) /= p;
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            Rational f = a.at(i, c);
            for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
            for (int j = 0; j < b.cols(); ++j) b.at(i, j) -= f * b.at(c, j);
        }
    }
    return b;
}

inline QMatrix multiply(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    QMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

// Sparse matrix in column-major form; rank splits over connected components
// of the row/column incidence graph before dense elimination, so graded maps
// cost only the sum of their blocks.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, Rational>>> columns;  // size == cols

    void ensure_shape() const {
        if (static_cast<int>(columns.size()) != cols)
            throw std::logic_error("SparseMatrix: column count mismatch");
    }
};

inline int exact_rank(const SparseMatrix& m) {
    m.ensure_shape();
    // union-find over rows (0..rows-1) and columns (rows..rows+cols-1)
    std::vector<int> parent(static_cast<std::size_t>(m.rows) + m.cols);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (int c = 0; c < m.cols; ++c)
        for (auto& [r, v] : m.columns[c])
            if (v != 0) unite(r, m.rows + c);

    std::map<int, std::vector<int>> comp_cols;
    for (int c = 0; c < m.cols; ++c) {
        bool nonzero = false;
        for (auto& [r, v] : m.columns[c])
            if (v != 0) nonzero = true;
        if (nonzero) comp_cols[find(m.rows + c)].push_back(c);
    }

    int rank = 0;
    for (auto& [root, cols] : comp_cols) {
        std::map<int, int> row_index;
        for (int c : cols)
            for (auto& [r, v] : m.columns[c])
                if (v != 0) row_index.emplace(r, 0);
        int ri = 0;
        for (auto& [r, idx] : row_index) idx = ri++;
        QMatrix block(ri, static_cast<int>(cols.size()));
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            for (auto& [r, v] : m.columns[cols[j]])
                if (v != 0) block.at(row_index[r], j) = v;
        rank += exact_rank(block);
    }
    return rank;
}

}  // namespace mtc
