#pragma once

// The linear map L_B built from the right inverse of the Laplacian symbol,
// its finite truncations as exact sparse matrices, and the rank lower-bound
// verifier. For homogeneous B the map sends degree-t inputs to homogeneous
// degree-(t + deg B + 2) outputs, so the truncated matrix is graded; the
// component split inside exact_rank turns that into per-degree blocks.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "petri.hpp"
#include "rng.hpp"
#include "tensor.hpp"

namespace mtc {

// L_B(A) = sum_r c_r [ R(A*left_r) * right_r + left_r * R(A*right_r) ]
inline Poly2 wendl_apply(const TensorElem& b, const Monomial2& a) {
    Poly2 amono = Poly2::monomial(a);
    Poly2 out;
    for (auto& s : b.summands()) {
        out += s.coef * (right_inverse(amono * s.left) * s.right);
        out += s.coef * (s.left * right_inverse(amono * s.right));
    }
    return out;
}

struct WendlMatrix {
    std::map<Monomial2, int, MonoLess> rows;  // output monomials, degree <= l + 2 + d
    std::map<Monomial2, int, MonoLess> cols;  // input monomials A, degree <= l
    SparseMatrix entries;
};

inline WendlMatrix wendl_matrix(const TensorElem& b, int l) {
    if (l < 0) throw std::invalid_argument("wendl_matrix: negative truncation order");
    if (!b.is_zero() && !b.degree())
        throw std::invalid_argument("wendl_matrix: tensor must be homogeneous");
    int d = b.is_zero() ? 0 : *b.degree();

    WendlMatrix w;
    int idx = 0;
    for (auto& m : monomials_up_to(l + 2 + d)) w.rows.emplace(m, idx++);
    idx = 0;
    for (auto& m : monomials_up_to(l)) w.cols.emplace(m, idx++);

    w.entries.rows = static_cast<int>(w.rows.size());
    w.entries.cols = static_cast<int>(w.cols.size());
    w.entries.columns.resize(w.entries.cols);
    for (auto& [a, j] : w.cols) {
        Poly2 image = wendl_apply(b, a);
        auto& column = w.entries.columns[j];
        for (auto& [m, c] : image.terms()) {
            auto it = w.rows.find(m);
            if (it == w.rows.end()) throw std::logic_error("wendl_matrix: output degree out of range");
            column.emplace_back(it->second, c);
        }
    }
    return w;
}

inline int exact_rank(const WendlMatrix& m) { return exact_rank(m.entries); }

// rank of L_B restricted to inputs of exact degree t (one graded block)
inline int wendl_block_rank(const TensorElem& b, int t) {
    auto cols_mono = monomials_of_degree(t);
    std::vector<Poly2> images;
    images.reserve(cols_mono.size());
    std::map<Monomial2, int, MonoLess> row_index;
    for (auto& a : cols_mono) {
        images.push_back(wendl_apply(b, a));
        for (auto& [m, c] : images.back().terms()) row_index.emplace(m, 0);
    }
    int ri = 0;
    for (auto& [m, i] : row_index) i = ri++;
    QMatrix block(ri, static_cast<int>(cols_mono.size()));
    for (int j = 0; j < static_cast<int>(cols_mono.size()); ++j)
        for (auto& [m, c] : images[j].terms()) block.at(row_index[m], j) = c;
    return exact_rank(block);
}

// cumulative ranks: entry l is rank of L_B^{<=l}, for l = 0..l_max
inline std::vector<int> wendl_rank_profile(const TensorElem& b, int l_max) {
    std::vector<int> cumulative(static_cast<std::size_t>(l_max) + 1, 0);
    int running = 0;
    for (int t = 0; t <= l_max; ++t) {
        running += wendl_block_rank(b, t);
        cumulative[t] = running;
    }
    return cumulative;
}

struct WendlBoundEntry {
    int l = 0;
    int columns = 0;
    int rank = 0;
    int bound = 0;  // ceil(l/2)
    bool pass = false;
};

struct WendlBoundReport {
    int degree = 0;
    std::vector<WendlBoundEntry> per_l;
    // smallest l such that rank >= ceil(l/2) holds from there through the
    // scanned range; empty when the bound never stabilizes
    std::optional<int> empirical_threshold;
    bool symmetrization_zero = false;  // L_B is identically zero
    bool pass = false;
};

// swap the tensor factors
inline TensorElem tensor_transpose(const TensorElem& b) {
    TensorElem t;
    for (auto& s : b.summands()) t.add(s.coef, s.right, s.left);
    return t;
}

inline TensorElem tensor_symmetrization(const TensorElem& b) {
    return b + tensor_transpose(b);
}

inline WendlBoundReport verify_wendl_bound(const PetriKernelElement& b,
                                           const std::vector<int>& l_values) {
    if (b.tensor.is_zero())
        throw std::invalid_argument("verify_wendl_bound: zero tensor is not a kernel element of positive content");
    int d = b.degree;
    for (int l : l_values)
        if (l < 10 * d + 6)
            throw std::invalid_argument("verify_wendl_bound: truncation order below 10d+6");
    if (l_values.empty()) throw std::invalid_argument("verify_wendl_bound: no truncation orders");

    int l_max = *std::max_element(l_values.begin(), l_values.end());
    auto profile = wendl_rank_profile(b.tensor, l_max);

    WendlBoundReport report;
    report.degree = d;
    report.symmetrization_zero = tensor_symmetrization(b.tensor).is_zero();
    report.pass = true;
    for (int l : l_values) {
        WendlBoundEntry e;
        e.l = l;
        e.columns = (l + 1) * (l + 2) / 2;
        e.rank = profile[l];
        e.bound = (l + 1) / 2;
        e.pass = e.rank >= e.bound;
        report.pass = report.pass && e.pass;
        report.per_l.push_back(e);
    }
    for (int l0 = 0; l0 <= l_max; ++l0) {
        bool holds = true;
        for (int l = l0; l <= l_max; ++l)
            if (profile[l] < (l + 1) / 2) {
                holds = false;
                break;
            }
        if (holds) {
            report.empirical_threshold = l0;
            break;
        }
    }
    return report;
}

// basis of petri_kernel_basis(d) plus seeded rational combinations, the
// population the bound verifier runs over
inline std::vector<PetriKernelElement> wendl_sample_population(int d, int random_count,
                                                               std::uint64_t seed) {
    auto basis = petri_kernel_basis(d);
    std::vector<PetriKernelElement> population = basis;
    if (basis.empty()) return population;  // trivial kernel, nothing to combine
    Rng rng(seed ^ (0x9d5ull * static_cast<std::uint64_t>(d)));
    for (int s = 0; s < random_count; ++s) {
        TensorElem combo;
        bool nonzero = false;
        while (!nonzero) {
            combo = TensorElem();
            for (auto& e : basis) {
                Rational c = rng.small_rational(5, 3);
                if (c == 0) continue;
                combo = combo + c * e.tensor;
            }
            nonzero = !combo.is_zero();
        }
        PetriKernelElement e;
        e.degree = d;
        e.tensor = combo;
        Poly2 residual = petri_map(combo);
        for (auto& mono : monomials_of_degree(d)) e.certificate.push_back(residual.coeff(mono));
        population.push_back(std::move(e));
    }
    return population;
}

}  // namespace mtc
