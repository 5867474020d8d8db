#pragma once

// Homogeneous kernel elements of the Petri map on harmonic tensor pairs.
// The degree-d tensor space is the direct sum over l of H_l (x) H_{d-l}
// with H_l the harmonic space of degree l; the kernel is cut out by the
// vanishing of every coefficient of the product polynomial.

#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "tensor.hpp"

namespace mtc {

struct PetriKernelElement {
    TensorElem tensor;
    int degree = 0;
    std::vector<Rational> certificate;  // residuals of the defining constraints; all zero
};

// Ordered basis of the degree-d harmonic tensor space: l ascending, then the
// left harmonic family index, then the right one.
inline std::vector<std::pair<Poly2, Poly2>> harmonic_pair_basis(int d) {
    std::vector<std::pair<Poly2, Poly2>> basis;
    for (int l = 0; l <= d; ++l) {
        auto lefts = harmonic_basis(l);
        auto rights = harmonic_basis(d - l);
        for (auto& u : lefts)
            for (auto& v : rights) basis.emplace_back(u, v);
    }
    return basis;
}

// Matrix of the multiplication map H-pairs -> degree-d polynomials, assembled
// from harmonic coefficient products (the linear constraint system cutting
// out the kernel). Rows follow the degree-d monomial order.
inline QMatrix petri_constraint_matrix(int d) {
    auto basis = harmonic_pair_basis(d);
    auto rows = monomials_of_degree(d);
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
        auto& [u, v] = basis[j];
        // coefficient of x1^(d-t) x2^t in u*v is sum over i of u_i * v_(t-i)
        for (int t = 0; t <= d; ++t) {
            Rational c = 0;
            for (int i = 0; i <= t; ++i) {
                int lu = u.degree();
                if (i > lu || t - i > d - lu) continue;
                c += u.coeff({lu - i, i}) * v.coeff({d - lu - (t - i), t - i});
            }
            m.at(t, j) = c;
        }
    }
    return m;
}

// Brute-force route for the same map: multiply the polynomials outright.
inline QMatrix petri_multiplication_matrix(int d) {
    auto basis = harmonic_pair_basis(d);
    auto rows = monomials_of_degree(d);
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
        Poly2 prod = basis[j].first * basis[j].second;
        for (int t = 0; t <= d; ++t) m.at(t, j) = prod.coeff(rows[t]);
    }
    return m;
}

inline std::vector<PetriKernelElement> petri_kernel_basis(int d) {
    if (d < 0) throw std::invalid_argument("petri_kernel_basis: negative degree");
    auto basis = harmonic_pair_basis(d);
    QMatrix m = petri_constraint_matrix(d);
    auto null_vectors = nullspace_basis(m);
    std::vector<PetriKernelElement> out;
    for (auto& v : null_vectors) {
        PetriKernelElement e;
        e.degree = d;
        TensorElem t;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) t.add(v[j], basis[j].first, basis[j].second);
        e.tensor = t;
        Poly2 residual = petri_map(t);
        for (auto& mono : monomials_of_degree(d)) e.certificate.push_back(residual.coeff(mono));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace mtc
