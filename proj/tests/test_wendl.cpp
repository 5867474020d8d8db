#include <catch2/catch_amalgamated.hpp>

#include "mtc/rng.hpp"
#include "mtc/wendl.hpp"

using namespace mtc;

namespace {
Poly2 x1(int e = 1) { return Poly2::monomial({e, 0}); }
Poly2 x2(int e = 1) { return Poly2::monomial({0, e}); }
Poly2 one() { return Poly2(Rational(1)); }

// step-by-step expansion through the exactalg primitives, written separately
// from wendl_apply
Poly2 wendl_apply_oracle(const TensorElem& b, const Monomial2& a) {
    Poly2 out;
    for (auto& s : b.summands()) {
        Poly2 left_shifted = Poly2::monomial(a) * s.left;
        Poly2 right_shifted = Poly2::monomial(a) * s.right;
        Poly2 term;
        for (auto& [m, c] : left_shifted.terms()) term += c * right_inverse_monomial(m.e1, m.e2);
        out += s.coef * (term * s.right);
        Poly2 term2;
        for (auto& [m, c] : right_shifted.terms()) term2 += c * right_inverse_monomial(m.e1, m.e2);
        out += s.coef * (s.left * term2);
    }
    return out;
}
}  // namespace

TEST_CASE("wendl_apply against the independent expansion oracle") {
    TensorElem b = TensorElem::simple(x1(), one()) + Rational(-1) * TensorElem::simple(one(), x1());
    for (auto a : {Monomial2{0, 0}, Monomial2{1, 0}, Monomial2{2, 1}})
        REQUIRE(wendl_apply(b, a) == wendl_apply_oracle(b, a));

    auto basis = petri_kernel_basis(2);
    for (auto& e : basis)
        for (auto a : {Monomial2{0, 0}, Monomial2{1, 1}, Monomial2{3, 0}})
            REQUIRE(wendl_apply(e.tensor, a) == wendl_apply_oracle(e.tensor, a));
}

TEST_CASE("wendl_apply basics") {
    REQUIRE(wendl_apply(TensorElem(), {4, 2}).is_zero());
    // bilinearity in B
    auto basis = petri_kernel_basis(2);
    TensorElem b = basis[1].tensor;
    REQUIRE(wendl_apply(Rational(3) * b, {1, 0}) == Rational(3) * wendl_apply(b, {1, 0}));
}

TEST_CASE("homogeneous B sends degree t to degree t + d + 2") {
    auto basis = petri_kernel_basis(2);
    for (auto& e : basis)
        for (int t = 0; t <= 4; ++t)
            for (auto& a : monomials_of_degree(t)) {
                Poly2 img = wendl_apply(e.tensor, a);
                if (img.is_zero()) continue;
                REQUIRE(img.is_homogeneous());
                REQUIRE(img.degree() == t + 2 + 2);
            }
}

TEST_CASE("the map vanishes identically on antisymmetric tensors") {
    // B = p (x) q - q (x) p gives R(Ap)q + pR(Aq) - R(Aq)p - qR(Ap) = 0
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Poly2 p, q;
        for (int t = 0; t < 3; ++t) {
            p.add_term({static_cast<int>(rng.range(0, 3)), static_cast<int>(rng.range(0, 3))},
                       rng.small_rational());
            q.add_term({static_cast<int>(rng.range(0, 3)), static_cast<int>(rng.range(0, 3))},
                       rng.small_rational());
        }
        if (p.is_zero() || q.is_zero()) continue;
        TensorElem anti = TensorElem::simple(p, q) + Rational(-1) * TensorElem::simple(q, p);
        for (auto a : {Monomial2{0, 0}, Monomial2{2, 1}})
            REQUIRE(wendl_apply(anti, a).is_zero());
    }
    // in particular the whole degree-1 kernel
    for (auto& e : petri_kernel_basis(1)) {
        REQUIRE(tensor_symmetrization(e.tensor).is_zero());
        REQUIRE(wendl_apply(e.tensor, {5, 3}).is_zero());
    }
}

TEST_CASE("rank only sees the symmetrization") {
    auto basis = petri_kernel_basis(2);
    TensorElem mixed = basis[0].tensor + basis[3].tensor;  // element 3 is antisymmetric
    REQUIRE(tensor_symmetrization(basis[3].tensor).is_zero());
    for (int t = 0; t <= 5; ++t)
        REQUIRE(wendl_block_rank(mixed, t) == wendl_block_rank(basis[0].tensor, t));
}

TEST_CASE("wendl_matrix shapes and content") {
    REQUIRE(monomials_up_to(16).size() == 153);
    auto basis = petri_kernel_basis(1);
    WendlMatrix w = wendl_matrix(basis[0].tensor, 0);
    REQUIRE(w.entries.cols == 1);
    REQUIRE(exact_rank(w) == 0);  // the single column is the zero image

    WendlMatrix z = wendl_matrix(TensorElem(), 0);
    REQUIRE(z.entries.cols == 1);
    REQUIRE(exact_rank(z) == 0);

    auto basis2 = petri_kernel_basis(2);
    WendlMatrix w2 = wendl_matrix(basis2[0].tensor, 6);
    REQUIRE(w2.entries.cols == static_cast<int>(monomials_up_to(6).size()));
    REQUIRE(w2.rows.size() == monomials_up_to(6 + 2 + 2).size());
    // entries reproduce wendl_apply column by column
    for (auto& [a, j] : w2.cols) {
        Poly2 img = wendl_apply(basis2[0].tensor, a);
        Poly2 rebuilt;
        for (auto& [row_idx, c] : w2.entries.columns[static_cast<std::size_t>(j)]) {
            for (auto& [m, i] : w2.rows)
                if (i == row_idx) rebuilt.add_term(m, c);
        }
        REQUIRE(rebuilt == img);
    }
}

TEST_CASE("sparse component rank agrees with the dense independent elimination") {
    auto basis = petri_kernel_basis(2);
    for (int which : {0, 1, 2}) {
        WendlMatrix w = wendl_matrix(basis[static_cast<std::size_t>(which)].tensor, 10);
        QMatrix dense(w.entries.rows, w.entries.cols);
        for (int j = 0; j < w.entries.cols; ++j)
            for (auto& [i, v] : w.entries.columns[static_cast<std::size_t>(j)]) dense.at(i, j) = v;
        REQUIRE(exact_rank(w) == rref_rank(dense));
    }
}

TEST_CASE("truncated rank is non-decreasing in l and matches the block profile") {
    auto basis = petri_kernel_basis(2);
    auto& b = basis[1].tensor;
    auto profile = wendl_rank_profile(b, 8);
    int prev = 0;
    for (int l = 0; l <= 8; ++l) {
        REQUIRE(profile[static_cast<std::size_t>(l)] >= prev);
        prev = profile[static_cast<std::size_t>(l)];
    }
    for (int l : {0, 3, 6})
        REQUIRE(exact_rank(wendl_matrix(b, l)) == profile[static_cast<std::size_t>(l)]);
}

TEST_CASE("verify_wendl_bound contract") {
    auto basis1 = petri_kernel_basis(1);
    PetriKernelElement zero;
    zero.degree = 1;
    REQUIRE_THROWS_AS(verify_wendl_bound(zero, {16}), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_wendl_bound(basis1[0], {15}), std::invalid_argument);

    // degree-1 kernel elements are antisymmetric: the map is zero and the
    // bound fails; the report says so loudly instead of papering over it
    auto rep = verify_wendl_bound(basis1[0], {16});
    REQUIRE(rep.symmetrization_zero);
    REQUIRE(rep.per_l.size() == 1);
    REQUIRE(rep.per_l[0].rank == 0);
    REQUIRE(rep.per_l[0].bound == 8);
    REQUIRE_FALSE(rep.pass);
    REQUIRE_FALSE(rep.empirical_threshold.has_value());

    // a symmetrization-nonzero element of degree 2 passes with full rank
    auto basis2 = petri_kernel_basis(2);
    auto rep2 = verify_wendl_bound(basis2[0], {26});
    REQUIRE_FALSE(rep2.symmetrization_zero);
    REQUIRE(rep2.pass);
    REQUIRE(rep2.per_l[0].rank >= rep2.per_l[0].bound);
    REQUIRE(rep2.per_l[0].columns == 27 * 28 / 2);
    REQUIRE(rep2.empirical_threshold.has_value());
}

TEST_CASE("sample population is deterministic in the seed") {
    auto a = wendl_sample_population(2, 3, 42);
    auto b = wendl_sample_population(2, 3, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].tensor.summands().size() == b[i].tensor.summands().size());
        REQUIRE(petri_map(a[i].tensor).is_zero());
    }
    auto c = wendl_sample_population(2, 3, 43);
    bool differs = false;
    for (std::size_t i = petri_kernel_basis(2).size(); i < a.size() && !differs; ++i)
        differs = !(a[i].tensor.pair_coeff({2, 0}, {0, 0}) == c[i].tensor.pair_coeff({2, 0}, {0, 0}));
    REQUIRE(differs);
}
