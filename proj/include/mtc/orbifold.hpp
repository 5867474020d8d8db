#pragma once

// Multiplicity functions, Euclidean local systems with cyclic monodromy,
// the Hecke-modification Euler characteristic, the twisted Jacobi index in
// both printed conventions, and pushforward/permutation systems for covers.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "rational.hpp"

namespace mtc {

struct CyclicRep {
    int order = 1;                  // k >= 1
    std::vector<int> weights;       // exponents mod k, one per fiber dimension

    void validate() const {
        if (order < 1) throw std::invalid_argument("CyclicRep: order must be >= 1");
        for (int w : weights)
            if (w < 0 || w >= order) throw std::invalid_argument("CyclicRep: weight out of range");
    }

    bool trivial() const {
        for (int w : weights)
            if (w != 0) return false;
        return true;
    }
};

inline int invariant_dim(const CyclicRep& rep) {
    rep.validate();
    int n = 0;
    for (int w : rep.weights)
        if (w == 0) ++n;
    return n;
}

inline int quotient_dim(const CyclicRep& rep) {
    return static_cast<int>(rep.weights.size()) - invariant_dim(rep);
}

struct MultiplicityFunction {
    std::map<std::string, int> points;  // point id -> order, every order >= 2

    void validate() const {
        for (auto& [id, k] : points)
            if (k < 2) throw std::invalid_argument("MultiplicityFunction: orders must be >= 2");
    }
};

struct LocalSystem {
    int rank = 0;
    std::map<std::string, CyclicRep> monodromy;

    void validate() const {
        if (rank < 0) throw std::invalid_argument("LocalSystem: negative rank");
        for (auto& [id, rep] : monodromy) {
            rep.validate();
            if (static_cast<int>(rep.weights.size()) != rank)
                throw std::invalid_argument("LocalSystem: rep dimension differs from rank at " + id);
        }
    }

    void validate_against(const MultiplicityFunction& mult) const {
        validate();
        mult.validate();
        for (auto& [id, rep] : monodromy) {
            auto it = mult.points.find(id);
            if (it == mult.points.end())
                throw std::invalid_argument("LocalSystem: point " + id + " missing from multiplicity function");
            if (it->second != rep.order)
                throw std::invalid_argument("LocalSystem: monodromy order mismatch at " + id);
        }
    }

    // synthetic system with prescribed per-point quotient dimensions; used by
    // the codimension arithmetic where only those numbers matter
    static LocalSystem with_quotients(const std::vector<int>& quotients) {
        LocalSystem ls;
        int rank = 1;
        for (int q : quotients) rank = std::max(rank, q);
        ls.rank = rank;
        int i = 0;
        for (int q : quotients) {
            if (q < 0 || q > rank) throw std::invalid_argument("with_quotients: bad quotient dimension");
            CyclicRep rep;
            rep.order = 2;
            rep.weights.assign(static_cast<std::size_t>(rank), 0);
            for (int j = 0; j < q; ++j) rep.weights[static_cast<std::size_t>(j)] = 1;
            ls.monodromy["p" + std::to_string(i++)] = rep;
        }
        return ls;
    }
};

inline long long total_quotient_dim(const LocalSystem& ls) {
    ls.validate();
    long long s = 0;
    for (auto& [id, rep] : ls.monodromy) s += quotient_dim(rep);
    return s;
}

// chi(E_mult, rho) = chi(E_mult) - sum over points of dim(E_x / E_x^rho)
inline long long hecke_euler_char(long long chi_base, const LocalSystem& ls) {
    return chi_base - total_quotient_dim(ls);
}

// deg = half the total quotient dimension; integrality is not forced
inline Rational local_system_degree(const LocalSystem& ls) {
    return Rational(total_quotient_dim(ls)) / 2;
}

enum class IndexConvention { Statement, Proof };

// Proof convention (default downstream): -1/2 * rk * sum dim(V/V^rho).
// Statement convention: -rk * sum. Both conventions are exposed;
// callers record which one they use.
inline Rational twisted_index(long long rk_normal_complex, const LocalSystem& ls,
                              IndexConvention convention) {
    if (rk_normal_complex < 1)
        throw std::invalid_argument("twisted_index: complex rank must be >= 1");
    Rational total(total_quotient_dim(ls));
    if (convention == IndexConvention::Proof) return Rational(-rk_normal_complex) * total / 2;
    return Rational(-rk_normal_complex) * total;
}

// pulling back along the orbifold map preserves the index-zero operator
inline long long untwisted_index_check(const MultiplicityFunction& mult) {
    mult.validate();
    return 0;
}

struct CoverSpec {
    int degree = 1;
    Perm gen_a, gen_b;  // images of the two fundamental-group generators

    void validate() const {
        if (degree < 1) throw std::invalid_argument("CoverSpec: degree must be >= 1");
        if (static_cast<int>(gen_a.size()) != degree || static_cast<int>(gen_b.size()) != degree)
            throw std::invalid_argument("CoverSpec: permutation size differs from degree");
        validate_perm(gen_a);
        validate_perm(gen_b);
        if (!commute(gen_a, gen_b))
            throw std::invalid_argument("CoverSpec: torus generators must commute");
        if (!transitive({gen_a, gen_b}, degree))
            throw std::invalid_argument("CoverSpec: cover is disconnected");
    }
};

// rank-d permutation representation of the deck data; monodromy factors
// through the subgroup generated by the images
struct PermutationSystem {
    int rank = 0;
    std::vector<Perm> generators;
    std::vector<Perm> group;  // the generated subgroup, closed
    std::vector<int> fixed_point_counts;

    int invariant_dim() const { return group_invariant_dim(group); }
};

inline PermutationSystem pushforward_local_system(const CoverSpec& cover) {
    cover.validate();
    PermutationSystem sys;
    sys.rank = cover.degree;
    sys.generators = {cover.gen_a, cover.gen_b};
    sys.group = group_closure(sys.generators);
    for (auto& g : sys.group) sys.fixed_point_counts.push_back(fixed_points(g));
    return sys;
}

// Minimal kernel dimension of the pulled-back operator: 0 when the kernel is
// trivial; covers of degree > 2 force dimension >= 2, which is what restricts
// doubling events to degree-2 covers.
inline int kernel_dim_rule(int cover_degree, bool ker_nontrivial) {
    if (cover_degree < 1) throw std::invalid_argument("kernel_dim_rule: degree must be >= 1");
    if (!ker_nontrivial) return 0;
    return cover_degree <= 2 ? 1 : 2;
}

// drop orbifold points where the monodromy is trivial, so every surviving
// point has quotient dimension >= 1; idempotent
inline std::pair<MultiplicityFunction, LocalSystem> normalize_multiplicity(
    const MultiplicityFunction& mult, const LocalSystem& ls) {
    ls.validate_against(mult);
    MultiplicityFunction m2;
    LocalSystem ls2;
    ls2.rank = ls.rank;
    for (auto& [id, rep] : ls.monodromy) {
        if (rep.trivial()) continue;
        ls2.monodromy[id] = rep;
        m2.points[id] = mult.points.at(id);
    }
    return {m2, ls2};
}

}  // namespace mtc
