#pragma once

// Z/2-cohomology calculus of torus double covers: sign maps, the type
// classification, sign propagation across a doubling wall, weight tables and
// the ledger-relation solver.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace mtc {

// The four classes of H^1(T, Z_2), indexed 0..3 as (a,b) -> 2a+b.
struct Z2Class {
    int idx = 0;

    Z2Class() = default;
    explicit Z2Class(int i) : idx(i) {
        if (i < 0 || i > 3) throw std::invalid_argument("Z2Class: index out of range");
    }
    static Z2Class from_bits(int a, int b) { return Z2Class(2 * (a & 1) + (b & 1)); }
    static Z2Class trivial() { return Z2Class(0); }

    int bit_a() const { return idx >> 1; }
    int bit_b() const { return idx & 1; }
    bool is_trivial() const { return idx == 0; }

    friend Z2Class operator+(Z2Class x, Z2Class y) { return Z2Class(x.idx ^ y.idx); }
    friend bool operator==(Z2Class x, Z2Class y) { return x.idx == y.idx; }
    friend bool operator!=(Z2Class x, Z2Class y) { return x.idx != y.idx; }
    friend bool operator<(Z2Class x, Z2Class y) { return x.idx < y.idx; }

    std::string key() const { return std::string() + char('0' + bit_a()) + char('0' + bit_b()); }
    static Z2Class from_key(const std::string& k) {
        if (k.size() != 2 || (k[0] != '0' && k[0] != '1') || (k[1] != '0' && k[1] != '1'))
            throw std::invalid_argument("Z2Class: bad key '" + k + "'");
        return from_bits(k[0] - '0', k[1] - '0');
    }
};

// total sign function on H^1(T, Z_2); values +1 / -1
struct DeltaMap {
    std::array<int, 4> sign{+1, +1, +1, +1};

    int at(Z2Class c) const { return sign[static_cast<std::size_t>(c.idx)]; }
    void set(Z2Class c, int s) {
        if (s != 1 && s != -1) throw std::invalid_argument("DeltaMap: signs are +1 or -1");
        sign[static_cast<std::size_t>(c.idx)] = s;
    }
    void flip(Z2Class c) { sign[static_cast<std::size_t>(c.idx)] *= -1; }

    friend bool operator==(const DeltaMap& x, const DeltaMap& y) { return x.sign == y.sign; }
    friend bool operator!=(const DeltaMap& x, const DeltaMap& y) { return !(x == y); }
};

// sign = delta(trivial); k = number of nontrivial classes sent to -1
struct TorusType {
    int sign = +1;
    int k = 0;

    friend bool operator==(const TorusType& a, const TorusType& b) {
        return a.sign == b.sign && a.k == b.k;
    }
    std::string str() const { return (sign > 0 ? "+" : "-") + std::to_string(k); }
};

inline TorusType type_of(const DeltaMap& delta) {
    TorusType t;
    t.sign = delta.at(Z2Class::trivial());
    for (int i = 1; i < 4; ++i)
        if (delta.at(Z2Class(i)) < 0) ++t.k;
    return t;
}

// Quotient structure of the pullback along the double cover classified by
// iota0: the kernel coset {0, iota0} maps to the trivial class, the other
// coset maps to a single nonzero class labeled by its smaller element, and
// the two remaining labels lie outside the image.
struct PullbackStructure {
    Z2Class iota0;
    std::array<Z2Class, 2> image;                    // {trivial, nonzero image label}
    std::array<std::array<Z2Class, 2>, 2> fibers;    // fibers over image[0], image[1]
    std::array<Z2Class, 2> outside;                  // labels not in the image
};

inline PullbackStructure pullback_structure(Z2Class iota0) {
    if (iota0.is_trivial()) throw std::invalid_argument("pullback_structure: iota0 must be nonzero");
    PullbackStructure out;
    out.iota0 = iota0;
    std::vector<Z2Class> coset;
    for (int i = 1; i < 4; ++i)
        if (Z2Class(i) != iota0) coset.push_back(Z2Class(i));
    // coset = the non-kernel coset {c, c + iota0}, already index-sorted
    out.image = {Z2Class::trivial(), coset[0]};
    out.fibers[0] = {Z2Class::trivial(), iota0};
    out.fibers[1] = {coset[0], coset[1]};
    out.outside = {iota0, coset[1]};
    return out;
}

// delta of the doubled torus: delta'(0) = -delta(iota0)*delta(0); the nonzero
// image class carries the product over its two-element fiber; classes outside
// the image are sent to +1.
inline DeltaMap propagate_double(const DeltaMap& delta, Z2Class iota0) {
    auto pb = pullback_structure(iota0);
    DeltaMap out;
    out.set(Z2Class::trivial(), -delta.at(iota0) * delta.at(Z2Class::trivial()));
    out.set(pb.image[1], delta.at(pb.fibers[1][0]) * delta.at(pb.fibers[1][1]));
    out.set(pb.outside[0], +1);
    out.set(pb.outside[1], +1);
    return out;
}

// weight table: plus-type rows per degree, minus rows by antisymmetry
class WeightTable {
  public:
    using Row = std::array<long long, 4>;

    WeightTable() = default;
    explicit WeightTable(std::map<int, Row> plus_rows) : plus_(std::move(plus_rows)) {
        for (auto it = plus_.begin(); it != plus_.end();) {
            if (it->first < 1) throw std::invalid_argument("WeightTable: degrees must be >= 1");
            bool zero = true;
            for (auto v : it->second)
                if (v != 0) zero = false;
            it = zero ? plus_.erase(it) : std::next(it);  // all-zero rows mean absent
        }
    }

    // Definition's printed values: d=1 the determinant sign, d=2 -> +-k,
    // d=4 -> +-floor(k/2). Kept verbatim for reference; it does not satisfy
    // the doubling ledger (see the solver and the canonical table).
    static WeightTable definition() {
        return WeightTable({{1, {1, 1, 1, 1}}, {2, {0, 1, 2, 3}}, {4, {0, 0, 1, 1}}});
    }

    // The wall-crossing-consistent table: the zero-normalization solution of
    // the ledger relations. Agrees with the definition at d=1 and d=4; the
    // d=2 column carries the opposite sign.
    static WeightTable canonical() {
        return WeightTable({{1, {1, 1, 1, 1}}, {2, {0, -1, -2, -3}}, {4, {0, 0, 1, 1}}});
    }

    long long weight(const TorusType& t, int degree) const {
        if (t.k < 0 || t.k > 3) throw std::invalid_argument("weight: type index out of range");
        auto it = plus_.find(degree);
        if (it == plus_.end()) return 0;
        long long w = it->second[static_cast<std::size_t>(t.k)];
        return t.sign > 0 ? w : -w;
    }

    const std::map<int, Row>& plus_rows() const { return plus_; }

    friend bool operator==(const WeightTable& a, const WeightTable& b) { return a.plus_ == b.plus_; }

  private:
    std::map<int, Row> plus_;
};

inline long long weight(const WeightTable& table, const TorusType& t, int degree) {
    return table.weight(t, degree);
}

// --- ledger relation solver -------------------------------------------------
//
// The twelve local diagrams couple the weights at degrees d and 2d. With the
// base of sign s passing from k negatives to k+1 as delta(iota0) flips, the
// doubled strand on the k side has type (-s, t(k)) and on the k+1 side type
// (s, t(k)), where t(k) = 0, 1, 0 for k = 0, 1, 2 (the fiber product pairs
// the negative classes for k = 2). Count invariance across the wall reads
//   n^{2d}(s, k+1) = n^{2d}(s, k) + n^d(child).
// Degree-1 weights are the determinant signs. The solver assembles these
// relations for every degree pair up to 2^max_power together with the
// normalization of n^{2^j}_{+0} and antisymmetry at the top degree, and
// solves exactly; the system has a unique solution.

struct WeightSolveOptions {
    int max_power = 4;                          // degrees 2, 4, ..., 2^max_power
    std::vector<long long> normalization;       // values for n^{2^j}_{+0}, j = 1..max_power; default zeros
    // test hook: extra rows (coefficients over the unknowns, rhs) injected
    // into the system to exercise the inconsistency detector
    std::vector<std::pair<std::vector<Rational>, Rational>> extra_relations;
};

inline int doubling_child_k(int k) {
    switch (k) {
        case 0: return 0;
        case 1: return 1;
        case 2: return 0;
        default: throw std::invalid_argument("doubling_child_k: k out of range");
    }
}

inline WeightTable solve_weight_table(const WeightSolveOptions& opt = {}) {
    int mp = opt.max_power;
    if (mp < 1) throw std::invalid_argument("solve_weight_table: max_power must be >= 1");
    if (static_cast<int>(opt.normalization.size()) > mp)
        throw std::invalid_argument("solve_weight_table: more normalization values than solved degrees");
    std::vector<long long> norm = opt.normalization;
    norm.resize(static_cast<std::size_t>(mp), 0);

    // unknown index: sign s in {0:+, 1:-}, k in 0..3, level j in 1..mp
    auto unknown = [&](int s, int k, int j) { return ((j - 1) * 2 + s) * 4 + k; };
    int nvars = 8 * mp;

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    auto add_row = [&](std::vector<Rational> row, Rational b) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(b));
    };

    // the twelve diagram families per degree pair
    for (int j = 1; j <= mp; ++j) {
        for (int s = 0; s <= 1; ++s) {
            int sign = s == 0 ? +1 : -1;
            for (int k = 0; k <= 2; ++k) {
                int ck = doubling_child_k(k);
                // near side: child sign is -sign; far side: child sign is +sign
                for (int side = 0; side <= 1; ++side) {
                    int child_sign = side == 0 ? -sign : sign;
                    // side 0: n^{2d}_{s,k+1} - n^{2d}_{s,k} - n^d(child) = 0
                    // side 1: n^{2d}_{s,k} - n^{2d}_{s,k+1} - n^d(child) = 0
                    std::vector<Rational> row(static_cast<std::size_t>(nvars), Rational(0));
                    Rational b = 0;
                    int hi = side == 0 ? k + 1 : k;
                    int lo = side == 0 ? k : k + 1;
                    row[static_cast<std::size_t>(unknown(s, hi, j))] += 1;
                    row[static_cast<std::size_t>(unknown(s, lo, j))] -= 1;
                    if (j == 1) {
                        b += Rational(child_sign);  // degree-1 child weight is its sign
                    } else {
                        int cs = child_sign > 0 ? 0 : 1;
                        row[static_cast<std::size_t>(unknown(cs, ck, j - 1))] -= 1;
                    }
                    add_row(std::move(row), b);
                }
            }
        }
    }
    // normalization of the free column
    for (int j = 1; j <= mp; ++j) {
        std::vector<Rational> row(static_cast<std::size_t>(nvars), Rational(0));
        row[static_cast<std::size_t>(unknown(0, 0, j))] = 1;
        add_row(std::move(row), Rational(norm[static_cast<std::size_t>(j - 1)]));
    }
    // antisymmetry at the top degree (derived at lower degrees)
    for (int k = 0; k <= 3; ++k) {
        std::vector<Rational> row(static_cast<std::size_t>(nvars), Rational(0));
        row[static_cast<std::size_t>(unknown(0, k, mp))] = 1;
        row[static_cast<std::size_t>(unknown(1, k, mp))] = 1;
        add_row(std::move(row), Rational(0));
    }
    for (auto& [row, b] : opt.extra_relations) {
        if (static_cast<int>(row.size()) != nvars)
            throw std::invalid_argument("solve_weight_table: extra relation width mismatch");
        add_row(row, b);
    }

    // exact Gauss on the augmented system
    QMatrix m(static_cast<int>(rows.size()), nvars + 1);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        for (int j2 = 0; j2 < nvars; ++j2) m.at(i, j2) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)];
        m.at(i, nvars) = rhs[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < nvars && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j2 = 0; j2 <= nvars; ++j2) std::swap(m.at(rank, j2), m.at(pivot, j2));
        Rational p = m.at(rank, c);
        for (int j2 = c; j2 <= nvars; ++j2) m.at(rank, j2) /= p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j2 = c; j2 <= nvars; ++j2) m.at(i, j2) -= f * m.at(rank, j2);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (int i = rank; i < m.rows(); ++i)
        if (m.at(i, nvars) != 0)
            throw std::runtime_error("solve_weight_table: relation system is inconsistent");
    if (rank != nvars)
        throw std::runtime_error("solve_weight_table: relation system is underdetermined");

    std::vector<Rational> x(static_cast<std::size_t>(nvars));
    for (int r = 0; r < rank; ++r) x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = m.at(r, nvars);

    std::map<int, WeightTable::Row> plus;
    plus[1] = {1, 1, 1, 1};
    for (int j = 1; j <= mp; ++j) {
        WeightTable::Row row{};
        for (int k = 0; k <= 3; ++k) {
            Rational v = x[static_cast<std::size_t>(unknown(0, k, j))];
            Rational vm = x[static_cast<std::size_t>(unknown(1, k, j))];
            if (den(v) != 1 || vm != -v)
                throw std::runtime_error("solve_weight_table: solution is not an antisymmetric integer table");
            row[static_cast<std::size_t>(k)] = static_cast<long long>(num(v));
        }
        plus[1 << j] = row;
    }
    return WeightTable(plus);
}

}  // namespace mtc
