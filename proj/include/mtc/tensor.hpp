#pragma once

// Rank-rho tensors of polynomials: elements of S.T* (x) S.T* written as
// sum_i c_i p_i (x) q_i. These carry kernel elements of the polynomial
// Petri map.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "poly2.hpp"

namespace mtc {

struct TensorSummand {
    Rational coef;
    Poly2 left;
    Poly2 right;
};

class TensorElem {
  public:
    TensorElem() = default;

    static TensorElem simple(const Poly2& left, const Poly2& right, const Rational& c = 1) {
        TensorElem t;
        t.add(c, left, right);
        return t;
    }

    void add(const Rational& c, const Poly2& left, const Poly2& right) {
        if (c == 0 || left.is_zero() || right.is_zero()) return;
        summands_.push_back({c, left, right});
        canonicalize();
    }

    const std::vector<TensorSummand>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }

    // total degree when homogeneous, nullopt otherwise
    std::optional<int> degree() const {
        std::optional<int> d;
        for (auto& s : summands_) {
            if (!s.left.is_homogeneous() || !s.right.is_homogeneous()) return std::nullopt;
            int sd = s.left.degree() + s.right.degree();
            if (!d) d = sd;
            else if (*d != sd) return std::nullopt;
        }
        return d;
    }

    friend TensorElem operator+(const TensorElem& a, const TensorElem& b) {
        TensorElem r = a;
        for (auto& s : b.summands_) r.summands_.push_back(s);
        r.canonicalize();
        return r;
    }
    friend TensorElem operator*(const Rational& c, const TensorElem& t) {
        TensorElem r;
        if (c == 0) return r;
        r.summands_ = t.summands_;
        for (auto& s : r.summands_) s.coef *= c;
        return r;
    }

    // coefficient of the monomial pair mu (x) nu in the expansion
    Rational pair_coeff(const Monomial2& mu, const Monomial2& nu) const {
        Rational c = 0;
        for (auto& s : summands_) c += s.coef * s.left.coeff(mu) * s.right.coeff(nu);
        return c;
    }

    // rank of the tensor: rank of its coefficient matrix over the monomial
    // pair basis (the minimal number of decomposable summands)
    int rank() const {
        std::map<Monomial2, int, MonoLess> li, ri;
        for (auto& s : summands_) {
            for (auto& [m, c] : s.left.terms()) li.emplace(m, 0);
            for (auto& [m, c] : s.right.terms()) ri.emplace(m, 0);
        }
        int i = 0;
        for (auto& [m, idx] : li) idx = i++;
        i = 0;
        for (auto& [m, idx] : ri) idx = i++;
        QMatrix mat(static_cast<int>(li.size()), static_cast<int>(ri.size()));
        for (auto& s : summands_)
            for (auto& [ml, cl] : s.left.terms())
                for (auto& [mr, cr] : s.right.terms())
                    mat.at(li[ml], ri[mr]) += s.coef * cl * cr;
        return exact_rank(mat);
    }

    std::string str() const {
        if (summands_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& s : summands_) {
            if (!first) os << " + ";
            first = false;
            os << to_string(s.coef) << "*(" << s.left.str() << ")(x)(" << s.right.str() << ")";
        }
        return os.str();
    }

  private:
    // scale factors so each polynomial leads with coefficient 1, then merge
    // summands with identical factor pairs
    void canonicalize() {
        std::vector<TensorSummand> out;
        for (auto& s : summands_) {
            if (s.coef == 0 || s.left.is_zero() || s.right.is_zero()) continue;
            TensorSummand t = s;
            Rational lc = t.left.terms().begin()->second;
            Rational rc = t.right.terms().begin()->second;
            t.left = Rational(1) / lc * t.left;
            t.right = Rational(1) / rc * t.right;
            t.coef *= lc * rc;
            bool merged = false;
            for (auto& o : out)
                if (o.left == t.left && o.right == t.right) {
                    o.coef += t.coef;
                    merged = true;
                    break;
                }
            if (!merged) out.push_back(std::move(t));
        }
        std::vector<TensorSummand> cleaned;
        for (auto& s : out)
            if (s.coef != 0) cleaned.push_back(std::move(s));
        summands_ = std::move(cleaned);
    }

    std::vector<TensorSummand> summands_;
};

// polynomial Petri map: multiply the two factors
inline Poly2 petri_map(const TensorElem& b) {
    Poly2 r;
    for (auto& s : b.summands()) r += s.coef * (s.left * s.right);
    return r;
}

}  // namespace mtc
