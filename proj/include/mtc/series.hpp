#pragma once

// Leading-coefficient analysis of L_B: for parities (alpha, beta) the
// coefficient of x1^(m+d-alpha-beta+2) x2^(n+alpha+beta) in L_B(x1^m x2^n)
// is sum_l gamma_l * Atilde(m, l) where gamma_l is the coefficient of the
// monomial pair x1^(l-alpha) x2^alpha (x) x1^(d-l-beta) x2^beta in B and
//
//   Atilde(m,l) = 1/(2(m+l-alpha+2)(m+l-alpha+1))
//               + 1/(2(m+d-l-beta+2)(m+d-l-beta+1))  =  P(m,l)/p(m,l).
//
// Clearing denominators turns the series into sum_l gamma_l q(m,l) with
// q(m,l) = P(m,l) prod_{k != l} p(m,k), a polynomial of degree 4d+2 in m.

#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "petri.hpp"

namespace mtc {

// dense univariate polynomial over Q, for the q(m,l) analysis
class PolyM {
  public:
    PolyM() = default;
    explicit PolyM(Rational c) : c_{std::move(c)} { trim(); }
    static PolyM linear(const Rational& a0, const Rational& a1) {
        PolyM p;
        p.c_ = {a0, a1};
        p.trim();
        return p;
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rational operator()(const Rational& m) const {
        Rational v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * m + *it;
        return v;
    }

    friend PolyM operator+(const PolyM& a, const PolyM& b) {
        PolyM r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend PolyM operator*(const PolyM& a, const PolyM& b) {
        PolyM r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend PolyM operator*(const Rational& s, const PolyM& a) {
        PolyM r = a;
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// P(m,l) = (m+l-alpha+2)(m+l-alpha+1) + (m+d-l-beta+2)(m+d-l-beta+1),
// equal to 2(m+(e+f+1)/2)^2 + 2(l+(e-f)/2)^2 - 1/2 with e=1-alpha, f=1+d-beta.
inline Rational series_P(const Rational& m, const Rational& l, int d, int alpha, int beta) {
    Rational u = m + l - alpha;
    Rational v = m + d - l - beta;
    return (u + 2) * (u + 1) + (v + 2) * (v + 1);
}

// p(m,l) = 2(m+l-alpha+2)(m+l-alpha+1)(m+d-l-beta+2)(m+d-l-beta+1)
inline Rational series_p(const Rational& m, const Rational& l, int d, int alpha, int beta) {
    Rational u = m + l - alpha;
    Rational v = m + d - l - beta;
    return 2 * (u + 2) * (u + 1) * (v + 2) * (v + 1);
}

inline PolyM series_P_poly(int l, int d, int alpha, int beta) {
    PolyM m = PolyM::linear(0, 1);
    PolyM u1 = m + PolyM(Rational(l - alpha + 2)), u2 = m + PolyM(Rational(l - alpha + 1));
    PolyM v1 = m + PolyM(Rational(d - l - beta + 2)), v2 = m + PolyM(Rational(d - l - beta + 1));
    return u1 * u2 + v1 * v2;
}

inline PolyM series_p_poly(int l, int d, int alpha, int beta) {
    PolyM m = PolyM::linear(0, 1);
    PolyM u1 = m + PolyM(Rational(l - alpha + 2)), u2 = m + PolyM(Rational(l - alpha + 1));
    PolyM v1 = m + PolyM(Rational(d - l - beta + 2)), v2 = m + PolyM(Rational(d - l - beta + 1));
    return Rational(2) * (u1 * u2 * v1 * v2);
}

// q(m,l) = P(m,l) * prod_{k != l} p(m,k); degree 4d+2 in m
inline PolyM series_q_poly(int l, int d, int alpha, int beta) {
    PolyM q = series_P_poly(l, d, alpha, beta);
    for (int k = 0; k <= d; ++k) {
        if (k == l) continue;
        q = q * series_p_poly(k, d, alpha, beta);
    }
    return q;
}

struct CoefficientSeries {
    int degree = 0;
    int alpha = 0;
    int beta = 0;
    std::vector<Rational> gamma;  // gamma_l, l = 0..degree

    // exact value at integer m >= 0; denominators never vanish there
    Rational evaluate(long long m) const {
        Rational v = 0;
        for (int l = 0; l <= degree; ++l) {
            if (gamma[l] == 0) continue;
            Rational u = Rational(m) + l - alpha;
            Rational w = Rational(m) + degree - l - beta;
            v += gamma[l] / (2 * (u + 2) * (u + 1));
            v += gamma[l] / (2 * (w + 2) * (w + 1));
        }
        return v;
    }

    // the series cleared to the common denominator, sum_l gamma_l q(m,l)
    PolyM numerator() const {
        PolyM n;
        for (int l = 0; l <= degree; ++l) {
            if (gamma[l] == 0) continue;
            n = n + gamma[l] * series_q_poly(l, degree, alpha, beta);
        }
        return n;
    }

    bool trivially_zero() const { return numerator().is_zero(); }

    std::vector<long long> integer_zeros(long long m_lo, long long m_hi) const {
        std::vector<long long> zeros;
        for (long long m = m_lo; m <= m_hi; ++m)
            if (evaluate(m) == 0) zeros.push_back(m);
        return zeros;
    }
};

inline CoefficientSeries coefficient_series(const PetriKernelElement& b, int alpha, int beta) {
    if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1)
        throw std::invalid_argument("coefficient_series: parity selectors must be 0 or 1");
    CoefficientSeries s;
    s.degree = b.degree;
    s.alpha = alpha;
    s.beta = beta;
    s.gamma.resize(static_cast<std::size_t>(b.degree) + 1, Rational(0));
    for (int l = 0; l <= b.degree; ++l) {
        if (l - alpha < 0 || b.degree - l - beta < 0) continue;
        s.gamma[l] =
            b.tensor.pair_coeff({l - alpha, alpha}, {b.degree - l - beta, beta});
    }
    return s;
}

// the (alpha, beta) pairs whose series is not identically zero
inline std::vector<std::pair<int, int>> nonzero_series_selectors(const PetriKernelElement& b) {
    std::vector<std::pair<int, int>> out;
    for (int alpha = 0; alpha <= 1; ++alpha)
        for (int beta = 0; beta <= 1; ++beta)
            if (!coefficient_series(b, alpha, beta).trivially_zero()) out.emplace_back(alpha, beta);
    return out;
}

// Linear independence of {q(m,l)}_{l=0..d} by exact rank of the coefficient
// matrix. For equal parities the family is degenerate (q(m,l) == q(m,d-l)),
// so the certificate is run over the mixed-parity selectors.
inline bool q_independent_for(int d, int alpha, int beta) {
    if (d < 0) throw std::invalid_argument("q_independence: negative degree");
    int deg = 4 * d + 2;
    QMatrix m(d + 1, deg + 1);
    for (int l = 0; l <= d; ++l) {
        PolyM q = series_q_poly(l, d, alpha, beta);
        auto& c = q.coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) m.at(l, static_cast<int>(j)) = c[j];
    }
    return exact_rank(m) == d + 1;
}

inline bool q_independence_check(int d) {
    if (d == 0) return q_independent_for(0, 0, 0);  // single polynomial, both parities agree
    return q_independent_for(d, 0, 1) && q_independent_for(d, 1, 0);
}

}  // namespace mtc
