#pragma once

// Sparse exact-rational polynomials in two variables, the Laplacian symbol
// operator Delta = d1^2 + d2^2, its explicit right inverse, homogeneous
// harmonic bases and jet truncation.
//
// Term order is graded lexicographic and fixed globally: lower total degree
// first, then larger x1-exponent first. Iteration order, serialization and
// matrix row/column indexing all use it.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace mtc {

struct Monomial2 {
    int e1 = 0;
    int e2 = 0;

    int degree() const { return e1 + e2; }

    friend bool operator==(const Monomial2& a, const Monomial2& b) {
        return a.e1 == b.e1 && a.e2 == b.e2;
    }
    friend bool operator!=(const Monomial2& a, const Monomial2& b) { return !(a == b); }
};

// graded-lex: degree ascending, then x1-dominant terms first
struct MonoLess {
    bool operator()(const Monomial2& a, const Monomial2& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.e1 > b.e1;
    }
};

inline std::string to_string(const Monomial2& m) {
    std::string s;
    auto var = [&](const char* name, int e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += name;
        if (e != 1) s += '^' + std::to_string(e);
    };
    var("x1", m.e1);
    var("x2", m.e2);
    return s.empty() ? "1" : s;
}

// Monomials of total degree exactly d, in term order.
inline std::vector<Monomial2> monomials_of_degree(int d) {
    std::vector<Monomial2> out;
    for (int e1 = d; e1 >= 0; --e1) out.push_back({e1, d - e1});
    return out;
}

// Monomials of total degree <= l, in term order.
inline std::vector<Monomial2> monomials_up_to(int l) {
    std::vector<Monomial2> out;
    for (int d = 0; d <= l; ++d)
        for (auto& m : monomials_of_degree(d)) out.push_back(m);
    return out;
}

class Poly2 {
  public:
    using Terms = std::map<Monomial2, Rational, MonoLess>;

    Poly2() = default;
    explicit Poly2(const Rational& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    static Poly2 monomial(const Monomial2& m, const Rational& c = 1) {
        Poly2 p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial2& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // -1 for the zero polynomial
    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        std::optional<int> d;
        for (auto& [m, c] : terms_) {
            if (!d) d = m.degree();
            else if (*d != m.degree()) return false;
        }
        return true;
    }

    void add_term(const Monomial2& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly2& operator+=(const Poly2& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator-(const Poly2& a) {
        Poly2 r;
        for (auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_)
                r.add_term({ma.e1 + mb.e1, ma.e2 + mb.e2}, ca * cb);
        return r;
    }
    friend Poly2 operator*(const Rational& c, const Poly2& p) {
        Poly2 r;
        if (c == 0) return r;
        for (auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    // second partial derivative along variable 1 or 2
    Poly2 d2(int var) const {
        Poly2 r;
        for (auto& [m, c] : terms_) {
            int e = var == 1 ? m.e1 : m.e2;
            if (e < 2) continue;
            Monomial2 mm = m;
            (var == 1 ? mm.e1 : mm.e2) -= 2;
            r.add_term(mm, c * e * (e - 1));
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << '-';
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool constant = (m.e1 == 0 && m.e2 == 0);
            if (constant) {
                os << to_string(a);
            } else {
                if (a != 1) os << to_string(a) << '*';
                os << to_string(m);
            }
        }
        return os.str();
    }

  private:
    Terms terms_;
};

inline Poly2 apply_laplacian(const Poly2& p) { return p.d2(1) + p.d2(2); }

// drop all terms of total degree > l
inline Poly2 truncate_jet(const Poly2& p, int l) {
    if (l < 0) throw std::invalid_argument("truncate_jet: negative jet order");
    Poly2 r;
    for (auto& [m, c] : p.terms())
        if (m.degree() <= l) r.add_term(m, c);
    return r;
}

// R(x1^m x2^n) = sum_i A_i x1^(m+2+2i) x2^(n-2i) + sum_i B_i x1^(m-2i) x2^(n+2+2i)
// with A_i = (-1)^i m! n! / (2 (n-2i)! (m+2+2i)!) and B_i symmetric; satisfies
// apply_laplacian(R(mono)) == mono.
inline Poly2 right_inverse_monomial(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("right_inverse_monomial: negative exponent");
    Poly2 r;
    BigInt mn = factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n));
    for (int i = 0; 2 * i <= n; ++i) {
        BigInt d = 2 * factorial(static_cast<unsigned>(n - 2 * i)) *
                   factorial(static_cast<unsigned>(m + 2 + 2 * i));
        Rational a(mn, d);
        if (i % 2 == 1) a = -a;
        r.add_term({m + 2 + 2 * i, n - 2 * i}, a);
    }
    for (int i = 0; 2 * i <= m; ++i) {
        BigInt d = 2 * factorial(static_cast<unsigned>(m - 2 * i)) *
                   factorial(static_cast<unsigned>(n + 2 + 2 * i));
        Rational b(mn, d);
        if (i % 2 == 1) b = -b;
        r.add_term({m - 2 * i, n + 2 + 2 * i}, b);
    }
    return r;
}

inline Poly2 right_inverse(const Poly2& p) {
    Poly2 r;
    for (auto& [m, c] : p.terms()) r += c * right_inverse_monomial(m.e1, m.e2);
    return r;
}

// Homogeneous degree-d harmonics: one element at d = 0, two for d >= 1.
// Even family normalized with a0 = 1 (equals Re (x1 + i x2)^d), odd family
// with a1 = d (equals Im (x1 + i x2)^d).
inline std::vector<Poly2> harmonic_basis(int d) {
    if (d < 0) throw std::invalid_argument("harmonic_basis: negative degree");
    if (d == 0) return {Poly2(Rational(1))};
    Poly2 even, odd;
    for (int i = 0; 2 * i <= d; ++i) {
        Rational c(binomial(static_cast<unsigned>(d), static_cast<unsigned>(2 * i)));
        if (i % 2 == 1) c = -c;
        even.add_term({d - 2 * i, 2 * i}, c);
    }
    for (int i = 0; 2 * i + 1 <= d; ++i) {
        Rational c(binomial(static_cast<unsigned>(d), static_cast<unsigned>(2 * i + 1)));
        if (i % 2 == 1) c = -c;
        odd.add_term({d - 2 * i - 1, 2 * i + 1}, c);
    }
    return {even, odd};
}

}  // namespace mtc
