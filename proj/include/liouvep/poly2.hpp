#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "liouvep/coeff.hpp"

namespace liouvep {

// Sparse bivariate polynomial in Q and s = i*r.  Adjoint-symmetric density
// functions have purely real coefficients in this basis; non-symmetric
// eigenfunctions pick up imaginary parts through the Coeff field.
class Poly2 {
public:
    using Key = std::pair<int, int>; // (degQ, degS)

    Poly2() = default;
    Poly2(const Coeff& c)
    {
        if (!c.isZero())
            terms_[{0, 0}] = c;
    }
    Poly2(const Rational& q) : Poly2(Coeff(q)) {}
    Poly2(int n) : Poly2(Coeff(n)) {}

    static Poly2 monomial(int degQ, int degS, const Coeff& c = Coeff(1));
    static Poly2 variableQ() { return monomial(1, 0); }
    static Poly2 variableS() { return monomial(0, 1); }

    bool isZero() const { return terms_.empty(); }
    const std::map<Key, Coeff>& terms() const { return terms_; }
    Coeff coefficient(int degQ, int degS) const;
    int totalDegree() const;

    Poly2 operator-() const;
    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
    Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    Poly2 scaled(const Coeff& c) const;

    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    enum class Var { Q, S };
    Poly2 diff(Var v) const;

    // Evaluate as a function of (Q, s), both complex.
    std::complex<double> evalQS(std::complex<double> q, std::complex<double> s) const;
    // Evaluate as a function of (Q, r): substitutes s = i*r.
    std::complex<double> evalQR(std::complex<double> q, std::complex<double> r) const;
    // Exact evaluation at surd-rational (Q, s).
    Coeff evalExactQS(const Coeff& q, const Coeff& s) const;

    // Substitute Q -> cq*Q, s -> cs*s (coordinate rescaling).
    Poly2 substituteLinear(const Coeff& cq, const Coeff& cs) const;

    // Sorted "(degQ,degS): coeff" lines, one term per line.
    std::string serialize() const;

private:
    std::map<Key, Coeff> terms_;
};

} // namespace liouvep
