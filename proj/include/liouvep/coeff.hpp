#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "liouvep/rational.hpp"

namespace liouvep {

// Element of the ring Q[sqrt(d) : d squarefree], stored as a sparse sum
// of rational multiples of square roots of squarefree positive integers.
// The radicand 1 holds the rational part.  Closed under +, -, *, and /
// (division rationalizes the denominator one prime at a time).
class SurdReal {
public:
    SurdReal() = default;
    SurdReal(const Rational& q)
    {
        if (q != 0)
            terms_[1] = q;
    }
    SurdReal(long long n) : SurdReal(Rational(n)) {}
    SurdReal(int n) : SurdReal(Rational(n)) {}

    static SurdReal surd(const Rational& coeff, long long radicand);

    bool isZero() const { return terms_.empty(); }
    bool isRational() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    Rational rationalPart() const
    {
        auto it = terms_.find(1);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    // Throws unless the value is purely rational.
    Rational asRational() const
    {
        if (!isRational())
            throw std::domain_error("SurdReal: value is not rational");
        return rationalPart();
    }

    const std::map<long long, Rational>& terms() const { return terms_; }

    SurdReal operator-() const;
    SurdReal operator+(const SurdReal& o) const;
    SurdReal operator-(const SurdReal& o) const;
    SurdReal operator*(const SurdReal& o) const;
    SurdReal operator/(const SurdReal& o) const;
    SurdReal& operator+=(const SurdReal& o) { return *this = *this + o; }
    SurdReal& operator-=(const SurdReal& o) { return *this = *this - o; }
    SurdReal& operator*=(const SurdReal& o) { return *this = *this * o; }
    SurdReal& operator/=(const SurdReal& o) { return *this = *this / o; }

    bool operator==(const SurdReal& o) const { return terms_ == o.terms_; }
    bool operator!=(const SurdReal& o) const { return !(*this == o); }

    SurdReal inverse() const;
    double toDouble() const;
    std::string str() const;

private:
    void insert(long long radicand, const Rational& coeff);

    // radicand -> rational coefficient; radicands squarefree, no zero coeffs
    std::map<long long, Rational> terms_;
};

// Splits n = s^2 * f with f squarefree; returns (s, f).
std::pair<long long, long long> extractSquare(long long n);

// Complex number over the surd-rational field: re + im*i.
class Coeff {
public:
    Coeff() = default;
    Coeff(const SurdReal& re) : re_(re) {}
    Coeff(const SurdReal& re, const SurdReal& im) : re_(re), im_(im) {}
    Coeff(const Rational& q) : re_(q) {}
    Coeff(long long n) : re_(Rational(n)) {}
    Coeff(int n) : re_(Rational(n)) {}

    static Coeff i() { return Coeff(SurdReal(0), SurdReal(1)); }
    // Principal square root of a rational: real for q >= 0, i*sqrt(|q|) for q < 0.
    static Coeff sqrtOfRational(const Rational& q);

    const SurdReal& re() const { return re_; }
    const SurdReal& im() const { return im_; }
    bool isZero() const { return re_.isZero() && im_.isZero(); }
    bool isReal() const { return im_.isZero(); }
    bool isRational() const { return im_.isZero() && re_.isRational(); }

    Coeff operator-() const { return Coeff(-re_, -im_); }
    Coeff operator+(const Coeff& o) const { return Coeff(re_ + o.re_, im_ + o.im_); }
    Coeff operator-(const Coeff& o) const { return Coeff(re_ - o.re_, im_ - o.im_); }
    Coeff operator*(const Coeff& o) const
    {
        return Coeff(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Coeff operator/(const Coeff& o) const;
    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
    Coeff& operator/=(const Coeff& o) { return *this = *this / o; }

    bool operator==(const Coeff& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    Coeff conj() const { return Coeff(re_, -im_); }
    std::complex<double> toComplex() const { return {re_.toDouble(), im_.toDouble()}; }
    std::string str() const;

private:
    SurdReal re_, im_;
};

} // namespace liouvep
