#include "liouvep/coeff.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace liouvep {

std::pair<long long, long long> extractSquare(long long n)
{
    if (n <= 0)
        throw std::domain_error("extractSquare: radicand must be positive");
    long long square = 1;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            square *= p;
        }
    }
    return {square, rest};
}

void SurdReal::insert(long long radicand, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(radicand, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SurdReal SurdReal::surd(const Rational& coeff, long long radicand)
{
    auto [sq, free] = extractSquare(radicand);
    SurdReal r;
    r.insert(free, coeff * sq);
    return r;
}

SurdReal SurdReal::operator-() const
{
    SurdReal r;
    for (const auto& [d, q] : terms_)
        r.terms_[d] = -q;
    return r;
}

SurdReal SurdReal::operator+(const SurdReal& o) const
{
    SurdReal r = *this;
    for (const auto& [d, q] : o.terms_)
        r.insert(d, q);
    return r;
}

SurdReal SurdReal::operator-(const SurdReal& o) const
{
    SurdReal r = *this;
    for (const auto& [d, q] : o.terms_)
        r.insert(d, -q);
    return r;
}

SurdReal SurdReal::operator*(const SurdReal& o) const
{
    SurdReal r;
    for (const auto& [d1, q1] : terms_) {
        for (const auto& [d2, q2] : o.terms_) {
            long long g = std::gcd(d1, d2);
            // d1, d2 squarefree: sqrt(d1)*sqrt(d2) = g * sqrt(d1*d2/g^2)
            r.insert((d1 / g) * (d2 / g), q1 * q2 * g);
        }
    }
    return r;
}

SurdReal SurdReal::inverse() const
{
    if (isZero())
        throw std::domain_error("SurdReal: division by zero");
    if (isRational())
        return SurdReal(Rational(1) / rationalPart());
    // Pick a prime appearing in some radicand and rationalize it away.
    long long p = 0;
    for (const auto& [d, q] : terms_) {
        if (d > 1) {
            long long m = d;
            for (long long f = 2; f * f <= m; ++f) {
                if (m % f == 0) {
                    p = f;
                    break;
                }
            }
            if (p == 0)
                p = m;
            break;
        }
    }
    SurdReal a, c; // *this = a + sqrt(p)*c, radicands of a and c free of p
    for (const auto& [d, q] : terms_) {
        if (d % p == 0) {
            SurdReal t;
            t.insert(d / p, q);
            c += t;
        } else {
            SurdReal t;
            t.insert(d, q);
            a += t;
        }
    }
    SurdReal denom = a * a - SurdReal(Rational(p)) * c * c;
    SurdReal sqrtP = surd(1, p);
    return (a - sqrtP * c) * denom.inverse();
}

SurdReal SurdReal::operator/(const SurdReal& o) const
{
    return *this * o.inverse();
}

double SurdReal::toDouble() const
{
    double v = 0;
    for (const auto& [d, q] : terms_)
        v += liouvep::toDouble(q) * std::sqrt(static_cast<double>(d));
    return v;
}

std::string SurdReal::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, q] : terms_) {
        if (!first && q > 0)
            os << "+";
        first = false;
        os << q;
        if (d != 1)
            os << "√" << d;
    }
    return os.str();
}

Coeff Coeff::sqrtOfRational(const Rational& q)
{
    if (q == 0)
        return Coeff();
    Rational a = q > 0 ? q : Rational(-q);
    // sqrt(n/d) = sqrt(n*d)/d
    Int nd = numerator(a) * denominator(a);
    if (nd > Int(std::numeric_limits<long long>::max()))
        throw std::domain_error("sqrtOfRational: radicand too large");
    SurdReal root = SurdReal::surd(Rational(1) / denominator(a), nd.convert_to<long long>());
    return q > 0 ? Coeff(root) : Coeff(SurdReal(0), root);
}

Coeff Coeff::operator/(const Coeff& o) const
{
    if (o.im_.isZero())
        return Coeff(re_ / o.re_, im_ / o.re_);
    SurdReal n = o.re_ * o.re_ + o.im_ * o.im_;
    return *this * Coeff(o.re_ / n, -(o.im_ / n));
}

std::string Coeff::str() const
{
    if (im_.isZero())
        return re_.str();
    if (re_.isZero())
        return "(" + im_.str() + ")i";
    return "(" + re_.str() + ")+(" + im_.str() + ")i";
}

} // namespace liouvep
