#include "liouvep/poly2.hpp"

#include <algorithm>
#include <sstream>

namespace liouvep {

Poly2 Poly2::monomial(int degQ, int degS, const Coeff& c)
{
    Poly2 p;
    if (!c.isZero())
        p.terms_[{degQ, degS}] = c;
    return p;
}

Coeff Poly2::coefficient(int degQ, int degS) const
{
    auto it = terms_.find({degQ, degS});
    return it == terms_.end() ? Coeff() : it->second;
}

int Poly2::totalDegree() const
{
    int d = 0;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.first + k.second);
    return d;
}

Poly2 Poly2::operator-() const
{
    Poly2 r;
    for (const auto& [k, c] : terms_)
        r.terms_[k] = -c;
    return r;
}

Poly2 Poly2::operator+(const Poly2& o) const
{
    Poly2 r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto [it, fresh] = r.terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.isZero())
                r.terms_.erase(it);
        }
    }
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const
{
    return *this + (-o);
}

Poly2 Poly2::operator*(const Poly2& o) const
{
    Poly2 r;
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : o.terms_) {
            Key k{k1.first + k2.first, k1.second + k2.second};
            auto [it, fresh] = r.terms_.try_emplace(k, c1 * c2);
            if (!fresh) {
                it->second += c1 * c2;
                if (it->second.isZero())
                    r.terms_.erase(it);
            }
        }
    }
    return r;
}

Poly2 Poly2::scaled(const Coeff& c) const
{
    Poly2 r;
    if (c.isZero())
        return r;
    for (const auto& [k, v] : terms_)
        r.terms_[k] = v * c;
    return r;
}

Poly2 Poly2::diff(Var v) const
{
    Poly2 r;
    for (const auto& [k, c] : terms_) {
        if (v == Var::Q && k.first > 0)
            r.terms_[{k.first - 1, k.second}] = c * Coeff(k.first);
        else if (v == Var::S && k.second > 0)
            r.terms_[{k.first, k.second - 1}] = c * Coeff(k.second);
    }
    return r;
}

std::complex<double> Poly2::evalQS(std::complex<double> q, std::complex<double> s) const
{
    std::complex<double> v = 0;
    for (const auto& [k, c] : terms_) {
        std::complex<double> t = c.toComplex();
        for (int i = 0; i < k.first; ++i)
            t *= q;
        for (int i = 0; i < k.second; ++i)
            t *= s;
        v += t;
    }
    return v;
}

std::complex<double> Poly2::evalQR(std::complex<double> q, std::complex<double> r) const
{
    return evalQS(q, std::complex<double>(0, 1) * r);
}

Coeff Poly2::evalExactQS(const Coeff& q, const Coeff& s) const
{
    Coeff v;
    for (const auto& [k, c] : terms_) {
        Coeff t = c;
        for (int i = 0; i < k.first; ++i)
            t *= q;
        for (int i = 0; i < k.second; ++i)
            t *= s;
        v += t;
    }
    return v;
}

Poly2 Poly2::substituteLinear(const Coeff& cq, const Coeff& cs) const
{
    Poly2 r;
    for (const auto& [k, c] : terms_) {
        Coeff v = c;
        for (int i = 0; i < k.first; ++i)
            v *= cq;
        for (int i = 0; i < k.second; ++i)
            v *= cs;
        r += monomial(k.first, k.second, v);
    }
    return r;
}

std::string Poly2::serialize() const
{
    if (terms_.empty())
        return "(0,0): 0\n";
    std::ostringstream os;
    for (const auto& [k, c] : terms_)
        os << "(" << k.first << "," << k.second << "): " << c.str() << "\n";
    return os.str();
}

} // namespace liouvep
