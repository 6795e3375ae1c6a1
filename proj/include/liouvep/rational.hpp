#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace liouvep {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n)
{
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    Int b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

// (n)!! with the convention (-1)!! = 0!! = 1.
inline Int doubleFactorial(int n)
{
    Int f = 1;
    for (int i = n; i > 1; i -= 2)
        f *= i;
    return f;
}

inline double toDouble(const Rational& q)
{
    return q.convert_to<double>();
}

} // namespace liouvep
