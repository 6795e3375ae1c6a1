#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liouvep/poly2.hpp"

using namespace liouvep;

namespace {
const Poly2 Q = Poly2::variableQ();
const Poly2 S = Poly2::variableS();
} // namespace

TEST_CASE("arithmetic and sparsity")
{
    Poly2 p = Q * Q - S * S;
    CHECK(p.coefficient(2, 0) == Coeff(1));
    CHECK(p.coefficient(0, 2) == Coeff(-1));
    CHECK(p.coefficient(1, 1).isZero());
    CHECK(p.totalDegree() == 2);
    CHECK((p - p).isZero());
    CHECK((Q - S) * (Q + S) == p);
    CHECK(p.scaled(Coeff(0)).isZero());
}

TEST_CASE("differentiation")
{
    Poly2 p = Q * Q * S + S * S * S.scaled(Coeff(2));
    CHECK(p.diff(Poly2::Var::Q) == (Q * S).scaled(Coeff(2)));
    CHECK(p.diff(Poly2::Var::S) == Q * Q + (S * S).scaled(Coeff(6)));
    CHECK(Poly2(5).diff(Poly2::Var::Q).isZero());
}

TEST_CASE("evaluation in (Q, s) and (Q, r) agrees through s = i r")
{
    Poly2 p = Q * S + (S * S).scaled(Coeff(3)) + Poly2(Rational(1, 2));
    std::complex<double> q(0.7, 0), r(1.3, 0);
    std::complex<double> i(0, 1);
    CHECK(std::abs(p.evalQR(q, r) - p.evalQS(q, i * r)) < 1e-14);
}

TEST_CASE("exact evaluation matches numeric evaluation")
{
    Poly2 p = (Q - S) * (Q - S) - Poly2(Rational(1, 2));
    Coeff v = p.evalExactQS(Coeff(Rational(1, 3)), Coeff(Rational(-1, 2)));
    // (1/3 + 1/2)^2 - 1/2 = 25/36 - 18/36
    CHECK(v == Coeff(Rational(7, 36)));
    CHECK(std::abs(p.evalQS({1.0 / 3, 0}, {-0.5, 0}) - v.toComplex()) < 1e-14);
}

TEST_CASE("linear substitution rescales coordinates")
{
    Poly2 p = Q * Q + Q * S + S;
    Poly2 r = p.substituteLinear(Coeff(2), Coeff(Rational(1, 2)));
    CHECK(r == (Q * Q).scaled(Coeff(4)) + (Q * S) + S.scaled(Coeff(Rational(1, 2))));
    // substitution is a ring homomorphism
    Poly2 a = Q + S, b = Q - S;
    Coeff cq = Coeff::sqrtOfRational(2), cs = Coeff(Rational(1, 3));
    CHECK((a * b).substituteLinear(cq, cs) ==
          a.substituteLinear(cq, cs) * b.substituteLinear(cq, cs));
}

TEST_CASE("serialization is sorted and stable")
{
    Poly2 p = S.scaled(Coeff(Rational(-1, 2))) + Q * Q + Poly2(1);
    CHECK(p.serialize() == "(0,0): 1\n(0,1): -1/2\n(2,0): 1\n");
    CHECK(Poly2().serialize() == "(0,0): 0\n");
    Poly2 surd = Poly2::monomial(1, 0, Coeff::sqrtOfRational(Rational(1, 2)));
    CHECK(surd.serialize() == "(1,0): 1/2√2\n");
}
