#pragma once

#include "liouvep/diffop.hpp"

namespace liouvep {

// Label of the eigenfunction f^sign_{mn}; sign is ignored for n = 0.
struct EigIndex {
    int m = 0;
    int n = 0;
    int sign = +1; // +1 or -1

    // Degeneracy index: eigenvalues with equal N = 2m - n coalesce at the
    // exceptional point.
    int degeneracy() const { return 2 * m - n; }
    bool valid() const
    {
        return m >= 0 && n >= 0 && n <= m && (sign == 1 || sign == -1);
    }
};

// lambda^sign_{mn} = sign*i*n*omega + (2m - n)*gamma/2.
Coeff klEigenvalue(const KLParams& p, const EigIndex& idx);

// Same formula with the modified frequency omega2; purely real in the
// overdamped region where omega2 is imaginary.
Coeff clEigenvalue(const CLParams& p, const EigIndex& idx);

// Coefficients of the physicists' Hermite polynomial H_n, index = power.
std::vector<Rational> hermitePoly(int n);

// Eigenfunction polynomial in the scaled variables U = Q/sqrt(2b),
// V = i*sqrt(b/2)*r, where every model-specific scale drops out.
Poly2 klPiUV(const EigIndex& idx);

// The same polynomial in the concrete (Q, s) coordinates at thermal width b.
Poly2 klPi(const EigIndex& idx, const Rational& b);

WeightedState klEigenfunction(const EigIndex& idx, const Rational& b);

// Substitute the hat-coordinate operators for the two variables of a
// polynomial and apply the product to the target stationary state; the hat
// operators commute, being conjugates of commuting multiplications.
WeightedState hatSubstitute(const SimilarityMap& map, const Poly2& poly);

// Image of the eigenfunction under a similarity map, built by substituting
// the hat-coordinate operators into the scaled-variable polynomial and
// applying the product to the target stationary state.
WeightedState transformedEigenfunction(const SimilarityMap& map, const EigIndex& idx);

} // namespace liouvep
