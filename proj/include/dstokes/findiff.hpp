#pragma once

#include <vector>

#include "dstokes/rational.hpp"

namespace dstokes {

/// Dense univariate polynomial with rational coefficients, c[k] * x^k.
struct Polynomial {
    std::vector<Rational> coeffs;

    static Polynomial monomial(int degree, Rational c = Rational(1)) {
        Polynomial p;
        p.coeffs.assign(degree + 1, Rational(0));
        p.coeffs[degree] = c;
        return p;
    }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// r-th symmetric finite difference of f at x with the centered stencil
///   sum_k (-1)^k C(r,k) f(x + (r-2k)/2 * step).
/// Odd r samples at half-integer offsets, even r at integer offsets
/// (for step 1), which is exactly the stencil family used by the level
/// identities in this library.
Rational central_difference(int r, const Rational& step, const Polynomial& f, const Rational& x);

/// Normalization coefficient 1 / (m * (r+1)!) for a level of difference
/// order r whose local configurations contribute with multiplicity m.
Rational normalization(int r, long long m);

long long factorial(int n);
long long binomial(int n, int k);

} // namespace dstokes
