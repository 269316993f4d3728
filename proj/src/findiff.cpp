#include "dstokes/findiff.hpp"

#include <stdexcept>

namespace dstokes {

long long factorial(int n) {
    if (n < 0)
        throw std::domain_error("factorial of negative");
    long long r = 1;
    for (int i = 2; i <= n; ++i)
        r = Rational::checked_mul(r, i);
    return r;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = Rational::checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

Rational central_difference(int r, const Rational& step, const Polynomial& f, const Rational& x) {
    if (r < 1)
        throw std::domain_error("central_difference: order must be >= 1");
    Rational acc(0);
    for (int k = 0; k <= r; ++k) {
        Rational offset = Rational(r - 2 * k, 2) * step;
        Rational term = Rational(binomial(r, k)) * f(x + offset);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

Rational normalization(int r, long long m) {
    if (r < 1 || m < 1)
        throw std::domain_error("normalization: r and m must be >= 1");
    return Rational(1, Rational::checked_mul(m, factorial(r + 1)));
}

} // namespace dstokes
