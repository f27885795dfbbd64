#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace galepoly {

using Int = mpz_class;

/*
 * Dense univariate polynomial with arbitrary-precision integer coefficients.
 *
 * coeff(i) is the coefficient of t^i. The coefficient vector never carries
 * trailing zeros; the zero polynomial is the empty vector and has no degree.
 * All arithmetic is exact.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int v);
    static IntPoly variable();                 // t
    static IntPoly monomial(int deg, Int c = 1);

    bool is_zero() const { return c_.empty(); }
    // Degree of a nonzero polynomial. Must not be called on zero.
    int degree() const;
    const Int& coeff(int i) const;             // zero outside the stored range
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    std::string str() const;                   // "1 + 2*t + t^3"

private:
    void normalize();
    std::vector<Int> c_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

inline IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
inline IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

// q with q(t) = p(t+a), expanded exactly.
IntPoly shift(const IntPoly& p, const Int& a);

// 1 + t + ... + t^(m-1); m = 0 gives the zero polynomial.
IntPoly p_poly(long m);

IntPoly pow(const IntPoly& p, unsigned e);

bool is_palindromic(const IntPoly& p);

// Truncated difference transform: sum_{i=0}^{floor(D/2)} (h_i - h_{i-1}) t^i.
// D is the ambient degree (the polytope dimension); throws if D < deg(h).
IntPoly g_from_h(const IntPoly& h, int D);

// Binomial coefficient as an exact integer; zero when m < 0 or m > n.
Int binomial(long n, long m);

}  // namespace galepoly
