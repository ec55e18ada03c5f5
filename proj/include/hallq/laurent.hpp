#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "hallq/error.hpp"

namespace hallq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Element a + b*sqrt(q) of the quadratic ring attached to a fixed prime q.
// q = 1 collapses to the rationals (used for specialization at v = 1).
struct QSqrtScalar {
    Rational a, b;
    uint32_t q = 1;

    QSqrtScalar() = default;
    QSqrtScalar(Rational ra, Rational rb, uint32_t prime) : a(std::move(ra)), b(std::move(rb)), q(prime) {}
    static QSqrtScalar rational(Rational r, uint32_t prime) { return {std::move(r), 0, prime}; }
    static QSqrtScalar sqrt_q(uint32_t prime) { return {0, 1, prime}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const QSqrtScalar& o) const { return a == o.a && b == o.b && q == o.q; }

    QSqrtScalar operator+(const QSqrtScalar& o) const;
    QSqrtScalar operator-(const QSqrtScalar& o) const;
    QSqrtScalar operator*(const QSqrtScalar& o) const;
    QSqrtScalar operator-() const { return {-a, -b, q}; }
    QSqrtScalar inverse() const; // conjugate over a^2 - q b^2 (nonzero since sqrt q irrational)
    QSqrtScalar pow_sqrt(long long k) const; // (sqrt q)^k for this->q, any sign of k

    std::string str() const;
};

// (sqrt q)^k as an exact ring element
QSqrtScalar sqrt_q_power(uint32_t q, long long k);

// Laurent polynomial in the twist variable v with rational coefficients.
struct LaurentPoly {
    std::map<int, Rational> c; // exponent -> coefficient, zeros never stored

    LaurentPoly() = default;
    static LaurentPoly monomial(int exp, Rational coeff = 1);
    static LaurentPoly constant(Rational coeff) { return monomial(0, std::move(coeff)); }

    bool is_zero() const { return c.empty(); }
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    // exact evaluation at v = value (value must be invertible when negative
    // exponents are present; every nonzero QSqrtScalar is)
    QSqrtScalar eval(const QSqrtScalar& value) const;

    std::string str() const; // e.g. "v^-1", "1 - v^2"
};

} // namespace hallq
