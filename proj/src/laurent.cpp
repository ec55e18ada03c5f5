#include "hallq/laurent.hpp"

#include <sstream>

namespace hallq {

static void check_same_ring(const QSqrtScalar& x, const QSqrtScalar& y)
{
    if (x.q != y.q)
        throw hq_error(errc::index_mismatch, "mixed sqrt rings q=" + std::to_string(x.q) +
                                                 " and q=" + std::to_string(y.q));
}

QSqrtScalar QSqrtScalar::operator+(const QSqrtScalar& o) const
{
    check_same_ring(*this, o);
    return {a + o.a, b + o.b, q};
}

QSqrtScalar QSqrtScalar::operator-(const QSqrtScalar& o) const
{
    check_same_ring(*this, o);
    return {a - o.a, b - o.b, q};
}

QSqrtScalar QSqrtScalar::operator*(const QSqrtScalar& o) const
{
    check_same_ring(*this, o);
    return {a * o.a + b * o.b * q, a * o.b + b * o.a, q};
}

QSqrtScalar QSqrtScalar::inverse() const
{
    if (q == 1) {
        if (a + b == 0) throw hq_error(errc::zero_specialization, "inverse of zero");
        // q = 1 means sqrt(q) = 1; collapse to a rational first
        return {Rational(1) / (a + b), 0, q};
    }
    Rational norm = a * a - b * b * q;
    if (norm == 0) throw hq_error(errc::zero_specialization, "inverse of zero");
    return {a / norm, -b / norm, q};
}

QSqrtScalar QSqrtScalar::pow_sqrt(long long k) const { return sqrt_q_power(q, k); }

QSqrtScalar sqrt_q_power(uint32_t q, long long k)
{
    bool neg = k < 0;
    unsigned long long m = neg ? -(unsigned long long)k : (unsigned long long)k;
    // (sqrt q)^m = q^(m/2) or q^((m-1)/2) * sqrt(q)
    Rational qpow = 1;
    for (unsigned long long i = 0; i < m / 2; ++i) qpow *= q;
    QSqrtScalar r = (m % 2 == 0) ? QSqrtScalar::rational(qpow, q)
                                 : QSqrtScalar{0, qpow, q};
    return neg ? r.inverse() : r;
}

std::string QSqrtScalar::str() const
{
    std::ostringstream out;
    if (b == 0) {
        out << a;
    } else {
        if (a != 0) out << a << (b > 0 ? " + " : " - ");
        else if (b < 0) out << "-";
        Rational babs = b < 0 ? Rational(-b) : b;
        if (babs != 1) out << babs << "*";
        out << "sqrt(" << q << ")";
    }
    return out.str();
}

LaurentPoly LaurentPoly::monomial(int exp, Rational coeff)
{
    LaurentPoly p;
    if (coeff != 0) p.c[exp] = std::move(coeff);
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    for (const auto& [e, x] : o.c) {
        Rational& slot = r.c[e];
        slot += x;
        if (slot == 0) r.c.erase(e);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r;
    for (const auto& [e, x] : c) r.c[e] = -x;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    LaurentPoly r;
    for (const auto& [e1, x1] : c)
        for (const auto& [e2, x2] : o.c) {
            Rational& slot = r.c[e1 + e2];
            slot += x1 * x2;
            if (slot == 0) r.c.erase(e1 + e2);
        }
    return r;
}

QSqrtScalar LaurentPoly::eval(const QSqrtScalar& value) const
{
    QSqrtScalar acc{0, 0, value.q};
    QSqrtScalar inv{0, 0, value.q};
    bool have_inv = false;
    for (const auto& [e, coeff] : c) {
        QSqrtScalar term = QSqrtScalar::rational(coeff, value.q);
        if (e > 0) {
            for (int i = 0; i < e; ++i) term = term * value;
        } else if (e < 0) {
            if (!have_inv) {
                inv = value.inverse();
                have_inv = true;
            }
            for (int i = 0; i < -e; ++i) term = term * inv;
        }
        acc = acc + term;
    }
    return acc;
}

std::string LaurentPoly::str() const
{
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, coeff] : c) {
        Rational abscoeff = coeff < 0 ? Rational(-coeff) : coeff;
        if (first) {
            if (coeff < 0) out << "-";
            first = false;
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        if (abscoeff != 1 || e == 0) out << abscoeff;
        if (e != 0) {
            if (abscoeff != 1) out << "*";
            out << "v";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

} // namespace hallq
