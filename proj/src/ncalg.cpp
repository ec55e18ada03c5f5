#include "hallq/ncalg.hpp"

#include <algorithm>
#include <sstream>

namespace hallq {

DimVector word_content(const NCWord& w, int n)
{
    DimVector d(n, 0);
    for (int i : w) ++d[i];
    return d;
}

NCElement NCElement::generator(int n, int i)
{
    NCElement e(n);
    e.terms[{i}] = LaurentPoly::constant(1);
    return e;
}

NCElement NCElement::operator+(const NCElement& o) const
{
    NCElement r = *this;
    r.n = std::max(n, o.n);
    for (const auto& [w, p] : o.terms) {
        auto it = r.terms.find(w);
        if (it == r.terms.end()) {
            r.terms[w] = p;
        } else {
            it->second = it->second + p;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

NCElement NCElement::operator-(const NCElement& o) const
{
    return *this + o.scaled(LaurentPoly::constant(-1));
}

NCElement NCElement::operator*(const NCElement& o) const
{
    NCElement r(std::max(n, o.n));
    for (const auto& [w1, p1] : terms)
        for (const auto& [w2, p2] : o.terms) {
            NCWord w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            auto it = r.terms.find(w);
            if (it == r.terms.end()) {
                LaurentPoly prod = p1 * p2;
                if (!prod.is_zero()) r.terms[std::move(w)] = std::move(prod);
            } else {
                it->second = it->second + p1 * p2;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    return r;
}

NCElement NCElement::scaled(const LaurentPoly& s) const
{
    NCElement r(n);
    if (s.is_zero()) return r;
    for (const auto& [w, p] : terms) r.terms[w] = p * s;
    return r;
}

DimVector NCElement::degree() const
{
    if (terms.empty()) throw hq_error(errc::non_homogeneous, "degree of zero element");
    DimVector d = word_content(terms.begin()->first, n);
    for (const auto& [w, p] : terms)
        if (word_content(w, n) != d)
            throw hq_error(errc::non_homogeneous, "element mixes degrees");
    return d;
}

std::string NCElement::str() const
{
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, p] : terms) {
        if (!first) out << " + ";
        first = false;
        std::string cs = p.str();
        bool simple = cs.find(' ') == std::string::npos;
        if (cs == "1") {
        } else if (simple) {
            out << cs << "*";
        } else {
            out << "(" << cs << ")*";
        }
        if (w.empty()) out << "1";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) out << ".";
            out << "e" << (w[i] + 1);
        }
    }
    return out.str();
}

NCElement ad(const UnitForm& T, const NCElement& x, const NCElement& y)
{
    long long k = ad_exponent(T, x.degree(), y.degree());
    return x * y - (y * x).scaled(LaurentPoly::monomial((int)k));
}

NCElement twisted_commutator(const NCElement& x, const NCElement& y, int k)
{
    return (x * y).scaled(LaurentPoly::monomial(k)) - y * x;
}

std::map<NCWord, QSqrtScalar> specialize(const NCElement& x, const QSqrtScalar& value)
{
    if (value.is_zero()) throw hq_error(errc::zero_specialization, "specialize at 0");
    std::map<NCWord, QSqrtScalar> r;
    for (const auto& [w, p] : x.terms) {
        QSqrtScalar v = p.eval(value);
        if (!v.is_zero()) r[w] = v;
    }
    return r;
}

std::vector<NCWord> words_of_content(const DimVector& alpha)
{
    NCWord base;
    for (int i = 0; i < (int)alpha.size(); ++i)
        for (int k = 0; k < alpha[i]; ++k) base.push_back(i);
    std::vector<NCWord> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace hallq
