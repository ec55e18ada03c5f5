#pragma once
#include <map>
#include <string>
#include <vector>

#include "hallq/laurent.hpp"
#include "hallq/unit_form.hpp"

namespace hallq {

// Word in the generators e_i, stored as the sequence of generator indices.
using NCWord = std::vector<int>;

DimVector word_content(const NCWord& w, int n);

// Finite linear combination of words with Laurent-polynomial coefficients.
struct NCElement {
    int n = 0; // number of generators
    std::map<NCWord, LaurentPoly> terms;

    explicit NCElement(int num_gens = 0) : n(num_gens) {}
    static NCElement generator(int n, int i);
    static NCElement zero(int n) { return NCElement(n); }

    bool is_zero() const { return terms.empty(); }
    bool operator==(const NCElement&) const = default;

    NCElement operator+(const NCElement& o) const;
    NCElement operator-(const NCElement& o) const;
    NCElement operator*(const NCElement& o) const; // concatenation product
    NCElement scaled(const LaurentPoly& s) const;

    // content vector shared by all words; throws NonHomogeneous otherwise
    DimVector degree() const;
    std::string str() const;
};

// x*y - v^{ad_exponent(T, deg x, deg y)} * y*x for homogeneous x, y
NCElement ad(const UnitForm& T, const NCElement& x, const NCElement& y);

// v^k * x*y - y*x
NCElement twisted_commutator(const NCElement& x, const NCElement& y, int k);

// Same element with every coefficient evaluated at v = value (exact).
// The value must be nonzero.
std::map<NCWord, QSqrtScalar> specialize(const NCElement& x, const QSqrtScalar& value);

// All words with the given content, lexicographically sorted.
std::vector<NCWord> words_of_content(const DimVector& alpha);

} // namespace hallq
