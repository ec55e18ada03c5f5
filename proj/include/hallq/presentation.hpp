#pragma once
#include "hallq/ncalg.hpp"

namespace hallq {

struct RelationGen {
    std::vector<int> sequence; // generator indices (i_1, ..., i_k), outermost first
    NCElement element;         // nested twisted-adjoint element of the sequence
    DimVector degree;
};

// Generators e_i modulo the two-sided ideal spanned by the relation
// generators. `reduced` indexes a per-degree maximal linearly independent
// subset of `gens`; it spans the same ideal, so dimension computations may
// use it in place of the full list.
struct Presentation {
    UnitForm T;
    RootSet roots;
    std::vector<RelationGen> gens;
    std::vector<int> reduced;
};

// All nested ad-elements ad_{e_{i_1}}(... ad_{e_{i_{k-1}}}(e_{i_k}) ...)
// whose tail sum sum_{j>=2} alpha_{i_j} is a positive root while the full
// sum is not. Tails are grown right-to-left; intermediate tail sums are only
// required to stay under some root componentwise (they need not be roots
// themselves). Identically-zero elements are discarded.
Presentation generate_relations(const UnitForm& T, const RootSet& roots);

// Dimension of the degree-alpha slice of the quotient algebra: number of
// words of content alpha minus the rank of the ideal slice spanned by
// u * r * w with deg u + deg r + deg w = alpha.
//
// Generic mode decides rank over the rational function field Q(v) by
// fraction-free elimination on integer Laurent rows; the specialized
// overload works over the exact field generated by `value`.
int graded_dimension(const Presentation& P, const DimVector& alpha, int word_cap = 6);
int graded_dimension(const Presentation& P, const DimVector& alpha, const QSqrtScalar& value,
                     int word_cap = 6);

// True when the homogeneous element x lies in the span of the ideal slice
// of its degree (generic coefficients).
bool in_ideal_slice(const Presentation& P, const NCElement& x, int word_cap = 6);

// Number of multisets of positive roots summing to alpha — the independent
// dimension oracle used for cross-checks.
long long root_multiset_count(const RootSet& roots, const DimVector& alpha);

} // namespace hallq
