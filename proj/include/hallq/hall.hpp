#pragma once

#include <map>
#include <utility>

#include "hallq/presentation.hpp"
#include "hallq/rep.hpp"

namespace hallq {

// Isomorphism class of a bound representation: the sorted multiset of
// indecomposable-table indices produced by decompose(). The empty multiset
// is the class of the zero module.
using IsoClass = std::vector<int>;

// Finite linear combination of isomorphism classes with exact coefficients
// in the ring {a + b*sqrt(q)}. Zero coefficients are never stored.
struct HallElement {
    uint32_t q = 1;
    std::map<IsoClass, QSqrtScalar> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const HallElement&) const = default;

    HallElement& add_term(const IsoClass& cls, const QSqrtScalar& coeff);
    HallElement operator+(const HallElement& o) const;
    HallElement operator-(const HallElement& o) const;
    HallElement scaled(const QSqrtScalar& s) const;
    std::string str() const;
};

// Structure-constant engine over a fixed indecomposable table. Hall numbers
// F^R_{M,N} (the number of subrepresentations of R isomorphic to N with
// quotient isomorphic to M) are computed by exhaustive subspace sweeps and
// cached per (R, sub-dimension) pair. The basis is degree-truncated:
// products whose degree sum exceeds the bound throw rather than truncate.
class HallTable {
public:
    HallTable(const BoundQuiver& bq, const IndecompTable& table, int degree_bound = 6);

    const BoundQuiver& quiver() const { return bq_; }
    const IndecompTable& indecs() const { return table_; }
    const UnitForm& form() const { return T_; }
    int p() const { return table_.p; }
    int degree_bound() const { return bound_; }

    DimVector dim_of(const IsoClass& cls) const;
    Representation rep_of(const IsoClass& cls) const;
    // all multisets of indecomposables with the given dimension sum
    std::vector<IsoClass> classes_of_dim(const DimVector& alpha) const;
    // every class with total dimension <= the bound, the zero class included
    std::vector<IsoClass> basis() const;

    // subobject-sweep route
    long long hall_number(const IsoClass& M, const IsoClass& N, const IsoClass& R);
    // extension-count route: enumerates one representative per class of the
    // cocycle space modulo coboundaries (equivalently: the full cocycle
    // count divided by the coboundary count), then applies
    // F = |Ext(M,N)_R| * |Aut R| / (|Hom(M,N)| * |Aut M| * |Aut N|)
    long long hall_number_via_ext(const IsoClass& M, const IsoClass& N, const IsoClass& R);

    HallElement unit() const;
    HallElement class_element(const IsoClass& cls) const;
    HallElement simple(int vertex) const;

    // [M] * [N] = (sqrt q)^{<dim M, dim N>} sum_R F^R_{M,N} [R], extended
    // bilinearly; the untwisted variant drops the scalar prefactor
    HallElement product(const HallElement& x, const HallElement& y);
    HallElement product_untwisted(const HallElement& x, const HallElement& y);

private:
    BoundQuiver bq_;
    IndecompTable table_;
    UnitForm T_;
    int bound_;
    // (R, sub-dimension) -> counts keyed by (quotient class, sub class)
    std::map<std::pair<IsoClass, DimVector>, std::map<std::pair<IsoClass, IsoClass>, long long>>
        profiles_;

    const std::map<std::pair<IsoClass, IsoClass>, long long>&
    subobject_profile(const IsoClass& R, const DimVector& sub_dim);
    HallElement product_impl(const HallElement& x, const HallElement& y, bool twisted);
};

struct AssocFailure {
    IsoClass x, y, z;
};
struct AssocReport {
    bool ok = true;
    long long triples = 0;
    std::vector<AssocFailure> failures;
};
// (x*y)*z == x*(y*z) for all basis triples with degree sum <= the bound
AssocReport verify_associativity(HallTable& H, int degree_sum_bound, bool twisted = true);

struct HallConFailure {
    DimVector m;
    int vertex = 0;
    long long lhs = 0, rhs = 0; // F^{M+S_i}_{S_i,M} vs q^{nu - nu} F^{M+S_i}_{M,S_i}
};
struct HallConReport {
    bool ok = true;
    long long checked = 0;
    std::vector<HallConFailure> failures;
};
// F^{M+S_i}_{S_i,M} = q^{nu(m,a_i) - nu(a_i,m)} F^{M+S_i}_{M,S_i} for every
// indecomposable M with |dim M| + 1 <= total_bound and every vertex i
HallConReport verify_hallcon(HallTable& H, int total_bound = 6);

// number of basis classes in degree alpha (multisets of indecomposable
// dimension vectors summing to alpha)
long long hall_graded_dim(const HallTable& H, const DimVector& alpha);

// image of x under e_i -> [S_i] with coefficients evaluated at v = sqrt(q)
HallElement rho_image(HallTable& H, const NCElement& x);

struct RhoFailure {
    std::vector<int> sequence; // the relation generator's index sequence
    DimVector degree;
    HallElement image; // the nonzero value, as a counterexample certificate
};
struct RhoDimMismatch {
    DimVector alpha;
    int presentation_dim = 0;
    long long hall_dim = 0;
};
struct RhoReport {
    bool homomorphism_ok = true;
    bool isomorphism_checked = false; // the dimension comparison runs iff q != 2
    bool isomorphism_ok = true;
    long long relations_checked = 0;
    long long degrees_checked = 0;
    std::vector<RhoFailure> failed_relations;
    std::vector<RhoDimMismatch> dim_mismatches;

    bool ok() const
    {
        return homomorphism_ok && (!isomorphism_checked || isomorphism_ok);
    }
};
// (1) every relation generator maps to the zero Hall element under rho;
// (2) for q != 2, the graded dimension of the presented algebra at v=sqrt(q)
// equals the Hall basis count in every degree |alpha| <= degree_total_bound
RhoReport rho_verify(const Presentation& P, HallTable& H, int degree_total_bound = 5);

} // namespace hallq
