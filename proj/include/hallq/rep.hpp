#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hallq/gf.hpp"
#include "hallq/laurent.hpp"
#include "hallq/quiver.hpp"
#include "hallq/unit_form.hpp"

namespace hallq {

// A finite-dimensional representation of a bound quiver over F_p: one vector
// space dimension per vertex and one matrix per arrow (rows = dimension at
// the target, columns = dimension at the source).
struct Representation {
    int p = 0;
    DimVector dim;
    std::vector<MatrixFp> mats;
};

Representation zero_representation(const BoundQuiver& bq, int p, const DimVector& dim);
Representation simple_rep(const BoundQuiver& bq, int p, int vertex);
Representation direct_sum(const BoundQuiver& bq, const Representation& a,
                          const Representation& b);

// Matrix of a path acting on a representation, factors composed in
// application order (first arrow of the path acts first).
MatrixFp path_matrix(const Representation& rep, const Path& path);

// True iff every relation of the bound quiver evaluates to the zero matrix.
bool is_bound(const BoundQuiver& bq, const Representation& rep);

// Basis of the space of morphisms V -> W: tuples (f_i) with
// f_target * V_rho = W_rho * f_source for every arrow rho.
struct HomBasis {
    std::vector<std::vector<MatrixFp>> basis; // basis element -> per-vertex matrix
    int dim() const { return (int)basis.size(); }
};
HomBasis hom_basis(const BoundQuiver& bq, const Representation& V, const Representation& W);
int dim_hom(const BoundQuiver& bq, const Representation& V, const Representation& W);

// |End(V)| and |Aut(V)| by exhaustive scan of the endomorphism space.
struct EndAutCounts {
    BigInt end_count;
    BigInt aut_count;
};
EndAutCounts end_aut_counts(const BoundQuiver& bq, const Representation& V,
                            long long cap = 10'000'000);

// Exhaustive search for an invertible morphism V -> W.
bool is_isomorphic(const BoundQuiver& bq, const Representation& V, const Representation& W,
                   long long cap = 10'000'000);

struct EnumCaps {
    int component_cap = 3;          // per-vertex dimension bound
    int total_cap = 8;              // total dimension bound
    long long tuple_cap = 10'000'000; // matrix tuples enumerated per dim vector
    long long end_cap = 10'000'000;   // exhaustive End scans
};

struct IndecEntry {
    Representation rep;
    DimVector dim;
    int end_dim = 0;
    BigInt end_count;
    BigInt aut_count;
};

// Indecomposables in a directed order: Hom(V^(k), V^(l)) = 0 for k < l and
// Ext^1(V^(k), V^(l)) = 0 for k >= l.
struct IndecompTable {
    int p = 0;
    std::vector<IndecEntry> entries;
    std::vector<std::vector<int>> hom;  // dim Hom(entry k, entry l)
    std::vector<std::vector<int>> ext1; // dim Ext^1(entry k, entry l)
    std::vector<std::vector<int>> ext2;
    bool bijection_ok = true;           // dim vectors <-> positive roots
    std::vector<DimVector> missing_roots;
    std::vector<DimVector> extra_dims;

    int find(const DimVector& d) const;
};

// Scan every dimension vector in the cap box, classify all bound matrix
// tuples, and return the table of indecomposables.  Completeness per
// dimension vector is certified by the mass formula: the number of bound
// tuples must equal the sum of orbit sizes |G|/|Aut| over all multisets of
// indecomposables.  The root bijection is checked against `roots` and its
// failure throws for p != 2 (reported in the table for p = 2).
IndecompTable enumerate_indecomposables(const BoundQuiver& bq, int p, const RootSet& roots,
                                        const EnumCaps& caps = {});

// Multiset of table indices M decomposes into, solved from hom counts
// against the directed table (lower-triangular system).
std::vector<int> decompose(const BoundQuiver& bq, const IndecompTable& table,
                           const Representation& M);

// |Aut| of a direct sum given as a multiset of table indices.
BigInt aut_order_of_multiset(const IndecompTable& table, const std::vector<int>& multiset);

// Order of GL_{beta_1} x ... x GL_{beta_n} over F_p.
BigInt base_change_group_order(const DimVector& beta, int p);

// Indecomposable projective P_v: paths with source v modulo the relation
// ideal, arrows acting by path extension.
std::vector<Representation> projectives(const BoundQuiver& bq, int p);

// Minimal projective resolution ... -> P^1 -> P^0 -> M -> 0 by iterated
// projective covers; exactness is asserted stage by stage.
struct ProjStage {
    std::vector<int> gen_vertices;  // projective cover: one vertex per generator
    Representation module;          // the projective module itself
    // basis bookkeeping: per vertex, each basis vector is (generator index,
    // path from the generator's vertex) with the path reduced mod the ideal
    std::vector<std::vector<std::pair<int, Path>>> basis_paths;
    std::vector<std::pair<int, int>> gen_coords; // (vertex, index) of each generator
    std::vector<MatrixFp> diff; // per-vertex matrix into the previous stage / M
};
struct ProjResolution {
    Representation target;
    std::vector<ProjStage> stages;
    int length = 0; // projective dimension of the target
};
ProjResolution minimal_resolution(const BoundQuiver& bq, const Representation& M,
                                  int max_length = 8);

// dim Ext^k(V, W) for k in {0,1,2,3} via Hom(-, W) applied to the minimal
// resolution of V; k = 0 agrees with dim_hom.
int ext_dim(const BoundQuiver& bq, const Representation& V, const Representation& W, int k);
std::vector<int> ext_dims_against(const BoundQuiver& bq, const ProjResolution& res,
                                  const Representation& W, int max_k = 3);

// Global dimension = max projective dimension over the simples.
int gldim(const BoundQuiver& bq, int p);

struct EulerReport {
    bool ok = false;
    int hom = 0, ext1 = 0, ext2 = 0;
    long long lhs = 0; // hom - ext1 + ext2
    long long rhs = 0; // bilinear form on dimension vectors
};
EulerReport euler_check(const BoundQuiver& bq, const UnitForm& T, const Representation& V,
                        const Representation& W);

struct RConsistencyReport {
    bool ok = true;
    // (source, target, relation count, dim Ext^2(S_source, S_target))
    std::vector<std::array<int, 4>> mismatches;
};
RConsistencyReport r_consistency(const BoundQuiver& bq, int p);

} // namespace hallq
