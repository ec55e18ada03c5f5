#pragma once
#include <vector>

#include "hallq/quiver.hpp"

namespace hallq {

using DimVector = std::vector<int>;

inline int total_dim(const DimVector& d)
{
    int s = 0;
    for (int x : d) s += x;
    return s;
}

// componentwise a <= b
inline bool dominated(const DimVector& a, const DimVector& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

DimVector unit_vector(int n, int i);

// Integral quadratic form with unit diagonal: T(b) = sum b_i^2 + sum_{i != j}
// a_ij b_i b_j. Only the off-diagonal coefficients are stored.
struct UnitForm {
    int n = 0;
    std::vector<int> a; // n*n row-major; diagonal entries unused (kept 0)

    UnitForm() = default;
    explicit UnitForm(int size) : n(size), a(size_t(size) * size, 0) {}
    int& aij(int i, int j) { return a[size_t(i) * n + j]; }
    int aij(int i, int j) const { return a[size_t(i) * n + j]; }
};

// a_ij = -(arrow i->j present) + r(i,j) for i != j
UnitForm unit_form_of(const BoundQuiver& bq);

long long evaluate(const UnitForm& T, const DimVector& beta);

// <b,b'>_T = sum b_i b'_i + sum_{i != j} a_ij b_i b'_j
long long bilinear(const UnitForm& T, const DimVector& beta, const DimVector& betap);
// same with (a_ij)_- = min{a_ij, 0} in place of a_ij
long long bilinear0(const UnitForm& T, const DimVector& beta, const DimVector& betap);

// nu(b,b') = [sum (a_ij)_- b_i b'_j == 0] * <b,b'>_T^0
long long nu(const UnitForm& T, const DimVector& beta, const DimVector& betap);

// exponent of the twisted adjoint action on homogeneous elements of degrees
// (b, b'): <b,b'> - <b',b> + 2 nu(b',b) - 2 nu(b,b')
long long ad_exponent(const UnitForm& T, const DimVector& beta, const DimVector& betap);

struct RootSet {
    std::vector<DimVector> roots; // sorted lexicographically
    int cap = 0;

    bool contains(const DimVector& beta) const;
    // componentwise beta <= some root (the envelope pruning test)
    bool dominated_by_some(const DimVector& beta) const;
};

// All nonzero beta in [0,cap]^n with T(beta) = 1. Throws CapTooSmall when a
// root touches the cap, since the box search cannot then certify
// completeness.
RootSet positive_roots(const UnitForm& T, int cap = 6);

// No nonzero beta in the box has T(beta) <= 0 (box-bounded semi-decision).
bool is_weakly_positive(const UnitForm& T, int cap = 6);

} // namespace hallq
