#include "hallq/unit_form.hpp"

#include <algorithm>

namespace hallq {

DimVector unit_vector(int n, int i)
{
    DimVector v(n, 0);
    v[i] = 1;
    return v;
}

UnitForm unit_form_of(const BoundQuiver& bq)
{
    int n = bq.quiver.num_vertices();
    UnitForm T(n);
    std::vector<int> r = relation_counts(bq);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            T.aij(i, j) = -(bq.quiver.arrow_between(i, j) >= 0 ? 1 : 0) + r[size_t(i) * n + j];
        }
    return T;
}

static void check_size(const UnitForm& T, const DimVector& beta)
{
    if ((int)beta.size() != T.n)
        throw hq_error(errc::index_mismatch, "dimension vector size vs form size");
}

long long evaluate(const UnitForm& T, const DimVector& beta)
{
    return bilinear(T, beta, beta);
}

long long bilinear(const UnitForm& T, const DimVector& beta, const DimVector& betap)
{
    check_size(T, beta);
    check_size(T, betap);
    long long s = 0;
    for (int i = 0; i < T.n; ++i) s += (long long)beta[i] * betap[i];
    for (int i = 0; i < T.n; ++i)
        for (int j = 0; j < T.n; ++j)
            if (i != j) s += (long long)T.aij(i, j) * beta[i] * betap[j];
    return s;
}

long long bilinear0(const UnitForm& T, const DimVector& beta, const DimVector& betap)
{
    check_size(T, beta);
    check_size(T, betap);
    long long s = 0;
    for (int i = 0; i < T.n; ++i) s += (long long)beta[i] * betap[i];
    for (int i = 0; i < T.n; ++i)
        for (int j = 0; j < T.n; ++j)
            if (i != j) s += (long long)std::min(T.aij(i, j), 0) * beta[i] * betap[j];
    return s;
}

long long nu(const UnitForm& T, const DimVector& beta, const DimVector& betap)
{
    check_size(T, beta);
    check_size(T, betap);
    long long negpart = 0;
    for (int i = 0; i < T.n; ++i)
        for (int j = 0; j < T.n; ++j)
            if (i != j) negpart += (long long)std::min(T.aij(i, j), 0) * beta[i] * betap[j];
    return negpart == 0 ? bilinear0(T, beta, betap) : 0;
}

long long ad_exponent(const UnitForm& T, const DimVector& beta, const DimVector& betap)
{
    return bilinear(T, beta, betap) - bilinear(T, betap, beta) + 2 * nu(T, betap, beta) -
           2 * nu(T, beta, betap);
}

bool RootSet::contains(const DimVector& beta) const
{
    return std::binary_search(roots.begin(), roots.end(), beta);
}

bool RootSet::dominated_by_some(const DimVector& beta) const
{
    for (const DimVector& r : roots)
        if (dominated(beta, r)) return true;
    return false;
}

// Visit every vector in [0,cap]^n.
template <typename F>
static void scan_box(int n, int cap, F&& visit)
{
    DimVector beta(n, 0);
    while (true) {
        visit(beta);
        int i = 0;
        while (i < n && beta[i] == cap) beta[i++] = 0;
        if (i == n) return;
        ++beta[i];
    }
}

RootSet positive_roots(const UnitForm& T, int cap)
{
    RootSet rs;
    rs.cap = cap;
    scan_box(T.n, cap, [&](const DimVector& beta) {
        if (total_dim(beta) == 0) return;
        if (evaluate(T, beta) != 1) return;
        for (int x : beta)
            if (x == cap)
                throw hq_error(errc::cap_too_small,
                               "a root touches the search cap " + std::to_string(cap));
        rs.roots.push_back(beta);
    });
    std::sort(rs.roots.begin(), rs.roots.end());
    return rs;
}

bool is_weakly_positive(const UnitForm& T, int cap)
{
    bool ok = true;
    scan_box(T.n, cap, [&](const DimVector& beta) {
        if (total_dim(beta) != 0 && evaluate(T, beta) <= 0) ok = false;
    });
    return ok;
}

} // namespace hallq
