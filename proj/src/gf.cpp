#include "hallq/gf.hpp"

#include <algorithm>

namespace hallq {

const char* errc_name(errc c)
{
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::loop_found: return "LoopFound";
        case errc::multiple_arrow: return "MultipleArrow";
        case errc::oriented_cycle: return "OrientedCycle";
        case errc::bad_relation: return "BadRelation";
        case errc::unknown_vertex: return "UnknownVertex";
        case errc::index_mismatch: return "IndexMismatch";
        case errc::cap_too_small: return "CapTooSmall";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::not_square: return "NotSquare";
        case errc::non_homogeneous: return "NonHomogeneous";
        case errc::zero_specialization: return "ZeroSpecialization";
        case errc::incomplete_roots: return "IncompleteRoots";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::resolution_too_long: return "ResolutionTooLong";
        case errc::global_dimension_too_large: return "GlobalDimensionTooLarge";
        case errc::directedness_failure: return "DirectednessFailure";
        case errc::root_bijection_failure: return "RootBijectionFailure";
        case errc::inconsistent_decomposition: return "InconsistentDecomposition";
        case errc::degree_out_of_bounds: return "DegreeOutOfBounds";
        case errc::relation_nonzero: return "RelationNonzero";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::golden_mismatch: return "GoldenMismatch";
    }
    return "Unknown";
}

uint32_t fp_inv(uint32_t a, uint32_t p)
{
    // Fermat; p is prime and a != 0.
    uint32_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = fp_mul(r, b, p);
        b = fp_mul(b, b, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(uint32_t n)
{
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

MatrixFp MatrixFp::identity(int n, uint32_t p)
{
    MatrixFp m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixFp MatrixFp::transpose() const
{
    MatrixFp t(cols, rows, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatrixFp mat_mul(const MatrixFp& x, const MatrixFp& y)
{
    if (x.cols != y.rows || x.p != y.p)
        throw hq_error(errc::shape_mismatch, "mat_mul dimensions");
    MatrixFp r(x.rows, y.cols, x.p);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            uint32_t xv = x.at(i, k);
            if (!xv) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = (r.at(i, j) + xv * y.at(k, j)) % x.p;
        }
    return r;
}

MatrixFp mat_add(const MatrixFp& x, const MatrixFp& y)
{
    if (x.rows != y.rows || x.cols != y.cols || x.p != y.p)
        throw hq_error(errc::shape_mismatch, "mat_add dimensions");
    MatrixFp r(x.rows, x.cols, x.p);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = (x.a[i] + y.a[i]) % x.p;
    return r;
}

MatrixFp mat_sub(const MatrixFp& x, const MatrixFp& y)
{
    if (x.rows != y.rows || x.cols != y.cols || x.p != y.p)
        throw hq_error(errc::shape_mismatch, "mat_sub dimensions");
    MatrixFp r(x.rows, x.cols, x.p);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = (x.a[i] + x.p - y.a[i]) % x.p;
    return r;
}

MatrixFp mat_scale(const MatrixFp& x, uint32_t c)
{
    MatrixFp r = x;
    c %= x.p;
    for (auto& v : r.a) v = (v * c) % x.p;
    return r;
}

std::vector<uint32_t> mat_apply(const MatrixFp& m, const std::vector<uint32_t>& v)
{
    if ((int)v.size() != m.cols) throw hq_error(errc::shape_mismatch, "mat_apply");
    std::vector<uint32_t> r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        uint32_t s = 0;
        for (int j = 0; j < m.cols; ++j) s = (s + m.at(i, j) * v[j]) % m.p;
        r[i] = s;
    }
    return r;
}

RrefResult rref(const MatrixFp& m)
{
    RrefResult res{m, 0, {}};
    MatrixFp& a = res.mat;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int piv = -1;
        for (int i = r; i < a.rows; ++i)
            if (a.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        uint32_t inv = fp_inv(a.at(r, c), a.p);
        for (int j = c; j < a.cols; ++j) a.at(r, j) = (a.at(r, j) * inv) % a.p;
        for (int i = 0; i < a.rows; ++i) {
            if (i == r) continue;
            uint32_t f = a.at(i, c);
            if (!f) continue;
            for (int j = c; j < a.cols; ++j)
                a.at(i, j) = (a.at(i, j) + (a.p - f) * a.at(r, j)) % a.p;
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

int rank_of(const MatrixFp& m) { return rref(m).rank; }

MatrixFp solve_kernel(const MatrixFp& m)
{
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    MatrixFp basis(m.cols - rr.rank, m.cols, m.p);
    int row = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        // free variable c = 1, pivot variables read off from rref rows
        basis.at(row, c) = 1;
        for (int i = 0; i < rr.rank; ++i)
            basis.at(row, rr.pivots[i]) = fp_neg(rr.mat.at(i, c), m.p);
        ++row;
    }
    return basis;
}

bool is_invertible(const MatrixFp& m)
{
    if (m.rows != m.cols) throw hq_error(errc::not_square, "is_invertible");
    return rank_of(m) == m.rows;
}

uint64_t gaussian_binomial(int n, int k, uint64_t p)
{
    if (k < 0 || k > n) return 0;
    // prod_{i=0}^{k-1} (p^{n-i}-1)/(p^{i+1}-1)
    uint64_t num = 1, den = 1;
    auto pw = [&](int e) { uint64_t r = 1; while (e--) r *= p; return r; };
    for (int i = 0; i < k; ++i) {
        num *= pw(n - i) - 1;
        den *= pw(i + 1) - 1;
    }
    return num / den;
}

uint64_t gl_order(int m, uint64_t p)
{
    uint64_t r = 1, pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    uint64_t pi = 1;
    for (int i = 0; i < m; ++i) {
        r *= pm - pi;
        pi *= p;
    }
    return r;
}

std::vector<MatrixFp> enumerate_subspaces(int n, int k, uint32_t p, uint64_t cap)
{
    if (k < 0 || k > n) throw hq_error(errc::index_mismatch, "enumerate_subspaces k out of range");
    if (gaussian_binomial(n, k, p) > cap)
        throw hq_error(errc::cap_exceeded, "subspace enumeration too large");
    std::vector<MatrixFp> out;
    std::vector<int> piv(k);
    // choose pivot columns piv[0] < ... < piv[k-1], then fill free entries
    auto fill = [&](auto&& self, int row, int col) -> void {
        if (row == k) {
            std::vector<bool> is_piv(n, false);
            for (int c : piv) is_piv[c] = true;
            std::vector<int> free_pos; // (row, col) pairs flattened
            for (int i = 0; i < k; ++i)
                for (int c = piv[i] + 1; c < n; ++c)
                    if (!is_piv[c]) free_pos.push_back(i * n + c);
            uint64_t total = 1;
            for (size_t i = 0; i < free_pos.size(); ++i) total *= p;
            for (uint64_t code = 0; code < total; ++code) {
                MatrixFp b(k, n, p);
                for (int i = 0; i < k; ++i) b.at(i, piv[i]) = 1;
                uint64_t c2 = code;
                for (int pos : free_pos) {
                    b.a[pos] = uint32_t(c2 % p);
                    c2 /= p;
                }
                out.push_back(std::move(b));
            }
            return;
        }
        for (int c = col; c <= n - (k - row); ++c) {
            piv[row] = c;
            self(self, row + 1, c + 1);
        }
    };
    if (k == 0) {
        out.emplace_back(0, n, p);
        return out;
    }
    fill(fill, 0, 0);
    return out;
}

bool coords_in_span(const MatrixFp& basis, const std::vector<uint32_t>& v,
                    std::vector<uint32_t>& coords)
{
    // basis rows are in RREF: coordinate at pivot columns, then check residual
    coords.assign(basis.rows, 0);
    std::vector<uint32_t> w = v;
    for (int i = 0; i < basis.rows; ++i) {
        int pc = -1;
        for (int j = 0; j < basis.cols; ++j)
            if (basis.at(i, j)) { pc = j; break; }
        if (pc < 0) continue;
        uint32_t f = (w[pc] * fp_inv(basis.at(i, pc), basis.p)) % basis.p;
        coords[i] = f;
        if (f)
            for (int j = 0; j < basis.cols; ++j)
                w[j] = (w[j] + (basis.p - f) * basis.at(i, j)) % basis.p;
    }
    for (uint32_t x : w)
        if (x) return false;
    return true;
}

bool in_row_span(const MatrixFp& basis, const std::vector<uint32_t>& v)
{
    std::vector<uint32_t> c;
    return coords_in_span(basis, v, c);
}

} // namespace hallq
