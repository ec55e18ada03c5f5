#pragma once
#include <cstdint>
#include <vector>

#include "hallq/error.hpp"

namespace hallq {

// Arithmetic in F_p for small primes. Values are canonical representatives
// in [0, p).
inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) { return (a + b) % p; }
inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) { return (a + p - b % p) % p; }
inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) { return (a * b) % p; }
inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
uint32_t fp_inv(uint32_t a, uint32_t p);
bool is_prime(uint32_t n);

// Dense matrix over F_p, row major.
struct MatrixFp {
    int rows = 0, cols = 0;
    uint32_t p = 2;
    std::vector<uint32_t> a; // rows*cols entries

    MatrixFp() = default;
    MatrixFp(int r, int c, uint32_t mod) : rows(r), cols(c), p(mod), a(size_t(r) * c, 0) {}

    uint32_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
    uint32_t at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static MatrixFp identity(int n, uint32_t p);
    MatrixFp transpose() const;

    bool operator==(const MatrixFp& o) const = default;
};

MatrixFp mat_mul(const MatrixFp& x, const MatrixFp& y);
MatrixFp mat_add(const MatrixFp& x, const MatrixFp& y);
MatrixFp mat_sub(const MatrixFp& x, const MatrixFp& y);
MatrixFp mat_scale(const MatrixFp& x, uint32_t c);
std::vector<uint32_t> mat_apply(const MatrixFp& m, const std::vector<uint32_t>& v);

struct RrefResult {
    MatrixFp mat;
    int rank = 0;
    std::vector<int> pivots; // pivot column per pivot row
};

// Reduced row echelon form by Gauss-Jordan.
RrefResult rref(const MatrixFp& m);
int rank_of(const MatrixFp& m);

// Basis of {x : m x = 0}, one vector per row of the result; cols - rank rows.
MatrixFp solve_kernel(const MatrixFp& m);

bool is_invertible(const MatrixFp& m);

// All k-dimensional subspaces of F_p^n, each given by its canonical RREF
// row basis (a k x n matrix). The number of free entries is k(n-k); the
// enumeration refuses to run past `cap` subspaces.
std::vector<MatrixFp> enumerate_subspaces(int n, int k, uint32_t p, uint64_t cap = 10000000);

// [n k]_p by the product formula; used as the count oracle for subspace
// enumeration and for |GL_m|.
uint64_t gaussian_binomial(int n, int k, uint64_t p);
uint64_t gl_order(int m, uint64_t p);

// Membership of a row vector in the row span of an RREF basis.
bool in_row_span(const MatrixFp& rref_basis, const std::vector<uint32_t>& v);

// Coordinates of v in the row basis of an RREF matrix; false if v is outside
// the span.
bool coords_in_span(const MatrixFp& rref_basis, const std::vector<uint32_t>& v,
                    std::vector<uint32_t>& coords);

} // namespace hallq
