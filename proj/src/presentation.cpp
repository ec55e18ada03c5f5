#include "hallq/presentation.hpp"

#include <algorithm>
#include <map>

namespace hallq {

namespace {

// ---- integer Laurent rows for fraction-free generic elimination ----------

using ZPoly = std::vector<BigInt>; // dense, ZPoly[k] = coefficient of v^k

BigInt content_of(const ZPoly& p)
{
    BigInt g = 0;
    for (const BigInt& x : p) g = boost::multiprecision::gcd(g, x);
    return g;
}

int degree_of(const ZPoly& p)
{
    for (int d = (int)p.size() - 1; d >= 0; --d)
        if (p[d] != 0) return d;
    return -1;
}

void trim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly primitive(ZPoly p)
{
    trim(p);
    if (p.empty()) return p;
    int ord = 0;
    while (p[ord] == 0) ++ord;
    if (ord) p.erase(p.begin(), p.begin() + ord);
    BigInt g = content_of(p);
    if (p[degree_of(p)] < 0) g = -g;
    for (BigInt& x : p) x /= g;
    return p;
}

// pseudo-remainder of a by b (b nonzero), in place on a copy
ZPoly prem(ZPoly a, const ZPoly& b)
{
    int db = degree_of(b);
    const BigInt& lb = b[db];
    while (true) {
        int da = degree_of(a);
        if (da < db) return a;
        BigInt la = a[da];
        for (int i = 0; i <= da; ++i) a[i] *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        trim(a);
        if (a.empty()) return a;
    }
}

// gcd of primitive integer polynomials via the primitive PRS
ZPoly poly_gcd(ZPoly a, ZPoly b)
{
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (degree_of(a) < degree_of(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

struct ZLRow {
    // Laurent entries share one global exponent shift; after normalization
    // the minimum exponent across the row is zero, so entries are plain
    // integer polynomials.
    std::vector<ZPoly> e;

    bool is_zero() const
    {
        for (const ZPoly& p : e)
            if (!p.empty()) return false;
        return true;
    }
};

ZLRow row_from_laurent(const std::vector<LaurentPoly>& row)
{
    int minexp = 0;
    bool any = false;
    BigInt den_lcm = 1;
    for (const LaurentPoly& p : row)
        for (const auto& [exp, coeff] : p.c) {
            if (!any || exp < minexp) minexp = exp;
            any = true;
            den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(coeff));
        }
    ZLRow out;
    out.e.resize(row.size());
    for (size_t i = 0; i < row.size(); ++i)
        for (const auto& [exp, coeff] : row[i].c) {
            int k = exp - minexp;
            if ((int)out.e[i].size() <= k) out.e[i].resize(k + 1);
            out.e[i][k] = boost::multiprecision::numerator(coeff) *
                          (den_lcm / boost::multiprecision::denominator(coeff));
        }
    return out;
}

// shift out the common power of v, divide by the integer content, then by
// the polynomial content (keeps entry sizes under control across
// cross-multiplication steps)
void normalize_row(ZLRow& row)
{
    int ord = -1;
    BigInt g = 0;
    for (ZPoly& p : row.e) {
        trim(p);
        if (p.empty()) continue;
        int o = 0;
        while (p[o] == 0) ++o;
        ord = (ord < 0) ? o : std::min(ord, o);
        for (const BigInt& x : p) g = boost::multiprecision::gcd(g, x);
    }
    if (ord < 0) return; // zero row
    for (ZPoly& p : row.e) {
        if (p.empty()) continue;
        if (ord) p.erase(p.begin(), p.begin() + ord);
        for (BigInt& x : p) x /= g;
    }
    ZPoly pc; // polynomial content
    bool first = true;
    for (const ZPoly& p : row.e) {
        if (p.empty()) continue;
        pc = first ? primitive(p) : poly_gcd(pc, p);
        first = false;
        if (degree_of(pc) == 0) return;
    }
    for (ZPoly& p : row.e) {
        if (p.empty()) continue;
        // exact division by the content
        ZPoly q(degree_of(p) - degree_of(pc) + 1, 0);
        ZPoly rem = p;
        int dc = degree_of(pc);
        for (int d = degree_of(rem); d >= dc; d = degree_of(rem)) {
            BigInt f = rem[d] / pc[dc];
            q[d - dc] = f;
            for (int i = 0; i <= dc; ++i) rem[d - dc + i] -= f * pc[i];
            trim(rem);
            if (rem.empty()) break;
        }
        p = std::move(q);
    }
}

ZPoly mul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

void sub_in_place(ZPoly& a, const ZPoly& b)
{
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
}

// Incremental echelon over Q(v) on integer Laurent rows; row operations are
// cross-multiplications, which preserve the row span up to nonzero scalars
// of the function field and hence the rank.
struct GenericEchelon {
    std::vector<ZLRow> rows;
    std::vector<int> leads;

    int lead_col(const ZLRow& r) const
    {
        for (size_t i = 0; i < r.e.size(); ++i)
            if (!r.e[i].empty()) return (int)i;
        return -1;
    }

    bool add(ZLRow row)
    {
        normalize_row(row);
        for (size_t k = 0; k < rows.size(); ++k) {
            int c = leads[k];
            if (c >= (int)row.e.size() || row.e[c].empty()) continue;
            ZPoly rc = row.e[c];
            const ZPoly& pc = rows[k].e[c];
            for (size_t j = 0; j < row.e.size(); ++j) {
                ZPoly t1 = mul(pc, row.e[j]);
                sub_in_place(t1, mul(rc, rows[k].e[j]));
                row.e[j] = std::move(t1);
            }
            normalize_row(row);
        }
        int c = lead_col(row);
        if (c < 0) return false;
        // keep the echelon ordered by lead column for determinism
        size_t pos = 0;
        while (pos < rows.size() && leads[pos] < c) ++pos;
        rows.insert(rows.begin() + pos, std::move(row));
        leads.insert(leads.begin() + pos, c);
        return true;
    }

    int rank() const { return (int)rows.size(); }
};

// echelon over the exact field generated by a fixed nonzero value
struct FieldEchelon {
    std::vector<std::vector<QSqrtScalar>> rows;
    std::vector<int> leads;

    bool add(std::vector<QSqrtScalar> row)
    {
        for (size_t k = 0; k < rows.size(); ++k) {
            int c = leads[k];
            if (row[c].is_zero()) continue;
            QSqrtScalar f = row[c] * rows[k][c].inverse();
            for (size_t j = c; j < row.size(); ++j) row[j] = row[j] - f * rows[k][j];
        }
        int c = -1;
        for (size_t i = 0; i < row.size(); ++i)
            if (!row[i].is_zero()) { c = (int)i; break; }
        if (c < 0) return false;
        size_t pos = 0;
        while (pos < rows.size() && leads[pos] < c) ++pos;
        rows.insert(rows.begin() + pos, std::move(row));
        leads.insert(leads.begin() + pos, c);
        return true;
    }

    int rank() const { return (int)rows.size(); }
};

std::vector<LaurentPoly> coeff_row(const NCElement& x, const std::map<NCWord, int>& col_of)
{
    std::vector<LaurentPoly> row(col_of.size());
    for (const auto& [w, p] : x.terms) row[col_of.at(w)] = p;
    return row;
}

// all rows u * g * w of the ideal slice in degree alpha, for the generator
// subset `which`
std::vector<std::vector<LaurentPoly>> ideal_slice_rows(const Presentation& P,
                                                       const DimVector& alpha,
                                                       const std::map<NCWord, int>& col_of)
{
    std::vector<std::vector<LaurentPoly>> out;
    int n = P.T.n;
    for (int gi : P.reduced) {
        const RelationGen& g = P.gens[gi];
        if (!dominated(g.degree, alpha)) continue;
        DimVector rem(n);
        for (int i = 0; i < n; ++i) rem[i] = alpha[i] - g.degree[i];
        // enumerate contents beta <= rem for the left factor
        DimVector beta(n, 0);
        while (true) {
            DimVector gamma(n);
            for (int i = 0; i < n; ++i) gamma[i] = rem[i] - beta[i];
            for (const NCWord& u : words_of_content(beta))
                for (const NCWord& w : words_of_content(gamma)) {
                    NCElement ue(n), we(n);
                    ue.terms[u] = LaurentPoly::constant(1);
                    we.terms[w] = LaurentPoly::constant(1);
                    out.push_back(coeff_row(ue * g.element * we, col_of));
                }
            int i = 0;
            while (i < n && beta[i] == rem[i]) beta[i++] = 0;
            if (i == n) break;
            ++beta[i];
        }
    }
    return out;
}

std::map<NCWord, int> column_index(const DimVector& alpha)
{
    std::map<NCWord, int> col_of;
    int idx = 0;
    for (const NCWord& w : words_of_content(alpha)) col_of[w] = idx++;
    return col_of;
}

void check_word_cap(const DimVector& alpha, int word_cap)
{
    if (total_dim(alpha) > word_cap)
        throw hq_error(errc::cap_exceeded,
                       "degree height " + std::to_string(total_dim(alpha)) +
                           " exceeds word cap " + std::to_string(word_cap));
}

} // namespace

Presentation generate_relations(const UnitForm& T, const RootSet& roots)
{
    for (const DimVector& r : roots.roots)
        for (int x : r)
            if (x >= roots.cap)
                throw hq_error(errc::incomplete_roots, "root set touches its own cap");
    Presentation P{T, roots, {}, {}};
    int n = T.n;
    std::vector<NCElement> e;
    for (int i = 0; i < n; ++i) e.push_back(NCElement::generator(n, i));

    // extend the tail (seq, elem, sum) leftward; emit whenever the tail sum
    // is a root and prepending i_1 leaves the root set
    auto extend = [&](auto&& self, std::vector<int>& seq, const NCElement& elem,
                      const DimVector& sum) -> void {
        if (P.roots.contains(sum)) {
            for (int i1 = 0; i1 < n; ++i1) {
                DimVector full = sum;
                ++full[i1];
                if (P.roots.contains(full)) continue;
                NCElement cand = ad(T, e[i1], elem);
                if (cand.is_zero()) continue;
                RelationGen gen;
                gen.sequence.push_back(i1);
                gen.sequence.insert(gen.sequence.end(), seq.begin(), seq.end());
                gen.element = std::move(cand);
                gen.degree = full;
                P.gens.push_back(std::move(gen));
            }
        }
        for (int i = 0; i < n; ++i) {
            DimVector next = sum;
            ++next[i];
            if (!P.roots.dominated_by_some(next)) continue;
            NCElement grown = ad(T, e[i], elem);
            if (grown.is_zero()) continue;
            seq.insert(seq.begin(), i);
            self(self, seq, grown, next);
            seq.erase(seq.begin());
        }
    };
    for (int j = 0; j < n; ++j) {
        std::vector<int> seq{j};
        extend(extend, seq, e[j], unit_vector(n, j));
    }

    // per-degree maximal independent subset (same span, fewer rows later)
    std::map<DimVector, GenericEchelon> by_degree;
    for (int gi = 0; gi < (int)P.gens.size(); ++gi) {
        const RelationGen& g = P.gens[gi];
        std::map<NCWord, int> col_of = column_index(g.degree);
        GenericEchelon& ech = by_degree[g.degree];
        if (ech.add(row_from_laurent(coeff_row(g.element, col_of)))) P.reduced.push_back(gi);
    }
    return P;
}

int graded_dimension(const Presentation& P, const DimVector& alpha, int word_cap)
{
    check_word_cap(alpha, word_cap);
    std::map<NCWord, int> col_of = column_index(alpha);
    GenericEchelon ech;
    for (auto& row : ideal_slice_rows(P, alpha, col_of)) ech.add(row_from_laurent(row));
    return (int)col_of.size() - ech.rank();
}

int graded_dimension(const Presentation& P, const DimVector& alpha, const QSqrtScalar& value,
                     int word_cap)
{
    if (value.is_zero()) throw hq_error(errc::zero_specialization, "graded_dimension at 0");
    check_word_cap(alpha, word_cap);
    std::map<NCWord, int> col_of = column_index(alpha);
    FieldEchelon ech;
    for (auto& row : ideal_slice_rows(P, alpha, col_of)) {
        std::vector<QSqrtScalar> srow;
        srow.reserve(row.size());
        for (const LaurentPoly& p : row) srow.push_back(p.eval(value));
        ech.add(std::move(srow));
    }
    return (int)col_of.size() - ech.rank();
}

bool in_ideal_slice(const Presentation& P, const NCElement& x, int word_cap)
{
    DimVector alpha = x.degree();
    check_word_cap(alpha, word_cap);
    std::map<NCWord, int> col_of = column_index(alpha);
    GenericEchelon ech;
    for (auto& row : ideal_slice_rows(P, alpha, col_of)) ech.add(row_from_laurent(row));
    return !ech.add(row_from_laurent(coeff_row(x, col_of)));
}

long long root_multiset_count(const RootSet& roots, const DimVector& alpha)
{
    // multisets allow repeated roots; recurse over the sorted root list
    auto count = [&](auto&& self, const DimVector& rem, size_t idx) -> long long {
        if (total_dim(rem) == 0) return 1;
        if (idx == roots.roots.size()) return 0;
        long long total = self(self, rem, idx + 1);
        const DimVector& r = roots.roots[idx];
        if (dominated(r, rem)) {
            DimVector next(rem.size());
            for (size_t i = 0; i < rem.size(); ++i) next[i] = rem[i] - r[i];
            total += self(self, next, idx);
        }
        return total;
    };
    return count(count, alpha, 0);
}

} // namespace hallq
