#include "hallq/hall.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hallq {

namespace {

BigInt bigint_pow(BigInt base, unsigned long long e)
{
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::vector<int> pivot_columns(const MatrixFp& rref_rows)
{
    std::vector<int> piv;
    for (int r = 0; r < rref_rows.rows; ++r)
        for (int c = 0; c < rref_rows.cols; ++c)
            if (rref_rows.at(r, c) != 0) {
                piv.push_back(c);
                break;
            }
    return piv;
}

void reduce_against_rref(const MatrixFp& basis, const std::vector<int>& pivots,
                         std::vector<uint32_t>& v, uint32_t p)
{
    for (size_t r = 0; r < pivots.size(); ++r) {
        uint32_t f = v[pivots[r]];
        if (f == 0) continue;
        for (int c = 0; c < basis.cols; ++c)
            v[c] = fp_sub(v[c], fp_mul(f, basis.at((int)r, c), p), p);
    }
}

} // namespace

HallElement& HallElement::add_term(const IsoClass& cls, const QSqrtScalar& coeff)
{
    if (coeff.is_zero()) return *this;
    auto it = terms.find(cls);
    if (it == terms.end()) {
        terms.emplace(cls, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
    return *this;
}

HallElement HallElement::operator+(const HallElement& o) const
{
    HallElement out = *this;
    if (out.q == 1) out.q = o.q;
    for (const auto& [cls, c] : o.terms) out.add_term(cls, c);
    return out;
}

HallElement HallElement::operator-(const HallElement& o) const
{
    HallElement out = *this;
    if (out.q == 1) out.q = o.q;
    for (const auto& [cls, c] : o.terms) out.add_term(cls, -c);
    return out;
}

HallElement HallElement::scaled(const QSqrtScalar& s) const
{
    HallElement out;
    out.q = q;
    if (s.is_zero()) return out;
    for (const auto& [cls, c] : terms) out.add_term(cls, c * s);
    return out;
}

std::string HallElement::str() const
{
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [cls, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[";
        for (size_t i = 0; i < cls.size(); ++i) {
            if (i) os << ",";
            os << cls[i];
        }
        os << "]";
    }
    return os.str();
}

HallTable::HallTable(const BoundQuiver& bq, const IndecompTable& table, int degree_bound)
    : bq_(bq), table_(table), T_(unit_form_of(bq)), bound_(degree_bound)
{
}

DimVector HallTable::dim_of(const IsoClass& cls) const
{
    DimVector d(bq_.quiver.num_vertices(), 0);
    for (int k : cls)
        for (size_t i = 0; i < d.size(); ++i) d[i] += table_.entries[k].dim[i];
    return d;
}

Representation HallTable::rep_of(const IsoClass& cls) const
{
    Representation rep =
        zero_representation(bq_, table_.p, DimVector(bq_.quiver.num_vertices(), 0));
    for (int k : cls) rep = direct_sum(bq_, rep, table_.entries[k].rep);
    return rep;
}

std::vector<IsoClass> HallTable::classes_of_dim(const DimVector& alpha) const
{
    std::vector<IsoClass> out;
    IsoClass cur;
    DimVector rem = alpha;
    std::function<void(int)> rec = [&](int from) {
        if (total_dim(rem) == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = from; k < (int)table_.entries.size(); ++k) {
            const DimVector& d = table_.entries[k].dim;
            if (!dominated(d, rem)) continue;
            for (size_t i = 0; i < rem.size(); ++i) rem[i] -= d[i];
            cur.push_back(k);
            rec(k);
            cur.pop_back();
            for (size_t i = 0; i < rem.size(); ++i) rem[i] += d[i];
        }
    };
    rec(0);
    return out;
}

std::vector<IsoClass> HallTable::basis() const
{
    std::vector<IsoClass> out;
    IsoClass cur;
    std::function<void(int, int)> rec = [&](int from, int budget) {
        out.push_back(cur);
        for (int k = from; k < (int)table_.entries.size(); ++k) {
            int t = total_dim(table_.entries[k].dim);
            if (t > budget) continue;
            cur.push_back(k);
            rec(k, budget - t);
            cur.pop_back();
        }
    };
    rec(0, bound_);
    std::sort(out.begin(), out.end(), [this](const IsoClass& a, const IsoClass& b) {
        int ta = total_dim(dim_of(a)), tb = total_dim(dim_of(b));
        return ta != tb ? ta < tb : a < b;
    });
    return out;
}

const std::map<std::pair<IsoClass, IsoClass>, long long>&
HallTable::subobject_profile(const IsoClass& R, const DimVector& sub_dim)
{
    auto key = std::make_pair(R, sub_dim);
    auto found = profiles_.find(key);
    if (found != profiles_.end()) return found->second;

    auto& profile = profiles_[key];
    Representation rep = rep_of(R);
    int n = bq_.quiver.num_vertices();
    uint32_t p = (uint32_t)table_.p;

    uint64_t tuples = 1;
    for (int i = 0; i < n; ++i) {
        if (sub_dim[i] > rep.dim[i]) return profile; // no subspaces, empty profile
        tuples *= gaussian_binomial(rep.dim[i], sub_dim[i], p);
        if (tuples > 10'000'000ull)
            throw hq_error(errc::cap_exceeded, "subspace sweep too large");
    }

    std::vector<std::vector<MatrixFp>> subs(n);
    for (int i = 0; i < n; ++i) subs[i] = enumerate_subspaces(rep.dim[i], sub_dim[i], p);

    std::vector<size_t> idx(n, 0);
    while (true) {
        // arrow invariance of the chosen subspace tuple
        bool invariant = true;
        for (size_t a = 0; a < bq_.quiver.arrows.size() && invariant; ++a) {
            const Arrow& ar = bq_.quiver.arrows[a];
            const MatrixFp& U = subs[ar.source][idx[ar.source]];
            const MatrixFp& V = subs[ar.target][idx[ar.target]];
            for (int r = 0; r < U.rows && invariant; ++r) {
                std::vector<uint32_t> u(U.cols);
                for (int c = 0; c < U.cols; ++c) u[c] = U.at(r, c);
                if (!in_row_span(V, mat_apply(rep.mats[a], u))) invariant = false;
            }
        }
        if (invariant) {
            // subrepresentation in the coordinates of the chosen bases
            Representation X = zero_representation(bq_, table_.p, sub_dim);
            // quotient on the complement (non-pivot) coordinates
            DimVector qdim(n);
            std::vector<std::vector<int>> nonpiv(n);
            for (int i = 0; i < n; ++i) {
                std::vector<int> piv = pivot_columns(subs[i][idx[i]]);
                std::vector<char> is_piv(rep.dim[i], 0);
                for (int c : piv) is_piv[c] = 1;
                for (int c = 0; c < rep.dim[i]; ++c)
                    if (!is_piv[c]) nonpiv[i].push_back(c);
                qdim[i] = (int)nonpiv[i].size();
            }
            Representation Q = zero_representation(bq_, table_.p, qdim);
            bool consistent = true;
            for (size_t a = 0; a < bq_.quiver.arrows.size() && consistent; ++a) {
                const Arrow& ar = bq_.quiver.arrows[a];
                const MatrixFp& U = subs[ar.source][idx[ar.source]];
                const MatrixFp& V = subs[ar.target][idx[ar.target]];
                std::vector<int> vpiv = pivot_columns(V);
                for (int c = 0; c < U.rows; ++c) {
                    std::vector<uint32_t> u(U.cols);
                    for (int j = 0; j < U.cols; ++j) u[j] = U.at(c, j);
                    std::vector<uint32_t> w = mat_apply(rep.mats[a], u);
                    std::vector<uint32_t> coords;
                    if (!coords_in_span(V, w, coords)) {
                        consistent = false;
                        break;
                    }
                    for (int r = 0; r < X.dim[ar.target]; ++r) X.mats[a].at(r, c) = coords[r];
                }
                for (size_t c = 0; c < nonpiv[ar.source].size(); ++c) {
                    std::vector<uint32_t> e(rep.dim[ar.source], 0);
                    e[nonpiv[ar.source][c]] = 1;
                    std::vector<uint32_t> w = mat_apply(rep.mats[a], e);
                    reduce_against_rref(V, vpiv, w, p);
                    for (size_t r = 0; r < nonpiv[ar.target].size(); ++r)
                        Q.mats[a].at((int)r, (int)c) = w[nonpiv[ar.target][r]];
                }
            }
            if (!consistent)
                throw hq_error(errc::inconsistent_decomposition,
                               "invariant subspace rejected by the coordinate solve");
            ++profile[{decompose(bq_, table_, Q), decompose(bq_, table_, X)}];
        }
        int i = 0;
        while (i < n && idx[i] + 1 == subs[i].size()) idx[i++] = 0;
        if (i == n) break;
        ++idx[i];
    }
    return profile;
}

long long HallTable::hall_number(const IsoClass& M, const IsoClass& N, const IsoClass& R)
{
    DimVector dm = dim_of(M), dn = dim_of(N), dr = dim_of(R);
    for (size_t i = 0; i < dr.size(); ++i)
        if (dm[i] + dn[i] != dr[i]) return 0;
    const auto& profile = subobject_profile(R, dn);
    auto it = profile.find({M, N});
    return it == profile.end() ? 0 : it->second;
}

long long HallTable::hall_number_via_ext(const IsoClass& M, const IsoClass& N,
                                         const IsoClass& R)
{
    DimVector dm = dim_of(M), dn = dim_of(N), dr = dim_of(R);
    for (size_t i = 0; i < dr.size(); ++i)
        if (dm[i] + dn[i] != dr[i]) return 0;

    const Quiver& q = bq_.quiver;
    int n = q.num_vertices();
    uint32_t p = (uint32_t)table_.p;
    Representation Mrep = rep_of(M), Nrep = rep_of(N);

    // unknowns: one block c_a in Hom_k(M_{s(a)}, N_{t(a)}) per arrow
    std::vector<int> aoff(q.arrows.size() + 1, 0);
    for (size_t a = 0; a < q.arrows.size(); ++a)
        aoff[a + 1] =
            aoff[a] + Nrep.dim[q.arrows[a].target] * Mrep.dim[q.arrows[a].source];
    int D = aoff[q.arrows.size()];

    // cocycle condition: the off-diagonal block of every relation vanishes on
    // the middle term [[N_rho, c_rho],[0, M_rho]]
    int eqs = 0;
    for (const Relation& rel : bq_.relations) eqs += Nrep.dim[rel.target] * Mrep.dim[rel.source];
    MatrixFp sys(eqs, D, p);
    int row0 = 0;
    for (const Relation& rel : bq_.relations) {
        int rrows = Nrep.dim[rel.target], rcols = Mrep.dim[rel.source];
        for (const auto& [coef, path] : rel.terms) {
            long long cm = coef % (long long)p;
            if (cm < 0) cm += p;
            if (cm == 0) continue;
            for (size_t j = 0; j < path.arrows.size(); ++j) {
                int a = path.arrows[j];
                Path prefix{path.source, q.arrows[a].source,
                            {path.arrows.begin(), path.arrows.begin() + j}};
                Path suffix{q.arrows[a].target, path.target,
                            {path.arrows.begin() + j + 1, path.arrows.end()}};
                MatrixFp Mpre = path_matrix(Mrep, prefix);
                MatrixFp Nsuf = path_matrix(Nrep, suffix);
                // contribution coef * Nsuf[r,x] * Mpre[y,c] to unknown c_a[x,y]
                for (int r = 0; r < rrows; ++r)
                    for (int c = 0; c < rcols; ++c)
                        for (int x = 0; x < Nsuf.cols; ++x) {
                            if (Nsuf.at(r, x) == 0) continue;
                            uint32_t nx = fp_mul((uint32_t)cm, Nsuf.at(r, x), p);
                            for (int y = 0; y < Mpre.rows; ++y) {
                                int col = aoff[a] + x * Mrep.dim[q.arrows[a].source] + y;
                                int er = row0 + r * rcols + c;
                                sys.at(er, col) =
                                    fp_add(sys.at(er, col), fp_mul(nx, Mpre.at(y, c), p), p);
                            }
                        }
            }
        }
        row0 += rrows * rcols;
    }
    MatrixFp Z = solve_kernel(sys); // rows form a basis of the cocycle space

    // coboundaries: images of (f_i) -> (N_a f_{s(a)} - f_{t(a)} M_a)
    std::vector<int> foff(n + 1, 0);
    for (int i = 0; i < n; ++i) foff[i + 1] = foff[i] + Nrep.dim[i] * Mrep.dim[i];
    MatrixFp cob(foff[n], D, p); // row per f-basis vector, in c-space coordinates
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < Nrep.dim[i]; ++x)
            for (int y = 0; y < Mrep.dim[i]; ++y) {
                int frow = foff[i] + x * Mrep.dim[i] + y;
                for (size_t a = 0; a < q.arrows.size(); ++a) {
                    const Arrow& ar = q.arrows[a];
                    if (ar.source == i) // (N_a f)[r,y] picks up N_a[r,x]
                        for (int r = 0; r < Nrep.dim[ar.target]; ++r)
                            cob.at(frow, aoff[a] + r * Mrep.dim[i] + y) = fp_add(
                                cob.at(frow, aoff[a] + r * Mrep.dim[i] + y),
                                Nrep.mats[a].at(r, x), p);
                    if (ar.target == i) // -(f M_a)[x,c] picks up M_a[y,c]
                        for (int c = 0; c < Mrep.dim[ar.source]; ++c)
                            cob.at(frow, aoff[a] + x * Mrep.dim[ar.source] + c) = fp_sub(
                                cob.at(frow, aoff[a] + x * Mrep.dim[ar.source] + c),
                                Mrep.mats[a].at(y, c), p);
                }
            }
    RrefResult brr = rref(cob);
    int bdim = brr.rank;
    int ext_dim1 = Z.rows - bdim;
    if (ext_dim1 < 0)
        throw hq_error(errc::inconsistent_decomposition,
                       "coboundary space exceeds the cocycle space");

    // complement of the coboundaries inside the cocycles: one representative
    // per extension class
    std::vector<std::vector<uint32_t>> reps;
    {
        MatrixFp acc(bdim + ext_dim1, D, p);
        for (int r = 0; r < bdim; ++r)
            for (int c = 0; c < D; ++c) acc.at(r, c) = brr.mat.at(r, c);
        int have = bdim;
        for (int zr = 0; zr < Z.rows && have < acc.rows; ++zr) {
            MatrixFp trial(have + 1, D, p);
            for (int r = 0; r < have; ++r)
                for (int c = 0; c < D; ++c) trial.at(r, c) = acc.at(r, c);
            for (int c = 0; c < D; ++c) trial.at(have, c) = Z.at(zr, c);
            if (rank_of(trial) == have + 1) {
                std::vector<uint32_t> v(D);
                for (int c = 0; c < D; ++c) v[c] = Z.at(zr, c);
                reps.push_back(std::move(v));
                for (int c = 0; c < D; ++c) acc.at(have, c) = Z.at(zr, c);
                ++have;
            }
        }
        if ((int)reps.size() != ext_dim1)
            throw hq_error(errc::inconsistent_decomposition,
                           "complement construction lost extension classes");
    }

    if (ext_dim1 > 20)
        throw hq_error(errc::cap_exceeded, "extension class enumeration too large");

    // sweep all p^{ext_dim} classes, count those with middle term isomorphic
    // to R
    BigInt matching = 0;
    std::vector<uint32_t> digits(ext_dim1, 0);
    while (true) {
        std::vector<uint32_t> cvec(D, 0);
        for (int b = 0; b < ext_dim1; ++b)
            if (digits[b])
                for (int c = 0; c < D; ++c)
                    cvec[c] = fp_add(cvec[c], fp_mul(digits[b], reps[b][c], p), p);
        DimVector edim(n);
        for (int i = 0; i < n; ++i) edim[i] = Nrep.dim[i] + Mrep.dim[i];
        Representation E = zero_representation(bq_, table_.p, edim);
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            const Arrow& ar = q.arrows[a];
            MatrixFp& m = E.mats[a];
            for (int r = 0; r < Nrep.dim[ar.target]; ++r)
                for (int c = 0; c < Nrep.dim[ar.source]; ++c)
                    m.at(r, c) = Nrep.mats[a].at(r, c);
            for (int r = 0; r < Mrep.dim[ar.target]; ++r)
                for (int c = 0; c < Mrep.dim[ar.source]; ++c)
                    m.at(Nrep.dim[ar.target] + r, Nrep.dim[ar.source] + c) =
                        Mrep.mats[a].at(r, c);
            for (int x = 0; x < Nrep.dim[ar.target]; ++x)
                for (int y = 0; y < Mrep.dim[ar.source]; ++y)
                    m.at(x, Nrep.dim[ar.source] + y) =
                        cvec[aoff[a] + x * Mrep.dim[ar.source] + y];
        }
        if (!is_bound(bq_, E))
            throw hq_error(errc::inconsistent_decomposition,
                           "cocycle produced an unbound middle term");
        if (decompose(bq_, table_, E) == R) ++matching;
        int b = 0;
        while (b < ext_dim1 && digits[b] == p - 1) digits[b++] = 0;
        if (b == ext_dim1) break;
        ++digits[b];
    }

    // F = |Ext(M,N)_R| * |Aut R| / (|Hom(M,N)| * |Aut M| * |Aut N|)
    long long hom_dim = 0;
    for (int k : M)
        for (int l : N) hom_dim += table_.hom[k][l];
    BigInt num = matching * aut_order_of_multiset(table_, R);
    BigInt den = bigint_pow(p, (unsigned long long)hom_dim) *
                 aut_order_of_multiset(table_, M) * aut_order_of_multiset(table_, N);
    if (num % den != 0)
        throw hq_error(errc::inconsistent_decomposition,
                       "extension-count formula produced a non-integer");
    return (num / den).convert_to<long long>();
}

HallElement HallTable::unit() const
{
    HallElement e;
    e.q = (uint32_t)table_.p;
    e.add_term({}, QSqrtScalar::rational(1, e.q));
    return e;
}

HallElement HallTable::class_element(const IsoClass& cls) const
{
    HallElement e;
    e.q = (uint32_t)table_.p;
    e.add_term(cls, QSqrtScalar::rational(1, e.q));
    return e;
}

HallElement HallTable::simple(int vertex) const
{
    int idx = table_.find(unit_vector(bq_.quiver.num_vertices(), vertex));
    if (idx < 0)
        throw hq_error(errc::index_mismatch, "simple representation missing from the table");
    return class_element({idx});
}

HallElement HallTable::product_impl(const HallElement& x, const HallElement& y, bool twisted)
{
    HallElement out;
    out.q = (uint32_t)table_.p;
    for (const auto& [M, cm] : x.terms)
        for (const auto& [N, cn] : y.terms) {
            DimVector dm = dim_of(M), dn = dim_of(N);
            if (total_dim(dm) + total_dim(dn) > bound_)
                throw hq_error(errc::degree_out_of_bounds,
                               "product degree exceeds the table bound");
            QSqrtScalar coeff = cm * cn;
            if (twisted)
                coeff = coeff * sqrt_q_power(out.q, bilinear(T_, dm, dn));
            DimVector dr(dm.size());
            for (size_t i = 0; i < dm.size(); ++i) dr[i] = dm[i] + dn[i];
            for (const IsoClass& R : classes_of_dim(dr)) {
                long long F = hall_number(M, N, R);
                if (F != 0)
                    out.add_term(R, coeff * QSqrtScalar::rational(F, out.q));
            }
        }
    return out;
}

HallElement HallTable::product(const HallElement& x, const HallElement& y)
{
    return product_impl(x, y, true);
}

HallElement HallTable::product_untwisted(const HallElement& x, const HallElement& y)
{
    return product_impl(x, y, false);
}

AssocReport verify_associativity(HallTable& H, int degree_sum_bound, bool twisted)
{
    AssocReport report;
    std::vector<IsoClass> classes;
    for (const IsoClass& c : H.basis())
        if (total_dim(H.dim_of(c)) <= degree_sum_bound) classes.push_back(c);
    for (const IsoClass& x : classes) {
        int tx = total_dim(H.dim_of(x));
        for (const IsoClass& y : classes) {
            int ty = total_dim(H.dim_of(y));
            if (tx + ty > degree_sum_bound) continue;
            HallElement xy = twisted ? H.product(H.class_element(x), H.class_element(y))
                                     : H.product_untwisted(H.class_element(x),
                                                           H.class_element(y));
            for (const IsoClass& z : classes) {
                if (tx + ty + total_dim(H.dim_of(z)) > degree_sum_bound) continue;
                HallElement lhs = twisted ? H.product(xy, H.class_element(z))
                                          : H.product_untwisted(xy, H.class_element(z));
                HallElement yz = twisted ? H.product(H.class_element(y), H.class_element(z))
                                         : H.product_untwisted(H.class_element(y),
                                                               H.class_element(z));
                HallElement rhs = twisted ? H.product(H.class_element(x), yz)
                                          : H.product_untwisted(H.class_element(x), yz);
                ++report.triples;
                if (!(lhs == rhs)) {
                    report.ok = false;
                    report.failures.push_back({x, y, z});
                }
            }
        }
    }
    return report;
}

HallConReport verify_hallcon(HallTable& H, int total_bound)
{
    HallConReport report;
    const IndecompTable& table = H.indecs();
    int n = H.quiver().quiver.num_vertices();
    long long q = H.p();
    for (size_t k = 0; k < table.entries.size(); ++k) {
        const DimVector& m = table.entries[k].dim;
        if (total_dim(m) + 1 > total_bound) continue;
        for (int i = 0; i < n; ++i) {
            int si = table.find(unit_vector(n, i));
            IsoClass Mc = {(int)k}, Sc = {si};
            IsoClass R = {(int)k, si};
            std::sort(R.begin(), R.end());
            long long f_sm = H.hall_number(Sc, Mc, R); // quotient S_i, sub M
            long long f_ms = H.hall_number(Mc, Sc, R); // quotient M, sub S_i
            DimVector alpha = unit_vector(n, i);
            long long nu_ma = nu(H.form(), m, alpha);
            long long nu_am = nu(H.form(), alpha, m);
            // cross-multiplied form of f_sm = q^{nu_ma - nu_am} f_ms
            long long lhs = f_sm, rhs = f_ms;
            for (long long e = 0; e < nu_am; ++e) lhs *= q;
            for (long long e = 0; e < nu_ma; ++e) rhs *= q;
            ++report.checked;
            if (lhs != rhs) {
                report.ok = false;
                report.failures.push_back({m, i, lhs, rhs});
            }
        }
    }
    return report;
}

long long hall_graded_dim(const HallTable& H, const DimVector& alpha)
{
    return (long long)H.classes_of_dim(alpha).size();
}

HallElement rho_image(HallTable& H, const NCElement& x)
{
    QSqrtScalar v = QSqrtScalar::sqrt_q((uint32_t)H.p());
    std::map<NCWord, QSqrtScalar> evaluated = specialize(x, v);
    HallElement out;
    out.q = (uint32_t)H.p();
    for (const auto& [word, coeff] : evaluated) {
        HallElement acc = H.unit();
        for (int i : word) acc = H.product(acc, H.simple(i));
        out = out + acc.scaled(coeff);
    }
    return out;
}

RhoReport rho_verify(const Presentation& P, HallTable& H, int degree_total_bound)
{
    RhoReport report;
    for (const RelationGen& gen : P.gens) {
        HallElement img = rho_image(H, gen.element);
        ++report.relations_checked;
        if (!img.is_zero()) {
            report.homomorphism_ok = false;
            report.failed_relations.push_back({gen.sequence, gen.degree, img});
        }
    }
    report.isomorphism_checked = H.p() != 2;
    if (report.isomorphism_checked) {
        int n = H.quiver().quiver.num_vertices();
        QSqrtScalar v = QSqrtScalar::sqrt_q((uint32_t)H.p());
        DimVector alpha(n, 0);
        while (true) {
            int i = 0;
            while (i < n && alpha[i] == degree_total_bound) alpha[i++] = 0;
            if (i == n) break;
            ++alpha[i];
            if (total_dim(alpha) > degree_total_bound || total_dim(alpha) == 0) continue;
            int pd = graded_dimension(P, alpha, v);
            long long hd = hall_graded_dim(H, alpha);
            ++report.degrees_checked;
            if (pd != hd) {
                report.isomorphism_ok = false;
                report.dim_mismatches.push_back({alpha, pd, hd});
            }
        }
    }
    return report;
}

} // namespace hallq
