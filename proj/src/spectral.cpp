#include "hopfcoh/spectral.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hopfcoh {

namespace {

Subspace coordinate_span(const Field& f, int ambient, const std::vector<int>& coords)
{
    std::vector<SparseRow> rows;
    for (int c : coords)
        rows.push_back(SparseRow{{c, f.one()}});
    return Subspace::span(f, ambient, std::move(rows));
}

class PageEngine {
public:
    PageEngine(const FilteredComplex& fc) : fc_(fc), c_(fc.underlying), f_(c_.field)
    {
        for (int n = 0; n <= c_.top(); ++n) {
            if (c_.dims[n] == 0) {
                minw_.push_back(0);
                maxw_.push_back(-1);
            } else {
                minw_.push_back(fc.min_weight(n));
                maxw_.push_back(fc.max_weight(n));
            }
        }
    }

    int minw(int n) const { return minw_.at(n); }
    int maxw(int n) const { return maxw_.at(n); }

    Subspace filtration(int p, int n)
    {
        p = std::max(p, minw(n));
        std::vector<int> coords;
        for (int k = 0; k < c_.dims[n]; ++k)
            if (fc_.weight[n][k] >= p)
                coords.push_back(k);
        return coordinate_span(f_, c_.dims[n], coords);
    }

    // Z_r^{p} in degree n; r = -1 gives F^p.
    const Subspace& z(int r, int p, int n)
    {
        const int pc = std::clamp(p, minw(n), maxw(n) + 1);
        int thr = r < 0 ? -1 : p + r;
        if (r >= 0)
            thr = std::clamp(thr, minw(n + 1), maxw(n + 1) + 1);
        auto key = std::make_tuple(n, pc, r < 0 ? std::numeric_limits<int>::min() : thr);
        auto it = zcache_.find(key);
        if (it != zcache_.end())
            return it->second;
        Subspace s;
        if (r < 0 || thr <= minw(n + 1)) {
            s = filtration(pc, n);
        } else {
            std::vector<SparseRow> eqs;
            const SparseMatrix& d = c_.d.at(n);
            for (int k = 0; k < d.rows(); ++k) {
                if (fc_.weight[n + 1][k] >= thr)
                    continue;
                SparseRow row;
                for (const auto& [j, v] : d.row(k))
                    if (fc_.weight[n][j] >= pc)
                        row.emplace_back(j, v);
                if (!row.empty())
                    eqs.push_back(std::move(row));
            }
            for (int j = 0; j < c_.dims[n]; ++j)
                if (fc_.weight[n][j] < pc)
                    eqs.push_back(SparseRow{{j, f_.one()}});
            SparseMatrix sys(f_, static_cast<int>(eqs.size()), c_.dims[n]);
            for (std::size_t k = 0; k < eqs.size(); ++k)
                sys.set_row(static_cast<int>(k), std::move(eqs[k]));
            s = kernel(sys);
        }
        return zcache_.emplace(key, std::move(s)).first->second;
    }

    // d Z_r^{p} of degree n - 1, inside C^n.
    Subspace dz(int r, int p, int n)
    {
        if (n == 0)
            return Subspace(f_, c_.dims[0]);
        return z(r, p, n - 1).image(c_.d.at(n - 1));
    }

    Subquotient e(int r, int p, int n)
    {
        Subspace denom = z(r - 1, p + 1, n).sum(dz(r - 1, p - r + 1, n));
        return subquotient_basis(z(r, p, n), denom);
    }

    int infinite_r(int cap) const
    {
        int r = 1;
        for (int n = 0; n <= cap; ++n) {
            if (maxw(n) < minw(n))
                continue;
            if (n > 0 && maxw(n - 1) >= minw(n - 1))
                r = std::max(r, maxw(n) - minw(n - 1) + 2);
            if (maxw(n + 1) >= minw(n + 1))
                r = std::max(r, maxw(n + 1) - minw(n) + 2);
        }
        return r;
    }

private:
    const FilteredComplex& fc_;
    const CochainComplex& c_;
    Field f_;
    std::vector<int> minw_, maxw_;
    std::map<std::tuple<int, int, int>, Subspace> zcache_;
};

SpectralPage build_page(PageEngine& eng, const FilteredComplex& fc, int r, bool with_products)
{
    const CochainComplex& c = fc.underlying;
    const int cap = fc.cap();
    SpectralPage page;
    page.field = c.field;
    page.r = r;
    page.cap = cap;
    std::vector<Subquotient> sq;
    std::vector<int> totals(cap + 1, 0);
    for (int n = 0; n <= cap; ++n)
        for (int p = eng.minw(n); p <= eng.maxw(n); ++p) {
            Subquotient s = eng.e(r, p, n);
            if (s.dim == 0)
                continue;
            SpectralCell cell{p, n - p, s.dim, {}};
            for (const auto& v : s.representatives)
                cell.representatives.push_back(to_sparse(v));
            page.cells.push_back(std::move(cell));
            sq.push_back(std::move(s));
            totals[n] += page.cells.back().dim;
        }
    // Class coordinates of a cochain of degree n lying in Z_r^{p}.
    auto flat_coords = [&](int n, int p, const SparseRow& x) {
        Vec out = zero_vec(c.field, totals[n]);
        int idx = page.cell_index(p, n - p);
        if (idx < 0)
            return out;
        Vec local = sq[idx].coords(to_dense(x, c.field, c.dims[n]));
        int off = page.offset(idx);
        for (std::size_t k = 0; k < local.size(); ++k)
            out[off + k] = local[k];
        return out;
    };
    for (int n = 0; n < cap; ++n) {
        Matrix m(c.field, totals[n + 1], totals[n]);
        for (std::size_t ci = 0; ci < page.cells.size(); ++ci) {
            const SpectralCell& cell = page.cells[ci];
            if (cell.i + cell.j != n)
                continue;
            int off = page.offset(static_cast<int>(ci));
            for (int k = 0; k < cell.dim; ++k) {
                SparseRow y = c.d[n].apply(cell.representatives[k]);
                m.set_column(off + k, flat_coords(n + 1, cell.i + r, y));
            }
        }
        page.d.push_back(std::move(m));
    }
    if (with_products && fc.product) {
        // Flattened index -> (cell, position).
        std::vector<std::vector<std::pair<int, int>>> where(cap + 1);
        for (std::size_t ci = 0; ci < page.cells.size(); ++ci) {
            const SpectralCell& cell = page.cells[ci];
            for (int k = 0; k < cell.dim; ++k)
                where[cell.i + cell.j].emplace_back(static_cast<int>(ci), k);
        }
        ProductFn fn = [&](int m, int i, int n, int j) {
            auto [ca, ka] = where[m][i];
            auto [cb, kb] = where[n][j];
            const SpectralCell& x = page.cells[ca];
            const SpectralCell& y = page.cells[cb];
            SparseRow z = (*fc.product)(m, x.representatives[ka], n, y.representatives[kb]);
            return flat_coords(m + n, x.i + y.i, z);
        };
        page.products = make_product_table(totals, totals, totals, fn);
    }
    return page;
}

// Sum of c_t * (x (x) y) through a flattened table.
Vec table_product(const Field& f, const ProductTable& t, int m, const Vec& x, int n, const Vec& y)
{
    Vec out = zero_vec(f, t.out_dims.at(m + n));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero())
                continue;
            const Vec& p = t.at(m, static_cast<int>(i), n, static_cast<int>(j));
            Scalar s = x[i] * y[j];
            for (std::size_t k = 0; k < p.size(); ++k)
                if (!p[k].is_zero())
                    out[k] += s * p[k];
        }
    }
    return out;
}

// Image of an element of A-bar under h, expressed on A-bar (indices 0..d-2).
using Term = std::pair<int, Scalar>;

std::vector<std::vector<Term>> act_on_bar_basis(const Matrix& rho_h, int ab)
{
    std::vector<std::vector<Term>> out(ab);
    for (int k = 0; k < ab; ++k)
        for (int s = 0; s < ab; ++s)
            if (!rho_h(s + 1, k + 1).is_zero())
                out[k].emplace_back(s, rho_h(s + 1, k + 1));
    return out;
}

// h . (r_1 (x) ... (x) r_n) with the diagonal action; entries (tensor, coefficient).
std::vector<Term> diagonal_action(const Algebra& h, int hb, const std::vector<std::vector<std::vector<Term>>>& on_bar,
                                  int tensor, int n, int ab)
{
    std::vector<int> digits(n);
    for (int p = n - 1, x = tensor; p >= 0; --p, x /= ab)
        digits[p] = x % ab;
    struct Partial {
        int rest;
        Scalar c;
        long long idx;
    };
    std::vector<Partial> cur{{hb, h.field.one(), 0}};
    for (int k = 0; k < n; ++k) {
        std::vector<Partial> next;
        for (const auto& pt : cur) {
            auto apply = [&](int hx, const Scalar& c, int rest) {
                for (const auto& [s, v] : on_bar[hx][digits[k]])
                    next.push_back({rest, c * v, pt.idx * ab + s});
            };
            if (k == n - 1) {
                apply(pt.rest, pt.c, -1);
            } else {
                for (const auto& [q, c] : h.hopf->comult[pt.rest])
                    apply(q / h.dim, pt.c * c, q % h.dim);
            }
        }
        cur = std::move(next);
    }
    std::map<long long, Scalar> acc;
    for (const auto& pt : cur) {
        auto it = acc.find(pt.idx);
        if (it == acc.end())
            acc.emplace(pt.idx, pt.c);
        else
            it->second += pt.c;
    }
    std::vector<Term> out;
    for (const auto& [i, c] : acc)
        if (!c.is_zero())
            out.emplace_back(static_cast<int>(i), c);
    if (n == 0)
        out = {{0, h.aug->eps[hb]}};
    return out;
}

Matrix combination(const Field& f, const std::vector<Matrix>& basis, const Vec& coeffs, int dim)
{
    Matrix out(f, dim, dim);
    for (std::size_t s = 0; s < coeffs.size(); ++s)
        if (!coeffs[s].is_zero())
            out = out + basis[s].scaled(coeffs[s]);
    return out;
}

bool is_trivial_rep(const Algebra& a, const ModuleRep& m)
{
    if (m.mdim != 1 || !a.aug)
        return false;
    for (int i = 0; i < a.dim; ++i)
        if (m.action[i](0, 0) != a.aug->eps[i])
            return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------

int FilteredComplex::min_weight(int n) const
{
    const auto& w = weight.at(n);
    return w.empty() ? 0 : *std::min_element(w.begin(), w.end());
}

int FilteredComplex::max_weight(int n) const
{
    const auto& w = weight.at(n);
    return w.empty() ? -1 : *std::max_element(w.begin(), w.end());
}

void check_filtration(const FilteredComplex& fc)
{
    const CochainComplex& c = fc.underlying;
    if (static_cast<int>(fc.weight.size()) != static_cast<int>(c.dims.size()))
        throw Error(ErrorCode::IncompatibleFiltration, "one weight list per degree is required");
    for (std::size_t n = 0; n < c.dims.size(); ++n)
        if (static_cast<int>(fc.weight[n].size()) != c.dims[n])
            throw Error(ErrorCode::IncompatibleFiltration, "weight list of degree " + std::to_string(n) + " has the wrong length");
    for (std::size_t n = 0; n < c.d.size(); ++n)
        for (int r = 0; r < c.d[n].rows(); ++r)
            for (const auto& [j, v] : c.d[n].row(r))
                if (fc.weight[n + 1][r] < fc.weight[n][j])
                    throw Error(ErrorCode::IncompatibleFiltration,
                                "d lowers filtration in degree " + std::to_string(n) + " at coordinate " + std::to_string(j));
}

std::vector<int> SpectralPage::totals() const
{
    std::vector<int> out(cap + 1, 0);
    for (const auto& c : cells)
        if (c.i + c.j <= cap)
            out[c.i + c.j] += c.dim;
    return out;
}

int SpectralPage::cell_index(int i, int j) const
{
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k].i == i && cells[k].j == j)
            return static_cast<int>(k);
    return -1;
}

int SpectralPage::offset(int cell) const
{
    const int n = cells.at(cell).i + cells[cell].j;
    int off = 0;
    for (int k = 0; k < cell; ++k)
        if (cells[k].i + cells[k].j == n)
            off += cells[k].dim;
    return off;
}

std::vector<int> cohomology_dims(const CochainComplex& c, int cap) { return cohomology_groups(c, cap).dims(); }

SpectralSequence compute_pages(const FilteredComplex& fc, int r_max, bool with_products)
{
    check_filtration(fc);
    const int cap = fc.cap();
    if (cap < 0)
        throw Error(ErrorCode::BadParameter, "filtered complex needs at least two degrees");
    PageEngine eng(fc);
    SpectralSequence ss;
    for (int r = 0; r <= r_max; ++r)
        ss.pages.push_back(build_page(eng, fc, r, with_products));
    ss.infinity = build_page(eng, fc, std::max(eng.infinite_r(cap), r_max + 1), false);
    ss.direct_dims = cohomology_dims(fc.underlying, cap);
    ss.converges = ss.infinity.totals() == ss.direct_dims;
    return ss;
}

// ---------------------------------------------------------------------------

FilteredComplex filtered_from_algebra_filtration(const Algebra& a, const AlgebraFiltration& filt, const ModuleRep& m,
                                                 int cap, const std::vector<int>& module_weights)
{
    if (!a.aug)
        throw Error(ErrorCode::MissingAugmentation, "filtered bar complexes resolve k");
    ValidationReport vr = validate_filtration(a, filt);
    if (!vr.ok())
        throw Error(ErrorCode::IncompatibleFiltration, "filtration does not validate: " + vr.violations.front().kind);
    const Field& f = a.field;
    const bool inc = filt.direction == FiltrationDirection::Increasing;
    const int layers = static_cast<int>(filt.layers.size());
    Vec one = a.one();
    // Adapted basis, unit first.
    std::vector<Vec> basis{one};
    std::vector<int> w;
    if (inc) {
        if (layers == 0 || !filt.layers[0].contains(one))
            throw Error(ErrorCode::IncompatibleFiltration, "the unit must lie in the bottom layer");
        w.push_back(0);
        for (int l = 0; l < layers; ++l)
            for (const auto& v : filt.layers[l].dense_basis())
                if (!Subspace::span(f, a.dim, basis).contains(v)) {
                    basis.push_back(v);
                    w.push_back(l);
                }
    } else {
        if (layers > 1) {
            for (const auto& v : filt.layers[1].dense_basis()) {
                Scalar e = f.zero();
                for (int i = 0; i < a.dim; ++i)
                    e += a.aug->eps[i] * v[i];
                if (!e.is_zero())
                    throw Error(ErrorCode::IncompatibleFiltration, "the augmentation must vanish on layer 1");
            }
        }
        w.push_back(0);
        for (int l = layers - 1; l >= 0; --l)
            for (const auto& v : filt.layers[l].dense_basis())
                if (!Subspace::span(f, a.dim, basis).contains(v)) {
                    basis.push_back(v);
                    w.push_back(-l);
                }
    }
    if (static_cast<int>(basis.size()) != a.dim)
        throw Error(ErrorCode::IncompatibleFiltration, "layers do not exhaust the algebra");
    Matrix p(f, a.dim, a.dim);
    std::vector<std::string> labels;
    for (int i = 0; i < a.dim; ++i) {
        p.set_column(i, basis[i]);
        labels.push_back(a.element_string(basis[i]));
    }
    Algebra ad = change_basis(a, p, labels);
    ModuleRep md = change_basis(m, p);
    FreeResolution res = normalized_bar(ad, BarMode::AugmentedLeft, cap + 1);

    FilteredComplex fc;
    fc.underlying = hom_complex(res, md);
    const int ab = a.dim - 1;
    std::vector<int> mw = module_weights.empty() ? std::vector<int>(m.mdim, 0) : module_weights;
    if (static_cast<int>(mw.size()) != m.mdim)
        throw Error(ErrorCode::IncompatibleFiltration, "one weight per module coordinate is required");
    for (int n = 0; n <= cap + 1; ++n) {
        std::vector<int> wn;
        wn.reserve(fc.underlying.dims[n]);
        for (int t = 0; t < res.ranks[n]; ++t) {
            int tw = 0;
            for (int k = 0, x = t; k < n; ++k, x /= ab)
                tw += w[x % ab + 1];
            for (int mm = 0; mm < m.mdim; ++mm)
                wn.push_back(tw - mw[mm]);
        }
        fc.weight.push_back(std::move(wn));
    }
    check_filtration(fc);
    if (is_trivial_rep(a, m)) {
        Pairing mu = Pairing::scalars(f);
        fc.product = [ab, mu](int i, const SparseRow& x, int j, const SparseRow& y) {
            return cup_cochains(x, i, y, j, ab, 1, 1, mu);
        };
    }
    return fc;
}

// ---------------------------------------------------------------------------

FilteredComplex DoubleComplex::total() const
{
    FilteredComplex fc;
    CochainComplex& c = fc.underlying;
    c.field = field;
    c.provenance = "total complex";
    const int top = cap + 1;
    std::vector<std::vector<int>> offset(top + 1);
    for (int n = 0; n <= top; ++n) {
        int off = 0;
        std::vector<int> w;
        for (int i = 0; i <= n; ++i) {
            offset[n].push_back(off);
            off += dims[i][n - i];
            w.insert(w.end(), dims[i][n - i], i);
        }
        c.dims.push_back(off);
        fc.weight.push_back(std::move(w));
    }
    for (int n = 0; n < top; ++n) {
        SparseMatrix d(field, c.dims[n + 1], c.dims[n]);
        for (int i = 0; i <= n; ++i) {
            const int j = n - i;
            for (const auto& [r, col, v] : horizontal[i][j].entries())
                d.add_entry(offset[n + 1][i + 1] + r, offset[n][i] + col, v);
            for (const auto& [r, col, v] : vertical[i][j].entries())
                d.add_entry(offset[n + 1][i] + r, offset[n][i] + col, v);
        }
        d.canonicalize();
        c.d.push_back(std::move(d));
    }
    return fc;
}

LHSResult lhs_e2(const HAction& act, const ModuleRep& m, LHSMode mode, int cap, bool with_products,
                 bool with_double_complex, long long budget)
{
    const Algebra& r = act.target;
    const Algebra& h = act.hopf;
    const Field& f = r.field;
    if (!validate_action(act).ok())
        throw Error(ErrorCode::ValidationFailed, "H-action does not validate");
    if (!h.hopf || !h.aug || !r.aug)
        throw Error(ErrorCode::MissingAugmentation, "LHS needs a Hopf algebra acting on an augmented algebra");
    const int dr = r.dim, dh = h.dim, da = dr * dh;
    const bool hh = mode == LHSMode::Hochschild;
    if (static_cast<int>(m.action.size()) != (hh ? da * da : da))
        throw Error(ErrorCode::BaseMismatch, "module is not over the smash product");
    auto smash_index = [&](int ri, int hi) { return ri * dh + hi; };

    LHSResult out;
    SpectralPage& page = out.e2;
    page.field = f;
    page.r = 2;
    page.cap = cap;

    // Restriction of M to R (or R^e) and the operators of H on M.
    ModuleRep mr;
    mr.name = m.name;
    mr.field = f;
    mr.mdim = m.mdim;
    if (hh) {
        for (int x = 0; x < dr; ++x)
            for (int y = 0; y < dr; ++y)
                mr.action.push_back(m.action[smash_index(x, h.unit) * da + smash_index(y, h.unit)]);
    } else {
        for (int x = 0; x < dr; ++x)
            mr.action.push_back(m.action[smash_index(x, h.unit)]);
    }
    FreeResolution res = normalized_bar(r, hh ? BarMode::Bimodule : BarMode::AugmentedLeft, cap + 1, budget);
    ModuleRep mbase = to_base(res, mr);
    Cohomology hr(std::make_shared<const CochainComplex>(hom_complex_base(res, mbase)), cap);

    // H on the normalized basis of R.
    Normalized nr = normalize(r);
    const int ab = dr - 1;
    std::vector<std::vector<std::vector<Term>>> on_bar(dh);
    for (int x = 0; x < dh; ++x) {
        Matrix rho = nr.p_inv * act.rep.action[x] * nr.p;
        for (int k = 1; k < dr; ++k)
            if (!rho(0, k).is_zero())
                throw Error(ErrorCode::ActionNotDescending, "H does not preserve the augmentation ideal of R");
        on_bar[x] = act_on_bar_basis(rho, ab);
    }
    // Antipode images and the operators x -> S(h_1) . x . h_3 (or S(h_1) . x).
    auto antipode_of = [&](int x) { return h.hopf->antipode.column(x); };
    std::vector<std::vector<std::pair<std::array<int, 3>, Scalar>>> delta2(dh);
    for (int x = 0; x < dh; ++x)
        for (const auto& [q, c] : h.hopf->comult[x]) {
            int x1 = q / dh, x2 = q % dh;
            for (const auto& [q2, c2] : h.hopf->comult[x2])
                delta2[x].push_back({{x1, q2 / dh, q2 % dh}, c * c2});
        }
    auto module_op = [&](int x1, int x3) {
        Vec s = antipode_of(x1);
        Matrix op(f, m.mdim, m.mdim);
        for (int k = 0; k < dh; ++k) {
            if (s[k].is_zero())
                continue;
            const Matrix& a = hh ? m.action[smash_index(r.unit, k) * da + smash_index(r.unit, x3)]
                                 : m.action[smash_index(r.unit, k)];
            op = op + a.scaled(s[k]);
        }
        return op;
    };

    // Right action of each basis element of H on H^q(R, M), then the left module N_q.
    std::vector<ModuleRep> nq(cap + 1);
    for (int q = 0; q <= cap; ++q) {
        const int dq = hr.dim(q);
        const int rank = res.ranks[q];
        const int md = m.mdim;
        std::vector<Matrix> right(dh, Matrix(f, dq, dq));
        for (int x = 0; x < dh; ++x) {
            // Cochain operator: (f.h)(u) = sum S(h_1) f(h_2 . u) [h_3].
            SparseMatrix op(f, rank * md, rank * md);
            for (const auto& [t3, c3] : delta2[x]) {
                const int x1 = t3[0];
                const int x2 = hh ? t3[1] : -1;
                const int x3 = hh ? t3[2] : h.unit;
                // Without the third leg, h_2 absorbs h_2 h_3 through the counit.
                Scalar c = c3;
                int mid = x2;
                if (!hh) {
                    c = c3 * h.aug->eps[t3[2]];
                    mid = t3[1];
                    if (c.is_zero())
                        continue;
                }
                Matrix mop = module_op(x1, x3);
                for (int u = 0; u < rank; ++u)
                    for (const auto& [t, tc] : diagonal_action(h, mid, on_bar, u, q, ab))
                        for (int a = 0; a < md; ++a)
                            for (int b = 0; b < md; ++b)
                                if (!mop(a, b).is_zero())
                                    op.add_entry(u * md + a, t * md + b, c * tc * mop(a, b));
            }
            op.canonicalize();
            for (int i = 0; i < dq; ++i) {
                SparseRow img = op.apply(hr.representatives(q)[i]);
                if (!hr.is_cocycle(q, img))
                    throw Error(ErrorCode::ActionNotDescending, "cochain action does not commute with d in degree " +
                                                                    std::to_string(q));
                right[x].set_column(i, hr.coords(q, img));
            }
        }
        ModuleRep n;
        n.name = "H^" + std::to_string(q);
        n.field = f;
        n.mdim = dq;
        for (int x = 0; x < dh; ++x)
            n.action.push_back(combination(f, right, antipode_of(x), dq));
        if (!validate_module(h, n).ok())
            throw Error(ErrorCode::ActionNotDescending, "induced action on H^" + std::to_string(q) + " is not a module");
        nq[q] = std::move(n);
    }

    FreeResolution resh = normalized_bar(h, BarMode::AugmentedLeft, cap + 1, budget);
    std::vector<Cohomology> e2(cap + 1);
    for (int q = 0; q <= cap; ++q)
        e2[q] = Cohomology(std::make_shared<const CochainComplex>(hom_complex(resh, nq[q])), cap - q);
    std::vector<int> totals(cap + 1, 0);
    for (int n = 0; n <= cap; ++n)
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            const int dim = e2[q].dim(p);
            if (dim == 0)
                continue;
            page.cells.push_back({p, q, dim, e2[q].representatives(p)});
            totals[n] += dim;
        }
    page.notes.push_back("E_2 from the cochain action on the bar complex of R; cell representatives are cochains "
                         "of the bar complex of H with values in H^q(R, M)");

    if (with_products) {
        if (hh) {
            page.notes.push_back("products skipped in Hochschild mode");
        } else if (!is_trivial_rep(smash_or_crossed_product(act), m)) {
            page.notes.push_back("products need trivial coefficients; skipped");
        } else {
            Pairing scal = Pairing::scalars(f);
            ProductTable rt = make_product_table(hr.dims(), hr.dims(), hr.dims(), bar_product(hr, hr, scal, hr));
            std::vector<std::vector<std::pair<int, int>>> where(cap + 1);
            for (std::size_t ci = 0; ci < page.cells.size(); ++ci)
                for (int k = 0; k < page.cells[ci].dim; ++k)
                    where[page.cells[ci].i + page.cells[ci].j].emplace_back(static_cast<int>(ci), k);
            const int hab = h.dim - 1;
            ProductFn fn = [&](int m1, int i1, int n1, int j1) {
                auto [ca, ka] = where[m1][i1];
                auto [cb, kb] = where[n1][j1];
                const SpectralCell& x = page.cells[ca];
                const SpectralCell& y = page.cells[cb];
                const int q = x.j + y.j, p = x.i + y.i;
                Pairing mu{f, hr.dim(x.j), hr.dim(y.j), hr.dim(q), {}, "H^q x H^q' -> H^(q+q')"};
                for (int a = 0; a < mu.left_dim; ++a)
                    for (int b = 0; b < mu.right_dim; ++b)
                        mu.table.push_back(to_sparse(rt.at(x.j, a, y.j, b)));
                SparseRow z = cup_cochains(x.representatives[ka], x.i, y.representatives[kb], y.i, hab, mu.left_dim,
                                           mu.right_dim, mu);
                if ((x.j * y.i) % 2 == 1)
                    for (auto& e : z)
                        e.second = -e.second;
                Vec flat = zero_vec(f, totals[m1 + n1]);
                int idx = page.cell_index(p, q);
                if (idx >= 0) {
                    Vec local = e2[q].coords(p, z);
                    int off = page.offset(idx);
                    for (std::size_t k = 0; k < local.size(); ++k)
                        flat[off + k] = local[k];
                }
                return flat;
            };
            page.products = make_product_table(totals, totals, totals, fn);
        }
    }

    // Direct cohomology of the smash product, when it fits.
    Algebra a = smash_or_crossed_product(act);
    long long need = 1;
    for (int k = 0; k <= cap + 1 && need <= budget; ++k)
        need *= (a.dim - 1);
    if (need <= budget) {
        FreeResolution ra = normalized_bar(a, hh ? BarMode::Bimodule : BarMode::AugmentedLeft, cap + 1, budget);
        out.direct_dims = cohomology_dims(hom_complex(ra, m), cap);
    } else {
        page.notes.push_back("direct cohomology of R # H exceeds the budget");
    }

    if (with_double_complex) {
        if (hh)
            throw Error(ErrorCode::Unsupported, "the double complex route is implemented for M over R # H only");
        // Q = bar resolution of k over A = R # H; X_j = Hom_R(Q_j, M) on the values at (1 # h_b) (x) t.
        FreeResolution qres = normalized_bar(a, BarMode::AugmentedLeft, cap + 1, budget);
        const int md = m.mdim;
        std::vector<ModuleRep> xj(cap + 2);
        for (int j = 0; j <= cap + 1; ++j) {
            const long long size = static_cast<long long>(dh) * qres.ranks[j] * md;
            if (size * size * dh > budget)
                throw Error(ErrorCode::BudgetExceeded, "double complex column " + std::to_string(j) + " is too large");
            const int xd = static_cast<int>(size);
            ModuleRep x;
            x.name = "X_" + std::to_string(j);
            x.field = f;
            x.mdim = xd;
            for (int hx = 0; hx < dh; ++hx) {
                Matrix op(f, xd, xd);
                for (const auto& [q, c] : h.hopf->comult[hx]) {
                    const int h1 = q / dh, h2 = q % dh;
                    const Matrix& rho1 = m.action[smash_index(r.unit, h1)];
                    Vec s2 = antipode_of(h2);
                    for (int b = 0; b < dh; ++b) {
                        Vec y = h.mul(s2, h.basis(b));
                        for (int cc = 0; cc < dh; ++cc) {
                            if (y[cc].is_zero())
                                continue;
                            for (int t = 0; t < qres.ranks[j]; ++t)
                                for (int a1 = 0; a1 < md; ++a1)
                                    for (int b1 = 0; b1 < md; ++b1)
                                        if (!rho1(a1, b1).is_zero())
                                            op((b * qres.ranks[j] + t) * md + a1, (cc * qres.ranks[j] + t) * md + b1) +=
                                                c * y[cc] * rho1(a1, b1);
                        }
                    }
                }
                x.action.push_back(std::move(op));
            }
            if (!validate_module(h, x).ok())
                throw Error(ErrorCode::ActionNotDescending, "Hom_R(Q_j, M) is not an H-module under the cited action");
            xj[j] = std::move(x);
        }
        DoubleComplex dc;
        dc.field = f;
        dc.cap = cap;
        std::vector<CochainComplex> cols;
        for (int j = 0; j <= cap + 1; ++j)
            cols.push_back(hom_complex(resh, xj[j]));
        dc.dims.assign(cap + 2, std::vector<int>(cap + 2, 0));
        dc.horizontal.assign(cap + 2, std::vector<SparseMatrix>(cap + 2));
        dc.vertical.assign(cap + 2, std::vector<SparseMatrix>(cap + 2));
        for (int i = 0; i <= cap + 1; ++i)
            for (int j = 0; i + j <= cap + 1; ++j)
                dc.dims[i][j] = cols[j].dims[i];
        for (int i = 0; i <= cap; ++i)
            for (int j = 0; i + j <= cap; ++j) {
                dc.horizontal[i][j] = cols[j].d[i];
                // delta_j(phi)((1 # h_b) (x) t') = sum phi(((1 # h_b) . P e) (x) t)
                const int rj = qres.ranks[j], rj1 = qres.ranks[j + 1];
                SparseMatrix delta(f, dh * rj1 * md, dh * rj * md);
                for (int b = 0; b < dh; ++b)
                    for (int t1 = 0; t1 < rj1; ++t1)
                        for (const auto& [t, e] : qres.diff[j + 1][t1]) {
                            Vec pe = qres.module_change * to_dense(e, f, a.dim);
                            Vec prod = a.mul(a.basis(smash_index(r.unit, b)), pe);
                            for (int k = 0; k < a.dim; ++k) {
                                if (prod[k].is_zero())
                                    continue;
                                const int rk = k / dh, hk = k % dh;
                                const Matrix& rho = m.action[smash_index(rk, h.unit)];
                                for (int a1 = 0; a1 < md; ++a1)
                                    for (int b1 = 0; b1 < md; ++b1)
                                        if (!rho(a1, b1).is_zero())
                                            delta.add_entry((b * rj1 + t1) * md + a1, (hk * rj + t) * md + b1,
                                                            prod[k] * rho(a1, b1));
                            }
                        }
                delta.canonicalize();
                const int ti = resh.ranks[i];
                const int xd = xj[j].mdim, xd1 = xj[j + 1].mdim;
                SparseMatrix v(f, ti * xd1, ti * xd);
                const Scalar sign = (i % 2) ? -f.one() : f.one();
                for (int s = 0; s < ti; ++s)
                    for (int rr = 0; rr < xd1; ++rr)
                        for (const auto& [cc, val] : delta.row(rr))
                            v.add_entry(s * xd1 + rr, s * xd + cc, sign * val);
                v.canonicalize();
                dc.vertical[i][j] = std::move(v);
            }
        // Anticommutation and squares.
        for (int i = 0; i <= cap; ++i)
            for (int j = 0; i + j + 1 <= cap; ++j) {
                SparseMatrix hv = dc.horizontal[i][j + 1] * dc.vertical[i][j];
                SparseMatrix vh = dc.vertical[i + 1][j] * dc.horizontal[i][j];
                for (const auto& [rr, cc, val] : vh.entries())
                    hv.add_entry(rr, cc, val);
                hv.canonicalize();
                if (!hv.is_zero())
                    throw Error(ErrorCode::ActionNotDescending, "double complex differentials do not anticommute");
            }
        out.double_complex = std::move(dc);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string CollapseCertificate::describe() const
{
    switch (verdict) {
    case CollapseVerdict::CollapseAt: return "collapse_at_" + std::to_string(r);
    case CollapseVerdict::NoCollapse: return "no_collapse";
    default: return "inconclusive";
    }
}

CollapseCertificate collapse_certificate(const SpectralPage& page, const std::vector<int>& direct_dims)
{
    if (static_cast<int>(direct_dims.size()) < page.cap + 1)
        throw Error(ErrorCode::CapMismatch, "direct dimensions stop before the page cap");
    CollapseCertificate cert;
    cert.r = page.r;
    cert.page_totals = page.totals();
    cert.direct_dims.assign(direct_dims.begin(), direct_dims.begin() + page.cap + 1);
    if (cert.page_totals == cert.direct_dims) {
        cert.verdict = CollapseVerdict::CollapseAt;
        return cert;
    }
    for (int n = 0; n < static_cast<int>(page.d.size()); ++n) {
        const Matrix& d = page.d[n];
        for (int col = 0; col < d.cols(); ++col)
            if (!is_zero(d.column(col))) {
                int acc = 0;
                for (std::size_t k = 0; k < page.cells.size(); ++k) {
                    const auto& c = page.cells[k];
                    if (c.i + c.j != n)
                        continue;
                    if (col < acc + c.dim) {
                        cert.witness_cell = std::make_pair(c.i, c.j);
                        break;
                    }
                    acc += c.dim;
                }
                cert.verdict = CollapseVerdict::NoCollapse;
                return cert;
            }
    }
    cert.verdict = CollapseVerdict::Inconclusive;
    return cert;
}

std::vector<PermanentPower> frobenius_permanent_powers(const SpectralPage& page, int characteristic)
{
    if (!page.products)
        throw Error(ErrorCode::NoProducts, "page has no product table");
    if (characteristic <= 0)
        throw Error(ErrorCode::WrongCharacteristic, "permanent powers need positive characteristic");
    if (static_cast<int>(page.field.characteristic()) != characteristic)
        throw Error(ErrorCode::WrongCharacteristic, "page field has characteristic " +
                                                        std::to_string(page.field.characteristic()));
    const Field& f = page.field;
    const ProductTable& t = *page.products;
    const int cap = page.cap;
    std::vector<Subspace> center = graded_center_truncation(f, t);
    std::vector<int> totals = page.totals();
    auto differential = [&](int n, const Vec& x) -> std::optional<Vec> {
        if (n >= static_cast<int>(page.d.size()))
            return std::nullopt;
        return page.d[n] * x;
    };
    std::vector<PermanentPower> out;
    for (std::size_t ci = 0; ci < page.cells.size(); ++ci) {
        const SpectralCell& cell = page.cells[ci];
        const int n = cell.i + cell.j;
        if (n == 0)
            continue;
        const int off = page.offset(static_cast<int>(ci));
        std::vector<int> block;
        for (int k = 0; k < cell.dim; ++k)
            block.push_back(off + k);
        Subspace central = center[n].intersect(coordinate_span(f, totals[n], block));
        for (const Vec& c : central.dense_basis()) {
            PermanentPower pp;
            pp.total_degree = n;
            pp.i = cell.i;
            pp.cls = c;
            auto dc = differential(n, c);
            if (!dc) {
                pp.exponent = 1;
                pp.cap_truncated = true;
                pp.certificate = "d_r(c) leaves the cap";
                out.push_back(std::move(pp));
                continue;
            }
            if (is_zero(*dc)) {
                pp.exponent = 1;
                pp.verified = true;
                pp.certificate = "d_r(c) = 0";
                out.push_back(std::move(pp));
                continue;
            }
            // Odd degree: d(c^2) = d(c)c - c d(c) = 0; even degree: d(c^m) = m d(c) c^(m-1) = 0.
            int exponent = 1;
            Vec power = c;
            int degree = n;
            std::ostringstream cert;
            for (;;) {
                const int factor = degree % 2 == 1 ? 2 : characteristic;
                if (degree * factor > cap) {
                    pp.cap_truncated = true;
                    exponent *= factor;
                    cert << "c^" << exponent << " has degree " << n * exponent << " beyond the cap";
                    break;
                }
                Vec next = power;
                for (int k = 1; k < factor; ++k)
                    next = table_product(f, t, degree * k, next, degree, power);
                exponent *= factor;
                degree *= factor;
                power = std::move(next);
                auto dp = differential(degree, power);
                if (!dp) {
                    pp.cap_truncated = true;
                    cert << "d_r(c^" << exponent << ") leaves the cap";
                    break;
                }
                if (is_zero(*dp)) {
                    pp.verified = true;
                    cert << "d_r(c^" << exponent << ") = 0 in total degree " << degree + 1;
                    break;
                }
            }
            pp.exponent = exponent;
            pp.certificate = cert.str();
            out.push_back(std::move(pp));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Planted toys

namespace {

struct Monomials {
    // Two generators x (degree dx) and y (degree dy, exterior when flagged).
    int dx, dy;
    bool y_exterior;
    std::vector<std::vector<std::pair<int, int>>> by_degree;

    Monomials(int dx_, int dy_, bool ext, int top) : dx(dx_), dy(dy_), y_exterior(ext), by_degree(top + 1)
    {
        for (int n = 0; n <= top; ++n)
            for (int b = 0; b * dy <= n; ++b) {
                if (ext && b > 1)
                    break;
                if ((n - b * dy) % dx == 0)
                    by_degree[n].emplace_back((n - b * dy) / dx, b);
            }
    }

    int index(int n, int a, int b) const
    {
        const auto& v = by_degree.at(n);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] == std::make_pair(a, b))
                return static_cast<int>(k);
        return -1;
    }

    // x^a1 y^b1 * x^a2 y^b2 = sign x^(a1+a2) y^(b1+b2)
    int sign(int b1, int a2) const { return ((dy * b1) * (dx * a2)) % 2 ? -1 : 1; }
};

}  // namespace

FilteredComplex toy_frobenius_complex(int p, int cap)
{
    if (p != 2 && p != 3)
        throw Error(ErrorCode::BadParameter, "toy complexes exist for p = 2 and p = 3");
    const Field f = Field::prime(p);
    const int top = cap + 1;
    // p = 2: x = c (|c| = 1), y = w (|w| = 2), dc = w.
    // p = 3: x = y (|y| = 2), y = z (|z| = 3, exterior), dy = z.
    Monomials mon = p == 2 ? Monomials(1, 2, false, top) : Monomials(2, 3, true, top);
    FilteredComplex fc;
    CochainComplex& c = fc.underlying;
    c.field = f;
    c.provenance = p == 2 ? "GF(2)[c, w], dc = w" : "GF(3)[y] (x) Lambda(z), dy = z";
    for (int n = 0; n <= top; ++n) {
        c.dims.push_back(static_cast<int>(mon.by_degree[n].size()));
        std::vector<int> w;
        for (const auto& [a, b] : mon.by_degree[n])
            w.push_back(b);
        fc.weight.push_back(std::move(w));
    }
    // d(x^a y^b) = sum_k (-1)^(k |x|) x^k (dx) x^(a-1-k) y^b, with dx = y and dy = 0.
    for (int n = 0; n < top; ++n) {
        SparseMatrix d(f, c.dims[n + 1], c.dims[n]);
        for (int k0 = 0; k0 < c.dims[n]; ++k0) {
            auto [a, b] = mon.by_degree[n][k0];
            if (a == 0)
                continue;
            long long coeff = 0;
            for (int k = 0; k < a; ++k) {
                // x^k y x^(a-1-k) y^b: move y past x^(a-1-k)
                int s = ((k * mon.dx) % 2 ? -1 : 1) * mon.sign(1, a - 1 - k);
                coeff += s;
            }
            if (mon.y_exterior && b + 1 > 1)
                continue;
            int target = mon.index(n + 1, a - 1, b + 1);
            if (target < 0)
                continue;
            Scalar v = f.from_int(coeff);
            if (!v.is_zero())
                d.add_entry(target, k0, v);
        }
        d.canonicalize();
        c.d.push_back(std::move(d));
    }
    fc.product = [mon, f](int m, const SparseRow& x, int n, const SparseRow& y) {
        SparseRow out;
        for (const auto& [i, u] : x) {
            auto [a1, b1] = mon.by_degree[m][i];
            for (const auto& [j, v] : y) {
                auto [a2, b2] = mon.by_degree[n][j];
                if (mon.y_exterior && b1 + b2 > 1)
                    continue;
                if (m + n >= static_cast<int>(mon.by_degree.size()))
                    continue;
                int k = mon.index(m + n, a1 + a2, b1 + b2);
                Scalar s = mon.sign(b1, a2) < 0 ? -(u * v) : u * v;
                out.emplace_back(k, s);
            }
        }
        canonicalize(out);
        return out;
    };
    check_filtration(fc);
    return fc;
}

FilteredComplex toy_two_layer_complex(const Field& f)
{
    FilteredComplex fc;
    CochainComplex& c = fc.underlying;
    c.field = f;
    c.provenance = "two-layer toy";
    c.dims = {2, 2, 0};
    SparseMatrix d0(f, 2, 2);
    d0.add_entry(0, 1, f.one());  // d u = v
    c.d.push_back(d0);
    c.d.push_back(SparseMatrix(f, 0, 2));
    fc.weight = {{0, 0}, {1, 0}, {}};
    check_filtration(fc);
    return fc;
}

}  // namespace hopfcoh
