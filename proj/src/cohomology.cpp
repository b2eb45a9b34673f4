#include "hopfcoh/cohomology.hpp"

#include "hopfcoh/detail/echelon.hpp"

#include <algorithm>
#include <set>

namespace hopfcoh {

using detail::Echelon;
using detail::from_native;
using detail::RowT;
using detail::to_native;
using detail::with_arith;

namespace detail {

struct DegreeData {
    virtual ~DegreeData() = default;
    std::vector<int> free;
    std::vector<SparseRow> reps;
    // Normal form modulo coboundaries: supported off the coboundary pivots.
    virtual SparseRow reduce(const SparseRow& x) const = 0;
};

template <class Arith>
struct DegreeDataT final : DegreeData {
    explicit DegreeDataT(Echelon<Arith> e) : b(std::move(e)) {}
    Echelon<Arith> b;
    SparseRow reduce(const SparseRow& x) const override
    {
        return from_native(b.arith(), b.reduce(to_native(b.arith(), x)));
    }
};

}  // namespace detail

namespace {

template <class Arith>
std::vector<std::shared_ptr<const detail::DegreeData>> compute_degrees(const Arith& ar, const CochainComplex& c, int cap)
{
    using Row = RowT<typename Arith::value_type>;
    std::vector<std::shared_ptr<const detail::DegreeData>> out;
    Echelon<Arith> b(ar, c.dims[0]);
    for (int n = 0; n <= cap; ++n) {
        const SparseMatrix& dn = c.d[n];
        const int cols = c.dims[n];
        // Cocycles supported on the complement of the coboundary pivots.
        std::vector<Row> rows;
        rows.reserve(dn.rows());
        for (int r = 0; r < dn.rows(); ++r) {
            Row row;
            for (const auto& [j, v] : dn.row(r))
                if (!b.is_pivot(j))
                    row.emplace_back(j, ar.from(v));
            if (!row.empty())
                rows.push_back(std::move(row));
        }
        Echelon<Arith> e(ar, cols);
        for (int i : detail::markowitz_order(ar, rows))
            e.insert(rows[i]);
        rows.clear();
        rows.shrink_to_fit();

        int off_pivot = 0;
        std::vector<int> free;
        for (int j = 0; j < cols; ++j) {
            if (b.is_pivot(j))
                continue;
            ++off_pivot;
            if (!e.is_pivot(j))
                free.push_back(j);
        }
        std::vector<SparseRow> reps;
        for (int f : free)
            reps.push_back(from_native(ar, e.kernel_vector(f, cols)));

        std::vector<char> off(cols, 0);
        for (int j = 0; j < cols; ++j)
            off[j] = !b.is_pivot(j);
        auto data = std::make_shared<detail::DegreeDataT<Arith>>(std::move(b));
        data->free = std::move(free);
        data->reps = std::move(reps);
        const int image_rank = off_pivot - static_cast<int>(data->free.size());
        out.push_back(data);

        if (n == cap)
            break;
        // B^{n+1} is spanned by the columns of d^n off the old pivots; the
        // expected rank lets the loop stop early.
        SparseMatrix t = dn.transpose();
        std::vector<Row> colrows;
        for (int j = 0; j < cols; ++j)
            if (off[j] && !t.row(j).empty())
                colrows.push_back(to_native(ar, t.row(j)));
        Echelon<Arith> next(ar, c.dims[n + 1]);
        for (int i : detail::markowitz_order(ar, colrows)) {
            if (next.rank() == image_rank)
                break;
            next.insert(colrows[i]);
        }
        b = std::move(next);
    }
    return out;
}

void require_bar(const CochainComplex& c, const char* what)
{
    if (c.bar_factor <= 0)
        throw Error(ErrorCode::IncompatibleCoefficients, std::string(what) + " is not a bar-type complex");
}

long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

Vec combine(const Field& f, const Vec& x, int a, const Vec& y, int b, const ProductTable& t)
{
    Vec out = zero_vec(f, t.out_dims[a + b]);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero())
                continue;
            const Vec& p = t.at(a, static_cast<int>(i), b, static_cast<int>(j));
            Scalar s = x[i] * y[j];
            for (std::size_t k = 0; k < p.size(); ++k)
                if (!p[k].is_zero())
                    out[k] += s * p[k];
        }
    }
    return out;
}

Subspace with(const Subspace& s, const std::vector<Vec>& extra)
{
    std::vector<Vec> all = s.dense_basis();
    for (const auto& v : extra)
        all.push_back(v);
    return Subspace::span(s.field(), s.ambient_dim(), all);
}

// Closes s_n under multiplication by degree-zero elements.
Subspace close_under_degree_zero(const Field& f, Subspace sn, int n, const Subspace& r0, const ProductTable& t,
                                 bool both_sides)
{
    if (t.left_dims.empty() || t.right_dims.at(0) == 0)
        return sn;
    for (;;) {
        std::vector<Vec> extra;
        for (const auto& x : sn.dense_basis())
            for (const auto& z : r0.dense_basis()) {
                extra.push_back(combine(f, x, n, z, 0, t));
                if (both_sides)
                    extra.push_back(combine(f, z, 0, x, n, t));
            }
        Subspace grown = with(sn, extra);
        if (grown.dim() == sn.dim())
            return sn;
        sn = std::move(grown);
    }
}

std::vector<int> ring_generators(const Field& f, const ProductTable& t, const Vec& unit)
{
    std::vector<int> degs;
    const int cap = t.cap();
    std::vector<Subspace> r(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        const int dn = t.out_dims[n];
        std::vector<Vec> seeds;
        if (n == 0 && dn > 0)
            seeds.push_back(unit);
        for (int a = 1; a < n; ++a)
            for (const auto& x : r[a].dense_basis())
                for (const auto& y : r[n - a].dense_basis())
                    seeds.push_back(combine(f, x, a, y, n - a, t));
        auto close = [&](Subspace s) {
            if (n > 0)
                return close_under_degree_zero(f, std::move(s), n, r[0], t, true);
            for (;;) {
                Subspace g = close_under_degree_zero(f, s, 0, s, t, true);
                if (g.dim() == s.dim())
                    return s;
                s = std::move(g);
            }
        };
        Subspace rn = close(Subspace::span(f, dn, seeds));
        for (int i = 0; i < dn; ++i) {
            Vec e = unit_vec(f, dn, i);
            if (rn.contains(e))
                continue;
            degs.push_back(n);
            rn = close(with(rn, {e}));
        }
        r[n] = std::move(rn);
    }
    return degs;
}

std::vector<int> module_generators(const Field& f, const ProductTable& act)
{
    std::vector<int> degs;
    const int cap = act.cap();
    std::vector<Subspace> s(cap + 1);
    Subspace ring0 = Subspace::full(f, act.right_dims.empty() ? 0 : act.right_dims[0]);
    for (int n = 0; n <= cap; ++n) {
        const int dn = act.out_dims[n];
        std::vector<Vec> seeds;
        for (int a = 0; a < n; ++a)
            for (const auto& x : s[a].dense_basis())
                for (int j = 0; j < act.right_dims[n - a]; ++j)
                    seeds.push_back(combine(f, x, a, unit_vec(f, act.right_dims[n - a], j), n - a, act));
        Subspace sn = Subspace::span(f, dn, seeds);
        sn = close_under_degree_zero(f, sn, n, ring0, act, false);
        for (int i = 0; i < dn; ++i) {
            Vec e = unit_vec(f, dn, i);
            if (sn.contains(e))
                continue;
            degs.push_back(n);
            sn = close_under_degree_zero(f, with(sn, {e}), n, ring0, act, false);
        }
        s[n] = std::move(sn);
    }
    return degs;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cohomology groups

Cohomology::Cohomology(std::shared_ptr<const CochainComplex> complex, int cap) : complex_(std::move(complex))
{
    const CochainComplex& c = *complex_;
    if (cap < 0 || cap >= static_cast<int>(c.d.size()))
        throw Error(ErrorCode::BadParameter, "cap " + std::to_string(cap) + " needs d^" + std::to_string(cap) +
                                                 " but the complex stops at degree " + std::to_string(c.top()));
    degrees_ = with_arith(c.field, [&](auto ar) { return compute_degrees(ar, c, cap); });
}

int Cohomology::dim(int n) const { return static_cast<int>(degrees_.at(n)->free.size()); }

std::vector<int> Cohomology::dims() const
{
    std::vector<int> out;
    for (const auto& d : degrees_)
        out.push_back(static_cast<int>(d->free.size()));
    return out;
}

const std::vector<SparseRow>& Cohomology::representatives(int n) const { return degrees_.at(n)->reps; }

CohomologyClass Cohomology::basis_class(int n, int i) const { return {n, representatives(n).at(i), complex_}; }

CohomologyClass Cohomology::from_coords(int n, const Vec& coords) const
{
    if (static_cast<int>(coords.size()) != dim(n))
        throw Error(ErrorCode::DimensionMismatch, "coordinate vector has the wrong length");
    SparseRow acc;
    const auto& reps = representatives(n);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero())
            for (const auto& [c, v] : reps[i])
                acc.emplace_back(c, coords[i] * v);
    canonicalize(acc);
    return {n, std::move(acc), complex_};
}

bool Cohomology::is_cocycle(int n, const SparseRow& x) const { return complex_->d.at(n).apply(x).empty(); }

Vec Cohomology::coords(int n, const SparseRow& x) const
{
    if (!is_cocycle(n, x))
        throw Error(ErrorCode::NotContained, "cochain of degree " + std::to_string(n) + " is not closed");
    const auto& data = *degrees_.at(n);
    SparseRow nf = data.reduce(x);
    Vec out = zero_vec(complex_->field, static_cast<int>(data.free.size()));
    for (const auto& [c, v] : nf) {
        auto it = std::lower_bound(data.free.begin(), data.free.end(), c);
        if (it != data.free.end() && *it == c)
            out[it - data.free.begin()] = v;
    }
    return out;
}

SparseRow Cohomology::coboundary(int n, const SparseRow& y) const
{
    if (n == 0)
        return {};
    return complex_->d.at(n - 1).apply(y);
}

Cohomology cohomology_groups(const CochainComplex& c, int cap)
{
    return Cohomology(std::make_shared<const CochainComplex>(c), cap);
}

// ---------------------------------------------------------------------------
// Pairings and cup products

Pairing Pairing::scalars(const Field& f)
{
    return Pairing{f, 1, 1, 1, {SparseRow{{0, f.one()}}}, "k x k -> k"};
}

Pairing Pairing::module_by_scalars(const ModuleRep& m)
{
    Pairing p{m.field, m.mdim, 1, m.mdim, {}, m.name + " x k -> " + m.name};
    for (int i = 0; i < m.mdim; ++i)
        p.table.push_back(SparseRow{{i, m.field.one()}});
    return p;
}

Pairing Pairing::algebra(const Algebra& a)
{
    Pairing p{a.field, a.dim, a.dim, a.dim, {}, "A x A -> A"};
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            p.table.push_back(a.product(i, j));
    return p;
}

Pairing Pairing::right_action(const ModuleRep& m, const Algebra& a)
{
    if (static_cast<int>(m.action.size()) != a.dim * a.dim)
        throw Error(ErrorCode::IncompatibleCoefficients, m.name + " is not a bimodule over the algebra");
    Pairing p{a.field, m.mdim, a.dim, m.mdim, {}, m.name + " x A -> " + m.name};
    for (int i = 0; i < m.mdim; ++i)
        for (int j = 0; j < a.dim; ++j)
            p.table.push_back(to_sparse(m.action[a.unit * a.dim + j].column(i)));
    return p;
}

SparseRow cup_cochains(const SparseRow& f, int p, const SparseRow& g, int q, int bar_factor, int left_mdim,
                       int right_mdim, const Pairing& mu)
{
    (void)p;
    const long long shift = ipow(bar_factor, q);
    const int out_m = mu.out_dim;
    SparseRow out;
    for (const auto& [fi, fv] : f) {
        const long long t1 = fi / left_mdim;
        const int m1 = fi % left_mdim;
        for (const auto& [gi, gv] : g) {
            const long long t2 = gi / right_mdim;
            const int m2 = gi % right_mdim;
            const long long base = (t1 * shift + t2) * out_m;
            Scalar c = fv * gv;
            for (const auto& [m3, mv] : mu(m1, m2))
                out.emplace_back(static_cast<int>(base + m3), c * mv);
        }
    }
    canonicalize(out);
    return out;
}

CohomologyClass cup_product(const CohomologyClass& f, const CohomologyClass& g, const Pairing& mu,
                            const Cohomology& target)
{
    const CochainComplex& cf = *f.complex;
    const CochainComplex& cg = *g.complex;
    const CochainComplex& ct = target.complex();
    require_bar(cf, "left factor");
    require_bar(cg, "right factor");
    require_bar(ct, "target");
    if (cf.bar_factor != cg.bar_factor || cf.bar_factor != ct.bar_factor)
        throw Error(ErrorCode::IncompatibleCoefficients, "factors come from different bar resolutions");
    if (cf.field != mu.field || cg.field != mu.field || ct.field != mu.field)
        throw Error(ErrorCode::IncompatibleCoefficients, "fields differ");
    if (cf.mdim != mu.left_dim || cg.mdim != mu.right_dim || ct.mdim != mu.out_dim)
        throw Error(ErrorCode::IncompatibleCoefficients, "pairing " + mu.name + " does not match the coefficient modules");
    const int n = f.degree + g.degree;
    if (n > target.cap())
        throw Error(ErrorCode::CapMismatch, "product degree exceeds the target cap");
    SparseRow r = cup_cochains(f.representative, f.degree, g.representative, g.degree, cf.bar_factor, cf.mdim, cg.mdim, mu);
    return {n, std::move(r), target.complex_ptr()};
}

CochainTransport make_transport(const FreeResolution& p, const FreeResolution& bar, const ModuleRep& m_base, int cap)
{
    CochainTransport t;
    ChainMap down = lift_chain_map(bar, p, cap);  // bar -> P
    ChainMap up = lift_chain_map(p, bar, cap);    // P -> bar
    for (int n = 0; n <= cap; ++n) {
        t.to_bar.push_back(induced_cochain_map(bar, p, down, m_base, n));
        t.from_bar.push_back(induced_cochain_map(p, bar, up, m_base, n));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Product tables

const Vec& ProductTable::at(int m, int i, int n, int j) const
{
    return entries.at(m).at(n).at(static_cast<std::size_t>(i) * right_dims.at(n) + j);
}

ProductTable make_product_table(const std::vector<int>& left_dims, const std::vector<int>& right_dims,
                                const std::vector<int>& out_dims, const ProductFn& product)
{
    ProductTable t{left_dims, right_dims, out_dims, {}};
    const int cap = t.cap();
    t.entries.resize(cap + 1);
    for (int m = 0; m <= cap && m < static_cast<int>(left_dims.size()); ++m) {
        t.entries[m].resize(cap - m + 1);
        for (int n = 0; m + n <= cap && n < static_cast<int>(right_dims.size()); ++n)
            for (int i = 0; i < left_dims[m]; ++i)
                for (int j = 0; j < right_dims[n]; ++j)
                    t.entries[m][n].push_back(product(m, i, n, j));
    }
    return t;
}

ProductFn bar_product(const Cohomology& left, const Cohomology& right, const Pairing& mu, const Cohomology& target)
{
    return [&left, &right, &mu, &target](int m, int i, int n, int j) {
        CohomologyClass c = cup_product(left.basis_class(m, i), right.basis_class(n, j), mu, target);
        return target.coords(c);
    };
}

ProductFn transported_product(const Cohomology& left, const CochainTransport& tl, const Cohomology& right,
                              const CochainTransport& tr, const Pairing& mu, const Cohomology& target,
                              const CochainTransport& tt, int bar_factor)
{
    return [&, bar_factor](int m, int i, int n, int j) {
        SparseRow f = tl.to_bar.at(m).apply(left.representatives(m).at(i));
        SparseRow g = tr.to_bar.at(n).apply(right.representatives(n).at(j));
        SparseRow fg = cup_cochains(f, m, g, n, bar_factor, mu.left_dim, mu.right_dim, mu);
        return target.coords(m + n, tt.from_bar.at(m + n).apply(fg));
    };
}

// ---------------------------------------------------------------------------
// Ring truncations

RingTruncation ring_truncation(const Algebra& a, RingMode mode, const std::vector<ModuleRep>& modules, int cap,
                               long long budget)
{
    if (cap < 0)
        throw Error(ErrorCode::BadParameter, "cap must be non-negative");
    const bool hh = mode == RingMode::Hochschild;
    FreeResolution res = normalized_bar(a, hh ? BarMode::Bimodule : BarMode::AugmentedLeft, cap + 1, budget);
    ModuleRep coeff = hh ? bimodule_rep(a) : trivial_module(a);
    Cohomology ring(std::make_shared<const CochainComplex>(hom_complex(res, coeff)), cap);
    Pairing mu = hh ? Pairing::algebra(a) : Pairing::scalars(a.field);

    RingTruncation t;
    t.field = a.field;
    t.mode = mode;
    t.cap = cap;
    t.dims = ring.dims();
    t.unit = ring.coords(0, to_sparse(hh ? a.one() : Vec{a.field.one()}));
    t.products = make_product_table(t.dims, t.dims, t.dims, bar_product(ring, ring, mu, ring));
    for (const auto& m : modules) {
        Cohomology hm(std::make_shared<const CochainComplex>(hom_complex(res, m)), cap);
        Pairing pm = hh ? Pairing::right_action(m, a) : Pairing::module_by_scalars(m);
        ModuleTable mt;
        mt.name = m.name;
        mt.dims = hm.dims();
        mt.action = make_product_table(mt.dims, t.dims, mt.dims, bar_product(hm, ring, pm, hm));
        t.modules.push_back(std::move(mt));
    }
    return t;
}

GeneratorDegrees generator_degrees(const RingTruncation& t)
{
    GeneratorDegrees g;
    g.ring = ring_generators(t.field, t.products, t.unit);
    for (const auto& m : t.modules)
        g.modules.push_back(module_generators(t.field, m.action));
    return g;
}

CommutativityReport graded_commutativity_check(const ProductTable& t)
{
    CommutativityReport rep;
    const int cap = t.cap();
    for (int m = 0; m <= cap; ++m)
        for (int n = m; m + n <= cap; ++n)
            for (int i = 0; i < t.left_dims[m]; ++i)
                for (int j = (m == n ? i : 0); j < t.left_dims[n]; ++j) {
                    ++rep.pairs_checked;
                    const Vec& x = t.at(m, i, n, j);
                    const Vec& y = t.at(n, j, m, i);
                    bool odd = (m * n) % 2 == 1;
                    bool ok = true;
                    for (std::size_t k = 0; k < x.size() && ok; ++k)
                        ok = x[k] == (odd ? -y[k] : y[k]);
                    if (!ok)
                        rep.violations.push_back({m, i, n, j});
                }
    return rep;
}

CommutativityReport graded_commutativity_check(const Algebra& a, RingMode mode, int cap)
{
    // H^*(A, k) of a bare augmented algebra need not be graded commutative.
    if (mode == RingMode::HopfTrivial && !a.hopf)
        throw Error(ErrorCode::BadParameter, "graded commutativity of H^*(A, k) needs a Hopf algebra; use Hochschild mode");
    return graded_commutativity_check(ring_truncation(a, mode, {}, cap).products);
}

std::vector<Subspace> graded_center_truncation(const Field& field, const ProductTable& t)
{
    const int cap = t.cap();
    std::vector<Subspace> out;
    for (int n = 0; n <= cap; ++n) {
        const int dn = t.out_dims[n];
        std::vector<SparseRow> eqs;
        for (int m = 0; n + m <= cap; ++m)
            for (int j = 0; j < t.out_dims[m]; ++j) {
                const bool odd = (n * m) % 2 == 1;
                for (int k = 0; k < t.out_dims[n + m]; ++k) {
                    SparseRow row;
                    for (int i = 0; i < dn; ++i) {
                        Scalar v = t.at(n, i, m, j)[k];
                        const Scalar& w = t.at(m, j, n, i)[k];
                        v = odd ? v + w : v - w;
                        if (!v.is_zero())
                            row.emplace_back(i, v);
                    }
                    if (!row.empty())
                        eqs.push_back(std::move(row));
                }
            }
        SparseMatrix sys(field, static_cast<int>(eqs.size()), dn);
        for (std::size_t r = 0; r < eqs.size(); ++r)
            sys.set_row(static_cast<int>(r), std::move(eqs[r]));
        out.push_back(kernel(sys));
    }
    return out;
}

std::vector<Subspace> graded_center_truncation(const RingTruncation& t)
{
    return graded_center_truncation(t.field, t.products);
}

// ---------------------------------------------------------------------------
// Finite-generation evidence

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::EvidenceFor: return "evidence_for";
    case Verdict::EvidenceAgainst: return "evidence_against";
    default: return "inconclusive";
    }
}

FGReport fg_report(const Algebra& a, FGMode mode, const std::vector<ModuleRep>& modules, int cap, long long budget)
{
    const bool hfg = mode == FGMode::HFG;
    if (hfg && !a.aug)
        throw Error(ErrorCode::MissingAugmentation, "hfg reports need an augmentation");
    std::vector<ModuleRep> ms = modules;
    if (ms.empty()) {
        if (hfg) {
            ms.push_back(trivial_module(a));
            ms.push_back(quotient_module(regular_module(a), radical(a), "A/rad A"));
        } else {
            ms.push_back(bimodule_rep(a));
        }
    }
    RingTruncation t = ring_truncation(a, hfg ? RingMode::HopfTrivial : RingMode::Hochschild, ms, cap, budget);
    GeneratorDegrees g = generator_degrees(t);

    FGReport r;
    r.mode = mode;
    r.cap = cap;
    r.dims = t.dims;
    r.ring_generator_degrees = g.ring;
    r.module_generator_degrees = g.modules;
    for (const auto& m : t.modules) {
        r.module_names.push_back(m.name);
        r.module_dims.push_back(m.dims);
    }
    std::set<int> late;
    int top = -1;
    auto scan = [&](const std::vector<int>& degs) {
        for (int d : degs) {
            top = std::max(top, d);
            if (2 * d > cap)
                late.insert(d);
        }
    };
    scan(g.ring);
    for (const auto& m : g.modules)
        scan(m);
    r.stable_from = top + 1;
    int window = cap - cap / 2;
    if (late.empty())
        r.verdict = Verdict::EvidenceFor;
    else if (cap >= 2 && static_cast<int>(late.size()) == window)
        r.verdict = Verdict::EvidenceAgainst;
    else
        r.verdict = Verdict::Inconclusive;
    r.notes.push_back("truncation evidence up to degree " + std::to_string(cap) + ", not a proof of noetherianity");
    std::string tested = "modules tested:";
    for (const auto& n : r.module_names)
        tested += " " + n;
    r.notes.push_back(tested);
    return r;
}

}  // namespace hopfcoh
