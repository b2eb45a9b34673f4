#include "hopfcoh/resolution.hpp"

#include <algorithm>
#include <map>

namespace hopfcoh {

namespace {

struct SparseAction {
    // entries (row, col, value) of each rho(e_s)
    std::vector<std::vector<std::tuple<int, int, Scalar>>> by_basis;
};

SparseAction sparse_action(const ModuleRep& m)
{
    SparseAction out;
    out.by_basis.resize(m.action.size());
    for (std::size_t s = 0; s < m.action.size(); ++s)
        for (int r = 0; r < m.mdim; ++r)
            for (int c = 0; c < m.mdim; ++c)
                if (!m.action[s](r, c).is_zero())
                    out.by_basis[s].emplace_back(r, c, m.action[s](r, c));
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

long long checked_power(long long base, int exp, long long limit)
{
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / std::max(base, 1LL))
            return limit + 1;
        r *= base;
    }
    return r;
}

void merge_row(AlgebraRow& row)
{
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    AlgebraRow out;
    for (auto& [j, e] : row) {
        if (!out.empty() && out.back().first == j)
            out.back().second.insert(out.back().second.end(), e.begin(), e.end());
        else
            out.emplace_back(j, std::move(e));
    }
    AlgebraRow clean;
    for (auto& [j, e] : out) {
        canonicalize(e);
        if (!e.empty())
            clean.emplace_back(j, std::move(e));
    }
    row = std::move(clean);
}

// a . y for a in the base algebra and y a k-vector of a free module of the given rank.
Vec act_on_free(const Algebra& base, const SparseRow& a, const Vec& y, int rank)
{
    const int d = base.dim;
    Vec out = zero_vec(base.field, rank * d);
    for (int j = 0; j < rank; ++j)
        for (int s = 0; s < d; ++s) {
            const Scalar& ys = y[j * d + s];
            if (ys.is_zero())
                continue;
            for (const auto& [c, ac] : a)
                for (const auto& [k, pc] : base.product(c, s))
                    out[j * d + k] += ys * ac * pc;
        }
    return out;
}

SparseMatrix augmentation_matrix(const FreeResolution& res)
{
    const int d = res.base.dim, r0 = res.ranks.at(0), md = res.target.mdim;
    SparseMatrix t(res.base.field, r0 * d, md);
    for (int i = 0; i < r0; ++i)
        for (int s = 0; s < d; ++s)
            t.set_row(i * d + s, to_sparse(res.target.action[s] * res.augmentation[i]));
    return t.transpose();
}

FreeResolution convert_user(const Algebra& a, const Normalized& n, ResolutionFlavor flavor, const std::vector<int>& ranks,
                            const std::vector<std::vector<AlgebraRow>>& diff, const std::vector<Vec>& augmentation)
{
    if (!a.aug)
        throw Error(ErrorCode::MissingAugmentation, "resolutions of k need an augmentation");
    FreeResolution res;
    res.source = a;
    res.base = n.algebra;
    res.module_change = n.p;
    res.mode = BarMode::AugmentedLeft;
    res.flavor = flavor;
    res.ranks = ranks;
    res.target = trivial_module(n.algebra);
    res.augmentation = augmentation;
    res.diff.resize(ranks.size());
    if (diff.size() < ranks.size())
        throw Error(ErrorCode::BadParameter, "missing differentials");
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        if (static_cast<int>(diff[k].size()) != ranks[k])
            throw Error(ErrorCode::BadParameter, "differential " + std::to_string(k) + " has the wrong number of rows");
        for (const auto& row : diff[k]) {
            AlgebraRow conv;
            for (const auto& [j, e] : row) {
                if (j < 0 || j >= ranks[k - 1])
                    throw Error(ErrorCode::BadParameter, "differential entry out of range");
                conv.emplace_back(j, to_sparse(n.p_inv * to_dense(e, a.field, a.dim)));
            }
            merge_row(conv);
            res.diff[k].push_back(std::move(conv));
        }
    }
    return res;
}

}  // namespace

FreeResolution normalized_bar(const Algebra& a, BarMode mode, int cap, long long budget)
{
    if (cap < 1)
        throw Error(ErrorCode::BadParameter, "cap must be at least 1");
    if (mode == BarMode::AugmentedLeft && !a.aug)
        throw Error(ErrorCode::MissingAugmentation, "augmented bar resolution needs an augmentation");
    const int d = a.dim, ab = d - 1;
    long long top = checked_power(ab, cap, budget);
    if (top > budget)
        throw Error(ErrorCode::BudgetExceeded,
                    "rank (dim A - 1)^" + std::to_string(cap) + " = " + (top > budget ? ">" + std::to_string(budget) : std::to_string(top)) +
                        " exceeds the term budget " + std::to_string(budget));
    Normalized n = normalize(a);
    const Algebra& an = n.algebra;
    FreeResolution res;
    res.source = a;
    res.mode = mode;
    res.flavor = ResolutionFlavor::Bar;
    res.base_bar_factor = ab;
    if (mode == BarMode::AugmentedLeft) {
        res.base = an;
        res.module_change = n.p;
        res.target = trivial_module(an);
        res.augmentation = {Vec{a.field.one()}};
    } else {
        res.base = enveloping(an);
        res.module_change = kron(n.p, n.p);
        res.target = change_basis(bimodule_rep(a), res.module_change);
        res.augmentation = {a.one()};
    }
    res.ranks.resize(cap + 1);
    for (int k = 0; k <= cap; ++k)
        res.ranks[k] = static_cast<int>(checked_power(ab, k, budget));
    res.diff.resize(cap + 1);
    const Scalar one = a.field.one();
    for (int k = 1; k <= cap; ++k) {
        const int rk = res.ranks[k];
        const int lower = res.ranks[k - 1];
        std::vector<int> digits(k);
        res.diff[k].resize(rk);
        for (int t = 0; t < rk; ++t) {
            for (int p = k - 1, x = t; p >= 0; --p, x /= ab)
                digits[p] = x % ab;
            AlgebraRow row;
            // a_1 . [a_2 | ... | a_k]
            int first = digits[0] + 1;
            int tail = t % lower;
            row.emplace_back(tail, SparseRow{{mode == BarMode::AugmentedLeft ? first : first * d, one}});
            // (-1)^i [ ... | a_i a_{i+1} | ... ], unit components dropped
            for (int i = 1; i < k; ++i) {
                Scalar sign = (i % 2) ? -one : one;
                for (const auto& [m, c] : an.product(digits[i - 1] + 1, digits[i] + 1)) {
                    if (m == 0)
                        continue;
                    int idx = 0;
                    for (int p = 0; p < k; ++p) {
                        if (p == i)
                            continue;
                        idx = idx * ab + (p == i - 1 ? m - 1 : digits[p]);
                    }
                    row.emplace_back(idx, SparseRow{{0, sign * c}});
                }
            }
            // (-1)^k [a_1 | ... | a_{k-1}] . a_k (vanishes on k since eps(a_k) = 0)
            if (mode == BarMode::Bimodule) {
                Scalar sign = (k % 2) ? -one : one;
                row.emplace_back(t / ab, SparseRow{{digits[k - 1] + 1, sign}});
            }
            merge_row(row);
            res.diff[k][t] = std::move(row);
        }
    }
    return res;
}

FreeResolution periodic_resolution(const Algebra& a, const std::vector<Vec>& elements, int length)
{
    if (elements.empty() || length < 1)
        throw Error(ErrorCode::BadParameter, "periodic resolution needs elements and length >= 1");
    Normalized n = normalize(a);
    std::vector<int> ranks(length + 1, 1);
    std::vector<std::vector<AlgebraRow>> diff(length + 1);
    for (int k = 1; k <= length; ++k)
        diff[k] = {AlgebraRow{{0, to_sparse(elements[(k - 1) % elements.size()])}}};
    return convert_user(a, n, ResolutionFlavor::Periodic, ranks, diff, {Vec{a.field.one()}});
}

FreeResolution user_resolution(const Algebra& a, const std::vector<int>& ranks,
                               const std::vector<std::vector<AlgebraRow>>& diff, const std::vector<Vec>& augmentation)
{
    if (ranks.empty() || static_cast<int>(augmentation.size()) != ranks[0])
        throw Error(ErrorCode::BadParameter, "augmentation must give one image per generator of P_0");
    return convert_user(a, normalize(a), ResolutionFlavor::User, ranks, diff, augmentation);
}

SparseMatrix expand_differential(const FreeResolution& res, int n)
{
    const Algebra& b = res.base;
    const int d = b.dim;
    const int rn = res.ranks.at(n), rl = res.ranks.at(n - 1);
    SparseMatrix t(b.field, rn * d, rl * d);
    for (int i = 0; i < rn; ++i)
        for (int s = 0; s < d; ++s) {
            SparseRow row;
            for (const auto& [j, e] : res.diff[n][i])
                for (const auto& [c, ec] : e)
                    for (const auto& [k, pc] : b.product(s, c))
                        row.emplace_back(j * d + k, ec * pc);
            canonicalize(row);
            t.set_row(i * d + s, std::move(row));
        }
    return t.transpose();
}

bool ExactnessReport::exact() const
{
    if (augmentation_cokernel != 0 || !square_failures.empty())
        return false;
    return std::all_of(defect.begin(), defect.end(), [](int x) { return x == 0; });
}

ExactnessReport verify_resolution(const FreeResolution& res, int cap)
{
    ExactnessReport rep;
    const int d = res.base.dim;
    const int upto = std::min(cap, res.length() - 1);
    std::vector<SparseMatrix> maps;  // maps[n] : P_n -> P_{n-1}, maps[0] the augmentation
    maps.push_back(augmentation_matrix(res));
    for (int n = 1; n <= upto + 1 && n <= res.length(); ++n)
        maps.push_back(expand_differential(res, n));
    std::vector<int> rk;
    for (const auto& m : maps)
        rk.push_back(rank(m));
    rep.augmentation_cokernel = res.target.mdim - rk[0];
    for (int n = 0; n <= upto; ++n) {
        int ker = res.ranks[n] * d - rk[n];
        rep.defect.push_back(ker - rk[n + 1]);
    }
    for (std::size_t n = 1; n < maps.size(); ++n)
        if (!(maps[n - 1] * maps[n]).is_zero())
            rep.square_failures.push_back(static_cast<int>(n));
    return rep;
}

ModuleRep to_base(const FreeResolution& res, const ModuleRep& m)
{
    if (static_cast<int>(m.action.size()) != res.module_change.rows() || m.field != res.base.field)
        throw Error(ErrorCode::BaseMismatch, "module " + m.name + " is not a module over the resolved algebra");
    return change_basis(m, res.module_change);
}

CochainComplex hom_complex(const FreeResolution& res, const ModuleRep& m) { return hom_complex_base(res, to_base(res, m)); }

CochainComplex hom_complex_base(const FreeResolution& res, const ModuleRep& m)
{
    if (static_cast<int>(m.action.size()) != res.base.dim || m.field != res.base.field)
        throw Error(ErrorCode::BaseMismatch, "module " + m.name + " is not a module over the resolution base");
    const int md = m.mdim;
    SparseAction sa = sparse_action(m);
    CochainComplex c;
    c.field = res.base.field;
    c.provenance = (res.flavor == ResolutionFlavor::Bar ? "bar" : res.flavor == ResolutionFlavor::Periodic ? "periodic" : "user") +
                   std::string(res.mode == BarMode::Bimodule ? "/bimodule" : "/left") + " with coefficients " + m.name;
    if (res.flavor == ResolutionFlavor::Bar) {
        c.bar_factor = res.base_bar_factor;
        c.mdim = md;
    }
    for (int n = 0; n <= res.length(); ++n)
        c.dims.push_back(res.ranks[n] * md);
    for (int n = 0; n < res.length(); ++n) {
        const int rows = res.ranks[n + 1];
        SparseMatrix dm(c.field, rows * md, res.ranks[n] * md);
        std::vector<SparseRow> acc(md);
        for (int i = 0; i < rows; ++i) {
            for (auto& r : acc)
                r.clear();
            for (const auto& [j, e] : res.diff[n + 1][i])
                for (const auto& [s, es] : e)
                    for (const auto& [r, col, v] : sa.by_basis[s])
                        acc[r].emplace_back(j * md + col, es * v);
            for (int r = 0; r < md; ++r) {
                canonicalize(acc[r]);
                dm.set_row(i * md + r, std::move(acc[r]));
                acc[r] = SparseRow{};
            }
        }
        c.d.push_back(std::move(dm));
    }
    return c;
}

ChainMap lift_chain_map(const FreeResolution& p, const FreeResolution& q, int cap)
{
    if (!(p.source == q.source) || p.mode != q.mode)
        throw Error(ErrorCode::NotSameTarget, "resolutions resolve different modules or live over different algebras");
    if (cap > p.length() || cap > q.length())
        throw Error(ErrorCode::BadParameter, "cap exceeds a resolution's length");
    const Algebra& b = p.base;
    const int d = b.dim;
    ChainMap out;
    out.phi.resize(cap + 1);
    {
        auto rr = row_reduce(augmentation_matrix(q));
        for (int i = 0; i < p.ranks[0]; ++i) {
            auto x = rr.solve(p.augmentation[i]);
            if (!x)
                throw Error(ErrorCode::LiftFailed, "augmentation of the target resolution is not onto");
            out.phi[0].push_back(std::move(*x));
        }
    }
    for (int n = 1; n <= cap; ++n) {
        auto rr = row_reduce(expand_differential(q, n));
        for (int i = 0; i < p.ranks[n]; ++i) {
            Vec rhs = zero_vec(b.field, q.ranks[n - 1] * d);
            for (const auto& [j, e] : p.diff[n][i])
                rhs = add(rhs, act_on_free(b, e, out.phi[n - 1][j], q.ranks[n - 1]));
            auto x = rr.solve(rhs);
            if (!x)
                throw Error(ErrorCode::LiftFailed, "no lift in degree " + std::to_string(n));
            out.phi[n].push_back(std::move(*x));
        }
    }
    return out;
}

SparseMatrix induced_cochain_map(const FreeResolution& p, const FreeResolution& q, const ChainMap& phi,
                                 const ModuleRep& m, int n)
{
    const int d = p.base.dim, md = m.mdim;
    SparseAction sa = sparse_action(m);
    SparseMatrix out(p.base.field, p.ranks[n] * md, q.ranks[n] * md);
    std::vector<SparseRow> acc(md);
    for (int i = 0; i < p.ranks[n]; ++i) {
        const Vec& y = phi.phi[n][i];
        for (int j = 0; j < q.ranks[n]; ++j)
            for (int s = 0; s < d; ++s) {
                const Scalar& v = y[j * d + s];
                if (v.is_zero())
                    continue;
                for (const auto& [r, col, a] : sa.by_basis[s])
                    acc[r].emplace_back(j * md + col, v * a);
            }
        for (int r = 0; r < md; ++r) {
            canonicalize(acc[r]);
            out.set_row(i * md + r, std::move(acc[r]));
            acc[r] = SparseRow{};
        }
    }
    return out;
}

}  // namespace hopfcoh
