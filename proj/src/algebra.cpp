#include "hopfcoh/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace hopfcoh {

namespace {

void accumulate(Vec& out, const SparseRow& row, const Scalar& f)
{
    for (const auto& [k, c] : row)
        out[k] += f * c;
}

std::string index_list(const std::vector<int>& idx)
{
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

// Kernel of the stacked maps, each an n x n matrix acting on column vectors.
Subspace joint_kernel(const Field& field, int n, const std::vector<Matrix>& maps)
{
    SparseMatrix big(field, static_cast<int>(maps.size()) * n, n);
    int r = 0;
    for (const auto& m : maps)
        for (int i = 0; i < n; ++i, ++r) {
            SparseRow row;
            for (int j = 0; j < n; ++j)
                if (!m(i, j).is_zero())
                    row.emplace_back(j, m(i, j));
            big.set_row(r, std::move(row));
        }
    return kernel(big);
}

Subspace zero_subspace(const Field& f, int n) { return Subspace(f, n); }

// Span of all products a b with a in x, b in y.
Subspace product_space(const Algebra& a, const Subspace& x, const Subspace& y)
{
    std::vector<Vec> prods;
    auto xb = x.dense_basis(), yb = y.dense_basis();
    for (const auto& u : xb)
        for (const auto& v : yb)
            prods.push_back(a.mul(u, v));
    return Subspace::span(a.field, a.dim, prods);
}

// Powers of s until zero; nullopt when they stabilize at a nonzero space.
std::optional<int> nilpotency_index(const Algebra& a, const Subspace& s)
{
    Subspace cur = s;
    int k = 1;
    while (cur.dim() > 0) {
        Subspace next = product_space(a, cur, s);
        if (next.dim() == cur.dim())
            return std::nullopt;
        cur = std::move(next);
        ++k;
    }
    return k - 1;
}

Matrix trace_form(const Algebra& a)
{
    std::vector<Scalar> tr(a.dim, a.field.zero());
    for (int k = 0; k < a.dim; ++k)
        for (int j = 0; j < a.dim; ++j)
            for (const auto& [m, c] : a.product(k, j))
                if (m == j)
                    tr[k] += c;
    Matrix g(a.field, a.dim, a.dim);
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y)
            for (const auto& [k, c] : a.product(x, y))
                g(x, y) += c * tr[k];
    return g;
}

bool dickson_applies(const Field& f, int dim) { return f.characteristic() == 0 || f.characteristic() > static_cast<std::uint32_t>(dim); }

std::string tensor_label(const std::string& a, const std::string& b, const char* sep)
{
    if (a == "1" && b == "1")
        return "1";
    if (b == "1")
        return a;
    if (a == "1")
        return b;
    return a + sep + b;
}

// Labels built from two factors; falls back to the explicit pair form on clashes.
std::vector<std::string> pair_labels(const std::vector<std::string>& la, const std::vector<std::string>& lb, const char* sep)
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    bool clash = false;
    for (const auto& a : la)
        for (const auto& b : lb) {
            out.push_back(tensor_label(a, b, sep));
            clash |= !seen.insert(out.back()).second;
        }
    if (clash) {
        out.clear();
        for (const auto& a : la)
            for (const auto& b : lb)
                out.push_back(a == "1" && b == "1" ? "1" : a + sep + b);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

Vec Algebra::mul(const Vec& a, const Vec& b) const
{
    Vec out = zero_vec(field, dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; j < dim; ++j)
            if (!b[j].is_zero())
                accumulate(out, product(i, j), a[i] * b[j]);
    }
    return out;
}

Matrix Algebra::left_mult(const Vec& a) const
{
    Matrix m(field, dim, dim);
    for (int j = 0; j < dim; ++j)
        m.set_column(j, mul(a, basis(j)));
    return m;
}

Matrix Algebra::right_mult(const Vec& a) const
{
    Matrix m(field, dim, dim);
    for (int j = 0; j < dim; ++j)
        m.set_column(j, mul(basis(j), a));
    return m;
}

Scalar Algebra::eps(const Vec& a) const
{
    if (!aug)
        throw Error(ErrorCode::MissingAugmentation, "algebra has no augmentation");
    Scalar s = field.zero();
    for (int i = 0; i < dim; ++i)
        s += a[i] * aug->eps[i];
    return s;
}

Vec Algebra::tensor_mul(const Vec& x, const Vec& y) const
{
    Vec out = zero_vec(field, dim * dim);
    for (int p = 0; p < dim * dim; ++p) {
        if (x[p].is_zero())
            continue;
        int a = p / dim, b = p % dim;
        for (int q = 0; q < dim * dim; ++q) {
            if (y[q].is_zero())
                continue;
            int c = q / dim, d = q % dim;
            Scalar f = x[p] * y[q];
            for (const auto& [k1, c1] : product(a, c))
                for (const auto& [k2, c2] : product(b, d))
                    out[k1 * dim + k2] += f * c1 * c2;
        }
    }
    return out;
}

Vec Algebra::comult(const Vec& a) const
{
    if (!hopf)
        throw Error(ErrorCode::BadParameter, "algebra has no Hopf structure");
    Vec out = zero_vec(field, dim * dim);
    for (int i = 0; i < dim; ++i)
        if (!a[i].is_zero())
            accumulate(out, hopf->comult[i], a[i]);
    return out;
}

Vec Algebra::antipode(const Vec& a) const
{
    if (!hopf)
        throw Error(ErrorCode::BadParameter, "algebra has no Hopf structure");
    return hopf->antipode * a;
}

int Algebra::index_of(const std::string& label) const
{
    auto it = std::find(labels.begin(), labels.end(), label);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::string Algebra::element_string(const Vec& v) const
{
    std::string s;
    for (int i = 0; i < dim; ++i) {
        if (v[i].is_zero())
            continue;
        std::string c = v[i].to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (neg)
            c = c.substr(1);
        if (!s.empty())
            s += neg ? " - " : " + ";
        else if (neg)
            s += "-";
        if (c != "1")
            s += c + "*";
        s += labels[i];
    }
    return s.empty() ? "0" : s;
}

bool operator==(const Algebra& a, const Algebra& b)
{
    if (a.field != b.field || a.dim != b.dim || a.unit != b.unit || a.labels != b.labels || a.mult != b.mult)
        return false;
    if (a.aug.has_value() != b.aug.has_value() || (a.aug && a.aug->eps != b.aug->eps))
        return false;
    if (a.hopf.has_value() != b.hopf.has_value())
        return false;
    return !a.hopf || (a.hopf->comult == b.hopf->comult && a.hopf->antipode == b.hopf->antipode);
}

Matrix ModuleRep::act(const Vec& a) const
{
    Matrix m(field, mdim, mdim);
    for (std::size_t i = 0; i < action.size(); ++i)
        if (!a[i].is_zero())
            m = m + action[i].scaled(a[i]);
    return m;
}

// ---------------------------------------------------------------------------
// Validation

void ValidationReport::add(std::string kind, std::vector<int> indices, std::string detail)
{
    violations.push_back({std::move(kind), std::move(indices), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other)
{
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

ValidationReport validate(const Algebra& a)
{
    ValidationReport rep;
    const int n = a.dim;
    if (static_cast<int>(a.labels.size()) != n)
        rep.add("labels", {}, "expected " + std::to_string(n) + " labels");
    else {
        std::set<std::string> seen;
        for (int i = 0; i < n; ++i)
            if (!seen.insert(a.labels[i]).second)
                rep.add("duplicate_label", {i}, a.labels[i]);
    }
    if (static_cast<int>(a.mult.size()) != n * n) {
        rep.add("mult_shape", {}, "expected dim^2 product entries");
        return rep;
    }
    if (a.unit < 0 || a.unit >= n) {
        rep.add("unit", {a.unit}, "unit index out of range");
        return rep;
    }
    if (static_cast<int>(a.labels.size()) == n && a.labels[a.unit] != "1")
        rep.add("unit_label", {a.unit}, "unit must be labeled 1");

    for (int j = 0; j < n; ++j) {
        SparseRow ej{{j, a.field.one()}};
        if (a.product(a.unit, j) != ej)
            rep.add("left_unit", {j}, "1*" + a.labels[j] + " != " + a.labels[j]);
        if (a.product(j, a.unit) != ej)
            rep.add("right_unit", {j}, a.labels[j] + "*1 != " + a.labels[j]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = zero_vec(a.field, n), rhs = zero_vec(a.field, n);
                for (const auto& [m, c] : a.product(i, j))
                    accumulate(lhs, a.product(m, k), c);
                for (const auto& [m, c] : a.product(j, k))
                    accumulate(rhs, a.product(i, m), c);
                if (lhs != rhs)
                    rep.add("associativity", {i, j, k},
                            "(" + a.labels[i] + "*" + a.labels[j] + ")*" + a.labels[k] + " != " + a.labels[i] + "*(" +
                                a.labels[j] + "*" + a.labels[k] + ")");
            }

    if (a.aug) {
        const Vec& e = a.aug->eps;
        if (static_cast<int>(e.size()) != n) {
            rep.add("augmentation_shape", {});
            return rep;
        }
        if (!e[a.unit].is_one())
            rep.add("augmentation_unit", {a.unit}, "eps(1) != 1");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar lhs = a.field.zero();
                for (const auto& [k, c] : a.product(i, j))
                    lhs += c * e[k];
                if (lhs != e[i] * e[j])
                    rep.add("augmentation_multiplicative", {i, j});
            }
    }

    if (a.hopf) {
        const auto& h = *a.hopf;
        if (!a.aug) {
            rep.add("hopf_counit", {}, "Hopf structure needs a counit (augmentation)");
            return rep;
        }
        if (static_cast<int>(h.comult.size()) != n || h.antipode.rows() != n || h.antipode.cols() != n) {
            rep.add("hopf_shape", {});
            return rep;
        }
        const int n2 = n * n;
        for (int i = 0; i < n; ++i) {
            Vec d = a.comult(a.basis(i));
            // Coassociativity in A^(x)3, index (x*n + y)*n + z.
            Vec left = zero_vec(a.field, n2 * n), right = zero_vec(a.field, n2 * n);
            for (int p = 0; p < n2; ++p) {
                if (d[p].is_zero())
                    continue;
                int x = p / n, y = p % n;
                for (const auto& [q, c] : h.comult[x])
                    left[q * n + y] += d[p] * c;
                for (const auto& [q, c] : h.comult[y])
                    right[x * n2 + q] += d[p] * c;
            }
            if (left != right)
                rep.add("coassociativity", {i});
            Vec cl = zero_vec(a.field, n), cr = zero_vec(a.field, n);
            for (int p = 0; p < n2; ++p) {
                if (d[p].is_zero())
                    continue;
                int x = p / n, y = p % n;
                cl[y] += d[p] * a.aug->eps[x];
                cr[x] += d[p] * a.aug->eps[y];
            }
            if (cl != a.basis(i) || cr != a.basis(i))
                rep.add("counit", {i});
            Vec sl = zero_vec(a.field, n), sr = zero_vec(a.field, n);
            for (int p = 0; p < n2; ++p) {
                if (d[p].is_zero())
                    continue;
                int x = p / n, y = p % n;
                Vec sx = h.antipode.column(x), sy = h.antipode.column(y);
                sl = add(sl, scale(d[p], a.mul(sx, a.basis(y))));
                sr = add(sr, scale(d[p], a.mul(a.basis(x), sy)));
            }
            Vec target = scale(a.aug->eps[i], a.one());
            if (sl != target || sr != target)
                rep.add("antipode", {i}, "S(a_1)a_2 = eps(a)1 = a_1 S(a_2) fails on " + a.labels[i]);
        }
        Vec one2 = zero_vec(a.field, n2);
        one2[a.unit * n + a.unit] = a.field.one();
        if (a.comult(a.one()) != one2)
            rep.add("comult_unit", {a.unit});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec lhs = zero_vec(a.field, n2);
                for (const auto& [k, c] : a.product(i, j))
                    accumulate(lhs, h.comult[k], c);
                if (lhs != a.tensor_mul(a.comult(a.basis(i)), a.comult(a.basis(j))))
                    rep.add("comult_multiplicative", {i, j});
            }
    }
    return rep;
}

ValidationReport validate_module(const Algebra& a, const ModuleRep& m)
{
    ValidationReport rep;
    if (static_cast<int>(m.action.size()) != a.dim) {
        rep.add("module_shape", {}, "module " + m.name + " has " + std::to_string(m.action.size()) + " action matrices");
        return rep;
    }
    if (m.field != a.field) {
        rep.add("module_field", {});
        return rep;
    }
    if (!(m.action[a.unit] == Matrix::identity(a.field, m.mdim)))
        rep.add("module_unit", {a.unit}, "rho(1) != id in module " + m.name);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Matrix rhs(a.field, m.mdim, m.mdim);
            for (const auto& [k, c] : a.product(i, j))
                rhs = rhs + m.action[k].scaled(c);
            if (!(m.action[i] * m.action[j] == rhs))
                rep.add("module_action", {i, j}, "rho(e_i)rho(e_j) != rho(e_i e_j) in module " + m.name);
        }
    return rep;
}

ValidationReport validate_action(const HAction& act)
{
    const Algebra& h = act.hopf;
    const Algebra& r = act.target;
    ValidationReport rep = validate(h);
    rep.merge(validate(r));
    if (!h.hopf) {
        rep.add("action_hopf", {}, "acting algebra has no Hopf structure");
        return rep;
    }
    if (act.rep.mdim != r.dim) {
        rep.add("action_shape", {});
        return rep;
    }
    rep.merge(validate_module(h, act.rep));
    if (!rep.ok())
        return rep;
    for (int x = 0; x < h.dim; ++x) {
        Vec d = h.comult(h.basis(x));
        // h . 1 = eps(h) 1
        if (act.rep.action[x].column(r.unit) != scale(h.aug->eps[x], r.one()))
            rep.add("action_unit", {x});
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < r.dim; ++j) {
                Vec lhs = act.rep.action[x] * r.mul(r.basis(i), r.basis(j));
                Vec rhs = zero_vec(r.field, r.dim);
                for (int p = 0; p < h.dim * h.dim; ++p)
                    if (!d[p].is_zero())
                        rhs = add(rhs, scale(d[p], r.mul(act.rep.action[p / h.dim].column(i),
                                                         act.rep.action[p % h.dim].column(j))));
                if (lhs != rhs)
                    rep.add("module_algebra", {x, i, j});
            }
        if (act.augmentation_preserving && r.aug)
            for (int i = 0; i < r.dim; ++i)
                if (r.eps(act.rep.action[x].column(i)) != h.aug->eps[x] * r.aug->eps[i])
                    rep.add("action_augmentation", {x, i});
    }
    return rep;
}

ValidationReport validate_filtration(const Algebra& a, const AlgebraFiltration& f)
{
    ValidationReport rep;
    const auto& L = f.layers;
    if (L.empty()) {
        rep.add("filtration_empty", {});
        return rep;
    }
    for (std::size_t i = 0; i < L.size(); ++i)
        if (L[i].ambient_dim() != a.dim || L[i].field() != a.field) {
            rep.add("filtration_shape", {static_cast<int>(i)});
            return rep;
        }
    bool inc = f.direction == FiltrationDirection::Increasing;
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
        const Subspace& small = inc ? L[i] : L[i + 1];
        const Subspace& big = inc ? L[i + 1] : L[i];
        if (!big.contains(small))
            rep.add("filtration_nested", {static_cast<int>(i)});
    }
    const Subspace& top = inc ? L.back() : L.front();
    if (top.dim() != a.dim)
        rep.add("filtration_exhaustive", {}, "filtration does not reach A");
    if (!inc && L.back().dim() != 0)
        rep.add("filtration_terminates", {}, "decreasing filtration does not end at 0");
    int m = static_cast<int>(L.size());
    auto layer = [&](int k) -> const Subspace* {
        if (inc)
            return &L[std::min(k, m - 1)];
        return k < m ? &L[k] : nullptr;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Subspace prod = product_space(a, L[i], L[j]);
            const Subspace* target = layer(i + j);
            if (target ? !target->contains(prod) : prod.dim() != 0)
                rep.add("filtration_multiplicative", {i, j});
        }
    if (a.aug) {
        if (inc) {
            // eps must vanish on each gr_n, n > 0; that holds exactly when 1 is in A_0.
            if (!L[0].contains(a.one()))
                rep.add("filtration_augmentation", {0}, "1 is not in A_0");
        } else if (m > 1) {
            for (const auto& v : L[1].dense_basis())
                if (!a.eps(v).is_zero()) {
                    rep.add("filtration_augmentation", {1}, "eps does not vanish on A_1");
                    break;
                }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Constructors

Algebra group_algebra(const std::vector<std::vector<int>>& table, const Field& field, std::vector<std::string> labels)
{
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw Error(ErrorCode::NotAGroup, "empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::NotAGroup, "table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw Error(ErrorCode::NotAGroup, "closure: entry out of range");
    }
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            ok = table[c][j] == j && table[j][c] == j;
        if (ok)
            e = c;
    }
    if (e < 0)
        throw Error(ErrorCode::NotAGroup, "identity: no two-sided identity element");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw Error(ErrorCode::NotAGroup, "associativity fails at " + index_list({i, j, k}));
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (table[i][j] == e && table[j][i] == e)
                inv[i] = j;
    for (int i = 0; i < n; ++i)
        if (inv[i] < 0)
            throw Error(ErrorCode::NotAGroup, "inverses: element " + std::to_string(i) + " has no inverse");

    Algebra a;
    a.field = field;
    a.dim = n;
    a.unit = e;
    if (labels.empty())
        for (int i = 0; i < n; ++i)
            labels.push_back(i == e ? "1" : "g" + std::to_string(i));
    a.labels = std::move(labels);
    a.mult.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.mult[static_cast<std::size_t>(i) * n + j] = {{table[i][j], field.one()}};
    a.aug = Augmentation{Vec(n, field.one())};
    HopfData h;
    h.comult.resize(n);
    h.antipode = Matrix(field, n, n);
    for (int i = 0; i < n; ++i) {
        h.comult[i] = {{i * n + i, field.one()}};
        h.antipode(inv[i], i) = field.one();
    }
    a.hopf = std::move(h);
    return a;
}

Algebra cyclic_group_algebra(int n, const Field& field)
{
    if (n < 1)
        throw Error(ErrorCode::BadParameter, "cyclic group order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            table[i][j] = (i + j) % n;
        labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return group_algebra(table, field, labels);
}

Algebra quantum_complete_intersection(const std::vector<int>& n, const std::vector<std::vector<Scalar>>& q, const Field& field)
{
    const int t = static_cast<int>(n.size());
    if (t < 1)
        throw Error(ErrorCode::BadParameter, "need at least one variable");
    for (int i = 0; i < t; ++i)
        if (n[i] < 2)
            throw Error(ErrorCode::BadParameter, "nilpotency order N_" + std::to_string(i + 1) + " < 2");
    std::vector<std::vector<Scalar>> qinv(t, std::vector<Scalar>(t, field.one()));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (static_cast<int>(q.size()) <= i || static_cast<int>(q[i].size()) <= j)
                throw Error(ErrorCode::BadParameter, "q matrix too small");
            if (q[i][j].field() != field)
                throw Error(ErrorCode::FieldMismatch, "q entries must lie in the base field");
            if (q[i][j].is_zero())
                throw Error(ErrorCode::BadParameter, "q_" + std::to_string(i + 1) + std::to_string(j + 1) + " = 0");
            qinv[i][j] = q[i][j].inverse();
        }
    int dim = 1;
    for (int v : n)
        dim *= v;
    auto exps = [&](int idx) {
        std::vector<int> e(t);
        for (int i = t - 1; i >= 0; --i) {
            e[i] = idx % n[i];
            idx /= n[i];
        }
        return e;
    };
    auto index = [&](const std::vector<int>& e) {
        int idx = 0;
        for (int i = 0; i < t; ++i)
            idx = idx * n[i] + e[i];
        return idx;
    };
    Algebra a;
    a.field = field;
    a.dim = dim;
    a.unit = 0;
    for (int idx = 0; idx < dim; ++idx) {
        auto e = exps(idx);
        std::string s;
        for (int i = 0; i < t; ++i) {
            if (!e[i])
                continue;
            s += (t == 1 ? "x" : "x" + std::to_string(i + 1));
            if (e[i] > 1)
                s += "^" + std::to_string(e[i]);
        }
        a.labels.push_back(s.empty() ? "1" : s);
    }
    a.mult.resize(static_cast<std::size_t>(dim) * dim);
    for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y) {
            auto ea = exps(x), eb = exps(y);
            std::vector<int> s(t);
            bool zero = false;
            for (int i = 0; i < t; ++i) {
                s[i] = ea[i] + eb[i];
                zero |= s[i] >= n[i];
            }
            if (zero)
                continue;
            // Moving x_j^{b_j} left past x_i^{a_i} (i > j) costs q_{ji}^{-a_i b_j}.
            Scalar c = field.one();
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < i; ++j)
                    if (ea[i] && eb[j])
                        c *= qinv[j][i].pow(static_cast<long long>(ea[i]) * eb[j]);
            a.mult[static_cast<std::size_t>(x) * dim + y] = {{index(s), c}};
        }
    a.aug = Augmentation{unit_vec(field, dim, 0)};
    return a;
}

Algebra taft_algebra(int n, const Scalar& q)
{
    if (n < 2)
        throw Error(ErrorCode::BadParameter, "Taft algebra needs n >= 2");
    const Field& f = q.field();
    for (int j = 1; j < n; ++j)
        if (q.pow(j).is_one())
            throw Error(ErrorCode::NotPrimitiveRoot, q.to_string() + " has order " + std::to_string(j));
    if (!q.pow(n).is_one())
        throw Error(ErrorCode::NotPrimitiveRoot, q.to_string() + "^" + std::to_string(n) + " != 1");
    const int dim = n * n;
    auto idx = [n](int ga, int xb) { return ga * n + xb; };
    Algebra a;
    a.field = f;
    a.dim = dim;
    a.unit = 0;
    for (int ga = 0; ga < n; ++ga)
        for (int xb = 0; xb < n; ++xb) {
            std::string s;
            if (ga)
                s += ga == 1 ? "g" : "g^" + std::to_string(ga);
            if (xb)
                s += xb == 1 ? "x" : "x^" + std::to_string(xb);
            a.labels.push_back(s.empty() ? "1" : s);
        }
    a.mult.resize(static_cast<std::size_t>(dim) * dim);
    // (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}
    for (int ga = 0; ga < n; ++ga)
        for (int xb = 0; xb < n; ++xb)
            for (int gc = 0; gc < n; ++gc)
                for (int xd = 0; xd < n; ++xd) {
                    if (xb + xd >= n)
                        continue;
                    a.mult[static_cast<std::size_t>(idx(ga, xb)) * dim + idx(gc, xd)] = {
                        {idx((ga + gc) % n, xb + xd), q.pow(static_cast<long long>(xb) * gc)}};
                }
    Vec eps = zero_vec(f, dim);
    for (int ga = 0; ga < n; ++ga)
        eps[idx(ga, 0)] = f.one();
    a.aug = Augmentation{eps};

    Vec g = a.basis(idx(1, 0)), x = a.basis(idx(0, 1));
    Vec dg = zero_vec(f, dim * dim), dx = zero_vec(f, dim * dim);
    dg[idx(1, 0) * dim + idx(1, 0)] = f.one();
    dx[idx(0, 1) * dim + 0] = f.one();
    dx[idx(1, 0) * dim + idx(0, 1)] = f.one();
    Vec sg = a.basis(idx(n - 1, 0));
    Vec sx = scale(-f.one(), a.basis(idx(n - 1, 1)));
    HopfData h;
    h.comult.resize(dim);
    h.antipode = Matrix(f, dim, dim);
    Vec one2 = zero_vec(f, dim * dim);
    one2[0] = f.one();
    for (int ga = 0; ga < n; ++ga)
        for (int xb = 0; xb < n; ++xb) {
            Vec d = one2, s = a.one();
            for (int k = 0; k < ga; ++k)
                d = a.tensor_mul(d, dg);
            for (int k = 0; k < xb; ++k)
                d = a.tensor_mul(d, dx);
            // S is an anti-homomorphism: S(g^a x^b) = S(x)^b S(g)^a.
            for (int k = 0; k < xb; ++k)
                s = a.mul(s, sx);
            for (int k = 0; k < ga; ++k)
                s = a.mul(s, sg);
            h.comult[idx(ga, xb)] = to_sparse(d);
            h.antipode.set_column(idx(ga, xb), s);
        }
    a.hopf = std::move(h);
    return a;
}

Algebra smash_or_crossed_product(const HAction& act, const std::optional<std::vector<SparseRow>>& sigma)
{
    ValidationReport vr = validate_action(act);
    if (!vr.ok())
        throw Error(ErrorCode::ValidationFailed, "action does not validate: " + vr.violations.front().kind);
    const Algebra& r = act.target;
    const Algebra& h = act.hopf;
    const Field& f = r.field;
    const int dr = r.dim, dh = h.dim, dim = dr * dh;
    if (sigma) {
        if (static_cast<int>(sigma->size()) != dh * dh)
            throw Error(ErrorCode::BadParameter, "cocycle table must have dim(H)^2 entries");
        if (r.aug)
            for (int b = 0; b < dh; ++b)
                for (int d = 0; d < dh; ++d) {
                    Scalar e = f.zero();
                    for (const auto& [k, c] : (*sigma)[b * dh + d])
                        e += c * r.aug->eps[k];
                    if (e != h.aug->eps[b] * h.aug->eps[d])
                        throw Error(ErrorCode::IncompatibleAugmentation,
                                    "eps_R(sigma(" + h.labels[b] + "," + h.labels[d] + ")) != eps_H eps_H");
                }
    }
    auto sig = [&](int b, int d) -> Vec {
        if (!sigma) {
            Scalar e = h.aug->eps[b] * h.aug->eps[d];
            return scale(e, r.one());
        }
        return to_dense((*sigma)[b * dh + d], f, dr);
    };
    // Iterated coproducts as lists of index tuples with coefficients.
    std::vector<std::vector<std::pair<std::array<int, 3>, Scalar>>> delta2(dh);
    std::vector<std::vector<std::pair<std::array<int, 2>, Scalar>>> delta1(dh);
    for (int x = 0; x < dh; ++x)
        for (const auto& [p, c] : h.hopf->comult[x]) {
            int x1 = p / dh, x2 = p % dh;
            delta1[x].push_back({{x1, x2}, c});
            for (const auto& [q, c2] : h.hopf->comult[x1])
                delta2[x].push_back({{q / dh, q % dh, x2}, c * c2});
        }

    Algebra a;
    a.field = f;
    a.dim = dim;
    a.unit = r.unit * dh + h.unit;
    a.labels = pair_labels(r.labels, h.labels, "#");
    a.mult.resize(static_cast<std::size_t>(dim) * dim);
    for (int ri = 0; ri < dr; ++ri)
        for (int hi = 0; hi < dh; ++hi)
            for (int rj = 0; rj < dr; ++rj)
                for (int hj = 0; hj < dh; ++hj) {
                    Vec out = zero_vec(f, dim);
                    for (const auto& [t3, c3] : delta2[hi]) {
                        Vec hr = act.rep.action[t3[0]].column(rj);  // h_1 . r'
                        Vec left = r.mul(r.basis(ri), hr);
                        if (is_zero(left))
                            continue;
                        for (const auto& [t2, c2] : delta1[hj]) {
                            Vec rr = r.mul(left, sig(t3[1], t2[0]));
                            if (is_zero(rr))
                                continue;
                            for (const auto& [hk, ch] : h.product(t3[2], t2[1]))
                                for (int k = 0; k < dr; ++k)
                                    if (!rr[k].is_zero())
                                        out[k * dh + hk] += c3 * c2 * ch * rr[k];
                        }
                    }
                    a.mult[static_cast<std::size_t>(ri * dh + hi) * dim + rj * dh + hj] = to_sparse(out);
                }
    ValidationReport check = validate(a);
    if (!check.ok()) {
        const auto& v = check.violations.front();
        throw Error(ErrorCode::NotAssociative, "crossed product fails " + v.kind + " at " + index_list(v.indices));
    }
    if (r.aug && h.aug) {
        Vec eps = zero_vec(f, dim);
        for (int ri = 0; ri < dr; ++ri)
            for (int hi = 0; hi < dh; ++hi)
                eps[ri * dh + hi] = r.aug->eps[ri] * h.aug->eps[hi];
        a.aug = Augmentation{eps};
        if (!validate(a).ok())
            a.aug.reset();
    }
    return a;
}

Algebra enveloping(const Algebra& a)
{
    const int n = a.dim, dim = n * n;
    Algebra e;
    e.field = a.field;
    e.dim = dim;
    e.unit = a.unit * n + a.unit;
    e.labels = pair_labels(a.labels, a.labels, "|");
    e.mult.resize(static_cast<std::size_t>(dim) * dim);
    // (a (x) b)(a' (x) b') = a a' (x) b' b
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    SparseRow row;
                    for (const auto& [p, c1] : a.product(i, k))
                        for (const auto& [q, c2] : a.product(l, j))
                            row.emplace_back(p * n + q, c1 * c2);
                    canonicalize(row);
                    e.mult[static_cast<std::size_t>(i * n + j) * dim + k * n + l] = std::move(row);
                }
    return e;
}

ModuleRep bimodule_rep(const Algebra& a)
{
    const int n = a.dim;
    ModuleRep m;
    m.name = "A";
    m.field = a.field;
    m.mdim = n;
    m.action.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix t(a.field, n, n);
            for (int x = 0; x < n; ++x) {
                Vec col = zero_vec(a.field, n);
                for (const auto& [k, c] : a.product(i, x))
                    accumulate(col, a.product(k, j), c);
                t.set_column(x, col);
            }
            m.action.push_back(std::move(t));
        }
    return m;
}

Algebra tensor_product(const Algebra& a, const Algebra& b)
{
    const int da = a.dim, db = b.dim, dim = da * db;
    const Field& f = a.field;
    if (b.field != f)
        throw Error(ErrorCode::FieldMismatch, "tensor product of algebras over different fields");
    Algebra t;
    t.field = f;
    t.dim = dim;
    t.unit = a.unit * db + b.unit;
    t.labels = pair_labels(a.labels, b.labels, "*");
    t.mult.resize(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < da; ++k)
                for (int l = 0; l < db; ++l) {
                    SparseRow row;
                    for (const auto& [p, c1] : a.product(i, k))
                        for (const auto& [q, c2] : b.product(j, l))
                            row.emplace_back(p * db + q, c1 * c2);
                    canonicalize(row);
                    t.mult[static_cast<std::size_t>(i * db + j) * dim + k * db + l] = std::move(row);
                }
    if (a.aug && b.aug) {
        Vec eps = zero_vec(f, dim);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j)
                eps[i * db + j] = a.aug->eps[i] * b.aug->eps[j];
        t.aug = Augmentation{eps};
    }
    if (a.hopf && b.hopf) {
        HopfData h;
        h.comult.resize(dim);
        h.antipode = Matrix(f, dim, dim);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) {
                SparseRow row;
                for (const auto& [p, c1] : a.hopf->comult[i])
                    for (const auto& [q, c2] : b.hopf->comult[j]) {
                        int a1 = p / da, a2 = p % da, b1 = q / db, b2 = q % db;
                        row.emplace_back((a1 * db + b1) * dim + a2 * db + b2, c1 * c2);
                    }
                canonicalize(row);
                h.comult[i * db + j] = std::move(row);
                for (int k = 0; k < da; ++k)
                    for (int l = 0; l < db; ++l)
                        h.antipode(k * db + l, i * db + j) = a.hopf->antipode(k, i) * b.hopf->antipode(l, j);
            }
        t.hopf = std::move(h);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Associated graded, invariants, center, radical

namespace {

// Basis adapted to the filtration with its degrees, unit first.
std::pair<std::vector<Vec>, std::vector<int>> adapted_basis(const Algebra& a, const AlgebraFiltration& filt)
{
    const auto& L = filt.layers;
    const int m = static_cast<int>(L.size());
    std::vector<std::pair<int, Vec>> picked;
    auto extend = [&](Subspace& have, const Subspace& layer, int deg) {
        std::vector<Vec> cands;
        if (layer.contains(a.one()))
            cands.push_back(a.one());
        for (auto& v : layer.dense_basis())
            cands.push_back(std::move(v));
        for (auto& v : cands)
            if (!have.contains(v)) {
                have = have.sum(Subspace::span(a.field, a.dim, {v}));
                picked.emplace_back(deg, std::move(v));
            }
    };
    if (filt.direction == FiltrationDirection::Increasing) {
        Subspace have = zero_subspace(a.field, a.dim);
        for (int i = 0; i < m; ++i)
            extend(have, L[i], i);
    } else {
        Subspace have = zero_subspace(a.field, a.dim);
        for (int i = m - 1; i >= 0; --i)
            extend(have, L[i], i);
    }
    std::stable_sort(picked.begin(), picked.end(), [&](const auto& x, const auto& y) {
        bool ux = x.second == a.one(), uy = y.second == a.one();
        if (x.first != y.first)
            return x.first < y.first;
        return ux && !uy;
    });
    std::vector<Vec> basis;
    std::vector<int> deg;
    for (auto& [d, v] : picked) {
        deg.push_back(d);
        basis.push_back(std::move(v));
    }
    return {basis, deg};
}

}  // namespace

GradedAlgebra associated_graded(const Algebra& a, const AlgebraFiltration& filt)
{
    ValidationReport vr = validate_filtration(a, filt);
    if (!vr.ok())
        throw Error(ErrorCode::NotAFiltration, vr.violations.front().kind + " at " + index_list(vr.violations.front().indices));
    auto [basis, deg] = adapted_basis(a, filt);
    const int n = a.dim;
    Matrix p(a.field, n, n);
    for (int i = 0; i < n; ++i)
        p.set_column(i, basis[i]);
    Matrix pinv = *p.inverse();
    GradedAlgebra g;
    Algebra& out = g.algebra;
    out.field = a.field;
    out.dim = n;
    out.unit = -1;
    for (int i = 0; i < n; ++i) {
        if (basis[i] == a.one())
            out.unit = i;
        out.labels.push_back(basis[i] == a.one() ? "1" : a.element_string(basis[i]));
    }
    if (out.unit < 0)
        throw Error(ErrorCode::NotAFiltration, "unit does not lie in the lowest layer");
    out.mult.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec c = pinv * a.mul(basis[i], basis[j]);
            SparseRow row;
            for (int k = 0; k < n; ++k)
                if (deg[k] == deg[i] + deg[j] && !c[k].is_zero())
                    row.emplace_back(k, c[k]);
            out.mult[static_cast<std::size_t>(i) * n + j] = std::move(row);
        }
    if (a.aug) {
        Vec eps = zero_vec(a.field, n);
        for (int i = 0; i < n; ++i)
            if (deg[i] == 0)
                eps[i] = a.eps(basis[i]);
        out.aug = Augmentation{eps};
    }
    g.degree = std::move(deg);
    return g;
}

Subspace invariants(const Algebra& h, const ModuleRep& m)
{
    if (!h.aug)
        throw Error(ErrorCode::MissingAugmentation, "invariants need a counit");
    std::vector<Matrix> maps;
    for (int i = 0; i < h.dim; ++i)
        maps.push_back(m.action[i] - Matrix::identity(h.field, m.mdim).scaled(h.aug->eps[i]));
    return joint_kernel(h.field, m.mdim, maps);
}

Subspace center(const Algebra& a)
{
    std::vector<Matrix> maps;
    for (int i = 0; i < a.dim; ++i)
        maps.push_back(a.right_mult(a.basis(i)) - a.left_mult(a.basis(i)));
    return joint_kernel(a.field, a.dim, maps);
}

Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& gens)
{
    std::vector<Vec> vs;
    for (const auto& g : gens)
        for (int i = 0; i < a.dim; ++i) {
            Vec ig = a.mul(a.basis(i), g);
            for (int j = 0; j < a.dim; ++j)
                vs.push_back(a.mul(ig, a.basis(j)));
        }
    return Subspace::span(a.field, a.dim, vs);
}

Subspace radical(const Algebra& a, const std::optional<std::vector<Vec>>& hint)
{
    if (hint) {
        Subspace j = ideal_generated(a, *hint);
        if (!nilpotency_index(a, j))
            throw Error(ErrorCode::HintNotNilpotent, "ideal generated by the hint is not nilpotent");
        int qdim = a.dim - j.dim();
        if (qdim > 0 && dickson_applies(a.field, qdim)) {
            // Trace form of A/J on the non-pivot coordinates.
            ModuleRep reg = regular_module(a);
            ModuleRep quo = quotient_module(reg, j, "A/J");
            std::vector<int> piv = j.pivots();
            std::vector<int> free;
            for (int c = 0; c < a.dim; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end())
                    free.push_back(c);
            Matrix g(a.field, qdim, qdim);
            for (int x = 0; x < qdim; ++x)
                for (int y = 0; y < qdim; ++y) {
                    Matrix prod = quo.action[free[x]] * quo.action[free[y]];
                    for (int k = 0; k < qdim; ++k)
                        g(x, y) += prod(k, k);
                }
            if (g.rank() != qdim)
                throw Error(ErrorCode::HintNotRadical, "A/J is not semisimple: the hint misses part of the radical");
        }
        return j;
    }
    if (dickson_applies(a.field, a.dim))
        return trace_form(a).kernel();
    if (a.aug) {
        std::vector<Vec> ker;
        for (int i = 0; i < a.dim; ++i)
            if (i != a.unit)
                ker.push_back(sub(a.basis(i), scale(a.aug->eps[i], a.one())));
        Subspace s = Subspace::span(a.field, a.dim, ker);
        if (nilpotency_index(a, s))
            return s;
    }
    throw Error(ErrorCode::Unsupported,
                "radical needs characteristic 0 or above dim A, a nilpotent augmentation ideal, or a hint");
}

Subspace radical_filtration_layer(const Algebra& a, const Subspace& rad, int power)
{
    if (power == 0)
        return Subspace::full(a.field, a.dim);
    Subspace cur = rad;
    for (int k = 1; k < power; ++k)
        cur = product_space(a, cur, rad);
    return cur;
}

AlgebraFiltration radical_filtration(const Algebra& a)
{
    Subspace rad = radical(a);
    if (!nilpotency_index(a, rad))
        throw Error(ErrorCode::NotAFiltration, "radical is not nilpotent");
    AlgebraFiltration f;
    f.direction = FiltrationDirection::Decreasing;
    f.layers.push_back(Subspace::full(a.field, a.dim));
    Subspace cur = rad;
    while (true) {
        f.layers.push_back(cur);
        if (cur.dim() == 0)
            break;
        cur = product_space(a, cur, rad);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Modules

ModuleRep trivial_module(const Algebra& a)
{
    if (!a.aug)
        throw Error(ErrorCode::MissingAugmentation, "trivial module needs an augmentation");
    ModuleRep m;
    m.name = "k";
    m.field = a.field;
    m.mdim = 1;
    for (int i = 0; i < a.dim; ++i) {
        Matrix t(a.field, 1, 1);
        t(0, 0) = a.aug->eps[i];
        m.action.push_back(std::move(t));
    }
    return m;
}

ModuleRep regular_module(const Algebra& a)
{
    ModuleRep m;
    m.name = "A";
    m.field = a.field;
    m.mdim = a.dim;
    for (int i = 0; i < a.dim; ++i)
        m.action.push_back(a.left_mult(a.basis(i)));
    return m;
}

ModuleRep quotient_module(const ModuleRep& m, const Subspace& sub, std::string name)
{
    std::vector<int> piv = sub.pivots();
    std::vector<int> free;
    std::vector<int> pos(m.mdim, -1);
    for (int c = 0; c < m.mdim; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) {
            pos[c] = static_cast<int>(free.size());
            free.push_back(c);
        }
    const int q = static_cast<int>(free.size());
    ModuleRep out;
    out.name = std::move(name);
    out.field = m.field;
    out.mdim = q;
    for (const auto& rho : m.action) {
        for (const auto& v : sub.basis())
            if (!sub.contains(rho * to_dense(v, m.field, m.mdim)))
                throw Error(ErrorCode::NotContained, "subspace is not a submodule");
        Matrix t(m.field, q, q);
        for (int x = 0; x < q; ++x) {
            SparseRow red = sub.reduce(to_sparse(rho.column(free[x])));
            for (const auto& [c, v] : red)
                t(pos[c], x) = v;
        }
        out.action.push_back(std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Change of basis

Algebra change_basis(const Algebra& a, const Matrix& p, std::vector<std::string> labels)
{
    auto inv = p.inverse();
    if (!inv)
        throw Error(ErrorCode::BadParameter, "change of basis matrix is singular");
    const Matrix& pinv = *inv;
    const int n = a.dim;
    Algebra b;
    b.field = a.field;
    b.dim = n;
    b.labels = std::move(labels);
    std::vector<Vec> cols;
    for (int i = 0; i < n; ++i)
        cols.push_back(p.column(i));
    Vec unit = pinv * a.one();
    b.unit = -1;
    for (int i = 0; i < n; ++i)
        if (unit == unit_vec(a.field, n, i))
            b.unit = i;
    if (b.unit < 0)
        throw Error(ErrorCode::BadParameter, "unit is not a basis vector of the new basis");
    b.mult.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b.mult[static_cast<std::size_t>(i) * n + j] = to_sparse(pinv * a.mul(cols[i], cols[j]));
    if (a.aug) {
        Vec eps(n);
        for (int i = 0; i < n; ++i)
            eps[i] = a.eps(cols[i]);
        b.aug = Augmentation{eps};
    }
    if (a.hopf) {
        HopfData h;
        h.comult.resize(n);
        Matrix pinv_t = pinv.transpose();
        for (int i = 0; i < n; ++i) {
            Vec d = a.comult(cols[i]);
            Matrix v(a.field, n, n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    v(x, y) = d[x * n + y];
            Matrix w = pinv * v * pinv_t;
            SparseRow row;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (!w(x, y).is_zero())
                        row.emplace_back(x * n + y, w(x, y));
            h.comult[i] = std::move(row);
        }
        h.antipode = pinv * a.hopf->antipode * p;
        b.hopf = std::move(h);
    }
    return b;
}

ModuleRep change_basis(const ModuleRep& m, const Matrix& p)
{
    ModuleRep out;
    out.name = m.name;
    out.field = m.field;
    out.mdim = m.mdim;
    for (int i = 0; i < p.cols(); ++i)
        out.action.push_back(m.act(p.column(i)));
    return out;
}

Normalized normalize(const Algebra& a)
{
    const int n = a.dim;
    Normalized out;
    std::vector<int> order{a.unit};
    for (int i = 0; i < n; ++i)
        if (i != a.unit)
            order.push_back(i);
    out.identity = a.unit == 0;
    Matrix p(a.field, n, n);
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) {
        int i = order[k];
        Vec v = a.basis(i);
        std::string label = a.labels[i];
        if (k > 0 && a.aug && !a.aug->eps[i].is_zero()) {
            const Scalar& e = a.aug->eps[i];
            v = sub(v, scale(e, a.one()));
            label += e.is_one() ? "-1" : "-" + e.to_string() + "*1";
            out.identity = false;
        }
        p.set_column(k, v);
        labels.push_back(label);
    }
    out.p_inv = *p.inverse();
    out.algebra = out.identity ? a : change_basis(a, p, labels);
    out.p = std::move(p);
    return out;
}

}  // namespace hopfcoh
