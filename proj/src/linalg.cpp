#include "hopfcoh/linalg.hpp"

#include "hopfcoh/detail/echelon.hpp"

#include <algorithm>
#include <memory>

namespace hopfcoh {

using detail::Echelon;
using detail::RowT;
using detail::to_native;
using detail::from_native;
using detail::with_arith;

namespace {

void check_field(const Field& a, const Field& b)
{
    if (a != b)
        throw Error(ErrorCode::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

void check_vec_field(const Field& f, const Vec& v)
{
    for (const auto& x : v)
        check_field(f, x.field());
}

}  // namespace

Vec zero_vec(const Field& field, int n) { return Vec(n, field.zero()); }

Vec unit_vec(const Field& field, int n, int i)
{
    Vec v = zero_vec(field, n);
    v[i] = field.one();
    return v;
}

SparseRow to_sparse(const Vec& v)
{
    SparseRow out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!v[i].is_zero())
            out.emplace_back(i, v[i]);
    return out;
}

Vec to_dense(const SparseRow& v, const Field& field, int n)
{
    Vec out = zero_vec(field, n);
    for (const auto& [c, x] : v)
        out[c] = x;
    return out;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& s, const Vec& v)
{
    Vec r = v;
    for (auto& x : r)
        x *= s;
    return r;
}

void canonicalize(SparseRow& row)
{
    std::stable_sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    out.reserve(row.size());
    for (auto& e : row) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second += e.second;
            continue;
        }
        if (!out.empty() && out.back().second.is_zero())
            out.pop_back();
        out.push_back(std::move(e));
    }
    if (!out.empty() && out.back().second.is_zero())
        out.pop_back();
    row = std::move(out);
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(Field field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows))
{
}

SparseMatrix SparseMatrix::identity(const Field& field, int n)
{
    SparseMatrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        m.data_[i].emplace_back(i, field.one());
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Field& field, int cols, const std::vector<Vec>& rows)
{
    SparseMatrix m(field, static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw Error(ErrorCode::DimensionMismatch, "ragged dense matrix");
        check_vec_field(field, rows[r]);
        m.data_[r] = to_sparse(rows[r]);
    }
    return m;
}

std::size_t SparseMatrix::nnz() const
{
    std::size_t n = 0;
    for (const auto& r : data_)
        n += r.size();
    return n;
}

void SparseMatrix::set_row(int r, SparseRow entries)
{
    hopfcoh::canonicalize(entries);
    data_[r] = std::move(entries);
}

void SparseMatrix::canonicalize()
{
    for (auto& r : data_)
        hopfcoh::canonicalize(r);
}

Scalar SparseMatrix::at(int r, int c) const
{
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c)
        return it->second;
    return field_.zero();
}

std::vector<std::tuple<int, int, Scalar>> SparseMatrix::entries() const
{
    std::vector<std::tuple<int, int, Scalar>> out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            out.emplace_back(r, c, v);
    return out;
}

std::vector<Vec> SparseMatrix::to_dense() const
{
    std::vector<Vec> out;
    for (int r = 0; r < rows_; ++r)
        out.push_back(hopfcoh::to_dense(data_[r], field_, cols_));
    return out;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            t.data_[c].emplace_back(r, v);
    return t;
}

Vec SparseMatrix::apply(const Vec& x) const
{
    if (static_cast<int>(x.size()) != cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
    check_vec_field(field_, x);
    Vec out = zero_vec(field_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            if (!x[c].is_zero())
                out[r] += v * x[c];
    return out;
}

SparseRow SparseMatrix::apply(const SparseRow& x) const
{
    return to_sparse(apply(hopfcoh::to_dense(x, field_, cols_)));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
    check_field(a.field_, b.field_);
    SparseMatrix out(a.field_, a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        SparseRow acc;
        for (const auto& [k, v] : a.data_[r])
            for (const auto& [c, w] : b.data_[k])
                acc.emplace_back(c, v * w);
        out.set_row(r, std::move(acc));
    }
    return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field field, int ambient) : field_(field), ambient_(ambient) {}

Subspace Subspace::span(const Field& field, int ambient, const std::vector<Vec>& vectors)
{
    std::vector<SparseRow> rows;
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient)
            throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
        check_vec_field(field, v);
        rows.push_back(to_sparse(v));
    }
    return span(field, ambient, std::move(rows));
}

Subspace Subspace::span(const Field& field, int ambient, std::vector<SparseRow> vectors)
{
    Subspace s(field, ambient);
    with_arith(field, [&](auto ar) {
        Echelon ech(ar, ambient);
        std::vector<RowT<typename decltype(ar)::value_type>> native;
        native.reserve(vectors.size());
        for (const auto& v : vectors)
            native.push_back(to_native(ar, v));
        for (int i : detail::markowitz_order(ar, native))
            ech.insert(native[i]);
        ech.make_reduced();
        for (const auto& r : ech.rows())
            s.basis_.push_back(from_native(ar, r));
    });
    return s;
}

Subspace Subspace::full(const Field& field, int ambient)
{
    Subspace s(field, ambient);
    for (int i = 0; i < ambient; ++i)
        s.basis_.push_back(SparseRow{{i, field.one()}});
    return s;
}

std::vector<Vec> Subspace::dense_basis() const
{
    std::vector<Vec> out;
    for (const auto& r : basis_)
        out.push_back(to_dense(r, field_, ambient_));
    return out;
}

std::vector<int> Subspace::pivots() const
{
    std::vector<int> out;
    for (const auto& r : basis_)
        out.push_back(r.front().first);
    return out;
}

SparseRow Subspace::reduce(const SparseRow& v) const
{
    SparseRow out;
    with_arith(field_, [&](auto ar) {
        Echelon ech(ar, ambient_);
        for (const auto& r : basis_)
            ech.insert(to_native(ar, r));
        out = from_native(ar, ech.reduce(to_native(ar, v)));
    });
    return out;
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        return false;
    bool ok = true;
    with_arith(field_, [&](auto ar) {
        Echelon ech(ar, ambient_);
        for (const auto& r : basis_)
            ech.insert(to_native(ar, r));
        for (const auto& r : other.basis_)
            if (!ech.contains(to_native(ar, r))) {
                ok = false;
                return;
            }
    });
    return ok;
}

Subspace Subspace::sum(const Subspace& other) const
{
    check_field(field_, other.field_);
    std::vector<SparseRow> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(field_, ambient_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const
{
    check_field(field_, other.field_);
    // Zassenhaus: rows (u|u) and (w|0); rows left with zero first half span U ∩ W.
    Subspace out(field_, ambient_);
    std::vector<SparseRow> result;
    with_arith(field_, [&](auto ar) {
        Echelon ech(ar, 2 * ambient_);
        for (const auto& r : basis_) {
            auto row = to_native(ar, r);
            auto n = row.size();
            for (std::size_t k = 0; k < n; ++k)
                row.emplace_back(row[k].first + ambient_, row[k].second);
            ech.insert(row);
        }
        for (const auto& r : other.basis_)
            ech.insert(to_native(ar, r));
        for (const auto& row : ech.rows()) {
            if (row.front().first < ambient_)
                continue;
            SparseRow v;
            for (const auto& [c, x] : row)
                v.emplace_back(c - ambient_, ar.to(x));
            result.push_back(std::move(v));
        }
    });
    return span(field_, ambient_, std::move(result));
}

Subspace Subspace::image(const SparseMatrix& map) const
{
    std::vector<SparseRow> rows;
    for (const auto& r : basis_)
        rows.push_back(map.apply(r));
    return span(field_, map.rows(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Row reduction

namespace {

template <class Arith>
RowReduction row_reduce_impl(const Arith& ar, const SparseMatrix& m)
{
    using T = typename Arith::value_type;
    const int rows = m.rows(), cols = m.cols();
    // Tag columns [cols, cols + rows) record which original rows combine into each echelon row.
    auto ech = std::make_shared<Echelon<Arith>>(ar, cols + rows);
    for (int r = 0; r < rows; ++r) {
        RowT<T> row = to_native(ar, m.row(r));
        row.emplace_back(cols + r, ar.one());
        ech->insert(row);
    }
    RowReduction out;
    Echelon<Arith> plain(ar, cols);
    for (const auto& row : ech->rows())
        if (row.front().first < cols) {
            RowT<T> head;
            for (const auto& e : row)
                if (e.first < cols)
                    head.push_back(e);
            plain.insert(head);
        }
    plain.make_reduced();
    out.rank = plain.rank();
    out.rref = SparseMatrix(m.field(), out.rank, cols);
    for (int i = 0; i < out.rank; ++i)
        out.rref.set_row(i, from_native(ar, plain.rows()[i]));
    std::vector<SparseRow> kernel_rows;
    for (int f : plain.free_columns(cols))
        kernel_rows.push_back(from_native(ar, plain.kernel_vector(f, cols)));
    out.nullspace = Subspace::span(m.field(), cols, std::move(kernel_rows));

    Field field = m.field();
    out.solve = [ech, ar, rows, cols, field](const Vec& b) -> std::optional<Vec> {
        if (static_cast<int>(b.size()) != rows)
            throw Error(ErrorCode::DimensionMismatch, "right-hand side has wrong length");
        check_vec_field(field, b);
        std::vector<T> bn;
        for (const auto& x : b)
            bn.push_back(ar.from(x));
        auto tag_value = [&](const RowT<T>& row) {
            T acc = ar.zero();
            for (const auto& [c, v] : row)
                if (c >= cols)
                    ar.addmul(acc, v, bn[c - cols]);
            return acc;
        };
        std::vector<int> order;
        for (int i = 0; i < ech->rank(); ++i) {
            const auto& row = ech->rows()[i];
            if (row.front().first >= cols) {
                if (!Arith::is_zero(tag_value(row)))
                    return std::nullopt;
            } else {
                order.push_back(i);
            }
        }
        std::sort(order.begin(), order.end(),
                  [&](int a, int c) { return ech->rows()[a][0].first > ech->rows()[c][0].first; });
        std::vector<T> x(cols, ar.zero());
        for (int i : order) {
            const auto& row = ech->rows()[i];
            T acc = tag_value(row);
            for (std::size_t k = 1; k < row.size() && row[k].first < cols; ++k)
                ar.submul(acc, row[k].second, x[row[k].first]);
            x[row[0].first] = acc;
        }
        Vec out;
        for (const auto& v : x)
            out.push_back(ar.to(v));
        return out;
    };
    return out;
}

}  // namespace

RowReduction row_reduce(const SparseMatrix& m)
{
    return with_arith(m.field(), [&](auto ar) { return row_reduce_impl(ar, m); });
}

int rank(const SparseMatrix& m)
{
    return with_arith(m.field(), [&](auto ar) {
        Echelon ech(ar, m.cols());
        std::vector<RowT<typename decltype(ar)::value_type>> native;
        for (int r = 0; r < m.rows(); ++r)
            native.push_back(to_native(ar, m.row(r)));
        for (int i : detail::markowitz_order(ar, native))
            ech.insert(native[i]);
        return ech.rank();
    });
}

Subspace kernel(const SparseMatrix& m)
{
    std::vector<SparseRow> out;
    with_arith(m.field(), [&](auto ar) {
        Echelon ech(ar, m.cols());
        std::vector<RowT<typename decltype(ar)::value_type>> native;
        for (int r = 0; r < m.rows(); ++r)
            native.push_back(to_native(ar, m.row(r)));
        for (int i : detail::markowitz_order(ar, native))
            ech.insert(native[i]);
        for (int f : ech.free_columns(m.cols()))
            out.push_back(from_native(ar, ech.kernel_vector(f, m.cols())));
    });
    return Subspace::span(m.field(), m.cols(), std::move(out));
}

Subquotient subquotient_basis(const Subspace& z, const Subspace& b)
{
    check_field(z.field(), b.field());
    if (z.ambient_dim() != b.ambient_dim() || !z.contains(b))
        throw Error(ErrorCode::NotContained, "B is not contained in Z");
    const Field field = z.field();
    const int n = z.ambient_dim();
    // Normal forms modulo B of Z form the complement of B in Z supported off B's pivots.
    std::vector<SparseRow> normal_forms;
    for (const auto& r : z.basis())
        normal_forms.push_back(b.reduce(r));
    Subspace complement = Subspace::span(field, n, std::move(normal_forms));

    Subquotient out;
    out.dim = complement.dim();
    out.representatives = complement.dense_basis();
    std::vector<int> pivots = complement.pivots();
    out.coords = [z, b, pivots, field, n](const Vec& v) {
        if (static_cast<int>(v.size()) != n)
            throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
        SparseRow sv = to_sparse(v);
        if (!z.contains(sv))
            throw Error(ErrorCode::NotContained, "vector is not in Z");
        Vec nf = to_dense(b.reduce(sv), field, n);
        Vec coords;
        for (int p : pivots)
            coords.push_back(nf[p]);
        return coords;
    };
    return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, field.zero())
{
}

Matrix Matrix::identity(const Field& field, int n)
{
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = field.one();
    return m;
}

Vec Matrix::column(int c) const
{
    Vec v;
    for (int r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

void Matrix::set_column(int c, const Vec& v)
{
    for (int r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a.is_zero())
                continue;
            for (int c = 0; c < o.cols_; ++c)
                if (!o(k, c).is_zero())
                    out(r, c) += a * o(k, c);
        }
    return out;
}

Vec Matrix::operator*(const Vec& v) const
{
    Vec out = zero_vec(field_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!v[c].is_zero() && !(*this)(r, c).is_zero())
                out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= o.data_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        x *= s;
    return out;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

SparseMatrix Matrix::to_sparse() const
{
    SparseMatrix m(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
        SparseRow row;
        for (int c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero())
                row.emplace_back(c, (*this)(r, c));
        m.set_row(r, std::move(row));
    }
    return m;
}

int Matrix::rank() const { return hopfcoh::rank(to_sparse()); }

Subspace Matrix::kernel() const { return hopfcoh::kernel(to_sparse()); }

std::optional<Matrix> Matrix::inverse() const
{
    if (rows_ != cols_)
        throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    int n = rows_;
    Matrix a = *this;
    Matrix inv = identity(field_, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n && piv < 0; ++r)
            if (!a(r, c).is_zero())
                piv = r;
        if (piv < 0)
            return std::nullopt;
        if (piv != c)
            for (int k = 0; k < n; ++k) {
                std::swap(a(piv, k), a(c, k));
                std::swap(inv(piv, k), inv(c, k));
            }
        Scalar s = a(c, c).inverse();
        for (int k = 0; k < n; ++k) {
            a(c, k) *= s;
            inv(c, k) *= s;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero())
                continue;
            Scalar f = a(r, c);
            for (int k = 0; k < n; ++k) {
                a(r, k) -= f * a(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

}  // namespace hopfcoh
