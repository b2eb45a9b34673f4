#pragma once

#include "hopfcoh/scalar.hpp"

#include <functional>
#include <optional>
#include <tuple>
#include <vector>

namespace hopfcoh {

using Vec = std::vector<Scalar>;
// Sorted by index, no stored zeros.
using SparseRow = std::vector<std::pair<int, Scalar>>;

Vec zero_vec(const Field& field, int n);
Vec unit_vec(const Field& field, int n, int i);
SparseRow to_sparse(const Vec& v);
Vec to_dense(const SparseRow& v, const Field& field, int n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
// Sort, merge duplicate indices, drop zeros.
void canonicalize(SparseRow& row);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(Field field, int rows, int cols);

    static SparseMatrix identity(const Field& field, int n);
    static SparseMatrix from_dense(const Field& field, int cols, const std::vector<Vec>& rows);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseRow& row(int r) const { return data_[r]; }
    std::size_t nnz() const;

    void set_row(int r, SparseRow entries);
    void add_entry(int r, int c, const Scalar& v) { data_[r].emplace_back(c, v); }
    void canonicalize();

    Scalar at(int r, int c) const;
    std::vector<std::tuple<int, int, Scalar>> entries() const;
    std::vector<Vec> to_dense() const;
    bool is_zero() const;

    SparseMatrix transpose() const;
    Vec apply(const Vec& x) const;
    SparseRow apply(const SparseRow& x) const;
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    Field field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseRow> data_;
};

// A subspace of field^ambient held by its reduced row echelon basis, so equal
// subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field field, int ambient);

    static Subspace span(const Field& field, int ambient, const std::vector<Vec>& vectors);
    static Subspace span(const Field& field, int ambient, std::vector<SparseRow> vectors);
    static Subspace full(const Field& field, int ambient);

    const Field& field() const { return field_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SparseRow>& basis() const { return basis_; }
    std::vector<Vec> dense_basis() const;
    std::vector<int> pivots() const;

    SparseRow reduce(const SparseRow& v) const;
    bool contains(const SparseRow& v) const { return reduce(v).empty(); }
    bool contains(const Vec& v) const { return contains(to_sparse(v)); }
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    // Image of this subspace under a linear map (matrix acting on column vectors).
    Subspace image(const SparseMatrix& map) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.basis_ == b.basis_;
    }

private:
    Field field_;
    int ambient_ = 0;
    std::vector<SparseRow> basis_;
};

struct RowReduction {
    int rank = 0;
    SparseMatrix rref;   // rank x cols
    Subspace nullspace;  // {x : M x = 0}
    // Some x with M x = b, or nullopt when b is outside the column space.
    std::function<std::optional<Vec>(const Vec&)> solve;
};

RowReduction row_reduce(const SparseMatrix& m);
int rank(const SparseMatrix& m);
Subspace kernel(const SparseMatrix& m);

struct Subquotient {
    int dim = 0;
    std::vector<Vec> representatives;
    // Coordinates in Z/B of a vector of Z (NotContained otherwise).
    std::function<Vec(const Vec&)> coords;
};

Subquotient subquotient_basis(const Subspace& z, const Subspace& b);

// Small dense matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, int rows, int cols);

    static Matrix identity(const Field& field, int n);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec column(int c) const;
    void set_column(int c, const Vec& v);
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    SparseMatrix to_sparse() const;
    int rank() const;
    Subspace kernel() const;
    // nullopt when singular.
    std::optional<Matrix> inverse() const;

private:
    Field field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace hopfcoh
