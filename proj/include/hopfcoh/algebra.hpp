#pragma once

#include "hopfcoh/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfcoh {

struct Augmentation {
    Vec eps;
};

// Delta(e_i) = sum over comult[i] entries (a*dim + b, c) of c * e_a (x) e_b.
// antipode column i is S(e_i).
struct HopfData {
    std::vector<SparseRow> comult;
    Matrix antipode;
};

// Finite-dimensional algebra given by structure constants:
// e_i e_j = sum over mult[i*dim + j] entries (k, c) of c * e_k.
struct Algebra {
    Field field;
    int dim = 0;
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<SparseRow> mult;
    std::optional<Augmentation> aug;
    std::optional<HopfData> hopf;  // counit is aug

    const SparseRow& product(int i, int j) const { return mult[static_cast<std::size_t>(i) * dim + j]; }
    Vec basis(int i) const { return unit_vec(field, dim, i); }
    Vec one() const { return basis(unit); }
    Vec mul(const Vec& a, const Vec& b) const;
    // Matrices of x -> a x and x -> x a on column vectors.
    Matrix left_mult(const Vec& a) const;
    Matrix right_mult(const Vec& a) const;
    Scalar eps(const Vec& a) const;
    // Product in A (x) A, coordinates indexed a*dim + b.
    Vec tensor_mul(const Vec& x, const Vec& y) const;
    Vec comult(const Vec& a) const;
    Vec antipode(const Vec& a) const;
    int index_of(const std::string& label) const;  // -1 when absent
    std::string element_string(const Vec& v) const;

    friend bool operator==(const Algebra& a, const Algebra& b);
};

// Left module: action[i] is the matrix of e_i on column vectors.
struct ModuleRep {
    std::string name;
    Field field;
    int mdim = 0;
    std::vector<Matrix> action;

    Matrix act(const Vec& a) const;
};

// H acting on the underlying space of R (rep.mdim == R.dim).
struct HAction {
    Algebra hopf;
    Algebra target;
    ModuleRep rep;
    bool augmentation_preserving = true;
};

enum class FiltrationDirection { Increasing, Decreasing };

// Increasing: 0 = A_{-1} < A_0 < ... < A_m = A.
// Decreasing: A = A_0 > A_1 > ... > A_m = 0.
struct AlgebraFiltration {
    FiltrationDirection direction = FiltrationDirection::Increasing;
    std::vector<Subspace> layers;
};

struct Violation {
    std::string kind;
    std::vector<int> indices;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string kind, std::vector<int> indices, std::string detail = {});
    void merge(const ValidationReport& other);
};

ValidationReport validate(const Algebra& a);
ValidationReport validate_module(const Algebra& a, const ModuleRep& m);
ValidationReport validate_action(const HAction& act);
ValidationReport validate_filtration(const Algebra& a, const AlgebraFiltration& filt);

// table[i][j] is the index of g_i g_j.
Algebra group_algebra(const std::vector<std::vector<int>>& table, const Field& field,
                      std::vector<std::string> labels = {});
Algebra cyclic_group_algebra(int n, const Field& field);
// q[i][j] for i < j; other entries ignored.
Algebra quantum_complete_intersection(const std::vector<int>& n, const std::vector<std::vector<Scalar>>& q,
                                      const Field& field);
Algebra taft_algebra(int n, const Scalar& q);
Algebra smash_or_crossed_product(const HAction& act, const std::optional<std::vector<SparseRow>>& sigma = std::nullopt);
Algebra enveloping(const Algebra& a);
// A as a left module over enveloping(a): (x (x) y) . m = x m y.
ModuleRep bimodule_rep(const Algebra& a);
Algebra tensor_product(const Algebra& a, const Algebra& b);

struct GradedAlgebra {
    Algebra algebra;
    std::vector<int> degree;
};

GradedAlgebra associated_graded(const Algebra& a, const AlgebraFiltration& filt);

Subspace invariants(const Algebra& h, const ModuleRep& m);
Subspace center(const Algebra& a);
Subspace radical(const Algebra& a, const std::optional<std::vector<Vec>>& hint = std::nullopt);
Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& gens);
Subspace radical_filtration_layer(const Algebra& a, const Subspace& rad, int power);
AlgebraFiltration radical_filtration(const Algebra& a);

ModuleRep trivial_module(const Algebra& a);
ModuleRep regular_module(const Algebra& a);
// The quotient of m by a submodule, on the basis of non-pivot coordinates.
ModuleRep quotient_module(const ModuleRep& m, const Subspace& sub, std::string name);

// Basis change: column i of p is the new basis vector b_i in old coordinates.
Algebra change_basis(const Algebra& a, const Matrix& p, std::vector<std::string> labels);
ModuleRep change_basis(const ModuleRep& m, const Matrix& p);

// Unit first, every other basis element in ker eps (when augmented).
struct Normalized {
    Algebra algebra;
    Matrix p;
    Matrix p_inv;
    bool identity = true;
};

Normalized normalize(const Algebra& a);

}  // namespace hopfcoh
