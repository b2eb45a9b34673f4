#pragma once

#include "hopfcoh/resolution.hpp"

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace hopfcoh {

struct CohomologyClass {
    int degree = 0;
    SparseRow representative;
    std::shared_ptr<const CochainComplex> complex;
};

namespace detail {
struct DegreeData;
}

// H^n = ker d^n / im d^{n-1} for 0 <= n <= cap. Representatives are the
// canonical kernel vectors supported off the coboundary pivots, so they do
// not depend on the order in which rows were eliminated.
class Cohomology {
public:
    Cohomology() = default;
    Cohomology(std::shared_ptr<const CochainComplex> complex, int cap);

    const CochainComplex& complex() const { return *complex_; }
    const std::shared_ptr<const CochainComplex>& complex_ptr() const { return complex_; }
    int cap() const { return static_cast<int>(degrees_.size()) - 1; }
    int dim(int n) const;
    std::vector<int> dims() const;
    const std::vector<SparseRow>& representatives(int n) const;

    CohomologyClass basis_class(int n, int i) const;
    CohomologyClass from_coords(int n, const Vec& coords) const;
    // Coordinates of the class of a cocycle; NotContained when x is not closed.
    Vec coords(int n, const SparseRow& x) const;
    Vec coords(const CohomologyClass& c) const { return coords(c.degree, c.representative); }
    bool is_cocycle(int n, const SparseRow& x) const;
    // d^{n-1} y for y in C^{n-1}.
    SparseRow coboundary(int n, const SparseRow& y) const;

private:
    std::shared_ptr<const CochainComplex> complex_;
    std::vector<std::shared_ptr<const detail::DegreeData>> degrees_;
};

Cohomology cohomology_groups(const CochainComplex& c, int cap);

// Bilinear coefficient map mu : L x R -> O on module coordinates.
struct Pairing {
    Field field;
    int left_dim = 0;
    int right_dim = 0;
    int out_dim = 0;
    std::vector<SparseRow> table;  // index i * right_dim + j
    std::string name;

    const SparseRow& operator()(int i, int j) const { return table[static_cast<std::size_t>(i) * right_dim + j]; }

    static Pairing scalars(const Field& f);                                // k x k -> k
    static Pairing module_by_scalars(const ModuleRep& m);                  // M x k -> M
    static Pairing algebra(const Algebra& a);                              // A x A -> A
    static Pairing right_action(const ModuleRep& bimodule, const Algebra& a);  // M x A -> M
};

// Concatenation product of bar-type cochains.
SparseRow cup_cochains(const SparseRow& f, int p, const SparseRow& g, int q, int bar_factor, int left_mdim,
                       int right_mdim, const Pairing& mu);

// f cup g, landing in the cohomology `target`; all three complexes must be bar-type.
CohomologyClass cup_product(const CohomologyClass& f, const CohomologyClass& g, const Pairing& mu,
                            const Cohomology& target);

// Cochain maps between Hom(P, M) and Hom(bar, M) induced by lifted chain maps.
struct CochainTransport {
    std::vector<SparseMatrix> to_bar;    // C_P^n -> C_bar^n
    std::vector<SparseMatrix> from_bar;  // C_bar^n -> C_P^n
};

CochainTransport make_transport(const FreeResolution& p, const FreeResolution& bar, const ModuleRep& m_base, int cap);

// Structure constants: at(m, i, n, j) = coordinates in degree m + n of
// (class i of degree m) times (class j of degree n).
struct ProductTable {
    std::vector<int> left_dims;
    std::vector<int> right_dims;
    std::vector<int> out_dims;
    std::vector<std::vector<std::vector<Vec>>> entries;

    int cap() const { return static_cast<int>(out_dims.size()) - 1; }
    const Vec& at(int m, int i, int n, int j) const;
};

using ProductFn = std::function<Vec(int m, int i, int n, int j)>;
ProductTable make_product_table(const std::vector<int>& left_dims, const std::vector<int>& right_dims,
                                const std::vector<int>& out_dims, const ProductFn& product);
ProductFn bar_product(const Cohomology& left, const Cohomology& right, const Pairing& mu, const Cohomology& target);
ProductFn transported_product(const Cohomology& left, const CochainTransport& tl, const Cohomology& right,
                              const CochainTransport& tr, const Pairing& mu, const Cohomology& target,
                              const CochainTransport& tt, int bar_factor);

enum class RingMode { HopfTrivial, Hochschild };

struct ModuleTable {
    std::string name;
    std::vector<int> dims;
    ProductTable action;  // module class times ring class
};

struct RingTruncation {
    Field field;
    RingMode mode = RingMode::HopfTrivial;
    int cap = 0;
    std::vector<int> dims;
    Vec unit;  // coordinates of 1 in H^0
    ProductTable products;
    std::vector<ModuleTable> modules;
};

RingTruncation ring_truncation(const Algebra& a, RingMode mode, const std::vector<ModuleRep>& modules, int cap,
                               long long budget = default_budget);

struct GeneratorDegrees {
    std::vector<int> ring;
    std::vector<std::vector<int>> modules;
};

GeneratorDegrees generator_degrees(const RingTruncation& t);

struct CommutativityReport {
    int pairs_checked = 0;
    std::vector<std::array<int, 4>> violations;  // (m, i, n, j)
    bool pass() const { return violations.empty(); }
};

CommutativityReport graded_commutativity_check(const ProductTable& products);
CommutativityReport graded_commutativity_check(const Algebra& a, RingMode mode, int cap);

// Degree-n part of the truncated graded center, as a subspace of H^n coordinates.
std::vector<Subspace> graded_center_truncation(const Field& field, const ProductTable& products);
std::vector<Subspace> graded_center_truncation(const RingTruncation& t);

enum class Verdict { EvidenceFor, Inconclusive, EvidenceAgainst };
std::string verdict_name(Verdict v);

enum class FGMode { HFG, FG };

struct FGReport {
    FGMode mode = FGMode::HFG;
    int cap = 0;
    std::vector<int> dims;
    std::vector<int> ring_generator_degrees;
    std::vector<std::string> module_names;
    std::vector<std::vector<int>> module_generator_degrees;
    std::vector<std::vector<int>> module_dims;
    int stable_from = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> notes;
};

// Empty module list selects the defaults: k and A/rad A (hfg) or A (fg).
FGReport fg_report(const Algebra& a, FGMode mode, const std::vector<ModuleRep>& modules, int cap,
                   long long budget = default_budget);

}  // namespace hopfcoh
