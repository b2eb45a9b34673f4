#pragma once

#include "hopfcoh/cohomology.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopfcoh {

// Product of cochains of degrees m and n, landing in degree m + n.
using CochainProduct = std::function<SparseRow(int m, const SparseRow& x, int n, const SparseRow& y)>;

// A cochain complex filtered by coordinate weights: F^p C^n is spanned by the
// coordinates of C^n whose weight is at least p.
struct FilteredComplex {
    CochainComplex underlying;
    std::vector<std::vector<int>> weight;  // weight[n][coordinate]
    std::optional<CochainProduct> product;

    int cap() const { return underlying.top() - 1; }
    int min_weight(int n) const;
    int max_weight(int n) const;
};

// Throws IncompatibleFiltration unless d F^p is inside F^p in every degree.
void check_filtration(const FilteredComplex& fc);

struct SpectralCell {
    int i = 0;  // filtration index
    int j = 0;  // complementary degree; total degree is i + j
    int dim = 0;
    std::vector<SparseRow> representatives;  // cochains of degree i + j, empty for E_2-only pages
};

struct SpectralPage {
    Field field;
    int r = 0;
    int cap = 0;
    std::vector<SpectralCell> cells;  // ordered by total degree, then i
    // d_r on the flattened basis of each total degree (basis = cells of that
    // degree in order); d[n] maps total degree n to n + 1. Empty for pages
    // known only up to their differentials.
    std::vector<Matrix> d;
    std::optional<ProductTable> products;  // on flattened bases
    std::vector<std::string> notes;

    std::vector<int> totals() const;
    int cell_index(int i, int j) const;  // -1 when absent
    // Offset of the cell inside the flattened basis of its total degree.
    int offset(int cell) const;
    bool has_differentials() const { return !d.empty(); }
};

// Pages E_0 .. E_{r_max}, followed by E_infinity when it differs from the last one computed.
struct SpectralSequence {
    std::vector<SpectralPage> pages;
    SpectralPage infinity;
    std::vector<int> direct_dims;  // H^n of the underlying complex
    bool converges = false;
};

SpectralSequence compute_pages(const FilteredComplex& fc, int r_max, bool with_products);

// Bar complex of (A, M) filtered by an algebra filtration. Module weights are
// per coordinate of M (increasing convention); an empty list means weight 0.
FilteredComplex filtered_from_algebra_filtration(const Algebra& a, const AlgebraFiltration& filt, const ModuleRep& m,
                                                 int cap, const std::vector<int>& module_weights = {});

enum class LHSMode { Cohomology, Hochschild };

struct DoubleComplex {
    Field field;
    int cap = 0;
    std::vector<std::vector<int>> dims;               // dims[i][j], i + j <= cap + 1
    std::vector<std::vector<SparseMatrix>> horizontal;  // (i, j) -> (i + 1, j)
    std::vector<std::vector<SparseMatrix>> vertical;    // (i, j) -> (i, j + 1), sign (-1)^i included
    FilteredComplex total() const;                       // filtered by the column index i
};

struct LHSResult {
    SpectralPage e2;
    std::vector<int> direct_dims;  // H^n(R # H, M) when computed
    std::optional<DoubleComplex> double_complex;
};

// E_2^{p,q} = H^p(H, H^q(R, M)) for M over R # H (left H-module structure on
// H^q from the cochain action, converted through the antipode).
LHSResult lhs_e2(const HAction& act, const ModuleRep& m, LHSMode mode, int cap, bool with_products,
                 bool with_double_complex = false, long long budget = default_budget);

enum class CollapseVerdict { CollapseAt, NoCollapse, Inconclusive };

struct CollapseCertificate {
    CollapseVerdict verdict = CollapseVerdict::Inconclusive;
    int r = 0;
    std::vector<int> page_totals;
    std::vector<int> direct_dims;
    // Witness of a nonzero differential: source cell (i, j) and the image column.
    std::optional<std::pair<int, int>> witness_cell;
    std::string describe() const;
};

CollapseCertificate collapse_certificate(const SpectralPage& page, const std::vector<int>& direct_dims);

struct PermanentPower {
    int total_degree = 0;
    int i = 0;
    Vec cls;  // coordinates in the flattened basis of the total degree
    int exponent = 0;
    bool verified = false;
    bool cap_truncated = false;
    std::string certificate;
};

std::vector<PermanentPower> frobenius_permanent_powers(const SpectralPage& page, int characteristic);

// Planted filtered DGAs with a nonzero d_1: over GF(2), k[c, w] with |c| = 1,
// |w| = 2, dc = w; over GF(3), k[y] (x) Lambda(z) with |y| = 2, |z| = 3, dy = z.
FilteredComplex toy_frobenius_complex(int p, int cap);
// Four-dimensional two-layer complex whose d_1 is nonzero.
FilteredComplex toy_two_layer_complex(const Field& f);

std::vector<int> cohomology_dims(const CochainComplex& c, int cap);

}  // namespace hopfcoh
