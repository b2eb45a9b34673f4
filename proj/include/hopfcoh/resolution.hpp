#pragma once

#include "hopfcoh/algebra.hpp"

#include <string>
#include <vector>

namespace hopfcoh {

enum class BarMode { AugmentedLeft, Bimodule };
enum class ResolutionFlavor { Bar, User, Periodic };

constexpr long long default_budget = 5'000'000;

// Entry (j, a) of row i in degree n means d_n(e_i) contains a * e_j.
using AlgebraRow = std::vector<std::pair<int, SparseRow>>;

// Free resolution of k (AugmentedLeft) or of A (Bimodule) over `base`, which
// is the normalized algebra or its enveloping algebra. Modules and resolution
// data supplied by callers are in the source algebra's basis; `module_change`
// converts actions from that basis to `base`.
struct FreeResolution {
    Algebra source;
    Algebra base;
    Matrix module_change;
    BarMode mode = BarMode::AugmentedLeft;
    ResolutionFlavor flavor = ResolutionFlavor::Bar;
    std::vector<int> ranks;
    std::vector<std::vector<AlgebraRow>> diff;  // diff[n] for 1 <= n < ranks.size()
    ModuleRep target;                           // k or A, over base
    std::vector<Vec> augmentation;              // image of each generator of P_0

    int length() const { return static_cast<int>(ranks.size()) - 1; }
    int bar_factor() const { return flavor == ResolutionFlavor::Bar ? base_bar_factor : 0; }
    int base_bar_factor = 0;  // dim of A-bar for bar resolutions
};

// Cochain complex C^0 -> C^1 -> ... ; d[n] maps C^n to C^{n+1}.
struct CochainComplex {
    Field field;
    std::vector<int> dims;
    std::vector<SparseMatrix> d;
    std::string provenance;
    // Bar-type layout: index of a cochain is tensor * mdim + m with tensors
    // written in base bar_factor, first factor most significant.
    int bar_factor = 0;
    int mdim = 0;

    int top() const { return static_cast<int>(dims.size()) - 1; }
};

FreeResolution normalized_bar(const Algebra& a, BarMode mode, int cap, long long budget = default_budget);

// Cyclic resolution P_n = A with d_n = right multiplication by
// elements[(n-1) % size], resolving k via the augmentation.
FreeResolution periodic_resolution(const Algebra& a, const std::vector<Vec>& elements, int length);

// User resolution of k; differential entries are in the source basis.
FreeResolution user_resolution(const Algebra& a, const std::vector<int>& ranks,
                               const std::vector<std::vector<AlgebraRow>>& diff, const std::vector<Vec>& augmentation);

struct ExactnessReport {
    std::vector<int> defect;  // dim ker d_n - rank d_{n+1}, n = 0.. (d_0 is the augmentation)
    int augmentation_cokernel = 0;
    std::vector<int> square_failures;  // degrees n where d_{n-1} d_n != 0

    bool exact() const;
};

ExactnessReport verify_resolution(const FreeResolution& res, int cap);

// k-linear matrix of d_n : P_n -> P_{n-1} (rows P_{n-1} coordinates i*dim + s).
SparseMatrix expand_differential(const FreeResolution& res, int n);

// Hom_base(P, M) with M given over the source (or its enveloping algebra).
CochainComplex hom_complex(const FreeResolution& res, const ModuleRep& m);
// Same with M already over res.base.
CochainComplex hom_complex_base(const FreeResolution& res, const ModuleRep& m);
ModuleRep to_base(const FreeResolution& res, const ModuleRep& m);

// phi[n][i] is the image of generator i of P_n as a k-vector in Q_n.
struct ChainMap {
    std::vector<std::vector<Vec>> phi;
};

ChainMap lift_chain_map(const FreeResolution& p, const FreeResolution& q, int cap);
// Induced map Hom(Q, M) -> Hom(P, M) in degree n, M over base.
SparseMatrix induced_cochain_map(const FreeResolution& p, const FreeResolution& q, const ChainMap& phi,
                                 const ModuleRep& m_base, int n);

}  // namespace hopfcoh
