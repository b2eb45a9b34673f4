#pragma once

#include "hopfcoh/cohomology.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hopfcoh {

// Structure constants of an algebra over QQ or a number field together with
// every denominator they use. Away from those primes the constants are
// integral and can be reduced.
struct IntegralModel {
    Algebra source;
    std::set<long long> denominators;  // always contains 1
    std::optional<Subspace> radical_model;

    std::vector<std::uint32_t> admissible_primes(long long bound) const;
    // Irreducible factors of the number-field modulus at p (empty for QQ).
    std::vector<PolyModP> factors(std::uint32_t p) const;
};

IntegralModel integral_model(const Algebra& a, const std::optional<std::vector<Vec>>& radical_basis = std::nullopt);

// Reduction of the model at an admissible prime; the result is validated,
// and a recorded radical must stay a nilpotent ideal.
Algebra reduce_mod_p(const IntegralModel& model, std::uint32_t p,
                     const std::optional<PolyModP>& factor = std::nullopt);

enum class SemicontinuityVerdict { Equal, SemicontinuousStrict, Violation };
std::string verdict_name(SemicontinuityVerdict v);

struct SemicontinuityReport {
    std::uint32_t prime = 0;
    int cap = 0;
    FGMode mode = FGMode::HFG;
    std::vector<int> dims_char0;
    std::vector<int> dims_charp;
    std::vector<std::string> comparison;  // per degree: "equal", "greater" (char p larger), "smaller"
    SemicontinuityVerdict verdict = SemicontinuityVerdict::Equal;
    FGReport fg_char0;
    FGReport fg_charp;
};

// H^*(A, k) (hfg) or HH^*(A) (fg) on both sides of a reduction.
SemicontinuityReport semicontinuity_report(const Algebra& a0, const Algebra& ap, FGMode mode, int cap,
                                           long long budget = default_budget);

}  // namespace hopfcoh
