#include "doctest.h"

#include "fixtures.hpp"
#include "hopfcoh/resolution.hpp"

#include <functional>

using namespace hopfcoh;
using namespace fixtures;

namespace {

// dim H^n from ranks alone; independent of the cohomology module.
std::vector<int> betti(const CochainComplex& c, int upto)
{
    std::vector<int> r;
    for (const auto& m : c.d)
        r.push_back(rank(m));
    std::vector<int> out;
    for (int n = 0; n <= upto; ++n)
        out.push_back(c.dims[n] - r.at(n) - (n > 0 ? r[n - 1] : 0));
    return out;
}

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("bar ranks")
{
    Field q = Field::rationals();
    auto sw = normalized_bar(sweedler(q), BarMode::AugmentedLeft, 4);
    CHECK(sw.ranks == std::vector<int>{1, 3, 9, 27, 81});
    auto tp = normalized_bar(truncated_poly(2, q), BarMode::AugmentedLeft, 5);
    CHECK(tp.ranks == std::vector<int>(6, 1));
}

TEST_CASE("bar resolutions are exact")
{
    Field f2 = Field::prime(2), q = Field::rationals();
    auto bim = normalized_bar(cyclic_group_algebra(2, f2), BarMode::Bimodule, 3);
    CHECK(bim.ranks == std::vector<int>{1, 1, 1, 1});
    auto rep = verify_resolution(bim, 2);
    CHECK(rep.square_failures.empty());
    CHECK(rep.exact());
    CHECK(verify_resolution(normalized_bar(sweedler(q), BarMode::AugmentedLeft, 4), 3).exact());
    CHECK(verify_resolution(normalized_bar(qci22(Field::prime(5)), BarMode::Bimodule, 3), 2).exact());
    CHECK(verify_resolution(normalized_bar(matrix_algebra2(q), BarMode::Bimodule, 3), 2).exact());
}

TEST_CASE("budget and augmentation guards")
{
    Field q = Field::rationals();
    CHECK(code_of([&] { normalized_bar(sweedler(q), BarMode::AugmentedLeft, 20); }) == ErrorCode::BudgetExceeded);
    CHECK(code_of([&] { normalized_bar(sweedler(q), BarMode::AugmentedLeft, 4, 50); }) == ErrorCode::BudgetExceeded);
    CHECK(code_of([&] { normalized_bar(matrix_algebra2(q), BarMode::AugmentedLeft, 2); }) ==
          ErrorCode::MissingAugmentation);
}

TEST_CASE("periodic resolution of GF(3)[Z/3]")
{
    Field f3 = Field::prime(3);
    Algebra a = cyclic_group_algebra(3, f3);
    Vec gm1 = sub(a.basis(1), a.one());
    Vec norm = add(add(a.basis(0), a.basis(1)), a.basis(2));
    auto good = periodic_resolution(a, {gm1, norm}, 6);
    CHECK(verify_resolution(good, 5).exact());

    auto planted = periodic_resolution(a, {gm1, gm1}, 6);
    auto rep = verify_resolution(planted, 5);
    CHECK_FALSE(rep.exact());
    CHECK(rep.defect[0] == 0);
    CHECK(rep.defect[1] != 0);
    CHECK(rep.defect[3] != 0);
}

TEST_CASE("hom complexes give known cohomology")
{
    Field f2 = Field::prime(2), q = Field::rationals(), f3 = Field::prime(3);
    {
        Algebra a = cyclic_group_algebra(2, f2);
        auto c = hom_complex(normalized_bar(a, BarMode::AugmentedLeft, 5), trivial_module(a));
        CHECK(betti(c, 4) == std::vector<int>(5, 1));
    }
    {
        Algebra a = sweedler(q);
        auto c = hom_complex(normalized_bar(a, BarMode::AugmentedLeft, 5), trivial_module(a));
        CHECK(betti(c, 4) == std::vector<int>{1, 0, 1, 0, 1});
    }
    {
        Algebra a = cyclic_group_algebra(3, f3);
        auto c = hom_complex(normalized_bar(a, BarMode::AugmentedLeft, 5), trivial_module(a));
        CHECK(betti(c, 4) == std::vector<int>(5, 1));
        auto per = periodic_resolution(a, {sub(a.basis(1), a.one()), add(add(a.basis(0), a.basis(1)), a.basis(2))}, 5);
        CHECK(betti(hom_complex(per, trivial_module(a)), 4) == std::vector<int>(5, 1));
    }
    {
        // HH^n(k[x]/x^2) over GF(2) is 2-dimensional in every degree
        Algebra a = truncated_poly(2, f2);
        auto c = hom_complex(normalized_bar(a, BarMode::Bimodule, 5), bimodule_rep(a));
        CHECK(betti(c, 4) == std::vector<int>(5, 2));
    }
    {
        // separable: HH^0 = center, higher vanish
        Algebra a = matrix_algebra2(q);
        auto c = hom_complex(normalized_bar(a, BarMode::Bimodule, 3), bimodule_rep(a));
        CHECK(betti(c, 2) == std::vector<int>{1, 0, 0});
    }
}

TEST_CASE("hom complex rejects foreign modules")
{
    Field q = Field::rationals();
    auto res = normalized_bar(sweedler(q), BarMode::AugmentedLeft, 2);
    CHECK(code_of([&] { hom_complex(res, trivial_module(truncated_poly(3, q))); }) == ErrorCode::BaseMismatch);
}

TEST_CASE("lifting between bar and periodic resolutions")
{
    Field f3 = Field::prime(3);
    Algebra a = cyclic_group_algebra(3, f3);
    auto bar = normalized_bar(a, BarMode::AugmentedLeft, 4);
    auto per = periodic_resolution(a, {sub(a.basis(1), a.one()), add(add(a.basis(0), a.basis(1)), a.basis(2))}, 4);
    auto up = lift_chain_map(per, bar, 4);
    auto down = lift_chain_map(bar, per, 4);
    ModuleRep k = to_base(bar, trivial_module(a));
    auto cb = hom_complex_base(bar, k);
    auto cp = hom_complex_base(per, k);
    for (int n = 0; n <= 3; ++n) {
        // down^* then up^* induces the identity on H^n(per); check it on ranks
        SparseMatrix comp = induced_cochain_map(per, bar, up, k, n) * induced_cochain_map(bar, per, down, k, n);
        CHECK(comp.rows() == cp.dims[n]);
        CHECK(comp.cols() == cp.dims[n]);
        CHECK(rank(comp) == 1);
    }
    CHECK(code_of([&] { lift_chain_map(per, normalized_bar(cyclic_group_algebra(3, Field::prime(3)), BarMode::Bimodule, 2), 1); }) ==
          ErrorCode::NotSameTarget);
    Algebra other = truncated_poly(3, f3);
    CHECK(code_of([&] { lift_chain_map(per, normalized_bar(other, BarMode::AugmentedLeft, 2), 1); }) ==
          ErrorCode::NotSameTarget);
}
