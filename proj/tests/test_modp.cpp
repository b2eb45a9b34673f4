#include "doctest.h"

#include "fixtures.hpp"
#include "hopfcoh/modp.hpp"

using namespace hopfcoh;
using namespace fixtures;

TEST_CASE("integral models collect denominators")
{
    Field q = Field::rationals();
    IntegralModel sw = integral_model(sweedler(q));
    CHECK(sw.denominators == std::set<long long>{1});
    CHECK(sw.admissible_primes(12) == std::vector<std::uint32_t>{2, 3, 5, 7, 11});

    // Rescale a basis vector of k[x]/x^2 by 6: x' = x / 6 still squares to zero,
    // but the augmentation picks up nothing; use the group algebra instead.
    Algebra z2 = cyclic_group_algebra(2, q);
    Matrix p = Matrix::identity(q, 2);
    p(0, 1) = q.from_int(1);
    p(1, 1) = q.from_int(6);  // e1 = 1 + 6g
    Algebra skew = change_basis(z2, p, {"1", "u"});
    IntegralModel m = integral_model(skew);
    CHECK(m.denominators.count(6) == 1);
    auto adm = m.admissible_primes(10);
    CHECK(std::find(adm.begin(), adm.end(), 2u) == adm.end());
    CHECK(std::find(adm.begin(), adm.end(), 3u) == adm.end());
    CHECK_THROWS_AS(reduce_mod_p(m, 3), Error);
    CHECK(validate(reduce_mod_p(m, 5)).ok());
}

TEST_CASE("reduction commutes with constructors")
{
    Field q = Field::rationals();
    CHECK(reduce_mod_p(integral_model(cyclic_group_algebra(2, q)), 2) == cyclic_group_algebra(2, Field::prime(2)));
    Algebra s5 = reduce_mod_p(integral_model(sweedler(q)), 5);
    CHECK(s5 == sweedler(Field::prime(5)));
    CHECK(validate(s5).ok());
    Algebra q3 = reduce_mod_p(integral_model(qci22(q)), 3);
    CHECK(q3 == qci22(Field::prime(3)));
    CHECK(q3.product(1, 2) == SparseRow{{3, Field::prime(3).from_int(2)}});
    CHECK_THROWS_AS(reduce_mod_p(integral_model(sweedler(q)), 4), Error);
}

TEST_CASE("number-field reductions offer a factor menu")
{
    Field k = Field::number_field({1, 1, 1});  // t^2 + t + 1
    std::vector<std::vector<Scalar>> qq(2, std::vector<Scalar>(2, k.one()));
    qq[0][1] = k.generator();
    Algebra a = quantum_complete_intersection({2, 2}, qq, k);
    IntegralModel m = integral_model(a);
    CHECK(m.denominators == std::set<long long>{1});
    auto fs = m.factors(7);
    REQUIRE(fs.size() == 2);
    std::set<std::uint32_t> roots;
    for (const auto& f : fs) {
        REQUIRE(f.size() == 2);
        roots.insert((7 - f[0]) % 7);
    }
    CHECK(roots == std::set<std::uint32_t>{2, 4});
    for (const auto& f : fs) {
        Algebra r = reduce_mod_p(m, 7, f);
        CHECK(r.field == Field::prime(7));
        CHECK(validate(r).ok());
    }
    // 3 ramifies: t^2 + t + 1 = (t - 1)^2 mod 3.
    auto adm = m.admissible_primes(13);
    CHECK(std::find(adm.begin(), adm.end(), 3u) == adm.end());
    // 5 is inert: the residue field is GF(25).
    CHECK(reduce_mod_p(m, 5).field.degree() == 2);
}

TEST_CASE("radical models survive reduction")
{
    Field q = Field::rationals();
    Algebra s = sweedler(q);
    Subspace rad = radical(s);
    IntegralModel m = integral_model(s, rad.dense_basis());
    CHECK(m.radical_model);
    CHECK_NOTHROW(reduce_mod_p(m, 3));
}

TEST_CASE("semicontinuity of cohomology dimensions")
{
    Field q = Field::rationals();
    SUBCASE("Q[Z/2] against GF(2)[Z/2]")
    {
        Algebra a0 = cyclic_group_algebra(2, q);
        Algebra ap = reduce_mod_p(integral_model(a0), 2);
        SemicontinuityReport r = semicontinuity_report(a0, ap, FGMode::HFG, 6);
        CHECK(r.dims_char0 == std::vector<int>{1, 0, 0, 0, 0, 0, 0});
        CHECK(r.dims_charp == std::vector<int>(7, 1));
        CHECK(r.verdict == SemicontinuityVerdict::SemicontinuousStrict);
        for (int n = 1; n <= 6; ++n)
            CHECK(r.comparison[n] == "greater");
        CHECK(verdict_name(r.verdict) == "semicontinuous_strict");
    }
    SUBCASE("Q[x]/x^2 against GF(3)[x]/x^2")
    {
        Algebra a0 = truncated_poly(2, q);
        SemicontinuityReport r = semicontinuity_report(a0, reduce_mod_p(integral_model(a0), 3), FGMode::HFG, 8);
        CHECK(r.dims_char0 == std::vector<int>(9, 1));
        CHECK(r.verdict == SemicontinuityVerdict::Equal);
    }
    SUBCASE("Sweedler at 5")
    {
        Algebra a0 = sweedler(q);
        SemicontinuityReport r = semicontinuity_report(a0, reduce_mod_p(integral_model(a0), 5), FGMode::HFG, 6);
        CHECK(r.dims_char0 == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
        CHECK(r.verdict == SemicontinuityVerdict::Equal);
        CHECK(r.fg_charp.verdict == Verdict::EvidenceFor);
    }
    SUBCASE("Hochschild mode")
    {
        Algebra a0 = truncated_poly(2, q);
        SemicontinuityReport r = semicontinuity_report(a0, reduce_mod_p(integral_model(a0), 2), FGMode::FG, 4);
        CHECK(r.verdict != SemicontinuityVerdict::Violation);
        CHECK(r.dims_charp == std::vector<int>(5, 2));
    }
    CHECK_THROWS_AS(semicontinuity_report(sweedler(q), sweedler(q), FGMode::HFG, 2), Error);
}
