#include "doctest.h"

#include "fixtures.hpp"
#include "hopfcoh/spectral.hpp"

using namespace hopfcoh;
using namespace fixtures;

namespace {

Vec times(const Field& f, const ProductTable& t, int m, const Vec& x, int n, const Vec& y)
{
    Vec out = zero_vec(f, t.out_dims[m + n]);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!x[i].is_zero() && !y[j].is_zero())
                out = add(out, scale(x[i] * y[j], t.at(m, static_cast<int>(i), n, static_cast<int>(j))));
    return out;
}

void check_page_laws(const SpectralPage& page)
{
    const Field& f = page.field;
    std::vector<int> tot = page.totals();
    for (int n = 0; n + 1 < static_cast<int>(page.d.size()); ++n)
        CHECK((page.d[n + 1] * page.d[n]).is_zero());
    if (!page.products)
        return;
    const ProductTable& t = *page.products;
    for (int m = 0; m <= page.cap; ++m)
        for (int n = 0; m + n + 1 <= page.cap && m + n < static_cast<int>(page.d.size()); ++n)
            for (int i = 0; i < tot[m]; ++i)
                for (int j = 0; j < tot[n]; ++j) {
                    Vec x = unit_vec(f, tot[m], i), y = unit_vec(f, tot[n], j);
                    Vec lhs = page.d[m + n] * times(f, t, m, x, n, y);
                    Vec rhs = times(f, t, m + 1, page.d[m] * x, n, y);
                    Vec second = times(f, t, m, x, n + 1, page.d[n] * y);
                    rhs = m % 2 ? sub(rhs, second) : add(rhs, second);
                    CHECK(lhs == rhs);
                }
}

void check_sequence(const SpectralSequence& ss)
{
    CHECK(ss.converges);
    for (std::size_t r = 0; r + 1 < ss.pages.size(); ++r) {
        const SpectralPage& a = ss.pages[r];
        const SpectralPage& b = ss.pages[r + 1];
        for (const auto& cell : b.cells) {
            int k = a.cell_index(cell.i, cell.j);
            REQUIRE(k >= 0);
            CHECK(cell.dim <= a.cells[k].dim);
        }
        // E_{r+1} = ker d_r / im d_r, totalled per degree.
        for (int n = 0; n + 1 <= a.cap; ++n) {
            int ker = a.totals()[n] - (n < static_cast<int>(a.d.size()) ? a.d[n].rank() : 0);
            int im = n > 0 ? a.d[n - 1].rank() : 0;
            if (n < a.cap)
                CHECK(b.totals()[n] == ker - im);
        }
    }
    for (const auto& p : ss.pages)
        check_page_laws(p);
}

std::vector<int> ones(int n) { return std::vector<int>(n, 1); }

}  // namespace

TEST_CASE("single layer filtration collapses at E_1")
{
    Field q = Field::rationals();
    Algebra a = sweedler(q);
    AlgebraFiltration filt{FiltrationDirection::Increasing, {Subspace::full(q, a.dim)}};
    FilteredComplex fc = filtered_from_algebra_filtration(a, filt, trivial_module(a), 4);
    SpectralSequence ss = compute_pages(fc, 3, true);
    check_sequence(ss);
    CHECK(ss.direct_dims == std::vector<int>{1, 0, 1, 0, 1});
    for (int r = 1; r <= 3; ++r)
        CHECK(ss.pages[r].totals() == ss.direct_dims);
    for (const auto& c : ss.pages[1].cells)
        CHECK(c.i == 0);
    CHECK(collapse_certificate(ss.pages[1], ss.direct_dims).describe() == "collapse_at_1");
}

TEST_CASE("May sequence of the radical filtration of GF(2)[Z/4]")
{
    Field f = Field::prime(2);
    Algebra a = cyclic_group_algebra(4, f);
    FilteredComplex fc = filtered_from_algebra_filtration(a, radical_filtration(a), trivial_module(a), 6);
    SpectralSequence ss = compute_pages(fc, 3, true);
    check_sequence(ss);
    CHECK(ss.direct_dims == ones(7));
    CHECK(ss.pages[1].totals() == ones(7));
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : ss.pages[r].d)
            CHECK(d.is_zero());
    CollapseCertificate cert = collapse_certificate(ss.pages[1], ss.direct_dims);
    CHECK(cert.verdict == CollapseVerdict::CollapseAt);
    CHECK(cert.describe() == "collapse_at_1");
    // E_0 is strictly bigger, so collapse at 0 is not claimed.
    CHECK(collapse_certificate(ss.pages[0], ss.direct_dims).verdict != CollapseVerdict::CollapseAt);
    // Odd central classes square to d_r-cycles; even ones have p-th powers that are cycles.
    for (const auto& pp : frobenius_permanent_powers(ss.pages[1], 2))
        CHECK((pp.verified || pp.cap_truncated));
}

TEST_CASE("coradical filtration of Sweedler's algebra")
{
    Field q = Field::rationals();
    Algebra a = sweedler(q);
    // basis 1, x, g, gx
    Subspace f0 = Subspace::span(q, 4, std::vector<Vec>{unit_vec(q, 4, 0), unit_vec(q, 4, 2)});
    AlgebraFiltration filt{FiltrationDirection::Increasing, {f0, Subspace::full(q, 4)}};
    FilteredComplex fc = filtered_from_algebra_filtration(a, filt, trivial_module(a), 4);
    SpectralSequence ss = compute_pages(fc, 2, true);
    check_sequence(ss);
    CHECK(ss.pages[1].totals() == std::vector<int>{1, 0, 1, 0, 1});
    CHECK(collapse_certificate(ss.pages[1], ss.direct_dims).describe() == "collapse_at_1");
}

TEST_CASE("incompatible filtrations are rejected")
{
    Field q = Field::rationals();
    Algebra a = sweedler(q);
    // span{1, x} is a subalgebra but does not contain g; span{x} misses the unit.
    Subspace bad = Subspace::span(q, 4, std::vector<Vec>{unit_vec(q, 4, 1)});
    AlgebraFiltration filt{FiltrationDirection::Increasing, {bad, Subspace::full(q, 4)}};
    CHECK_THROWS_AS(filtered_from_algebra_filtration(a, filt, trivial_module(a), 2), Error);

    FilteredComplex fc = toy_two_layer_complex(q);
    fc.weight[1] = {0, 0};
    fc.weight[0] = {0, 1};
    CHECK_THROWS_AS(check_filtration(fc), Error);
}

TEST_CASE("two-layer toy does not collapse at E_1")
{
    Field f = Field::prime(5);
    FilteredComplex fc = toy_two_layer_complex(f);
    SpectralSequence ss = compute_pages(fc, 3, false);
    check_sequence(ss);
    CHECK(ss.pages[1].totals() == std::vector<int>{2, 2});
    CHECK(ss.pages[2].totals() == std::vector<int>{1, 1});
    CHECK(ss.direct_dims == std::vector<int>{1, 1});
    CollapseCertificate c1 = collapse_certificate(ss.pages[1], ss.direct_dims);
    CHECK(c1.verdict == CollapseVerdict::NoCollapse);
    REQUIRE(c1.witness_cell);
    CHECK(*c1.witness_cell == std::make_pair(0, 0));
    CHECK(collapse_certificate(ss.pages[2], ss.direct_dims).describe() == "collapse_at_2");
    CHECK_THROWS_AS(collapse_certificate(ss.pages[1], {1}), Error);
}

TEST_CASE("Frobenius permanent powers on planted toys")
{
    SUBCASE("characteristic 2")
    {
        FilteredComplex fc = toy_frobenius_complex(2, 7);
        SpectralSequence ss = compute_pages(fc, 2, true);
        check_sequence(ss);
        const SpectralPage& e1 = ss.pages[1];
        auto powers = frobenius_permanent_powers(e1, 2);
        bool saw_c = false;
        for (const auto& pp : powers) {
            if (pp.total_degree == 1) {
                saw_c = true;
                CHECK(pp.exponent == 2);
                CHECK(pp.verified);
            }
            if (pp.total_degree % 2 == 1 && !pp.cap_truncated)
                CHECK(pp.exponent <= 2);
        }
        CHECK(saw_c);
        CHECK_THROWS_AS(frobenius_permanent_powers(e1, 3), Error);
    }
    SUBCASE("characteristic 3")
    {
        FilteredComplex fc = toy_frobenius_complex(3, 7);
        SpectralSequence ss = compute_pages(fc, 2, true);
        check_sequence(ss);
        auto powers = frobenius_permanent_powers(ss.pages[1], 3);
        bool saw_y = false;
        for (const auto& pp : powers)
            if (pp.total_degree == 2) {
                saw_y = true;
                CHECK(pp.exponent == 3);
                CHECK(pp.verified);
            } else if (pp.total_degree == 3) {
                CHECK(pp.exponent == 1);
            }
        CHECK(saw_y);
    }
    SUBCASE("missing products")
    {
        SpectralSequence ss = compute_pages(toy_frobenius_complex(2, 3), 1, false);
        CHECK_THROWS_AS(frobenius_permanent_powers(ss.pages[1], 2), Error);
    }
}

TEST_CASE("LHS E_2 with a semisimple acting group")
{
    Field q = Field::rationals();
    HAction act = sign_action(q);
    Algebra a = smash_or_crossed_product(act);
    LHSResult res = lhs_e2(act, trivial_module(a), LHSMode::Cohomology, 6, true);
    const SpectralPage& e2 = res.e2;
    for (const auto& c : e2.cells)
        CHECK(c.i == 0);
    CHECK(e2.totals() == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
    CHECK(res.direct_dims == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
    CHECK(collapse_certificate(e2, res.direct_dims).describe() == "collapse_at_2");
    REQUIRE(e2.products);
    // The degree-2 class squares to a nonzero class.
    CHECK(!is_zero(e2.products->at(2, 0, 2, 0)));
}

TEST_CASE("LHS E_2 with a trivial action is a tensor product")
{
    SUBCASE("GF(2)")
    {
        Field f = Field::prime(2);
        HAction act = trivial_action(cyclic_group_algebra(2, f), truncated_poly(2, f));
        Algebra a = smash_or_crossed_product(act);
        LHSResult res = lhs_e2(act, trivial_module(a), LHSMode::Cohomology, 4, true, true);
        for (const auto& c : res.e2.cells)
            CHECK(c.dim == 1);
        CHECK(res.e2.totals() == std::vector<int>{1, 2, 3, 4, 5});
        CHECK(res.direct_dims == std::vector<int>{1, 2, 3, 4, 5});
        CHECK(collapse_certificate(res.e2, res.direct_dims).describe() == "collapse_at_2");
        REQUIRE(res.double_complex);
        // The genuine double complex reproduces the fast E_2.
        FilteredComplex tot = res.double_complex->total();
        SpectralSequence ss = compute_pages(tot, 2, false);
        CHECK(ss.converges);
        CHECK(ss.direct_dims == res.direct_dims);
        for (const auto& c : res.e2.cells) {
            int k = ss.pages[2].cell_index(c.i, c.j);
            REQUIRE(k >= 0);
            CHECK(ss.pages[2].cells[k].dim == c.dim);
        }
    }
    SUBCASE("GF(3), Z/3 acting trivially on k[x]/x^3")
    {
        Field f = Field::prime(3);
        HAction act = trivial_action(cyclic_group_algebra(3, f), truncated_poly(3, f));
        Algebra a = smash_or_crossed_product(act);
        LHSResult res = lhs_e2(act, trivial_module(a), LHSMode::Cohomology, 4, false);
        for (const auto& c : res.e2.cells)
            CHECK(c.dim == 1);
        CHECK(res.e2.totals() == std::vector<int>{1, 2, 3, 4, 5});
    }
}

TEST_CASE("double complex of the sign action")
{
    Field f = Field::rationals();
    HAction act = sign_action(f);
    Algebra a = smash_or_crossed_product(act);
    LHSResult res = lhs_e2(act, trivial_module(a), LHSMode::Cohomology, 3, false, true);
    REQUIRE(res.double_complex);
    SpectralSequence ss = compute_pages(res.double_complex->total(), 2, false);
    CHECK(ss.converges);
    CHECK(ss.pages[2].totals() == res.e2.totals());
}

TEST_CASE("Hochschild-mode LHS for a trivial action")
{
    Field f = Field::prime(2);
    HAction act = trivial_action(cyclic_group_algebra(2, f), truncated_poly(2, f));
    Algebra a = smash_or_crossed_product(act);
    LHSResult res = lhs_e2(act, bimodule_rep(a), LHSMode::Hochschild, 3, true);
    CHECK(!res.e2.products);
    REQUIRE(res.direct_dims.size() == 4);
    for (int n = 0; n <= 3; ++n)
        CHECK(res.e2.totals()[n] >= res.direct_dims[n]);
}

TEST_CASE("module mismatch is reported")
{
    Field f = Field::rationals();
    HAction act = sign_action(f);
    CHECK_THROWS_AS(lhs_e2(act, trivial_module(act.target), LHSMode::Cohomology, 2, false), Error);
}
