#include "doctest.h"

#include "fixtures.hpp"

#include <random>

using namespace hopfcoh;
using namespace fixtures;

namespace {

bool has_violation(const ValidationReport& r, const std::string& kind, const std::vector<int>& idx)
{
    for (const auto& v : r.violations)
        if (v.kind == kind && v.indices == idx)
            return true;
    return false;
}

}  // namespace

TEST_CASE("validate accepts constructor output")
{
    Field q = Field::rationals(), f5 = Field::prime(5), f7 = Field::prime(7);
    CHECK(validate(cyclic_group_algebra(2, q)).ok());
    CHECK(validate(cyclic_group_algebra(3, q)).ok());
    CHECK(validate(sweedler(q)).ok());
    CHECK(validate(sweedler(f5)).ok());
    CHECK(validate(taft_algebra(3, f7.from_int(2))).ok());
    CHECK(validate(qci22(f5)).ok());
    CHECK(validate(matrix_algebra2(Field::prime(3))).ok());
    CHECK(validate_action(sign_action(q)).ok());
}

TEST_CASE("validate reports planted defects")
{
    Field q = Field::rationals();
    Algebra a = truncated_poly(3, q);  // 1, x, x^2
    // x * x^2 = x^2 instead of 0 breaks associativity on (x, x, x^2) and friends.
    a.mult[1 * 3 + 2] = {{2, q.one()}};
    auto rep = validate(a);
    CHECK_FALSE(rep.ok());
    CHECK(has_violation(rep, "associativity", {1, 1, 2}));

    Algebra s = sweedler(q);
    s.hopf->antipode = Matrix::identity(q, 4);
    auto srep = validate(s);
    int x = s.index_of("x");
    // S(x_1)x_2 with Delta x = x(x)1 + g(x)x gives x + g x != 0 = eps(x)1.
    CHECK(has_violation(srep, "antipode", {x}));
}

TEST_CASE("group algebras")
{
    Field f2 = Field::prime(2);
    Algebra z2 = cyclic_group_algebra(2, f2);
    CHECK(z2.dim == 2);
    CHECK(z2.labels == std::vector<std::string>{"1", "g"});
    CHECK(z2.product(1, 1) == SparseRow{{0, f2.one()}});

    Algebra z3 = cyclic_group_algebra(3, Field::rationals());
    CHECK(z3.dim == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(z3.hopf->comult[i] == SparseRow{{i * 3 + i, z3.field.one()}});

    try {
        group_algebra({{1, 0}, {0, 0}}, f2);
        FAIL("expected NotAGroup");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAGroup);
    }
    // S_3 as permutations of {0,1,2}.
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> c{perms[i][perms[j][0]], perms[i][perms[j][1]], perms[i][perms[j][2]]};
            table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    Algebra s3 = group_algebra(table, Field::prime(3));
    CHECK(validate(s3).ok());
    CHECK(center(s3).dim() == 3);  // number of conjugacy classes
}

TEST_CASE("quantum complete intersections")
{
    Field f5 = Field::prime(5);
    Algebra a = qci22(f5);
    CHECK(a.dim == 4);
    int x1 = a.index_of("x1"), x2 = a.index_of("x2"), x12 = a.index_of("x1x2");
    CHECK(a.product(x2, x1) == SparseRow{{x12, -f5.one()}});
    CHECK(a.product(x1, x2) == SparseRow{{x12, f5.one()}});
    CHECK(a.product(x1, x1).empty());
    CHECK(a.product(x2, x2).empty());

    Algebra t = truncated_poly(5, Field::rationals());
    CHECK(t.dim == 5);
    CHECK(validate(t).ok());

    Field q = Field::rationals();
    std::vector<std::vector<Scalar>> ones(3, std::vector<Scalar>(3, q.one()));
    Algebra c = quantum_complete_intersection({2, 2, 2}, ones, q);
    CHECK(c.dim == 8);
    CHECK(c.product(c.index_of("x2"), c.index_of("x1")) == c.product(c.index_of("x1"), c.index_of("x2")));
    CHECK(center(c).dim() == 8);

    for (int n1 = 2; n1 <= 4; ++n1)
        for (int n2 = 2; n2 <= 3; ++n2) {
            std::vector<std::vector<Scalar>> qq(2, std::vector<Scalar>(2, f5.one()));
            qq[0][1] = f5.from_int(2).pow(n1 + n2);
            Algebra b = quantum_complete_intersection({n1, n2}, qq, f5);
            CHECK(b.dim == n1 * n2);
            CHECK(validate(b).ok());
        }

    CHECK_THROWS_AS(quantum_complete_intersection({1}, {{}}, q), Error);
    std::vector<std::vector<Scalar>> zero(2, std::vector<Scalar>(2, q.zero()));
    CHECK_THROWS_AS(quantum_complete_intersection({2, 2}, zero, q), Error);
}

TEST_CASE("Taft algebras")
{
    Field q = Field::rationals();
    Algebra s = sweedler(q);
    CHECK(s.dim == 4);
    CHECK(s.labels == std::vector<std::string>{"1", "x", "g", "gx"});
    Field f7 = Field::prime(7);
    CHECK(f7.from_int(2).pow(3) == f7.one());
    Algebra t = taft_algebra(3, f7.from_int(2));
    CHECK(t.dim == 9);
    try {
        taft_algebra(2, q.one());
        FAIL("expected NotPrimitiveRoot");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrimitiveRoot);
    }
}

TEST_CASE("smash and crossed products")
{
    Field q = Field::rationals();
    HAction act = sign_action(q);
    Algebra sm = smash_or_crossed_product(act);
    CHECK(sm.dim == 4);
    CHECK(sm.aug.has_value());
    // Compare with Sweedler: 1 -> 1, g -> g, x -> x, x#g -> x g.
    Algebra sw = sweedler(q);
    std::vector<Vec> img = {sw.basis(sw.index_of("1")), sw.basis(sw.index_of("g")), sw.basis(sw.index_of("x")),
                            sw.mul(sw.basis(sw.index_of("x")), sw.basis(sw.index_of("g")))};
    CHECK(sm.labels == std::vector<std::string>{"1", "g", "x", "x#g"});
    CHECK(is_isomorphism(sm, sw, img));

    // Trivial action: tensor product.
    Algebra h = cyclic_group_algebra(3, q);
    Algebra r = truncated_poly(3, q);
    Algebra triv = smash_or_crossed_product(trivial_action(h, r));
    Algebra tp = tensor_product(r, h);
    CHECK(triv.mult == tp.mult);

    // k#_sigma kZ/2 with sigma(g,g) = -1 is k[g]/(g^2+1).
    HAction kz2 = trivial_action(cyclic_group_algebra(2, q), truncated_poly(2, q));
    kz2.target = Algebra{};
    kz2.target.field = q;
    kz2.target.dim = 1;
    kz2.target.labels = {"1"};
    kz2.target.mult = {{{0, q.one()}}};
    kz2.target.aug = Augmentation{{q.one()}};
    kz2.rep.mdim = 1;
    kz2.rep.action = {Matrix::identity(q, 1), Matrix::identity(q, 1)};
    std::vector<SparseRow> sigma = {{{0, q.one()}}, {{0, q.one()}}, {{0, q.one()}}, {{0, -q.one()}}};
    // eps(sigma(g,g)) = -1 != 1, so the augmentations are incompatible.
    CHECK_THROWS_AS(smash_or_crossed_product(kz2, sigma), Error);
    kz2.target.aug.reset();
    Algebra cp = smash_or_crossed_product(kz2, sigma);
    CHECK(cp.dim == 2);
    CHECK(cp.product(1, 1) == SparseRow{{0, -q.one()}});
    CHECK_FALSE(cp.aug.has_value());
}

TEST_CASE("enveloping algebras")
{
    Field q = Field::rationals();
    Algebra k;
    k.field = q;
    k.dim = 1;
    k.labels = {"1"};
    k.mult = {{{0, q.one()}}};
    Algebra ke = enveloping(k);
    CHECK(ke.dim == 1);
    CHECK(ke.mult == k.mult);

    Algebra z2e = enveloping(cyclic_group_algebra(2, q));
    CHECK(z2e.dim == 4);
    CHECK(center(z2e).dim() == 4);

    Field f3 = Field::prime(3);
    Algebra m2 = matrix_algebra2(f3);
    Algebra m2e = enveloping(m2);
    CHECK(m2e.dim == 16);
    CHECK(validate(m2e).ok());
    CHECK(validate_module(m2e, bimodule_rep(m2)).ok());
}

TEST_CASE("associated graded algebras")
{
    Field f2 = Field::prime(2);
    Algebra z4 = cyclic_group_algebra(4, f2);
    AlgebraFiltration rad = radical_filtration(z4);
    CHECK(rad.layers.size() == 5);
    GradedAlgebra gr = associated_graded(z4, rad);
    CHECK(validate(gr.algebra).ok());
    CHECK(gr.degree == std::vector<int>{0, 1, 2, 3});
    // gr is generated by its degree-one element y with y^4 = 0.
    Algebra poly = truncated_poly(4, f2);
    Vec y = gr.algebra.basis(1);
    std::vector<Vec> img{gr.algebra.one()};
    for (int i = 1; i < 4; ++i)
        img.push_back(gr.algebra.mul(img.back(), y));
    CHECK(is_isomorphism(poly, gr.algebra, img));

    Field q = Field::rationals();
    Algebra sw = sweedler(q);
    AlgebraFiltration trivial{FiltrationDirection::Increasing, {Subspace::full(q, 4)}};
    GradedAlgebra g0 = associated_graded(sw, trivial);
    CHECK(g0.degree == std::vector<int>{0, 0, 0, 0});
    CHECK(g0.algebra.mult == sw.mult);

    AlgebraFiltration corad{FiltrationDirection::Increasing,
                            {Subspace::span(q, 4, {sw.basis(sw.index_of("1")), sw.basis(sw.index_of("g"))}),
                             Subspace::full(q, 4)}};
    GradedAlgebra g1 = associated_graded(sw, corad);
    CHECK(validate(g1.algebra).ok());
    CHECK(g1.algebra.aug.has_value());
    Algebra sm = smash_or_crossed_product(sign_action(q));
    // In gr, x and gx span degree one; match 1, g, x, x#g.
    const Algebra& G = g1.algebra;
    auto find = [&](const std::string& lab) { return G.basis(G.index_of(lab)); };
    std::vector<Vec> img2 = {G.one(), find("g"), find("x"), G.mul(find("x"), find("g"))};
    CHECK(is_isomorphism(sm, G, img2));

    AlgebraFiltration bad{FiltrationDirection::Increasing,
                          {Subspace::span(q, 4, {sw.basis(sw.index_of("x"))}), Subspace::full(q, 4)}};
    CHECK_THROWS_AS(associated_graded(sw, bad), Error);
}

TEST_CASE("invariants, center and radical")
{
    Field q = Field::rationals();
    HAction act = sign_action(q);
    Subspace inv = invariants(act.hopf, act.rep);
    CHECK(inv == Subspace::span(q, 2, {act.target.one()}));

    Algebra z2 = cyclic_group_algebra(2, q);
    HAction triv = trivial_action(z2, truncated_poly(3, q));
    CHECK(invariants(triv.hopf, triv.rep).dim() == 3);

    Field f2 = Field::prime(2);
    Algebra z2f = cyclic_group_algebra(2, f2);
    Subspace reg_inv = invariants(z2f, regular_module(z2f));
    CHECK(reg_inv == Subspace::span(f2, 2, {Vec{f2.one(), f2.one()}}));

    CHECK(center(sweedler(q)).dim() == 1);
    CHECK(center(truncated_poly(4, q)).dim() == 4);
    Subspace zm = center(matrix_algebra2(Field::prime(3)));
    CHECK(zm.dim() == 1);
    CHECK(zm.contains(unit_vec(Field::prime(3), 4, 0)));

    CHECK(radical(z2).dim() == 0);
    Algebra t4 = truncated_poly(4, Field::prime(2));
    Subspace rt = radical(t4);
    CHECK(rt.dim() == 3);
    CHECK(rt == Subspace::span(t4.field, 4, {t4.basis(1), t4.basis(2), t4.basis(3)}));
    CHECK(radical(z2f) == Subspace::span(f2, 2, {Vec{f2.one(), f2.one()}}));
    CHECK(radical(sweedler(q)).dim() == 2);

    // Hint branch: x generates the radical of k[x]/(x^4).
    CHECK(radical(t4, std::vector<Vec>{t4.basis(1)}) == rt);
    CHECK_THROWS_AS(radical(t4, std::vector<Vec>{t4.one()}), Error);
    // x^2 is nilpotent but misses x; A/(x^2) = k[x]/(x^2) is not semisimple.
    Algebra t4q = truncated_poly(4, q);
    try {
        radical(t4q, std::vector<Vec>{t4q.basis(2)});
        FAIL("expected HintNotRadical");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HintNotRadical);
    }
    // GF(2)[Z/3]: characteristic too small and the augmentation ideal is not nilpotent.
    CHECK_THROWS_AS(radical(cyclic_group_algebra(3, f2)), Error);
}

TEST_CASE("invariant subalgebras are closed under multiplication")
{
    Field q = Field::rationals();
    // Z/2 acting on k[x,y]/(x^2,y^2) by swapping x and y.
    std::vector<std::vector<Scalar>> ones(2, std::vector<Scalar>(2, q.one()));
    Algebra r = quantum_complete_intersection({2, 2}, ones, q);  // 1, x2, x1, x1x2
    HAction act = trivial_action(cyclic_group_algebra(2, q), r);
    Matrix swap(q, 4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = q.one();
    act.rep.action[1] = swap;
    REQUIRE(validate_action(act).ok());
    Subspace inv = invariants(act.hopf, act.rep);
    CHECK(inv.dim() == 3);
    auto b = inv.dense_basis();
    for (const auto& u : b)
        for (const auto& v : b)
            CHECK(inv.contains(r.mul(u, v)));
}

TEST_CASE("normalization and change of basis")
{
    Field q = Field::rationals();
    Algebra z3 = cyclic_group_algebra(3, q);
    Normalized n = normalize(z3);
    CHECK_FALSE(n.identity);
    CHECK(n.algebra.labels == std::vector<std::string>{"1", "g-1", "g^2-1"});
    CHECK(validate(n.algebra).ok());
    for (int i = 1; i < 3; ++i)
        CHECK(n.algebra.aug->eps[i].is_zero());
    ModuleRep reg = change_basis(regular_module(z3), n.p);
    CHECK(validate_module(n.algebra, reg).ok());

    Algebra sw = sweedler(q);
    Normalized ns = normalize(sw);
    CHECK_FALSE(ns.identity);  // eps(g) = 1
    CHECK(validate(ns.algebra).ok());
    CHECK(normalize(qci22(q)).identity);

    // Random basis change keeps Hopf axioms.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(-2, 2);
    Matrix p = Matrix::identity(q, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (j != 0 && i != j)
                p(i, j) = q.from_int(val(rng));
    REQUIRE(p.inverse());
    Algebra c = change_basis(sw, p, {"1", "a", "b", "c"});
    CHECK(validate(c).ok());
}

TEST_CASE("quotient modules")
{
    Field f3 = Field::prime(3);
    Algebra t = truncated_poly(3, f3);
    Subspace rad = radical(t);
    ModuleRep top = quotient_module(regular_module(t), rad, "A/rad");
    CHECK(top.mdim == 1);
    CHECK(validate_module(t, top).ok());
    CHECK(top.action[1](0, 0).is_zero());
}
