#pragma once

// Small example algebras shared by the test binaries.

#include "hopfcoh/algebra.hpp"

#include <algorithm>
#include <array>

namespace fixtures {

using namespace hopfcoh;

inline Algebra sweedler(const Field& f) { return taft_algebra(2, -f.one()); }

inline Algebra truncated_poly(int n, const Field& f) { return quantum_complete_intersection({n}, {{}}, f); }

inline Algebra qci22(const Field& f)
{
    std::vector<std::vector<Scalar>> q(2, std::vector<Scalar>(2, f.one()));
    q[0][1] = -f.one();
    return quantum_complete_intersection({2, 2}, q, f);
}

// 2x2 matrices on the basis I, E12, E21, E11 - E22 (characteristic != 2).
inline Algebra matrix_algebra2(const Field& f)
{
    using M2 = std::array<Scalar, 4>;  // a b / c d
    Scalar z = f.zero(), o = f.one();
    std::vector<M2> basis = {M2{o, z, z, o}, M2{z, o, z, z}, M2{z, z, o, z}, M2{o, z, z, -o}};
    Scalar half = f.from_int(2).inverse();
    auto coords = [&](const M2& m) {
        return Vec{(m[0] + m[3]) * half, m[1], m[2], (m[0] - m[3]) * half};
    };
    Algebra a;
    a.field = f;
    a.dim = 4;
    a.unit = 0;
    a.labels = {"1", "E12", "E21", "H"};
    a.mult.resize(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const M2& x = basis[i];
            const M2& y = basis[j];
            M2 p{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                 x[2] * y[1] + x[3] * y[3]};
            a.mult[i * 4 + j] = to_sparse(coords(p));
        }
    return a;
}

// Z/2 = {1, g} acting on k[x]/(x^2) by x -> -x.
inline HAction sign_action(const Field& f)
{
    HAction act;
    act.hopf = cyclic_group_algebra(2, f);
    act.target = truncated_poly(2, f);
    act.rep.name = "R";
    act.rep.field = f;
    act.rep.mdim = 2;
    Matrix g = Matrix::identity(f, 2);
    g(1, 1) = -f.one();
    act.rep.action = {Matrix::identity(f, 2), g};
    return act;
}

inline HAction trivial_action(const Algebra& h, const Algebra& r)
{
    HAction act;
    act.hopf = h;
    act.target = r;
    act.rep.name = "R";
    act.rep.field = r.field;
    act.rep.mdim = r.dim;
    for (int i = 0; i < h.dim; ++i)
        act.rep.action.push_back(Matrix::identity(r.field, r.dim).scaled(h.aug->eps[i]));
    return act;
}

// True when e_i -> images[i] is a unital algebra isomorphism a -> b.
inline bool is_isomorphism(const Algebra& a, const Algebra& b, const std::vector<Vec>& images)
{
    if (a.dim != b.dim || static_cast<int>(images.size()) != a.dim)
        return false;
    Matrix m(b.field, b.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        m.set_column(i, images[i]);
    if (m.rank() != a.dim || images[a.unit] != b.one())
        return false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (m * a.mul(a.basis(i), a.basis(j)) != b.mul(images[i], images[j]))
                return false;
    return true;
}

}  // namespace fixtures
