#pragma once

#include "hopfcoh/scalar.hpp"

#include <cstdint>
#include <utility>

namespace hopfcoh::detail {

// Arithmetic policies used by the elimination engine. Each maps to and from
// Scalar so public types stay field-agnostic while hot loops run on native
// representations.

struct PrimeArith {
    using value_type = std::uint32_t;

    Field field;
    std::uint32_t p;

    explicit PrimeArith(Field f) : field(f), p(f.characteristic()) {}

    static bool is_zero(value_type a) { return a == 0; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t(a) + b) % p); }
    value_type sub(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t(a) + p - b) % p); }
    value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t(a) * b % p); }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inv(value_type a) const { return inv_mod(a, p); }
    // acc -= f * v
    void submul(value_type& acc, value_type f, value_type v) const
    {
        acc = static_cast<value_type>((acc + std::uint64_t(p - f) * v) % p);
    }
    void addmul(value_type& acc, value_type f, value_type v) const
    {
        acc = static_cast<value_type>((acc + std::uint64_t(f) * v) % p);
    }
    std::size_t weight(value_type) const { return 1; }
    value_type from(const Scalar& s) const { return s.residue(); }
    Scalar to(value_type v) const { return Scalar(field, v); }
};

struct RationalArith {
    using value_type = mpq_class;

    Field field = Field::rationals();

    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const
    {
        if (sgn(a) == 0)
            throw Error(ErrorCode::ZeroInverse, "inverse of zero in QQ");
        return 1 / a;
    }
    void submul(value_type& acc, const value_type& f, const value_type& v) const { acc -= f * v; }
    void addmul(value_type& acc, const value_type& f, const value_type& v) const { acc += f * v; }
    std::size_t weight(const value_type& a) const
    {
        return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
    }
    value_type from(const Scalar& s) const { return s.rational(); }
    Scalar to(const value_type& v) const { return Scalar(field, v); }
};

struct ScalarArith {
    using value_type = Scalar;

    Field field;

    explicit ScalarArith(Field f) : field(f) {}

    static bool is_zero(const value_type& a) { return a.is_zero(); }
    value_type zero() const { return field.zero(); }
    value_type one() const { return field.one(); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return a.inverse(); }
    void submul(value_type& acc, const value_type& f, const value_type& v) const { acc -= f * v; }
    void addmul(value_type& acc, const value_type& f, const value_type& v) const { acc += f * v; }
    std::size_t weight(const value_type& a) const { return a.as_poly().size(); }
    value_type from(const Scalar& s) const { return s; }
    Scalar to(const value_type& v) const { return v; }
};

// Calls fn with the fastest arithmetic policy for the field.
template <class Fn>
decltype(auto) with_arith(const Field& field, Fn&& fn)
{
    switch (field.kind()) {
    case FieldKind::Prime: return fn(PrimeArith(field));
    case FieldKind::Rationals: return fn(RationalArith{});
    default: return fn(ScalarArith(field));
    }
}

}  // namespace hopfcoh::detail
