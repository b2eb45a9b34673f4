#pragma once

#include "hopfcoh/error.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hopfcoh {

// Dense polynomial over GF(p), coefficient i multiplies t^i, no trailing zeros.
using PolyModP = std::vector<std::uint32_t>;
// Dense polynomial over QQ, same layout.
using PolyQ = std::vector<mpq_class>;

namespace polymodp {

void trim(PolyModP& a);
PolyModP add(const PolyModP& a, const PolyModP& b, std::uint32_t p);
PolyModP sub(const PolyModP& a, const PolyModP& b, std::uint32_t p);
PolyModP mul(const PolyModP& a, const PolyModP& b, std::uint32_t p);
// Quotient and remainder; b must be nonzero.
std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b, std::uint32_t p);
PolyModP mod(const PolyModP& a, const PolyModP& b, std::uint32_t p);
PolyModP gcd(PolyModP a, PolyModP b, std::uint32_t p);  // monic result
PolyModP powmod(PolyModP base, std::uint64_t e, const PolyModP& m, std::uint32_t p);
PolyModP derivative(const PolyModP& a, std::uint32_t p);
bool is_irreducible(const PolyModP& f, std::uint32_t p);
// Monic irreducible factors of a squarefree monic f, sorted by (degree, coefficients).
std::vector<PolyModP> factor_squarefree(const PolyModP& f, std::uint32_t p);
bool is_squarefree(const PolyModP& f, std::uint32_t p);

}  // namespace polymodp

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
bool is_prime(std::uint64_t n);

class Scalar;

enum class FieldKind { Prime, Extension, Rationals, NumberField };

// Immutable description of an exact field. Instances are interned, so a Field
// handle compares by identity and stays valid for the program's lifetime.
struct FieldSpec {
    FieldKind kind{};
    std::uint32_t p = 0;               // Prime, Extension
    PolyModP ext_modulus;              // Extension: monic irreducible over GF(p)
    PolyQ nf_modulus;                  // NumberField: monic over QQ
    bool irreducibility_asserted = false;  // NumberField of degree > 4
    std::string canonical;
};

class Field {
public:
    Field();  // the rationals

    static Field prime(std::uint64_t p);
    static Field extension(std::uint64_t p, const std::vector<std::int64_t>& modulus);
    static Field extension_mod(std::uint32_t p, PolyModP modulus);
    static Field rationals();
    static Field number_field(PolyQ modulus);
    // Accepts "GF(p)", "GF(p^d; f=[c0,...,cd])", "QQ", "QQ[t]/(m=[c0,...,cd])".
    static Field parse(std::string_view text);

    FieldKind kind() const { return spec_->kind; }
    const FieldSpec& spec() const { return *spec_; }
    std::uint32_t characteristic() const { return spec_->p; }
    // Degree over the prime field (or over QQ).
    int degree() const;
    bool is_finite() const { return kind() == FieldKind::Prime || kind() == FieldKind::Extension; }
    const std::string& to_string() const { return spec_->canonical; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    // Throws BadPrime when a denominator is not invertible in a finite field.
    Scalar from_rational(const mpq_class& v) const;
    // Coefficients of a polynomial in the field generator t (for GF(p^d) and
    // number fields); over GF(p) and QQ only the constant term is allowed.
    Scalar from_poly(const PolyQ& coeffs) const;
    Scalar generator() const;

    friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.spec_ != b.spec_; }

private:
    explicit Field(const FieldSpec* spec) : spec_(spec) {}
    static Field intern(FieldSpec spec);

    const FieldSpec* spec_;
};

// Exact field element with a canonical representation.
class Scalar {
public:
    using Rep = std::variant<std::uint32_t, PolyModP, mpq_class, PolyQ>;

    Scalar() : field_(Field::rationals()), rep_(mpq_class(0)) {}
    Scalar(Field field, Rep rep);

    const Field& field() const { return field_; }
    const Rep& rep() const { return rep_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    Scalar pow(long long e) const;

    // Rational coefficients of the element as a polynomial in the generator.
    PolyQ as_poly() const;
    // Residue in GF(p); only for prime fields.
    std::uint32_t residue() const { return std::get<std::uint32_t>(rep_); }
    const mpq_class& rational() const { return std::get<mpq_class>(rep_); }

    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    Field field_;
    Rep rep_;
};

Scalar invert(const Scalar& a);

// Target of a reduction: GF(p) when the chosen factor is linear (or the
// source is QQ), GF(p^d) otherwise.
struct Reduction {
    Field target;
    std::uint32_t p = 0;
    PolyModP factor;  // empty for QQ sources
};

// Irreducible factors of the modulus of a number field mod p; throws BadPrime
// when p divides a denominator of the modulus or the reduction is not squarefree.
std::vector<PolyModP> modulus_factors(const Field& number_field, std::uint32_t p);
Reduction make_reduction(const Field& source, std::uint32_t p,
                         const std::optional<PolyModP>& factor = std::nullopt);
Scalar reduce_mod_prime(const Scalar& a, const Reduction& red);
Scalar reduce_mod_prime(const Scalar& a, std::uint32_t p,
                        const std::optional<PolyModP>& factor = std::nullopt);

std::vector<std::uint32_t> admissible_primes(const std::set<long long>& denominators, long long bound);

}  // namespace hopfcoh
