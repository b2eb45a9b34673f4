#include "hopfcoh/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfcoh {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    if (a % p == 0)
        throw Error(ErrorCode::ZeroInverse, "inverse of zero in GF(" + std::to_string(p) + ")");
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0)
        t += p;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p)
{
    std::uint64_t result = 1 % p, base = a % p;
    while (e > 0) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Polynomials over GF(p)

namespace polymodp {

void trim(PolyModP& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

PolyModP add(const PolyModP& a, const PolyModP& b, std::uint32_t p)
{
    PolyModP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < a.size() ? a[i] : 0);
        s += (i < b.size() ? b[i] : 0);
        r[i] = static_cast<std::uint32_t>(s % p);
    }
    trim(r);
    return r;
}

PolyModP sub(const PolyModP& a, const PolyModP& b, std::uint32_t p)
{
    PolyModP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < a.size() ? a[i] : 0);
        s += p - (i < b.size() ? b[i] : 0);
        r[i] = static_cast<std::uint32_t>(s % p);
    }
    trim(r);
    return r;
}

PolyModP mul(const PolyModP& a, const PolyModP& b, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    PolyModP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b, std::uint32_t p)
{
    if (b.empty())
        throw Error(ErrorCode::ZeroInverse, "polynomial division by zero");
    PolyModP r = a;
    trim(r);
    if (r.size() < b.size())
        return {{}, r};
    PolyModP q(r.size() - b.size() + 1, 0);
    std::uint32_t lead_inv = inv_mod(b.back(), p);
    for (std::size_t k = r.size(); k-- >= b.size();) {
        std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(r[k]) * lead_inv % p);
        std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[shift + j] = static_cast<std::uint32_t>(
                    (r[shift + j] + std::uint64_t(p - c) * b[j]) % p);
        if (k == 0)
            break;
    }
    trim(q);
    trim(r);
    return {q, r};
}

PolyModP mod(const PolyModP& a, const PolyModP& b, std::uint32_t p) { return divmod(a, b, p).second; }

static PolyModP make_monic(PolyModP a, std::uint32_t p)
{
    trim(a);
    if (a.empty())
        return a;
    std::uint32_t inv = inv_mod(a.back(), p);
    for (auto& c : a)
        c = static_cast<std::uint32_t>(std::uint64_t(c) * inv % p);
    return a;
}

PolyModP gcd(PolyModP a, PolyModP b, std::uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyModP r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

PolyModP powmod(PolyModP base, std::uint64_t e, const PolyModP& m, std::uint32_t p)
{
    PolyModP result{1};
    result = mod(result, m, p);
    base = mod(base, m, p);
    while (e > 0) {
        if (e & 1)
            result = mod(mul(result, base, p), m, p);
        base = mod(mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

PolyModP derivative(const PolyModP& a, std::uint32_t p)
{
    if (a.size() <= 1)
        return {};
    PolyModP d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        d[i - 1] = static_cast<std::uint32_t>(std::uint64_t(a[i]) * (i % p) % p);
    trim(d);
    return d;
}

bool is_irreducible(const PolyModP& f_in, std::uint32_t p)
{
    PolyModP f = make_monic(f_in, p);
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1)
        return false;
    if (deg == 1)
        return true;
    // Ben-Or: no factor of degree k <= deg/2 iff gcd(f, t^(p^k) - t) = 1 for all such k.
    const PolyModP t{0, 1};
    PolyModP h = t;
    for (int k = 1; 2 * k <= deg; ++k) {
        h = powmod(h, p, f, p);
        PolyModP g = gcd(f, sub(h, t, p), p);
        if (g.size() > 1)
            return false;
    }
    return true;
}

bool is_squarefree(const PolyModP& f, std::uint32_t p)
{
    PolyModP d = derivative(f, p);
    if (d.empty())
        return f.size() <= 1;
    return gcd(f, d, p).size() == 1;
}

static PolyModP poly_from_counter(std::uint64_t n, std::uint32_t p)
{
    PolyModP a;
    while (n > 0) {
        a.push_back(static_cast<std::uint32_t>(n % p));
        n /= p;
    }
    trim(a);
    return a;
}

// Equal-degree splitting of a product of distinct irreducibles of degree k.
static void split_equal_degree(const PolyModP& g, int k, std::uint32_t p, std::vector<PolyModP>& out)
{
    int deg = static_cast<int>(g.size()) - 1;
    if (deg == k) {
        out.push_back(g);
        return;
    }
    for (std::uint64_t n = p; ; ++n) {
        PolyModP a = mod(poly_from_counter(n, p), g, p);
        if (a.size() < 2)
            continue;
        PolyModP b;
        if (p == 2) {
            PolyModP term = a;
            b = a;
            for (int i = 1; i < k; ++i) {
                term = mod(mul(term, term, p), g, p);
                b = add(b, term, p);
            }
        } else {
            PolyModP acc{1};
            PolyModP ai = a;
            for (int i = 0; i < k; ++i) {
                acc = mod(mul(acc, powmod(ai, (p - 1) / 2, g, p), p), g, p);
                ai = powmod(ai, p, g, p);
            }
            b = sub(acc, PolyModP{1}, p);
        }
        PolyModP d = gcd(g, b, p);
        int dd = static_cast<int>(d.size()) - 1;
        if (dd > 0 && dd < deg) {
            split_equal_degree(d, k, p, out);
            split_equal_degree(make_monic(divmod(g, d, p).first, p), k, p, out);
            return;
        }
    }
}

std::vector<PolyModP> factor_squarefree(const PolyModP& f_in, std::uint32_t p)
{
    PolyModP f = make_monic(f_in, p);
    std::vector<PolyModP> factors;
    const PolyModP t{0, 1};
    PolyModP h = mod(t, f, p);
    for (int k = 1; 2 * k <= static_cast<int>(f.size()) - 1; ++k) {
        h = powmod(h, p, f, p);
        PolyModP g = gcd(f, sub(h, t, p), p);
        if (g.size() > 1) {
            split_equal_degree(g, k, p, factors);
            f = make_monic(divmod(f, g, p).first, p);
            h = mod(h, f, p);
        }
    }
    if (f.size() > 1)
        factors.push_back(f);
    std::sort(factors.begin(), factors.end(), [](const PolyModP& a, const PolyModP& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return factors;
}

}  // namespace polymodp

// ---------------------------------------------------------------------------
// Polynomials over QQ

namespace {

void trimq(PolyQ& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

PolyQ addq(const PolyQ& a, const PolyQ& b)
{
    PolyQ r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = 0;
        if (i < a.size())
            r[i] += a[i];
        if (i < b.size())
            r[i] += b[i];
    }
    trimq(r);
    return r;
}

PolyQ subq(const PolyQ& a, const PolyQ& b)
{
    PolyQ r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = 0;
        if (i < a.size())
            r[i] += a[i];
        if (i < b.size())
            r[i] -= b[i];
    }
    trimq(r);
    return r;
}

PolyQ mulq(const PolyQ& a, const PolyQ& b)
{
    if (a.empty() || b.empty())
        return {};
    PolyQ r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trimq(r);
    return r;
}

std::pair<PolyQ, PolyQ> divmodq(const PolyQ& a, const PolyQ& b)
{
    PolyQ r = a;
    trimq(r);
    if (r.size() < b.size())
        return {{}, r};
    PolyQ q(r.size() - b.size() + 1, mpq_class(0));
    for (std::size_t k = r.size(); k-- >= b.size();) {
        mpq_class c = r[k] / b.back();
        std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[shift + j] -= c * b[j];
        if (k == 0)
            break;
    }
    trimq(q);
    trimq(r);
    return {q, r};
}

// Inverse of a modulo m over QQ; nullopt plus the gcd when not invertible.
std::optional<PolyQ> invmodq(const PolyQ& a, const PolyQ& m, PolyQ& gcd_out)
{
    PolyQ r0 = m, r1 = a, s0, s1{mpq_class(1)};
    trimq(r1);
    while (!r1.empty()) {
        auto [q, r] = divmodq(r0, r1);
        PolyQ s = subq(s0, mulq(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    gcd_out = r0;
    if (r0.size() != 1)
        return std::nullopt;
    mpq_class c = r0[0];
    for (auto& x : s0)
        x /= c;
    return divmodq(s0, m).second;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpz_class lcm_denominators(const PolyQ& m)
{
    mpz_class l = 1;
    for (const auto& c : m)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

// Monic integer polynomial F(s) = D^d m(s/D) for monic m.
std::vector<mpz_class> monic_integer_model(const PolyQ& m)
{
    mpz_class D = lcm_denominators(m);
    int d = static_cast<int>(m.size()) - 1;
    std::vector<mpz_class> F(m.size());
    for (int i = 0; i <= d; ++i) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(d - i));
        mpq_class v = m[i] * mpq_class(scale);
        F[i] = v.get_num();
    }
    return F;
}

mpz_class eval_int(const std::vector<mpz_class>& F, const mpz_class& x)
{
    mpz_class r = 0;
    for (std::size_t i = F.size(); i-- > 0;)
        r = r * x + F[i];
    return r;
}

// Positive divisors of |n|; nullopt if n is too large to enumerate.
std::optional<std::vector<mpz_class>> divisors(const mpz_class& n_in)
{
    mpz_class n = abs(n_in);
    if (n > mpz_class("1000000000000"))
        return std::nullopt;
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    }
    return out;
}

// Irreducibility over QQ for monic degree <= 4; nullopt when undecided.
std::optional<bool> rational_irreducible(const PolyQ& m)
{
    int d = static_cast<int>(m.size()) - 1;
    if (d <= 0)
        return false;
    if (d == 1)
        return true;
    auto F = monic_integer_model(m);
    if (F[0] == 0)
        return false;
    auto divs = divisors(F[0]);
    if (!divs)
        return std::nullopt;
    for (const auto& r : *divs)
        if (eval_int(F, r) == 0 || eval_int(F, -r) == 0)
            return false;
    if (d <= 3)
        return true;
    // (s^2 + u s + v)(s^2 + w s + z) = s^4 + a s^3 + b s^2 + c s + e
    const mpz_class &a = F[3], &b = F[2], &c = F[1], &e = F[0];
    for (const auto& dv : *divs) {
        for (int sign : {1, -1}) {
            mpz_class v = dv * sign;
            mpz_class z = e / v;
            if (z != v) {
                mpz_class num = c - v * a, den = z - v;
                if (num % den != 0)
                    continue;
                mpz_class u = num / den, w = a - u;
                if (v + z + u * w == b)
                    return false;
            } else {
                if (c != v * a)
                    continue;
                mpz_class disc = a * a - 4 * (b - 2 * v);
                if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()))
                    return false;
            }
        }
    }
    return true;
}

std::string poly_list_string(const std::vector<std::string>& coeffs)
{
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            s += ",";
        s += coeffs[i];
    }
    return s + "]";
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::intern(FieldSpec spec)
{
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<FieldSpec>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(spec.canonical);
    if (it == registry.end()) {
        std::string key = spec.canonical;
        it = registry.emplace(std::move(key), std::make_unique<FieldSpec>(std::move(spec))).first;
    }
    return Field(it->second.get());
}

Field::Field() : Field(rationals()) {}

Field Field::prime(std::uint64_t p)
{
    if (p >= (1ull << 31) || !is_prime(p))
        throw Error(ErrorCode::BadField, std::to_string(p) + " is not a prime below 2^31");
    FieldSpec spec;
    spec.kind = FieldKind::Prime;
    spec.p = static_cast<std::uint32_t>(p);
    spec.canonical = "GF(" + std::to_string(p) + ")";
    return intern(std::move(spec));
}

Field Field::extension(std::uint64_t p, const std::vector<std::int64_t>& modulus)
{
    if (p >= (1ull << 31) || !is_prime(p))
        throw Error(ErrorCode::BadField, std::to_string(p) + " is not a prime below 2^31");
    PolyModP f;
    for (auto c : modulus) {
        std::int64_t r = c % static_cast<std::int64_t>(p);
        if (r < 0)
            r += static_cast<std::int64_t>(p);
        f.push_back(static_cast<std::uint32_t>(r));
    }
    return extension_mod(static_cast<std::uint32_t>(p), std::move(f));
}

Field Field::extension_mod(std::uint32_t p, PolyModP f)
{
    if (!is_prime(p))
        throw Error(ErrorCode::BadField, std::to_string(p) + " is not prime");
    polymodp::trim(f);
    if (f.size() < 2 || f.back() != 1)
        throw Error(ErrorCode::BadField, "extension modulus must be monic of degree >= 1");
    if (f.size() - 1 > 8)
        throw Error(ErrorCode::BadField, "extension degree above 8 is not supported");
    if (f.size() == 2)
        return prime(p);
    if (!polymodp::is_irreducible(f, p))
        throw Error(ErrorCode::BadField, "extension modulus is reducible over GF(" + std::to_string(p) + ")");
    FieldSpec spec;
    spec.kind = FieldKind::Extension;
    spec.p = p;
    std::vector<std::string> cs;
    for (auto c : f)
        cs.push_back(std::to_string(c));
    spec.canonical = "GF(" + std::to_string(p) + "^" + std::to_string(f.size() - 1) + "; f=" + poly_list_string(cs) + ")";
    spec.ext_modulus = std::move(f);
    return intern(std::move(spec));
}

Field Field::rationals()
{
    static const Field q = [] {
        FieldSpec spec;
        spec.kind = FieldKind::Rationals;
        spec.canonical = "QQ";
        return intern(std::move(spec));
    }();
    return q;
}

Field Field::number_field(PolyQ m)
{
    trimq(m);
    if (m.size() < 2 || m.back() != 1)
        throw Error(ErrorCode::BadField, "number field modulus must be monic of degree >= 1");
    for (auto& c : m)
        c.canonicalize();
    if (m.size() == 2)
        return rationals();
    FieldSpec spec;
    spec.kind = FieldKind::NumberField;
    if (m.size() - 1 <= 4) {
        auto irr = rational_irreducible(m);
        if (!irr)
            spec.irreducibility_asserted = true;
        else if (!*irr)
            throw Error(ErrorCode::BadField, "number field modulus is reducible over QQ");
    } else {
        spec.irreducibility_asserted = true;
    }
    std::vector<std::string> cs;
    for (const auto& c : m)
        cs.push_back(rational_string(c));
    spec.canonical = "QQ[t]/(m=" + poly_list_string(cs) + ")";
    spec.nf_modulus = std::move(m);
    return intern(std::move(spec));
}

namespace {

std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

std::vector<std::string> split_list(const std::string& body)
{
    std::vector<std::string> items;
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            items.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty() || !items.empty())
        items.push_back(cur);
    return items;
}

mpq_class parse_rational(const std::string& s)
{
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw Error(ErrorCode::BadField, "bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw Error(ErrorCode::BadField, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace

Field Field::parse(std::string_view text)
{
    std::string s = strip_spaces(text);
    if (s == "QQ")
        return rationals();
    auto bad = [&] { return Error(ErrorCode::BadField, "unrecognized field '" + std::string(text) + "'"); };
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        std::string body = s.substr(3, s.size() - 4);
        auto caret = body.find('^');
        if (caret == std::string::npos) {
            try {
                return prime(std::stoull(body));
            } catch (const std::logic_error&) {
                throw bad();
            }
        }
        auto semi = body.find(";f=[");
        if (semi == std::string::npos || body.back() != ']')
            throw bad();
        std::uint64_t p = 0;
        int d = 0;
        try {
            p = std::stoull(body.substr(0, caret));
            d = std::stoi(body.substr(caret + 1, semi - caret - 1));
        } catch (const std::logic_error&) {
            throw bad();
        }
        std::vector<std::int64_t> coeffs;
        for (const auto& item : split_list(body.substr(semi + 4, body.size() - semi - 5))) {
            try {
                coeffs.push_back(std::stoll(item));
            } catch (const std::logic_error&) {
                throw bad();
            }
        }
        if (static_cast<int>(coeffs.size()) != d + 1)
            throw Error(ErrorCode::BadField, "modulus degree does not match exponent in '" + std::string(text) + "'");
        return extension(p, coeffs);
    }
    const std::string nf_prefix = "QQ[t]/(m=[";
    if (s.rfind(nf_prefix, 0) == 0 && s.size() > nf_prefix.size() + 2 && s.substr(s.size() - 2) == "])") {
        PolyQ m;
        for (const auto& item : split_list(s.substr(nf_prefix.size(), s.size() - nf_prefix.size() - 2)))
            m.push_back(parse_rational(item));
        return number_field(std::move(m));
    }
    throw bad();
}

int Field::degree() const
{
    switch (kind()) {
    case FieldKind::Extension: return static_cast<int>(spec_->ext_modulus.size()) - 1;
    case FieldKind::NumberField: return static_cast<int>(spec_->nf_modulus.size()) - 1;
    default: return 1;
    }
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const { return from_rational(mpq_class(mpz_class(std::to_string(v)))); }

Scalar Field::from_rational(const mpq_class& v) const
{
    switch (kind()) {
    case FieldKind::Prime:
    case FieldKind::Extension: {
        std::uint32_t p = spec_->p;
        std::uint32_t den = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_den_mpz_t(), p));
        if (den == 0)
            throw Error(ErrorCode::BadPrime, "denominator of " + v.get_str() + " vanishes mod " + std::to_string(p));
        std::uint32_t num = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_num_mpz_t(), p));
        std::uint32_t r = static_cast<std::uint32_t>(std::uint64_t(num) * inv_mod(den, p) % p);
        if (kind() == FieldKind::Prime)
            return Scalar(*this, r);
        PolyModP poly{r};
        polymodp::trim(poly);
        return Scalar(*this, poly);
    }
    case FieldKind::Rationals: {
        mpq_class q = v;
        q.canonicalize();
        return Scalar(*this, q);
    }
    case FieldKind::NumberField: {
        PolyQ poly{v};
        trimq(poly);
        return Scalar(*this, poly);
    }
    }
    return {};
}

Scalar Field::from_poly(const PolyQ& coeffs) const
{
    PolyQ c = coeffs;
    trimq(c);
    switch (kind()) {
    case FieldKind::Prime:
    case FieldKind::Rationals:
        if (c.size() > 1)
            throw Error(ErrorCode::BadField, "field " + to_string() + " has no generator t");
        return from_rational(c.empty() ? mpq_class(0) : c[0]);
    case FieldKind::Extension: {
        Scalar acc = zero();
        Scalar t = generator();
        Scalar power = one();
        for (const auto& x : c) {
            acc += from_rational(x) * power;
            power *= t;
        }
        return acc;
    }
    case FieldKind::NumberField: {
        auto r = divmodq(c, spec_->nf_modulus).second;
        return Scalar(*this, r);
    }
    }
    return {};
}

Scalar Field::generator() const
{
    switch (kind()) {
    case FieldKind::Extension: return Scalar(*this, polymodp::mod(PolyModP{0, 1}, spec_->ext_modulus, spec_->p));
    case FieldKind::NumberField: return Scalar(*this, divmodq(PolyQ{mpq_class(0), mpq_class(1)}, spec_->nf_modulus).second);
    default: throw Error(ErrorCode::BadField, "field " + to_string() + " has no generator t");
    }
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Field field, Rep rep) : field_(field), rep_(std::move(rep)) {}

void Scalar::check_same(const Scalar& o) const
{
    if (field_ != o.field_)
        throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
}

bool Scalar::is_zero() const
{
    switch (rep_.index()) {
    case 0: return std::get<0>(rep_) == 0;
    case 1: return std::get<1>(rep_).empty();
    case 2: return std::get<2>(rep_) == 0;
    default: return std::get<3>(rep_).empty();
    }
}

bool Scalar::is_one() const
{
    switch (rep_.index()) {
    case 0: return std::get<0>(rep_) == 1;
    case 1: return std::get<1>(rep_) == PolyModP{1};
    case 2: return std::get<2>(rep_) == 1;
    default: {
        const auto& p = std::get<3>(rep_);
        return p.size() == 1 && p[0] == 1;
    }
    }
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    switch (rep_.index()) {
    case 0: {
        auto& v = std::get<0>(r.rep_);
        v = v == 0 ? 0 : field_.characteristic() - v;
        break;
    }
    case 1: {
        std::uint32_t p = field_.characteristic();
        for (auto& c : std::get<1>(r.rep_))
            c = c == 0 ? 0 : p - c;
        break;
    }
    case 2: std::get<2>(r.rep_) = -std::get<2>(rep_); break;
    default:
        for (auto& c : std::get<3>(r.rep_))
            c = -c;
        break;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same(o);
    std::uint32_t p = field_.characteristic();
    switch (rep_.index()) {
    case 0: {
        auto& v = std::get<0>(rep_);
        v = static_cast<std::uint32_t>((std::uint64_t(v) + std::get<0>(o.rep_)) % p);
        break;
    }
    case 1: rep_ = polymodp::add(std::get<1>(rep_), std::get<1>(o.rep_), p); break;
    case 2: std::get<2>(rep_) += std::get<2>(o.rep_); break;
    default: rep_ = addq(std::get<3>(rep_), std::get<3>(o.rep_)); break;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    check_same(o);
    std::uint32_t p = field_.characteristic();
    switch (rep_.index()) {
    case 0: {
        auto& v = std::get<0>(rep_);
        v = static_cast<std::uint32_t>((std::uint64_t(v) + p - std::get<0>(o.rep_)) % p);
        break;
    }
    case 1: rep_ = polymodp::sub(std::get<1>(rep_), std::get<1>(o.rep_), p); break;
    case 2: std::get<2>(rep_) -= std::get<2>(o.rep_); break;
    default: rep_ = subq(std::get<3>(rep_), std::get<3>(o.rep_)); break;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_same(o);
    std::uint32_t p = field_.characteristic();
    switch (rep_.index()) {
    case 0: {
        auto& v = std::get<0>(rep_);
        v = static_cast<std::uint32_t>(std::uint64_t(v) * std::get<0>(o.rep_) % p);
        break;
    }
    case 1:
        rep_ = polymodp::mod(polymodp::mul(std::get<1>(rep_), std::get<1>(o.rep_), p),
                             field_.spec().ext_modulus, p);
        break;
    case 2: std::get<2>(rep_) *= std::get<2>(o.rep_); break;
    default:
        rep_ = divmodq(mulq(std::get<3>(rep_), std::get<3>(o.rep_)), field_.spec().nf_modulus).second;
        break;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.field_ == b.field_ && a.rep_ == b.rep_;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::ZeroInverse, "inverse of zero in " + field_.to_string());
    std::uint32_t p = field_.characteristic();
    switch (rep_.index()) {
    case 0: return Scalar(field_, inv_mod(std::get<0>(rep_), p));
    case 1: {
        // Extended Euclid against the irreducible modulus.
        const PolyModP& m = field_.spec().ext_modulus;
        PolyModP r0 = m, r1 = std::get<1>(rep_), s0, s1{1};
        while (!r1.empty()) {
            auto [q, r] = polymodp::divmod(r0, r1, p);
            PolyModP s = polymodp::sub(s0, polymodp::mul(q, s1, p), p);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        std::uint32_t c = inv_mod(r0[0], p);
        for (auto& x : s0)
            x = static_cast<std::uint32_t>(std::uint64_t(x) * c % p);
        return Scalar(field_, polymodp::mod(s0, m, p));
    }
    case 2: return Scalar(field_, mpq_class(1) / std::get<2>(rep_));
    default: {
        PolyQ g;
        auto inv = invmodq(std::get<3>(rep_), field_.spec().nf_modulus, g);
        if (!inv) {
            std::vector<std::string> cs;
            mpq_class lead = g.back();
            for (const auto& c : g)
                cs.push_back(rational_string(c / lead));
            throw Error(ErrorCode::NotInvertible,
                        to_string() + " shares the factor " + poly_list_string(cs) + " with the modulus");
        }
        return Scalar(field_, *inv);
    }
    }
}

Scalar Scalar::pow(long long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Scalar result = field_.one();
    Scalar base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

PolyQ Scalar::as_poly() const
{
    PolyQ out;
    switch (rep_.index()) {
    case 0: out.push_back(mpq_class(std::get<0>(rep_))); break;
    case 1:
        for (auto c : std::get<1>(rep_))
            out.push_back(mpq_class(c));
        break;
    case 2: out.push_back(std::get<2>(rep_)); break;
    default: out = std::get<3>(rep_); break;
    }
    trimq(out);
    return out;
}

std::string Scalar::to_string() const
{
    switch (rep_.index()) {
    case 0: return std::to_string(std::get<0>(rep_));
    case 2: return rational_string(std::get<2>(rep_));
    default: {
        PolyQ poly = as_poly();
        if (poly.size() <= 1)
            return poly.empty() ? "0" : rational_string(poly[0]);
        std::string s = "{";
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (i)
                s += ",";
            s += rational_string(poly[i]);
        }
        return s + "}";
    }
    }
}

Scalar invert(const Scalar& a) { return a.inverse(); }

// ---------------------------------------------------------------------------
// Reduction modulo primes

static std::uint32_t reduce_rational(const mpq_class& v, std::uint32_t p)
{
    std::uint32_t den = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_den_mpz_t(), p));
    if (den == 0)
        throw Error(ErrorCode::BadPrime, std::to_string(p) + " divides the denominator of " + v.get_str());
    std::uint32_t num = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_num_mpz_t(), p));
    return static_cast<std::uint32_t>(std::uint64_t(num) * inv_mod(den, p) % p);
}

std::vector<PolyModP> modulus_factors(const Field& nf, std::uint32_t p)
{
    if (nf.kind() != FieldKind::NumberField)
        throw Error(ErrorCode::BadField, "modulus_factors needs a number field");
    PolyModP m;
    for (const auto& c : nf.spec().nf_modulus)
        m.push_back(reduce_rational(c, p));
    polymodp::trim(m);
    if (!polymodp::is_squarefree(m, p))
        throw Error(ErrorCode::BadPrime, std::to_string(p) + " is ramified for " + nf.to_string());
    return polymodp::factor_squarefree(m, p);
}

Reduction make_reduction(const Field& source, std::uint32_t p, const std::optional<PolyModP>& factor)
{
    if (!is_prime(p) || p >= (1u << 31))
        throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
    Reduction red;
    red.p = p;
    if (source.kind() == FieldKind::Rationals) {
        red.target = Field::prime(p);
        return red;
    }
    if (source.kind() != FieldKind::NumberField)
        throw Error(ErrorCode::BadField, "reduction needs a characteristic-zero source field");
    auto factors = modulus_factors(source, p);
    if (factor) {
        PolyModP f = *factor;
        polymodp::trim(f);
        if (std::find(factors.begin(), factors.end(), f) == factors.end())
            throw Error(ErrorCode::BadFactor, "supplied factor is not an irreducible factor of the modulus mod " + std::to_string(p));
        red.factor = f;
    } else {
        red.factor = factors.front();
    }
    red.target = red.factor.size() == 2 ? Field::prime(p) : Field::extension_mod(p, red.factor);
    return red;
}

Scalar reduce_mod_prime(const Scalar& a, const Reduction& red)
{
    const std::uint32_t p = red.p;
    PolyModP coeffs;
    for (const auto& c : a.as_poly())
        coeffs.push_back(reduce_rational(c, p));
    polymodp::trim(coeffs);
    if (a.field().kind() == FieldKind::Rationals || red.factor.empty())
        return Scalar(red.target, coeffs.empty() ? 0u : coeffs[0]);
    if (red.factor.size() == 2) {
        std::uint32_t root = red.factor[0] == 0 ? 0 : p - red.factor[0];
        std::uint64_t acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;)
            acc = (acc * root + coeffs[i]) % p;
        return Scalar(red.target, static_cast<std::uint32_t>(acc));
    }
    return Scalar(red.target, polymodp::mod(coeffs, red.factor, p));
}

Scalar reduce_mod_prime(const Scalar& a, std::uint32_t p, const std::optional<PolyModP>& factor)
{
    return reduce_mod_prime(a, make_reduction(a.field(), p, factor));
}

std::vector<std::uint32_t> admissible_primes(const std::set<long long>& denominators, long long bound)
{
    std::vector<std::uint32_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (long long n = 2; n <= bound; ++n) {
        if (composite[n])
            continue;
        for (long long m = n * n; m <= bound; m += n)
            composite[m] = true;
        bool ok = std::none_of(denominators.begin(), denominators.end(),
                               [n](long long d) { return d % n == 0; });
        if (ok)
            out.push_back(static_cast<std::uint32_t>(n));
    }
    return out;
}

}  // namespace hopfcoh
