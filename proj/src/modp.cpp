#include "hopfcoh/modp.hpp"

#include <numeric>

namespace hopfcoh {

namespace {

void collect(const Scalar& s, std::set<long long>& out)
{
    for (const auto& c : s.as_poly()) {
        const mpz_class& den = c.get_den();
        if (!den.fits_slong_p())
            throw Error(ErrorCode::Unsupported, "denominator " + den.get_str() + " does not fit a machine word");
        out.insert(den.get_si());
    }
}

void collect(const Vec& v, std::set<long long>& out)
{
    for (const auto& s : v)
        collect(s, out);
}

void collect(const SparseRow& v, std::set<long long>& out)
{
    for (const auto& e : v)
        collect(e.second, out);
}

SparseRow reduce_row(const SparseRow& row, const Reduction& red)
{
    SparseRow out;
    for (const auto& [i, c] : row) {
        Scalar r = reduce_mod_prime(c, red);
        if (!r.is_zero())
            out.emplace_back(i, r);
    }
    return out;
}

Vec reduce_vec(const Vec& v, const Reduction& red)
{
    Vec out;
    out.reserve(v.size());
    for (const auto& s : v)
        out.push_back(reduce_mod_prime(s, red));
    return out;
}

}  // namespace

std::vector<std::uint32_t> IntegralModel::admissible_primes(long long bound) const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t p : hopfcoh::admissible_primes(denominators, bound)) {
        if (source.field.kind() == FieldKind::NumberField) {
            try {
                modulus_factors(source.field, p);
            } catch (const Error&) {
                continue;  // ramified
            }
        }
        out.push_back(p);
    }
    return out;
}

std::vector<PolyModP> IntegralModel::factors(std::uint32_t p) const
{
    if (source.field.kind() != FieldKind::NumberField)
        return {};
    return modulus_factors(source.field, p);
}

IntegralModel integral_model(const Algebra& a, const std::optional<std::vector<Vec>>& radical_basis)
{
    const FieldKind kind = a.field.kind();
    if (kind != FieldKind::Rationals && kind != FieldKind::NumberField)
        throw Error(ErrorCode::BadField, "integral models need a characteristic-zero field");
    IntegralModel m;
    m.source = a;
    m.denominators.insert(1);
    for (const auto& row : a.mult)
        collect(row, m.denominators);
    if (a.aug)
        collect(a.aug->eps, m.denominators);
    if (a.hopf) {
        for (const auto& row : a.hopf->comult)
            collect(row, m.denominators);
        for (int c = 0; c < a.hopf->antipode.cols(); ++c)
            collect(a.hopf->antipode.column(c), m.denominators);
    }
    if (radical_basis) {
        for (const auto& v : *radical_basis)
            collect(v, m.denominators);
        m.radical_model = Subspace::span(a.field, a.dim, *radical_basis);
    }
    return m;
}

Algebra reduce_mod_p(const IntegralModel& model, std::uint32_t p, const std::optional<PolyModP>& factor)
{
    const Algebra& a = model.source;
    for (long long d : model.denominators)
        if (d % static_cast<long long>(p) == 0)
            throw Error(ErrorCode::BadPrime, std::to_string(p) + " divides the denominator " + std::to_string(d));
    Reduction red = make_reduction(a.field, p, factor);
    Algebra out;
    out.field = red.target;
    out.dim = a.dim;
    out.labels = a.labels;
    out.unit = a.unit;
    for (const auto& row : a.mult)
        out.mult.push_back(reduce_row(row, red));
    if (a.aug)
        out.aug = Augmentation{reduce_vec(a.aug->eps, red)};
    if (a.hopf) {
        HopfData h;
        for (const auto& row : a.hopf->comult)
            h.comult.push_back(reduce_row(row, red));
        h.antipode = Matrix(red.target, a.dim, a.dim);
        for (int c = 0; c < a.dim; ++c)
            h.antipode.set_column(c, reduce_vec(a.hopf->antipode.column(c), red));
        out.hopf = std::move(h);
    }
    ValidationReport vr = validate(out);
    if (!vr.ok())
        throw Error(ErrorCode::ValidationFailed, "reduction at " + std::to_string(p) + " fails: " +
                                                     vr.violations.front().kind);
    if (model.radical_model) {
        std::vector<Vec> basis;
        for (const auto& v : model.radical_model->dense_basis())
            basis.push_back(reduce_vec(v, red));
        Subspace w = Subspace::span(out.field, out.dim, basis);
        if (w.dim() != model.radical_model->dim())
            throw Error(ErrorCode::ValidationFailed, "radical model loses rank at " + std::to_string(p));
        if (!w.contains(ideal_generated(out, basis)))
            throw Error(ErrorCode::ValidationFailed, "reduced radical model is not an ideal");
        if (radical_filtration_layer(out, w, out.dim + 1).dim() != 0)
            throw Error(ErrorCode::ValidationFailed, "reduced radical model is not nilpotent");
    }
    return out;
}

std::string verdict_name(SemicontinuityVerdict v)
{
    switch (v) {
    case SemicontinuityVerdict::Equal: return "equal";
    case SemicontinuityVerdict::SemicontinuousStrict: return "semicontinuous_strict";
    default: return "violation";
    }
}

SemicontinuityReport semicontinuity_report(const Algebra& a0, const Algebra& ap, FGMode mode, int cap,
                                           long long budget)
{
    if (cap < 0)
        throw Error(ErrorCode::CapMismatch, "cap must be non-negative");
    if (a0.field.characteristic() != 0 || ap.field.characteristic() == 0)
        throw Error(ErrorCode::BadField, "compare a characteristic-zero algebra with a reduction");
    if (a0.dim != ap.dim)
        throw Error(ErrorCode::DimensionMismatch, "reduction changed the dimension");
    SemicontinuityReport r;
    r.prime = ap.field.characteristic();
    r.cap = cap;
    r.mode = mode;
    r.fg_char0 = fg_report(a0, mode, {}, cap, budget);
    r.fg_charp = fg_report(ap, mode, {}, cap, budget);
    r.dims_char0 = r.fg_char0.dims;
    r.dims_charp = r.fg_charp.dims;
    if (r.dims_char0.size() != r.dims_charp.size())
        throw Error(ErrorCode::CapMismatch, "cohomology computed to different caps");
    bool strict = false, bad = false;
    for (std::size_t n = 0; n < r.dims_char0.size(); ++n) {
        const int a = r.dims_char0[n], b = r.dims_charp[n];
        r.comparison.push_back(a == b ? "equal" : b > a ? "greater" : "smaller");
        strict |= b > a;
        bad |= b < a;
    }
    r.verdict = bad      ? SemicontinuityVerdict::Violation
                : strict ? SemicontinuityVerdict::SemicontinuousStrict
                         : SemicontinuityVerdict::Equal;
    return r;
}

}  // namespace hopfcoh
