// Command-line front end: algebra files in, tables or JSON out.
//
// Exit status: 0 success, 1 failed validation / no_collapse / violation, 2 bad input.

#include "hopfcoh/algebra_file.hpp"
#include "hopfcoh/modp.hpp"
#include "hopfcoh/spectral.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace hopfcoh;

namespace {

struct Options {
    int cap = 8;
    long long budget = default_budget;
    std::string field;
    std::uint32_t prime = 0;
    std::string factor;
    std::string output = "table";
    int jobs = 1;
    unsigned seed = 1;
    std::string file;
    std::string module;
    std::string mode = "hfg";
    std::string resolution = "bar";
    int pages = 3;
    bool double_complex = false;
    int toy = 0;
};

constexpr int bar_ring_cap = 8;

struct Outcome {
    json doc;
    std::string table;
    int status = 0;
};

std::optional<Field> field_override(const Options& o)
{
    if (o.field.empty())
        return std::nullopt;
    return Field::parse(o.field);
}

AlgebraFile load(const Options& o) { return load_algebra_file(o.file, field_override(o)); }

FGMode fg_mode(const Options& o)
{
    if (o.mode != "hfg" && o.mode != "fg")
        throw Error(ErrorCode::BadParameter, "--mode is hfg or fg");
    return o.mode == "hfg" ? FGMode::HFG : FGMode::FG;
}

json strings(const Vec& v)
{
    json out = json::array();
    for (const auto& s : v)
        out.push_back(s.to_string());
    return out;
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

const ModuleRep* pick_module(const AlgebraFile& f, const Options& o)
{
    if (o.module.empty())
        return nullptr;
    const ModuleRep* m = f.module(o.module);
    if (!m)
        throw Error(ErrorCode::BadParameter, "no module named '" + o.module + "'");
    return m;
}

json fg_json(const FGReport& r)
{
    json j;
    j["mode"] = r.mode == FGMode::HFG ? "hfg" : "fg";
    j["cap"] = r.cap;
    j["dims"] = r.dims;
    j["generators"]["ring"] = r.ring_generator_degrees;
    j["generators"]["modules"] = json::object();
    j["module_dims"] = json::object();
    for (std::size_t i = 0; i < r.module_names.size(); ++i) {
        j["generators"]["modules"][r.module_names[i]] = r.module_generator_degrees[i];
        j["module_dims"][r.module_names[i]] = r.module_dims[i];
    }
    j["stable_from"] = r.stable_from;
    j["verdict"] = verdict_name(r.verdict);
    j["notes"] = r.notes;
    return j;
}

std::string fg_table(const FGReport& r)
{
    std::ostringstream out;
    out << "degree";
    for (int n = 0; n <= r.cap; ++n)
        out << "\t" << n;
    out << "\ndim";
    for (int d : r.dims)
        out << "\t" << d;
    out << "\nring generators in degrees: " << join(r.ring_generator_degrees) << "\n";
    for (std::size_t i = 0; i < r.module_names.size(); ++i)
        out << "module " << r.module_names[i] << ": dims " << join(r.module_dims[i]) << "; generators in degrees "
            << join(r.module_generator_degrees[i]) << "\n";
    out << "verdict: " << verdict_name(r.verdict) << " (stable from degree " << r.stable_from << ")\n";
    for (const auto& n : r.notes)
        out << "note: " << n << "\n";
    return out.str();
}

std::string cell_table(const SpectralPage& p)
{
    if (p.cells.empty())
        return "E_" + std::to_string(p.r) + " is empty\n";
    int imin = p.cells[0].i, imax = imin, jmin = p.cells[0].j, jmax = jmin;
    for (const auto& c : p.cells) {
        imin = std::min(imin, c.i);
        imax = std::max(imax, c.i);
        jmin = std::min(jmin, c.j);
        jmax = std::max(jmax, c.j);
    }
    std::ostringstream out;
    out << "E_" << p.r << " (rows j, columns i)\n";
    for (int j = jmax; j >= jmin; --j) {
        out << j << " |";
        for (int i = imin; i <= imax; ++i) {
            int k = p.cell_index(i, j);
            out << "\t" << (k < 0 ? 0 : p.cells[k].dim);
        }
        out << "\n";
    }
    out << "  +";
    for (int i = imin; i <= imax; ++i)
        out << "\t" << i;
    out << "\ntotals: " << join(p.totals()) << "\n";
    return out.str();
}

json powers_json(const std::vector<PermanentPower>& pw)
{
    json out = json::array();
    for (const auto& p : pw) {
        json j;
        j["total_degree"] = p.total_degree;
        j["i"] = p.i;
        j["class"] = strings(p.cls);
        j["exponent"] = p.exponent;
        j["verified"] = p.verified;
        j["cap_truncated"] = p.cap_truncated;
        j["certificate"] = p.certificate;
        out.push_back(j);
    }
    return out;
}

json page_json(const SpectralPage& p, const std::optional<CollapseCertificate>& cert,
               const std::optional<std::vector<PermanentPower>>& powers)
{
    json j;
    j["r"] = p.r;
    j["cells"] = json::array();
    for (const auto& c : p.cells)
        j["cells"].push_back({{"i", c.i}, {"j", c.j}, {"dim", c.dim}});
    j["totals"] = p.totals();
    j["collapse"] = cert ? json(cert->describe()) : json(nullptr);
    if (cert && cert->witness_cell)
        j["witness"] = {{"i", cert->witness_cell->first}, {"j", cert->witness_cell->second}};
    j["permanent_powers"] = powers ? powers_json(*powers) : json::array();
    if (!p.notes.empty())
        j["notes"] = p.notes;
    return j;
}

// ---------------------------------------------------------------------------

Outcome cmd_validate(const Options& o)
{
    AlgebraFile f = load(o);
    const Algebra& a = f.algebra;
    json viol = json::array();
    std::ostringstream table;
    auto record = [&](const std::string& where, const ValidationReport& r, const std::vector<std::string>* labels) {
        for (const auto& v : r.violations) {
            json j{{"where", where}, {"kind", v.kind}};
            json idx = json::array();
            std::string names;
            for (int i : v.indices) {
                if (labels && i >= 0 && i < static_cast<int>(labels->size())) {
                    idx.push_back((*labels)[i]);
                    names += (names.empty() ? "" : ", ") + (*labels)[i];
                } else {
                    idx.push_back(i);
                    names += (names.empty() ? "" : ", ") + std::to_string(i);
                }
            }
            j["at"] = idx;
            j["detail"] = v.detail;
            viol.push_back(j);
            table << where << ": " << v.kind << " at (" << names << ")" << (v.detail.empty() ? "" : ": " + v.detail)
                  << "\n";
        }
    };
    record("algebra", validate(a), &a.labels);
    for (const auto& m : f.modules)
        record("module " + m.name, validate_module(a, m), &a.labels);
    if (f.action) {
        record("hopf " + f.action->hopf_path, validate(f.action->hopf), &f.action->hopf.labels);
        record("action", validate_action(f.h_action()), nullptr);
    }
    if (f.filtration)
        record("filtration", validate_filtration(a, *f.filtration), nullptr);
    json res = nullptr;
    if (f.resolution && viol.empty()) {
        const int len = f.resolution->periodic.empty() ? static_cast<int>(f.resolution->ranks.size()) - 1 : o.cap;
        FreeResolution r = f.user_free_resolution(len);
        ExactnessReport ex = verify_resolution(r, std::min(len, o.cap) - 1);
        res = {{"exact", ex.exact()}, {"defect", ex.defect}, {"square_failures", ex.square_failures}};
        if (!ex.exact()) {
            viol.push_back({{"where", "resolution"}, {"kind", "not_exact"}, {"at", ex.defect}, {"detail", ""}});
            table << "resolution: not exact, defects " << join(ex.defect) << "\n";
        }
    }
    Outcome out;
    out.doc = {{"file", std::filesystem::path(o.file).filename().string()}, {"valid", viol.empty()}, {"violations", viol}};
    if (!res.is_null())
        out.doc["resolution"] = res;
    out.status = viol.empty() ? 0 : 1;
    out.table = viol.empty() ? "valid\n" : table.str();
    return out;
}

Outcome cmd_cohomology(const Options& o, bool hochschild)
{
    AlgebraFile f = load(o);
    const Algebra& a = f.algebra;
    const ModuleRep* m = pick_module(f, o);
    std::vector<ModuleRep> mods;
    if (m)
        mods.push_back(*m);
    Outcome out;
    if (o.resolution == "user") {
        if (hochschild)
            throw Error(ErrorCode::BadParameter, "user resolutions resolve k; use the bar route for Hochschild cohomology");
        FreeResolution res = f.user_free_resolution(o.cap + 1);
        ExactnessReport ex = verify_resolution(res, o.cap);
        if (!ex.exact())
            throw Error(ErrorCode::ValidationFailed, "user resolution is not exact: defects " + join(ex.defect));
        std::vector<int> dims = cohomology_dims(hom_complex(res, trivial_module(a)), o.cap);
        out.doc = {{"cap", o.cap}, {"resolution", "user"}, {"dims", dims}};
        out.table = "degree\t" + join([&] {
            std::vector<int> d(o.cap + 1);
            std::iota(d.begin(), d.end(), 0);
            return d;
        }()) + "\ndim\t" + join(dims) + "\n";
        // Ring structure through the bar route, which grows like (dim A - 1)^n.
        const int ring_cap = std::min(o.cap, bar_ring_cap);
        try {
            FGReport r = fg_report(a, FGMode::HFG, mods, ring_cap, o.budget);
            if (!std::equal(r.dims.begin(), r.dims.end(), dims.begin()))
                throw Error(ErrorCode::ValidationFailed, "user and bar resolutions disagree: " + join(r.dims));
            json j = fg_json(r);
            out.doc["generators"] = j["generators"];
            out.doc["generators_cap"] = ring_cap;
            out.doc["verdict"] = j["verdict"];
            out.table += fg_table(r);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded)
                throw;
            out.doc["generators"] = nullptr;
            out.doc["verdict"] = "inconclusive";
            out.table += "bar route exceeds the budget; ring structure omitted\n";
        }
        return out;
    }
    FGReport r = fg_report(a, hochschild ? FGMode::FG : FGMode::HFG, mods, o.cap, o.budget);
    json j = fg_json(r);
    out.doc = {{"cap", o.cap},
               {"resolution", "bar"},
               {"dims", r.dims},
               {"generators", j["generators"]},
               {"module_dims", j["module_dims"]},
               {"verdict", j["verdict"]},
               {"stable_from", r.stable_from}};
    out.table = fg_table(r);
    return out;
}

Outcome cmd_cup_table(const Options& o)
{
    AlgebraFile f = load(o);
    const bool hh = fg_mode(o) == FGMode::FG;
    RingTruncation t = ring_truncation(f.algebra, hh ? RingMode::Hochschild : RingMode::HopfTrivial, {}, o.cap, o.budget);
    json prods = json::array();
    std::ostringstream table;
    for (int m = 0; m <= o.cap; ++m)
        for (int n = 0; m + n <= o.cap; ++n)
            for (int i = 0; i < t.dims[m]; ++i)
                for (int j = 0; j < t.dims[n]; ++j) {
                    const Vec& v = t.products.at(m, i, n, j);
                    if (is_zero(v))
                        continue;
                    prods.push_back({{"m", m}, {"i", i}, {"n", n}, {"j", j}, {"value", strings(v)}});
                    table << "H" << m << "[" << i << "] * H" << n << "[" << j << "] =";
                    for (const auto& s : v)
                        table << " " << s.to_string();
                    table << "\n";
                }
    Outcome out;
    out.doc = {{"mode", o.mode}, {"cap", o.cap}, {"dims", t.dims}, {"unit", strings(t.unit)}, {"products", prods}};
    out.table = "dims: " + join(t.dims) + "\n" + table.str();
    return out;
}

Outcome cmd_smash(const Options& o)
{
    AlgebraFile f = load(o);
    HAction act = f.h_action();
    ValidationReport vr = validate_action(act);
    if (!vr.ok())
        throw Error(ErrorCode::ValidationFailed, "action does not validate: " + vr.violations.front().kind);
    AlgebraFile s;
    s.algebra = smash_or_crossed_product(act);
    std::set<std::string> seen;
    for (auto& l : s.algebra.labels) {
        std::replace(l.begin(), l.end(), '#', '_');
        if (!seen.insert(l).second)
            throw Error(ErrorCode::BadParameter, "smash product labels collide after renaming: " + l);
    }
    const bool ok = validate(s.algebra).ok();
    std::string text = serialize_algebra_file(s);
    Outcome out;
    out.doc = {{"dim", s.algebra.dim}, {"labels", s.algebra.labels}, {"valid", ok}, {"file", text}};
    out.table = text;
    out.status = ok ? 0 : 1;
    return out;
}

std::optional<std::vector<PermanentPower>> maybe_powers(const SpectralPage& p)
{
    if (!p.products || p.field.characteristic() == 0)
        return std::nullopt;
    return frobenius_permanent_powers(p, static_cast<int>(p.field.characteristic()));
}

Outcome pages_outcome(const SpectralSequence& ss, int first_page)
{
    Outcome out;
    json pages = json::array();
    std::string table;
    std::optional<CollapseCertificate> overall;
    for (const auto& p : ss.pages) {
        if (p.r < first_page)
            continue;
        CollapseCertificate c = collapse_certificate(p, ss.direct_dims);
        if (!overall || (overall->verdict != CollapseVerdict::CollapseAt && c.verdict == CollapseVerdict::CollapseAt))
            overall = c;
        pages.push_back(page_json(p, c, maybe_powers(p)));
        table += cell_table(p) + "certificate: " + c.describe() + "\n\n";
    }
    out.doc = {{"direct_dims", ss.direct_dims},
               {"converges", ss.converges},
               {"pages", pages},
               {"infinity", page_json(ss.infinity, std::nullopt, std::nullopt)["cells"]},
               {"collapse", overall ? overall->describe() : "inconclusive"}};
    table += "direct: " + join(ss.direct_dims) + "\ncollapse: " + out.doc["collapse"].get<std::string>() + "\n";
    out.table = table;
    out.status = (overall && overall->verdict == CollapseVerdict::NoCollapse) || !ss.converges ? 1 : 0;
    return out;
}

Outcome cmd_may(const Options& o)
{
    AlgebraFile f = load(o);
    if (!f.filtration)
        throw Error(ErrorCode::BadParameter, "file has no [filtration] section");
    const ModuleRep* m = pick_module(f, o);
    FilteredComplex fc =
        filtered_from_algebra_filtration(f.algebra, *f.filtration, m ? *m : trivial_module(f.algebra), o.cap);
    SpectralSequence ss = compute_pages(fc, o.pages, true);
    Outcome out = pages_outcome(ss, std::min(o.pages, 1));
    out.doc["cap"] = o.cap;
    return out;
}

Outcome cmd_lhs(const Options& o)
{
    AlgebraFile f = load(o);
    HAction act = f.h_action();
    const bool hh = fg_mode(o) == FGMode::FG;
    Algebra a = smash_or_crossed_product(act);
    ModuleRep m = hh ? bimodule_rep(a) : trivial_module(a);
    LHSResult res = lhs_e2(act, m, hh ? LHSMode::Hochschild : LHSMode::Cohomology, o.cap, true, o.double_complex, o.budget);
    Outcome out;
    std::optional<CollapseCertificate> cert;
    if (!res.direct_dims.empty())
        cert = collapse_certificate(res.e2, res.direct_dims);
    out.doc = {{"cap", o.cap}, {"mode", hh ? "hochschild" : "cohomology"}};
    out.doc["page"] = page_json(res.e2, cert, maybe_powers(res.e2));
    out.doc["direct_dims"] = res.direct_dims;
    out.doc["collapse"] = cert ? cert->describe() : "inconclusive";
    out.table = cell_table(res.e2) + "direct: " + join(res.direct_dims) + "\ncollapse: " +
                out.doc["collapse"].get<std::string>() + "\n";
    if (res.double_complex) {
        SpectralSequence ss = compute_pages(res.double_complex->total(), 2, false);
        out.doc["double_complex"] = page_json(ss.pages[2], std::nullopt, std::nullopt);
        out.doc["double_complex"]["converges"] = ss.converges;
        out.table += "double complex " + cell_table(ss.pages[2]);
    }
    out.status = cert && cert->verdict == CollapseVerdict::NoCollapse ? 1 : 0;
    return out;
}

Outcome cmd_fg(const Options& o)
{
    AlgebraFile f = load(o);
    std::vector<ModuleRep> mods;
    if (const ModuleRep* m = pick_module(f, o))
        mods.push_back(*m);
    FGReport r = fg_report(f.algebra, fg_mode(o), mods, o.cap, o.budget);
    return Outcome{fg_json(r), fg_table(r), 0};
}

Outcome cmd_modp(const Options& o)
{
    if (o.prime == 0)
        throw Error(ErrorCode::BadParameter, "--prime is required");
    AlgebraFile f = load(o);
    IntegralModel model = integral_model(f.algebra);
    std::optional<PolyModP> factor;
    if (!o.factor.empty()) {
        PolyModP fac;
        std::stringstream ss(o.factor);
        for (std::string item; std::getline(ss, item, ',');)
            fac.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        factor = fac;
    }
    Algebra ap = reduce_mod_p(model, o.prime, factor);
    SemicontinuityReport r = semicontinuity_report(f.algebra, ap, fg_mode(o), o.cap, o.budget);
    Outcome out;
    out.doc = {{"prime", r.prime},
               {"cap", r.cap},
               {"mode", o.mode},
               {"denominators", std::vector<long long>(model.denominators.begin(), model.denominators.end())},
               {"reduced_field", ap.field.to_string()},
               {"dims_char0", r.dims_char0},
               {"dims_charp", r.dims_charp},
               {"comparison", r.comparison},
               {"verdict", verdict_name(r.verdict)},
               {"fg_char0", fg_json(r.fg_char0)},
               {"fg_charp", fg_json(r.fg_charp)}};
    std::ostringstream t;
    t << "degree\tchar 0\tchar " << r.prime << "\n";
    for (std::size_t n = 0; n < r.dims_char0.size(); ++n)
        t << n << "\t" << r.dims_char0[n] << "\t" << r.dims_charp[n] << "\t" << r.comparison[n] << "\n";
    t << "verdict: " << verdict_name(r.verdict) << "\nchar 0: " << verdict_name(r.fg_char0.verdict) << "; char "
      << r.prime << ": " << verdict_name(r.fg_charp.verdict) << "\n";
    out.table = t.str();
    out.status = r.verdict == SemicontinuityVerdict::Violation ? 1 : 0;
    return out;
}

Outcome cmd_gradedcomm(const Options& o)
{
    AlgebraFile f = load(o);
    const bool hh = fg_mode(o) == FGMode::FG;
    CommutativityReport r = graded_commutativity_check(f.algebra, hh ? RingMode::Hochschild : RingMode::HopfTrivial, o.cap);
    json viol = json::array();
    std::ostringstream t;
    for (const auto& v : r.violations) {
        viol.push_back({{"m", v[0]}, {"i", v[1]}, {"n", v[2]}, {"j", v[3]}});
        t << "violation: H" << v[0] << "[" << v[1] << "] and H" << v[2] << "[" << v[3] << "]\n";
    }
    Outcome out;
    out.doc = {{"mode", o.mode}, {"cap", o.cap}, {"pairs_checked", r.pairs_checked}, {"pass", r.pass()}, {"violations", viol}};
    out.table = t.str() + std::to_string(r.pairs_checked) + " pairs checked: " + (r.pass() ? "pass" : "fail") + "\n";
    out.status = r.pass() ? 0 : 1;
    return out;
}

Outcome cmd_powers(const Options& o)
{
    FilteredComplex fc;
    if (o.toy) {
        fc = toy_frobenius_complex(o.toy, o.cap);
    } else {
        if (o.file.empty())
            throw Error(ErrorCode::BadParameter, "give an algebra file with a filtration or --toy 2|3");
        AlgebraFile f = load(o);
        if (!f.filtration)
            throw Error(ErrorCode::BadParameter, "file has no [filtration] section");
        fc = filtered_from_algebra_filtration(f.algebra, *f.filtration, trivial_module(f.algebra), o.cap);
    }
    const int ch = static_cast<int>(fc.underlying.field.characteristic());
    SpectralSequence ss = compute_pages(fc, o.pages, true);
    Outcome out;
    json pages = json::array();
    std::ostringstream t;
    bool failed = false;
    for (const auto& p : ss.pages) {
        if (p.r < 1)
            continue;
        auto pw = frobenius_permanent_powers(p, ch);
        pages.push_back(page_json(p, collapse_certificate(p, ss.direct_dims), pw));
        t << "E_" << p.r << "\n";
        for (const auto& x : pw) {
            failed |= !x.verified && !x.cap_truncated;
            t << "  degree " << x.total_degree << " (i = " << x.i << "): t = " << x.exponent << ", "
              << (x.verified ? "verified" : x.cap_truncated ? "cap-truncated" : "UNVERIFIED") << "; " << x.certificate
              << "\n";
        }
    }
    out.doc = {{"characteristic", ch}, {"cap", fc.cap()}, {"pages", pages}};
    out.table = t.str();
    out.status = failed ? 1 : 0;
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology of finite-dimensional augmented and Hopf algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--cap", o.cap, "degree cap")->check(CLI::Range(1, 1000));
    app.add_option("--budget", o.budget, "largest cochain basis allowed")->check(CLI::Range(1000LL, 1LL << 50));
    app.add_option("--field", o.field, "override the field of the file (QQ, GF(p), ...)");
    app.add_option("--prime", o.prime, "prime for modp-compare");
    app.add_option("--factor", o.factor, "modulus factor mod p, coefficients from the constant term up");
    app.add_option("--output", o.output, "table or json")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--jobs", o.jobs, "worker threads (computations are sequential)")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "seed for randomized checks");
    app.add_option("--module", o.module, "named module of the file");
    app.add_option("--mode", o.mode, "hfg (H^*(A,k)) or fg (Hochschild)")->check(CLI::IsMember({"hfg", "fg"}));
    app.add_option("--resolution", o.resolution, "bar or user")->check(CLI::IsMember({"bar", "user"}));
    app.add_option("--pages", o.pages, "last spectral page to compute")->check(CLI::Range(0, 64));
    app.add_flag("--double-complex", o.double_complex, "lhs-e2: also build the double complex (small caps)");
    app.add_option("--toy", o.toy, "permanent-powers: planted toy over GF(2) or GF(3)")->check(CLI::IsMember({2, 3}));

    struct Command {
        const char* name;
        const char* help;
        std::function<Outcome(const Options&)> run;
        bool needs_file = true;
    };
    std::vector<Command> commands = {
        {"validate", "check algebra, modules, action, filtration and resolution", cmd_validate},
        {"cohomology", "H^*(A, k) with ring generators and a finite-generation verdict",
         [](const Options& x) { return cmd_cohomology(x, false); }},
        {"hochschild", "HH^*(A) with ring generators", [](const Options& x) { return cmd_cohomology(x, true); }},
        {"cup-table", "structure constants of the cup product", cmd_cup_table},
        {"smash", "smash product R # H of the file's [action]", cmd_smash},
        {"may", "spectral sequence of the file's [filtration]", cmd_may},
        {"lhs-e2", "E_2 page of the spectral sequence for R # H", cmd_lhs},
        {"fg-report", "finite-generation evidence", cmd_fg},
        {"modp-compare", "compare dimensions with a reduction mod p", cmd_modp},
        {"gradedcomm-check", "graded commutativity of the cup product", cmd_gradedcomm},
        {"permanent-powers", "Frobenius permanent powers on spectral pages", cmd_powers, false},
    };
    std::function<Outcome(const Options&)> chosen;
    for (auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        auto* file = sub->add_option("file", o.file, "algebra file");
        if (c.needs_file)
            file->required()->check(CLI::ExistingFile);
        sub->callback([&chosen, &c] { chosen = c.run; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        Outcome out = chosen(o);
        if (o.output == "json")
            std::cout << out.doc.dump(2) << "\n";
        else
            std::cout << out.table;
        return out.status;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == ErrorCode::ValidationFailed ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "Error: " << e.what() << "\n";
        return 2;
    }
}
