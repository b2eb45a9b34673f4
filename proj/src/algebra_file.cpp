#include "hopfcoh/algebra_file.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hopfcoh {

namespace {

bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^'; }

bool valid_label(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), label_char);
}

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && (s[i] == '{' || s[i] == '['))
            ++depth;
        if (i < s.size() && (s[i] == '}' || s[i] == ']'))
            --depth;
        if (i == s.size() || (s[i] == sep && depth == 0)) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string> words(std::string_view s)
{
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

// Position-aware failures: the column is relative to the start of the line.
struct Where {
    int line = 0;
    int column = 1;
    [[noreturn]] void fail(const std::string& what, int offset = 0) const { throw ParseError(line, column + offset, what); }
};

mpq_class parse_rational(const std::string& tok, const Where& at)
{
    static const auto digits = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        return i < s.size() && std::all_of(s.begin() + i, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto slash = tok.find('/');
    std::string num = tok.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
    if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+')
        at.fail("bad number '" + tok + "'");
    mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den));
    if (q.get_den() == 0)
        at.fail("zero denominator in '" + tok + "'");
    q.canonicalize();
    return q;
}

Scalar parse_scalar(const Field& f, const std::string& raw, const Where& at)
{
    std::string tok = trim(raw);
    bool neg = false;
    if (!tok.empty() && tok[0] == '-' && tok.size() > 1 && tok[1] == '{') {
        neg = true;
        tok = tok.substr(1);
    }
    try {
        Scalar s = f.zero();
        if (!tok.empty() && tok[0] == '{') {
            if (tok.back() != '}')
                at.fail("unterminated polynomial scalar '" + tok + "'");
            PolyQ poly;
            for (const auto& c : split(std::string_view(tok).substr(1, tok.size() - 2), ','))
                poly.push_back(parse_rational(c, at));
            s = f.from_poly(poly);
        } else {
            s = f.from_rational(parse_rational(tok, at));
        }
        return neg ? -s : s;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        at.fail(e.what());
    }
}

// expr := term (('+'|'-') term)*; term := [scalar '*'] label [ '@' label ] | scalar
// With `tensor` set, every term must be a pure tensor x@y of basis labels.
Vec parse_linear(const Algebra& a, std::string_view text, const Where& at, bool tensor = false)
{
    const Field& f = a.field;
    const std::size_t dim = tensor ? static_cast<std::size_t>(a.dim) * a.dim : a.dim;
    Vec out = zero_vec(f, static_cast<int>(dim));
    std::string s(text);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    auto read_factor = [&]() -> std::string {
        skip();
        std::size_t b = i;
        if (i < s.size() && s[i] == '{') {
            while (i < s.size() && s[i] != '}')
                ++i;
            if (i == s.size())
                at.fail("unterminated '{'", static_cast<int>(b));
            ++i;
        } else {
            while (i < s.size() && (label_char(s[i]) || s[i] == '/'))
                ++i;
        }
        if (b == i)
            at.fail("expected a scalar or label", static_cast<int>(b));
        return s.substr(b, i - b);
    };
    auto label_index = [&](const std::string& l, std::size_t pos) {
        int k = a.index_of(l);
        if (k < 0)
            at.fail("unknown label '" + l + "'", static_cast<int>(pos));
        return k;
    };
    skip();
    if (trim(s) == "0")
        return out;
    bool first = true;
    while (true) {
        skip();
        if (i == s.size()) {
            if (first)
                at.fail("empty expression");
            break;
        }
        Scalar sign = f.one();
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-')
                sign = -sign;
            ++i;
        } else if (!first) {
            at.fail("expected '+' or '-'", static_cast<int>(i));
        }
        first = false;
        std::size_t pos = i;
        std::string t1 = read_factor();
        skip();
        Scalar coeff = f.one();
        std::string label;
        if (i < s.size() && s[i] == '*') {
            ++i;
            coeff = parse_scalar(f, t1, at);
            pos = i;
            label = read_factor();
        } else if (a.index_of(t1) >= 0) {
            label = t1;
        } else {
            coeff = parse_scalar(f, t1, at);
            if (tensor)
                at.fail("tensor terms need the form x@y", static_cast<int>(pos));
            out[a.unit] += sign * coeff;
            continue;
        }
        int x = label_index(label, pos);
        skip();
        if (tensor) {
            if (i >= s.size() || s[i] != '@')
                at.fail("expected '@' in tensor term", static_cast<int>(i));
            ++i;
            std::size_t p2 = i;
            int y = label_index(read_factor(), p2);
            out[static_cast<std::size_t>(x) * a.dim + y] += sign * coeff;
        } else {
            out[x] += sign * coeff;
        }
    }
    return out;
}

std::string format_scalar_term(const Scalar& c, const std::string& what, bool& first)
{
    std::string cs = c.to_string();
    bool neg = cs[0] == '-';
    if (neg)
        cs = cs.substr(1);
    std::string out;
    if (!first)
        out += neg ? " - " : " + ";
    else if (neg)
        out += "-";
    first = false;
    if (cs != "1")
        out += cs + "*";
    return out + what;
}

std::string format_tensor(const Algebra& a, const SparseRow& row)
{
    if (row.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : row)
        out += format_scalar_term(c, a.labels[k / a.dim] + "@" + a.labels[k % a.dim], first);
    return out;
}

std::string format_matrix(const Matrix& m)
{
    std::string out = "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r)
            out += "; ";
        for (int c = 0; c < m.cols(); ++c) {
            if (c)
                out += " ";
            out += m(r, c).to_string();
        }
    }
    return out + "]";
}

Matrix parse_matrix(const Field& f, int dim, const std::string& text, const Where& at)
{
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        at.fail("matrix must be written [a b; c d]");
    std::vector<std::string> rows = split(std::string_view(t).substr(1, t.size() - 2), ';');
    if (dim == 0 && rows.size() == 1 && rows[0].empty())
        return Matrix(f, 0, 0);
    if (static_cast<int>(rows.size()) != dim)
        at.fail("matrix needs " + std::to_string(dim) + " rows");
    Matrix m(f, dim, dim);
    for (int r = 0; r < dim; ++r) {
        auto entries = words(rows[r]);
        if (static_cast<int>(entries.size()) != dim)
            at.fail("matrix row " + std::to_string(r) + " needs " + std::to_string(dim) + " entries");
        for (int c = 0; c < dim; ++c)
            m(r, c) = parse_scalar(f, entries[c], at);
    }
    return m;
}

struct Line {
    int number;
    std::string text;
};

struct Section {
    std::string kind;  // "", "mult", ..., "module"
    std::string name;
    int line = 0;
    std::vector<Line> lines;
};

// key = value with the position of the value
std::pair<std::string, std::string> key_value(const Line& l, Where& at)
{
    auto eq = l.text.find('=');
    if (eq == std::string::npos)
        at.fail("expected 'key = value'");
    return {trim(std::string_view(l.text).substr(0, eq)), trim(std::string_view(l.text).substr(eq + 1))};
}

std::vector<Section> split_sections(std::string_view text)
{
    std::vector<Section> out(1);
    std::istringstream in{std::string(text)};
    int n = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++n;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw = raw.substr(0, hash);
        std::string t = trim(raw);
        if (t.empty())
            continue;
        if (t.front() == '[' && t.back() == ']' && t.find('=') == std::string::npos) {
            auto w = words(std::string_view(t).substr(1, t.size() - 2));
            Section s;
            s.line = n;
            if (w.empty())
                throw ParseError(n, 1, "empty section header");
            s.kind = w[0];
            if (w.size() > 2 || (w.size() == 2) != (s.kind == "module"))
                throw ParseError(n, 1, "bad section header '" + t + "'");
            if (w.size() == 2)
                s.name = w[1];
            out.push_back(std::move(s));
            continue;
        }
        out.back().lines.push_back({n, raw});
    }
    return out;
}

Where where(const Line& l)
{
    std::size_t first = l.text.find_first_not_of(" \t");
    return Where{l.number, static_cast<int>(first == std::string::npos ? 1 : first + 1)};
}

Algebra default_resolve(const std::string& path, const std::optional<Field>& field)
{
    return load_algebra_file(path, field).algebra;
}

}  // namespace

Vec parse_element(const Algebra& a, std::string_view text) { return parse_linear(a, text, Where{1, 1}); }

std::string format_element(const Algebra& a, const Vec& v)
{
    std::string out;
    bool first = true;
    for (int k = 0; k < a.dim; ++k)
        if (!v[k].is_zero())
            out += format_scalar_term(v[k], a.labels[k], first);
    return out.empty() ? "0" : out;
}

HAction AlgebraFile::h_action() const
{
    if (!action)
        throw Error(ErrorCode::BadParameter, "file has no [action] section");
    HAction act;
    act.hopf = action->hopf;
    act.target = algebra;
    act.rep = action->rep;
    return act;
}

FreeResolution AlgebraFile::user_free_resolution(int length) const
{
    if (!resolution)
        throw Error(ErrorCode::BadParameter, "file has no [resolution] section");
    if (!resolution->periodic.empty())
        return periodic_resolution(algebra, resolution->periodic, length);
    if (static_cast<int>(resolution->ranks.size()) < length + 1)
        throw Error(ErrorCode::CapMismatch, "user resolution has length " +
                                                std::to_string(resolution->ranks.size() - 1) + ", need " +
                                                std::to_string(length));
    return user_resolution(algebra, resolution->ranks, resolution->diff, resolution->augmentation);
}

const ModuleRep* AlgebraFile::module(const std::string& name) const
{
    for (const auto& m : modules)
        if (m.name == name)
            return &m;
    return nullptr;
}

static bool same_module(const ModuleRep& a, const ModuleRep& b)
{
    return a.name == b.name && a.field == b.field && a.mdim == b.mdim && a.action == b.action;
}

bool operator==(const AlgebraFile& a, const AlgebraFile& b)
{
    if (!(a.algebra == b.algebra) || a.modules.size() != b.modules.size())
        return false;
    for (std::size_t i = 0; i < a.modules.size(); ++i)
        if (!same_module(a.modules[i], b.modules[i]))
            return false;
    if (a.action.has_value() != b.action.has_value())
        return false;
    if (a.action && (a.action->hopf_path != b.action->hopf_path || !(a.action->hopf == b.action->hopf) ||
                     !same_module(a.action->rep, b.action->rep)))
        return false;
    if (a.filtration.has_value() != b.filtration.has_value())
        return false;
    if (a.filtration && (a.filtration->direction != b.filtration->direction || a.filtration->layers != b.filtration->layers))
        return false;
    return a.resolution == b.resolution;
}

AlgebraFile parse_algebra_file(std::string_view text, const FileResolver& resolve, const std::optional<Field>& field)
{
    std::vector<Section> sections = split_sections(text);
    AlgebraFile out;
    Algebra& a = out.algebra;

    // Header.
    std::optional<std::string> unit_label;
    std::vector<std::string> basis;
    bool have_field = false;
    for (const auto& l : sections[0].lines) {
        Where at = where(l);
        auto [k, v] = key_value(l, at);
        if (k == "field") {
            try {
                a.field = field ? *field : Field::parse(v);
            } catch (const Error& e) {
                at.fail(e.what());
            }
            have_field = true;
        } else if (k == "basis") {
            basis = words(v);
            std::set<std::string> seen;
            for (const auto& b : basis) {
                if (!valid_label(b))
                    at.fail("invalid label '" + b + "'");
                if (!seen.insert(b).second)
                    at.fail("duplicate basis label '" + b + "'");
            }
        } else if (k == "unit") {
            unit_label = v;
        } else {
            at.fail("unknown key '" + k + "'");
        }
    }
    if (!have_field)
        throw ParseError(1, 1, "missing 'field'");
    if (basis.empty())
        throw ParseError(1, 1, "missing 'basis'");
    a.dim = static_cast<int>(basis.size());
    a.labels = basis;
    a.unit = 0;
    if (unit_label) {
        a.unit = a.index_of(*unit_label);
        if (a.unit < 0)
            throw ParseError(1, 1, "unit label '" + *unit_label + "' is not a basis label");
    }
    a.mult.assign(static_cast<std::size_t>(a.dim) * a.dim, {});

    std::set<std::string> seen_sections;
    bool explicit_mult = false;
    for (std::size_t si = 1; si < sections.size(); ++si) {
        const Section& sec = sections[si];
        const std::string key = sec.kind == "module" ? "module " + sec.name : sec.kind;
        if (!seen_sections.insert(key).second)
            throw ParseError(sec.line, 1, "duplicate section [" + key + "]");
        if (sec.kind == "mult") {
            explicit_mult = true;
            std::set<std::size_t> seen;
            for (const auto& l : sec.lines) {
                Where at = where(l);
                auto [k, v] = key_value(l, at);
                auto star = k.find('*');
                if (star == std::string::npos)
                    at.fail("expected 'a*b = ...'");
                int x = a.index_of(trim(std::string_view(k).substr(0, star)));
                int y = a.index_of(trim(std::string_view(k).substr(star + 1)));
                if (x < 0 || y < 0)
                    at.fail("unknown label in '" + k + "'");
                std::size_t idx = static_cast<std::size_t>(x) * a.dim + y;
                if (!seen.insert(idx).second)
                    at.fail("product '" + k + "' given twice");
                a.mult[idx] = to_sparse(parse_linear(a, v, at));
            }
        }
    }
    if (!explicit_mult)
        throw ParseError(1, 1, "missing [mult] section");
    // Unit products are implied when left out.
    for (int i = 0; i < a.dim; ++i) {
        auto& l = a.mult[static_cast<std::size_t>(a.unit) * a.dim + i];
        auto& r = a.mult[static_cast<std::size_t>(i) * a.dim + a.unit];
        if (l.empty())
            l = SparseRow{{i, a.field.one()}};
        if (r.empty())
            r = SparseRow{{i, a.field.one()}};
    }

    for (std::size_t si = 1; si < sections.size(); ++si) {
        const Section& sec = sections[si];
        if (sec.kind == "mult")
            continue;
        if (sec.kind == "augmentation") {
            Vec eps = zero_vec(a.field, a.dim);
            for (const auto& l : sec.lines) {
                Where at = where(l);
                auto [k, v] = key_value(l, at);
                int x = a.index_of(k);
                if (x < 0)
                    at.fail("unknown label '" + k + "'");
                eps[x] = parse_scalar(a.field, v, at);
            }
            a.aug = Augmentation{eps};
        } else if (sec.kind == "hopf") {
            HopfData h;
            h.comult.assign(a.dim, {});
            h.antipode = Matrix(a.field, a.dim, a.dim);
            std::vector<bool> have_c(a.dim, false), have_s(a.dim, false);
            for (const auto& l : sec.lines) {
                Where at = where(l);
                auto [k, v] = key_value(l, at);
                auto w = words(k);
                if (w.size() != 2 || (w[0] != "comult" && w[0] != "antipode"))
                    at.fail("expected 'comult a = ...' or 'antipode a = ...'");
                int x = a.index_of(w[1]);
                if (x < 0)
                    at.fail("unknown label '" + w[1] + "'");
                if (w[0] == "comult") {
                    h.comult[x] = to_sparse(parse_linear(a, v, at, true));
                    have_c[x] = true;
                } else {
                    h.antipode.set_column(x, parse_linear(a, v, at));
                    have_s[x] = true;
                }
            }
            for (int x = 0; x < a.dim; ++x)
                if (!have_c[x] || !have_s[x])
                    throw ParseError(sec.line, 1, "[hopf] needs comult and antipode for '" + a.labels[x] + "'");
            a.hopf = std::move(h);
        } else if (sec.kind == "action") {
            ActionSpec spec;
            std::vector<std::pair<Line, std::string>> pending;
            for (const auto& l : sec.lines) {
                Where at = where(l);
                auto [k, v] = key_value(l, at);
                if (k == "hopf") {
                    spec.hopf_path = v;
                    if (!resolve)
                        at.fail("no resolver for '" + v + "'");
                    try {
                        spec.hopf = resolve(v);
                    } catch (const ParseError&) {
                        throw;
                    } catch (const Error& e) {
                        at.fail(e.what());
                    }
                } else {
                    pending.emplace_back(l, k);
                }
            }
            if (spec.hopf_path.empty())
                throw ParseError(sec.line, 1, "[action] needs 'hopf = file'");
            if (spec.hopf.field != a.field)
                throw ParseError(sec.line, 1, "acting Hopf algebra is over a different field");
            const Algebra& h = spec.hopf;
            spec.rep.name = "R";
            spec.rep.field = a.field;
            spec.rep.mdim = a.dim;
            spec.rep.action.assign(h.dim, Matrix(a.field, a.dim, a.dim));
            std::vector<bool> touched(h.dim, false);
            for (const auto& [l, k] : pending) {
                Where at = where(l);
                auto dot = k.find('.');
                if (dot == std::string::npos)
                    at.fail("expected 'h . a = ...'");
                int hx = h.index_of(trim(std::string_view(k).substr(0, dot)));
                int x = a.index_of(trim(std::string_view(k).substr(dot + 1)));
                if (hx < 0 || x < 0)
                    at.fail("unknown label in '" + k + "'");
                spec.rep.action[hx].set_column(x, parse_linear(a, key_value(l, at).second, at));
                touched[hx] = true;
            }
            if (!touched[h.unit])
                spec.rep.action[h.unit] = Matrix::identity(a.field, a.dim);
            out.action = std::move(spec);
        } else if (sec.kind == "filtration") {
            AlgebraFiltration filt;
            bool have_dir = false;
            for (const auto& l : sec.lines) {
                Where at = where(l);
                auto [k, v] = key_value(l, at);
                if (k == "direction") {
                    if (v != "increasing" && v != "decreasing")
                        at.fail("direction is increasing or decreasing");
                    filt.direction = v == "increasing" ? FiltrationDirection::Increasing : FiltrationDirection::Decreasing;
                    have_dir = true;
                } else if (k == "layer") {
                    std::vector<Vec> span;
                    if (!v.empty())
                        for (const auto& e : split(v, ','))
                            span.push_back(parse_linear(a, e, at));
                    filt.layers.push_back(Subspace::span(a.field, a.dim, span));
                } else {
                    at.fail("unknown key '" + k + "'");
                }
            }
            if (!have_dir)
                throw ParseError(sec.line, 1, "[filtration] needs a direction");
            out.filtration = std::move(filt);
        } else if (sec.kind == "resolution") {
            ResolutionSpec r;
            std::vector<std::pair<Line, std::vector<std::string>>> entries;
            for (const auto& l : sec.lines) {
                Where at = where(l);
                auto [k, v] = key_value(l, at);
                auto w = words(k);
                if (k == "ranks") {
                    for (const auto& x : words(v)) {
                        try {
                            r.ranks.push_back(std::stoi(x));
                        } catch (const std::logic_error&) {
                            at.fail("bad rank '" + x + "'");
                        }
                    }
                } else if (k == "periodic") {
                    for (const auto& e : split(v, ';'))
                        r.periodic.push_back(parse_linear(a, e, at));
                } else if (!w.empty() && (w[0] == "aug" || w[0] == "d")) {
                    entries.emplace_back(l, w);
                } else {
                    at.fail("unknown key '" + k + "'");
                }
            }
            if (!r.ranks.empty()) {
                r.diff.assign(r.ranks.size(), {});
                for (std::size_t n = 1; n < r.ranks.size(); ++n)
                    r.diff[n].assign(r.ranks[n], {});
                r.augmentation.assign(r.ranks[0], zero_vec(a.field, 1));
            }
            for (const auto& [l, w] : entries) {
                Where at = where(l);
                std::string v = key_value(l, at).second;
                auto num = [&](const std::string& s) {
                    try {
                        return std::stoi(s);
                    } catch (const std::logic_error&) {
                        at.fail("bad index '" + s + "'");
                    }
                };
                if (w[0] == "aug") {
                    int i = w.size() == 2 ? num(w[1]) : -1;
                    if (i < 0 || i >= static_cast<int>(r.augmentation.size()))
                        at.fail("augmentation index out of range");
                    r.augmentation[i] = Vec{parse_scalar(a.field, v, at)};
                } else {
                    if (w.size() != 4)
                        at.fail("expected 'd n i j = ...'");
                    int n = num(w[1]), i = num(w[2]), j = num(w[3]);
                    if (n < 1 || n >= static_cast<int>(r.ranks.size()) || i < 0 || i >= r.ranks[n] || j < 0 ||
                        j >= r.ranks[n - 1])
                        at.fail("differential index out of range");
                    r.diff[n][i].emplace_back(j, to_sparse(parse_linear(a, v, at)));
                }
            }
            if (r.periodic.empty() && r.ranks.empty())
                throw ParseError(sec.line, 1, "[resolution] needs ranks or periodic");
            for (auto& level : r.diff)
                for (auto& row : level)
                    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            out.resolution = std::move(r);
        } else if (sec.kind == "module") {
            ModuleRep m;
            m.name = sec.name;
            m.field = a.field;
            int dim = -1;
            std::vector<std::pair<Line, std::string>> pending;
            for (const auto& l : sec.lines) {
                Where at = where(l);
                auto [k, v] = key_value(l, at);
                if (k == "dim") {
                    try {
                        dim = std::stoi(v);
                    } catch (const std::logic_error&) {
                        at.fail("bad dimension");
                    }
                } else {
                    pending.emplace_back(l, k);
                }
            }
            if (dim < 0)
                throw ParseError(sec.line, 1, "module needs 'dim'");
            m.mdim = dim;
            m.action.assign(a.dim, Matrix(a.field, dim, dim));
            std::vector<bool> have(a.dim, false);
            for (const auto& [l, k] : pending) {
                Where at = where(l);
                int x = a.index_of(k);
                if (x < 0)
                    at.fail("unknown label '" + k + "'");
                m.action[x] = parse_matrix(a.field, dim, key_value(l, at).second, at);
                have[x] = true;
            }
            if (!have[a.unit])
                m.action[a.unit] = Matrix::identity(a.field, dim);
            for (int x = 0; x < a.dim; ++x)
                if (!have[x] && x != a.unit)
                    throw ParseError(sec.line, 1, "module '" + m.name + "' has no matrix for '" + a.labels[x] + "'");
            out.modules.push_back(std::move(m));
        } else {
            throw ParseError(sec.line, 1, "unknown section [" + sec.kind + "]");
        }
    }
    if (a.hopf && !a.aug)
        throw ParseError(1, 1, "[hopf] needs an [augmentation] section for the counit");
    return out;
}

AlgebraFile load_algebra_file(const std::string& path, const std::optional<Field>& field)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::BadParameter, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    namespace fs = std::filesystem;
    fs::path dir = fs::path(path).parent_path();
    FileResolver resolve = [dir, field](const std::string& rel) {
        return default_resolve((dir / rel).string(), field);
    };
    return parse_algebra_file(buf.str(), resolve, field);
}

std::string serialize_algebra_file(const AlgebraFile& f)
{
    const Algebra& a = f.algebra;
    for (const auto& l : a.labels)
        if (!valid_label(l))
            throw Error(ErrorCode::BadParameter, "label '" + l + "' cannot be written to an algebra file");
    std::ostringstream out;
    out << "field = " << a.field.to_string() << "\n";
    out << "basis =";
    for (const auto& l : a.labels)
        out << " " << l;
    out << "\nunit = " << a.labels[a.unit] << "\n\n[mult]\n";
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y) {
            if (x == a.unit || y == a.unit)
                continue;
            const SparseRow& p = a.product(x, y);
            if (!p.empty())
                out << a.labels[x] << "*" << a.labels[y] << " = " << format_element(a, to_dense(p, a.field, a.dim))
                    << "\n";
        }
    if (a.aug) {
        out << "\n[augmentation]\n";
        for (int x = 0; x < a.dim; ++x)
            if (!a.aug->eps[x].is_zero())
                out << a.labels[x] << " = " << a.aug->eps[x].to_string() << "\n";
    }
    if (a.hopf) {
        out << "\n[hopf]\n";
        for (int x = 0; x < a.dim; ++x)
            out << "comult " << a.labels[x] << " = " << format_tensor(a, a.hopf->comult[x]) << "\n";
        for (int x = 0; x < a.dim; ++x)
            out << "antipode " << a.labels[x] << " = " << format_element(a, a.hopf->antipode.column(x)) << "\n";
    }
    if (f.action) {
        const Algebra& h = f.action->hopf;
        out << "\n[action]\nhopf = " << f.action->hopf_path << "\n";
        for (int hx = 0; hx < h.dim; ++hx)
            for (int x = 0; x < a.dim; ++x) {
                Vec col = f.action->rep.action[hx].column(x);
                if (!is_zero(col))
                    out << h.labels[hx] << " . " << a.labels[x] << " = " << format_element(a, col) << "\n";
            }
    }
    if (f.filtration) {
        out << "\n[filtration]\ndirection = "
            << (f.filtration->direction == FiltrationDirection::Increasing ? "increasing" : "decreasing") << "\n";
        for (const auto& layer : f.filtration->layers) {
            out << "layer =";
            bool first = true;
            for (const auto& v : layer.dense_basis()) {
                out << (first ? " " : ", ") << format_element(a, v);
                first = false;
            }
            out << "\n";
        }
    }
    if (f.resolution) {
        const ResolutionSpec& r = *f.resolution;
        out << "\n[resolution]\n";
        if (!r.periodic.empty()) {
            out << "periodic =";
            for (std::size_t i = 0; i < r.periodic.size(); ++i)
                out << (i ? "; " : " ") << format_element(a, r.periodic[i]);
            out << "\n";
        }
        if (!r.ranks.empty()) {
            out << "ranks =";
            for (int x : r.ranks)
                out << " " << x;
            out << "\n";
            for (std::size_t i = 0; i < r.augmentation.size(); ++i)
                if (!r.augmentation[i][0].is_zero())
                    out << "aug " << i << " = " << r.augmentation[i][0].to_string() << "\n";
            for (std::size_t n = 1; n < r.diff.size(); ++n)
                for (std::size_t i = 0; i < r.diff[n].size(); ++i)
                    for (const auto& [j, e] : r.diff[n][i])
                        out << "d " << n << " " << i << " " << j << " = "
                            << format_element(a, to_dense(e, a.field, a.dim)) << "\n";
        }
    }
    for (const auto& m : f.modules) {
        out << "\n[module " << m.name << "]\ndim = " << m.mdim << "\n";
        for (int x = 0; x < a.dim; ++x)
            if (x != a.unit || !(m.action[x] == Matrix::identity(a.field, m.mdim)))
                out << a.labels[x] << " = " << format_matrix(m.action[x]) << "\n";
    }
    return out.str();
}

}  // namespace hopfcoh
