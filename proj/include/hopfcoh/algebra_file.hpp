#pragma once

#include "hopfcoh/resolution.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfcoh {

// Text format for algebras, one `key = value` per line, `#` comments:
//
//   field = GF(3)
//   basis = 1 g g^2
//   unit = 1
//   [mult]            a*b = linear expression (missing products are zero)
//   [augmentation]    label = scalar
//   [hopf]            comult a = c*x@y + ...;  antipode a = expression
//   [action]          hopf = other.alg;  h . a = expression
//   [filtration]      direction = increasing|decreasing;  layer = expr, expr, ...
//   [resolution]      ranks = r0 r1 ...;  aug i = scalar;  d n i j = expression
//                     or periodic = expr; expr
//   [module NAME]     dim = m;  label = [row; row; ...]
//
// Scalars are integers, fractions or {c0,c1,...} (polynomials in the field generator t).

struct ResolutionSpec {
    std::vector<int> ranks;
    std::vector<std::vector<AlgebraRow>> diff;  // diff[n][i] for 1 <= n
    std::vector<Vec> augmentation;
    std::vector<Vec> periodic;  // non-empty selects a periodic resolution

    friend bool operator==(const ResolutionSpec&, const ResolutionSpec&) = default;
};

struct ActionSpec {
    std::string hopf_path;
    Algebra hopf;
    ModuleRep rep;  // action of hopf on the algebra of the file
};

struct AlgebraFile {
    Algebra algebra;
    std::optional<ActionSpec> action;
    std::optional<AlgebraFiltration> filtration;
    std::optional<ResolutionSpec> resolution;
    std::vector<ModuleRep> modules;

    HAction h_action() const;
    FreeResolution user_free_resolution(int length) const;
    const ModuleRep* module(const std::string& name) const;
};

bool operator==(const AlgebraFile& a, const AlgebraFile& b);

// Loads the Hopf algebra named in an [action] section.
using FileResolver = std::function<Algebra(const std::string& path)>;

AlgebraFile parse_algebra_file(std::string_view text, const FileResolver& resolve = {},
                               const std::optional<Field>& field = std::nullopt);
AlgebraFile load_algebra_file(const std::string& path, const std::optional<Field>& field = std::nullopt);
std::string serialize_algebra_file(const AlgebraFile& f);

// Linear combinations in the basis of `a`, as written in algebra files.
Vec parse_element(const Algebra& a, std::string_view text);
std::string format_element(const Algebra& a, const Vec& v);

}  // namespace hopfcoh
