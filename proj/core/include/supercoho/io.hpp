#pragma once

#include "supercoho/representations.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace supercoho {

using Json = nlohmann::json;

/// Malformed references, schemas, or module expressions.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const SparseVec& v);  ///< [[index, "num/den"], ...]
SparseVec sparse_from_json(const Json& j);
Json to_json(const Mat& m);  ///< {"rows","cols","entries":[[i,j,"num/den"],...]}
Mat mat_from_json(const Json& j);
Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

/// {"basis":[{"label","parity","zdegree"?}], "brackets":[[i,j,[[k,"q"],...]],...], "cartan":[...], "name"?, "family"?}
Json algebra_to_json(const LieSuperalgebra& g);
AlgebraPtr algebra_from_json(const Json& j);
/// Same basis, brackets and Cartan list.
bool same_algebra(const LieSuperalgebra& a, const LieSuperalgebra& b);

/// "gl:m,n", "w:n", "s:n" (the own algebra of S(n)), or "@file.json".
AlgebraPtr parse_algebra_ref(const std::string& ref);

/// {"algebra": "gl:m,n" | inline, "basis":[{"label","parity"}], "action":{label: Mat}, "weights"?:[[...]]}.
/// Built-in algebras are written as references, others inline.
Json module_to_json(const Supermodule& m);
/// When `context` is given the module is attached to it (after checking the
/// stored algebra matches), so that modules from files compose with it.
Supermodule module_from_json(const Json& j, const AlgebraPtr& context = nullptr);

/// Module expressions over g: terms joined by '+' (direct sum) and '*'
/// (tensor, binds tighter). Atoms: trivial, natural, dual, adjoint,
/// kac:<weight>, dualkac:<weight>, one:<weight>, and "@file.json".
/// Weights use ',' or '|' as separators, e.g. "kac:-1|1*dual".
Supermodule parse_module_expr(const std::string& expr, const AlgebraPtr& g);

/// Adjoint module of g.
Supermodule adjoint_module(const AlgebraPtr& g);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace supercoho
