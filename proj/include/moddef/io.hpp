#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "moddef/algebra.hpp"
#include "moddef/cochain.hpp"
#include "moddef/deformation.hpp"
#include "moddef/hochschild.hpp"
#include "moddef/limits.hpp"

namespace moddef {

using Json = nlohmann::json;

struct Options {
    std::optional<std::size_t> order;   // truncation / target order N
    std::optional<std::size_t> degree;  // cohomological degree n
    Limits limits;
};

/// Command-line settings that take precedence over the document.
struct Overrides {
    std::optional<Field> field;
    std::optional<std::size_t> order;
    std::optional<std::size_t> degree;
    std::optional<std::size_t> max_algebra_dim;
    std::optional<std::size_t> max_module_dim;
    std::optional<std::size_t> max_order;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> max_matrix_entries;
};

/// A parsed input document. Shapes and guardrails are checked; the algebra
/// and module axioms are not (see validate_algebra / require_valid).
struct Problem {
    Field field;
    Module module;
    std::optional<Cochain> cochain;
    std::optional<ApproximateDeformation> deformation;
    std::optional<ApproximateDeformation> other_deformation;
    std::optional<FormalAutomorphism> automorphism;
    Options options;
};

/// Throws InputError (with the JSON path of the first problem) or ResourceError.
Problem parse_problem(std::string_view text, const Overrides& overrides = {});
Problem parse_problem_json(const Json& doc, const Overrides& overrides = {});

Json encode_scalar(const Scalar& s);
Json encode_matrix(const Matrix& m);
Json encode_cochain(const Cochain& c);
Json encode_deformation(const ApproximateDeformation& d);
Json encode_automorphism(const FormalAutomorphism& phi);
Json encode_algebra(const Algebra& a);
Json encode_module(const Module& m);
Json encode_cohomology(const CohomologyReport& r);
Json encode_report(const ValidationReport& r);
/// A full input document for `m` (field, algebra, module).
Json encode_problem(const Module& m);
/// Every field of `p`, including options and guardrails; parse_problem_json
/// reads it back to an equal Problem.
Json encode_problem(const Problem& p);

Scalar decode_scalar(const Json& j, const Field& field, const std::string& path);
Matrix decode_matrix(const Json& j, const Field& field, std::size_t rows, std::size_t cols, const std::string& path);
Cochain decode_cochain(const Json& j, const Module& m, const std::string& path);
ApproximateDeformation decode_deformation(const Json& j, const Module& m, const std::string& path);
FormalAutomorphism decode_automorphism(const Json& j, const Module& m, const std::string& path);

/// Canonical text: two-space indentation, sorted keys, trailing newline.
std::string print(const Json& doc);

}  // namespace moddef
