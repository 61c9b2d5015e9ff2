#include "moddef/commands.hpp"

#include <algorithm>
#include <array>

#include "moddef/errors.hpp"

namespace moddef {

namespace {

constexpr std::array<std::string_view, 11> kCommands = {
    "validate", "cohomology", "cocycle",   "coboundary", "obstruction", "extend",
    "integrate", "normalize", "conjugate", "equiv-step", "rigidity",
};

template <class T>
const T& require(const std::optional<T>& value, const char* key) {
    if (!value) throw InputError(std::string("this command needs a '") + key + "' payload", key);
    return *value;
}

void require_valid_deformation(const HochschildComplex& c, const ApproximateDeformation& d, const char* key) {
    if (auto bad = check_deformation(c, d))
        throw InputError("violates the multiplicativity relation at order " + std::to_string(*bad), key);
}

Json null_or(const std::optional<Cochain>& c) { return c ? encode_cochain(*c) : Json(nullptr); }

// Names the first nonzero entry of a nonzero cochain.
Json first_nonzero(const Cochain& c) {
    const auto& [tuple, value] = *c.entries().begin();
    for (std::size_t r = 0; r < value.rows(); ++r)
        for (std::size_t col = 0; col < value.cols(); ++col)
            if (!value(r, col).is_zero())
                return Json{{"tuple", tuple}, {"row", r}, {"col", col}, {"value", encode_scalar(value(r, col))}};
    return nullptr;
}

CommandResult finish(Json doc, bool affirmative, std::string_view yes, std::string_view no) {
    doc["verdict"] = std::string(affirmative ? yes : no);
    return {std::move(doc), affirmative ? kAffirmative : kNegative};
}

CommandResult validate(const Problem& p, Json doc) {
    auto algebra_report = validate_algebra(p.module.algebra());
    auto module_report = validate_module(p.module);
    doc["algebra_report"] = encode_report(algebra_report);
    doc["module_report"] = encode_report(module_report);
    bool ok = algebra_report.ok() && module_report.ok();
    if (ok) {
        HochschildComplex c(p.module, p.options.limits);
        if (p.deformation) {
            auto bad = check_deformation(c, *p.deformation);
            doc["deformation_violation"] = bad ? Json(*bad) : Json(nullptr);
            ok = ok && !bad;
        }
    }
    return finish(std::move(doc), ok, "valid", "invalid");
}

}  // namespace

std::span<const std::string_view> command_names() { return kCommands; }

CommandResult run(std::string_view command, const Problem& p) {
    if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
        throw InputError("unknown command '" + std::string(command) + "'");
    Json doc = {{"command", std::string(command)}, {"field", p.field.name()}};
    if (command == "validate") return validate(p, std::move(doc));

    HochschildComplex c(p.module, p.options.limits);

    if (command == "cohomology") {
        Json reports = Json::array();
        if (p.options.degree) {
            reports.push_back(encode_cohomology(c.cohomology(*p.options.degree)));
        } else {
            for (std::size_t n = 0; n <= std::min<std::size_t>(2, p.options.limits.max_degree); ++n)
                reports.push_back(encode_cohomology(c.cohomology(n)));
        }
        doc["cohomology"] = std::move(reports);
        return finish(std::move(doc), true, "computed", "");
    }
    if (command == "cocycle") {
        const Cochain& f = require(p.cochain, "cochain");
        Cochain df = c.differential(f);
        doc["differential"] = encode_cochain(df);
        doc["nonzero_entry"] = df.is_zero() ? Json(nullptr) : first_nonzero(df);
        return finish(std::move(doc), df.is_zero(), "cocycle", "not-a-cocycle");
    }
    if (command == "coboundary") {
        const Cochain& f = require(p.cochain, "cochain");
        auto witness = c.coboundary_witness(f);
        doc["witness"] = null_or(witness);
        doc["is_cocycle"] = c.is_cocycle(f);
        return finish(std::move(doc), witness.has_value(), "coboundary", "not-a-coboundary");
    }
    if (command == "rigidity") {
        auto result = rigidity_check(c);
        doc["cohomology"] = encode_cohomology(result.first_cohomology);
        doc["dims"] = Json{{"H1", result.first_cohomology.dim_cohomology}};
        return finish(std::move(doc), result.verdict == Rigidity::certified, "rigid-certified", "inconclusive");
    }
    if (command == "integrate") {
        const Cochain& sigma = require(p.cochain, "cochain");
        if (!p.options.order) throw InputError("integrate needs a target order (options.order or --order)", "options.order");
        auto result = integrate(c, sigma, *p.options.order);
        doc["target_order"] = *p.options.order;
        doc["reached_order"] = result.deformation.order();
        doc["deformation"] = encode_deformation(result.deformation);
        if (result.failure) {
            doc["obstruction"] = encode_cochain(result.failure->obstruction);
            doc["witness"] = nullptr;
        }
        return finish(std::move(doc), result.integrated(), "integrated", "obstructed");
    }

    const ApproximateDeformation& d = require(p.deformation, "deformation");
    require_valid_deformation(c, d, "deformation");

    if (command == "obstruction") {
        Cochain obs = obstruction(c, d);
        auto witness = c.coboundary_witness(-obs);
        doc["obstruction"] = encode_cochain(obs);
        doc["obstruction_is_cocycle"] = c.is_cocycle(obs);
        doc["witness"] = null_or(witness);
        return finish(std::move(doc), witness.has_value(), "unobstructed", "obstructed");
    }
    if (command == "extend") {
        auto result = extend_once(c, d);
        doc["obstruction"] = encode_cochain(result.outcome.obstruction);
        doc["witness"] = null_or(result.outcome.witness);
        doc["deformation"] = result.extended ? encode_deformation(*result.extended) : Json(nullptr);
        return finish(std::move(doc), result.extended.has_value(), "extended", "obstructed");
    }
    if (command == "normalize") {
        auto result = normalize(c, d);
        doc["deformation"] = encode_deformation(result.normalized);
        doc["automorphism"] = encode_automorphism(result.automorphism);
        doc["leading_index"] = result.leading_index ? Json(*result.leading_index) : Json(nullptr);
        doc["trivial"] = !result.leading_index.has_value();
        return finish(std::move(doc), true, "normalized", "");
    }
    if (command == "conjugate") {
        const FormalAutomorphism& phi = require(p.automorphism, "automorphism");
        doc["deformation"] = encode_deformation(conjugate(c, phi, d));
        return finish(std::move(doc), true, "conjugated", "");
    }
    // equiv-step
    const ApproximateDeformation& other = require(p.other_deformation, "other_deformation");
    auto phi = equivalent_one_step(c, d, other);
    doc["automorphism"] = phi ? encode_automorphism(*phi) : Json(nullptr);
    return finish(std::move(doc), phi.has_value(), "equivalent", "no-coboundary-witness");
}

CommandResult run_document(std::string_view command, std::string_view text, const Overrides& overrides) {
    auto failure = [&](const char* kind, const std::string& path, const std::string& message) {
        Json error = {{"kind", kind}, {"path", path}, {"message", message}};
        return CommandResult{Json{{"command", std::string(command)}, {"error", std::move(error)}}, kError};
    };
    try {
        return run(command, parse_problem(text, overrides));
    } catch (const InputError& e) {
        return failure("input", e.path(), e.message());
    } catch (const ResourceError& e) {
        return failure("resource", "", e.what());
    }
}

}  // namespace moddef
