#include "moddef/io.hpp"

#include <cstdint>
#include <set>

#include "moddef/errors.hpp"

namespace moddef {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require_key(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw InputError("expected an object", path);
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(std::string("missing key '") + key + "'", path);
    return *it;
}

const Json& require_array(const Json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
    if (!j.is_array()) throw InputError("expected an array", path);
    if (size && j.size() != *size)
        throw InputError("expected " + std::to_string(*size) + " elements, found " + std::to_string(j.size()), path);
    return j;
}

std::size_t decode_count(const Json& j, const std::string& path) {
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::size_t>(j.get<std::int64_t>());
    throw InputError("expected a non-negative integer", path);
}

Vector decode_vector(const Json& j, const Field& field, std::size_t size, const std::string& path) {
    require_array(j, path, size);
    Vector v;
    v.reserve(size);
    for (std::size_t i = 0; i < size; ++i) v.push_back(decode_scalar(j[i], field, at(path, i)));
    return v;
}

Json encode_vector(std::span<const Scalar> v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(encode_scalar(s));
    return out;
}

Json encode_violation(const Violation& v) {
    return Json{{"kind", v.kind}, {"indices", v.indices}, {"message", v.message}};
}

void check_limit(std::size_t value, std::size_t limit, const char* what) {
    if (value > limit)
        throw ResourceError(std::string(what) + " " + std::to_string(value) + " exceeds the guardrail " +
                            std::to_string(limit));
}

}  // namespace

Json encode_scalar(const Scalar& s) { return s.to_string(); }

Json encode_matrix(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(encode_vector(m.row(r)));
    return out;
}

Json encode_cochain(const Cochain& c) {
    Json entries = Json::array();
    for (const auto& [tuple, value] : c.entries()) entries.push_back(Json{{"tuple", tuple}, {"matrix", encode_matrix(value)}});
    return Json{{"degree", c.degree()}, {"entries", std::move(entries)}};
}

Json encode_deformation(const ApproximateDeformation& d) {
    Json terms = Json::array();
    for (const auto& t : d.terms) terms.push_back(encode_cochain(t));
    return Json{{"order", d.order()}, {"terms", std::move(terms)}};
}

Json encode_automorphism(const FormalAutomorphism& phi) {
    Json terms = Json::array();
    for (const auto& t : phi.terms) terms.push_back(encode_matrix(t));
    return Json{{"order", phi.order()}, {"terms", std::move(terms)}};
}

Json encode_algebra(const Algebra& a) {
    Json structure = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(encode_vector(a.product(i, j)));
        structure.push_back(std::move(row));
    }
    return Json{{"dim", a.dim()}, {"basis", a.labels()}, {"structure", std::move(structure)}, {"unit", encode_vector(a.unit())}};
}

Json encode_module(const Module& m) {
    Json action = Json::array();
    for (const auto& a : m.actions()) action.push_back(encode_matrix(a));
    return Json{{"dim", m.dim()}, {"action", std::move(action)}};
}

Json encode_cohomology(const CohomologyReport& r) {
    Json reps = Json::array();
    for (const auto& c : r.representatives) reps.push_back(encode_cochain(c));
    return Json{{"degree", r.degree},
                {"dim_cocycles", r.dim_cocycles},
                {"dim_coboundaries", r.dim_coboundaries},
                {"dim_cohomology", r.dim_cohomology},
                {"representatives", std::move(reps)}};
}

Json encode_report(const ValidationReport& r) {
    Json out = Json::array();
    for (const auto& v : r.violations) out.push_back(encode_violation(v));
    return out;
}

Json encode_problem(const Module& m) {
    return Json{{"field", m.field().name()}, {"algebra", encode_algebra(m.algebra())}, {"module", encode_module(m)}};
}

Json encode_problem(const Problem& p) {
    Json doc = encode_problem(p.module);
    Json options = Json::object();
    if (p.options.order) options["order"] = *p.options.order;
    if (p.options.degree) options["degree"] = *p.options.degree;
    const Limits& l = p.options.limits;
    options["guardrails"] = Json{{"algebra_dim", l.max_algebra_dim},
                                 {"module_dim", l.max_module_dim},
                                 {"order", l.max_order},
                                 {"degree", l.max_degree},
                                 {"matrix_entries", l.max_matrix_entries}};
    doc["options"] = std::move(options);
    if (p.cochain) doc["cochain"] = encode_cochain(*p.cochain);
    if (p.deformation) doc["deformation"] = encode_deformation(*p.deformation);
    if (p.other_deformation) doc["other_deformation"] = encode_deformation(*p.other_deformation);
    if (p.automorphism) doc["automorphism"] = encode_automorphism(*p.automorphism);
    return doc;
}

Scalar decode_scalar(const Json& j, const Field& field, const std::string& path) {
    try {
        if (j.is_string()) return field.parse_scalar(j.get_ref<const std::string&>());
        if (j.is_number_integer()) return field.parse_scalar(j.dump());
    } catch (const InputError& e) {
        throw InputError(e.message(), path);
    }
    if (j.is_number_float()) throw InputError("floating-point scalars are not allowed; use \"p/q\" strings", path);
    throw InputError("expected a scalar string \"p/q\"", path);
}

Matrix decode_matrix(const Json& j, const Field& field, std::size_t rows, std::size_t cols, const std::string& path) {
    require_array(j, path, rows);
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto v = decode_vector(j[r], field, cols, at(path, r));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = std::move(v[c]);
    }
    return m;
}

Cochain decode_cochain(const Json& j, const Module& m, const std::string& path) {
    const std::size_t degree = decode_count(require_key(j, "degree", path), path + ".degree");
    Cochain c = Cochain::zero(m, degree);
    const std::string entries_path = path + ".entries";
    const Json& entries = require_array(require_key(j, "entries", path), entries_path);
    std::set<Cochain::Tuple> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string entry_path = at(entries_path, e);
        const std::string tuple_path = entry_path + ".tuple";
        const Json& tj = require_array(require_key(entries[e], "tuple", entry_path), tuple_path, degree);
        Cochain::Tuple tuple;
        for (std::size_t i = 0; i < degree; ++i) {
            std::size_t a = decode_count(tj[i], at(tuple_path, i));
            if (a >= m.algebra().dim())
                throw InputError("basis index " + std::to_string(a) + " out of range", at(tuple_path, i));
            tuple.push_back(a);
        }
        if (!seen.insert(tuple).second) throw InputError("duplicate tuple", tuple_path);
        c.set(tuple, decode_matrix(require_key(entries[e], "matrix", entry_path), m.field(), m.dim(), m.dim(),
                                   entry_path + ".matrix"));
    }
    return c;
}

ApproximateDeformation decode_deformation(const Json& j, const Module& m, const std::string& path) {
    const std::string terms_path = path + ".terms";
    const Json& terms = require_array(require_key(j, "terms", path), terms_path);
    if (j.contains("order") && decode_count(j["order"], path + ".order") != terms.size())
        throw InputError("order does not match the number of terms", path + ".order");
    ApproximateDeformation d;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Cochain c = decode_cochain(terms[i], m, at(terms_path, i));
        if (c.degree() != 1) throw InputError("deformation terms must have degree 1", at(terms_path, i) + ".degree");
        d.terms.push_back(std::move(c));
    }
    return d;
}

FormalAutomorphism decode_automorphism(const Json& j, const Module& m, const std::string& path) {
    const std::string terms_path = path + ".terms";
    const Json& terms = require_array(require_key(j, "terms", path), terms_path);
    if (j.contains("order") && decode_count(j["order"], path + ".order") != terms.size())
        throw InputError("order does not match the number of terms", path + ".order");
    FormalAutomorphism phi;
    for (std::size_t i = 0; i < terms.size(); ++i)
        phi.terms.push_back(decode_matrix(terms[i], m.field(), m.dim(), m.dim(), at(terms_path, i)));
    return phi;
}

Problem parse_problem(std::string_view text, const Overrides& overrides) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_problem_json(doc, overrides);
}

Problem parse_problem_json(const Json& doc, const Overrides& overrides) {
    if (!doc.is_object()) throw InputError("expected a JSON object", "$");
    Problem p;

    if (overrides.field) {
        p.field = *overrides.field;
    } else if (auto it = doc.find("field"); it != doc.end()) {
        if (!it->is_string()) throw InputError("expected \"Q\" or \"F_<p>\"", "field");
        try {
            p.field = Field::parse(it->get_ref<const std::string&>());
        } catch (const InputError& e) {
            throw InputError(e.message(), "field");
        }
    }

    Options& opt = p.options;
    if (auto it = doc.find("options"); it != doc.end()) {
        if (!it->is_object()) throw InputError("expected an object", "options");
        if (it->contains("order")) opt.order = decode_count((*it)["order"], "options.order");
        if (it->contains("degree")) opt.degree = decode_count((*it)["degree"], "options.degree");
        if (auto g = it->find("guardrails"); g != it->end()) {
            if (!g->is_object()) throw InputError("expected an object", "options.guardrails");
            for (const auto& [key, value] : g->items())
                if (key != "algebra_dim" && key != "module_dim" && key != "order" && key != "degree" &&
                    key != "matrix_entries")
                    throw InputError("unknown guardrail '" + key + "'", "options.guardrails." + key);
            auto read = [&](const char* key, std::size_t& slot) {
                if (g->contains(key)) slot = decode_count((*g)[key], std::string("options.guardrails.") + key);
            };
            read("algebra_dim", opt.limits.max_algebra_dim);
            read("module_dim", opt.limits.max_module_dim);
            read("order", opt.limits.max_order);
            read("degree", opt.limits.max_degree);
            read("matrix_entries", opt.limits.max_matrix_entries);
        }
    }
    if (overrides.order) opt.order = overrides.order;
    if (overrides.degree) opt.degree = overrides.degree;
    if (overrides.max_algebra_dim) opt.limits.max_algebra_dim = *overrides.max_algebra_dim;
    if (overrides.max_module_dim) opt.limits.max_module_dim = *overrides.max_module_dim;
    if (overrides.max_order) opt.limits.max_order = *overrides.max_order;
    if (overrides.max_degree) opt.limits.max_degree = *overrides.max_degree;
    if (overrides.max_matrix_entries) opt.limits.max_matrix_entries = *overrides.max_matrix_entries;
    if (opt.order) check_limit(*opt.order, opt.limits.max_order, "order");
    if (opt.degree) check_limit(*opt.degree, opt.limits.max_degree, "degree");

    const Json& aj = require_key(doc, "algebra", "$");
    const Json& structure = require_array(require_key(aj, "structure", "algebra"), "algebra.structure");
    const std::size_t dr = structure.size();
    if (aj.contains("dim") && decode_count(aj["dim"], "algebra.dim") != dr)
        throw InputError("dim does not match the structure tensor", "algebra.dim");
    if (dr == 0) throw InputError("algebra must have positive dimension", "algebra.structure");
    check_limit(dr, opt.limits.max_algebra_dim, "algebra dimension");
    std::vector<std::vector<Vector>> tensor(dr);
    for (std::size_t i = 0; i < dr; ++i) {
        const std::string row_path = at("algebra.structure", i);
        require_array(structure[i], row_path, dr);
        for (std::size_t j = 0; j < dr; ++j)
            tensor[i].push_back(decode_vector(structure[i][j], p.field, dr, at(row_path, j)));
    }
    Vector unit = decode_vector(require_key(aj, "unit", "algebra"), p.field, dr, "algebra.unit");
    std::vector<std::string> labels;
    if (auto it = aj.find("basis"); it != aj.end()) {
        require_array(*it, "algebra.basis", dr);
        for (std::size_t i = 0; i < dr; ++i) {
            if (!(*it)[i].is_string()) throw InputError("expected a label string", at("algebra.basis", i));
            labels.push_back((*it)[i].get<std::string>());
        }
    }
    Algebra algebra(p.field, std::move(labels), std::move(tensor), std::move(unit));

    const Json& mj = require_key(doc, "module", "$");
    const std::size_t dm = decode_count(require_key(mj, "dim", "module"), "module.dim");
    check_limit(dm, opt.limits.max_module_dim, "module dimension");
    const Json& action = require_array(require_key(mj, "action", "module"), "module.action", dr);
    std::vector<Matrix> matrices;
    for (std::size_t i = 0; i < dr; ++i)
        matrices.push_back(decode_matrix(action[i], p.field, dm, dm, at("module.action", i)));
    p.module = Module(std::move(algebra), dm, std::move(matrices));

    if (auto it = doc.find("cochain"); it != doc.end()) p.cochain = decode_cochain(*it, p.module, "cochain");
    if (auto it = doc.find("deformation"); it != doc.end())
        p.deformation = decode_deformation(*it, p.module, "deformation");
    if (auto it = doc.find("other_deformation"); it != doc.end())
        p.other_deformation = decode_deformation(*it, p.module, "other_deformation");
    if (auto it = doc.find("automorphism"); it != doc.end())
        p.automorphism = decode_automorphism(*it, p.module, "automorphism");
    for (const auto* d : {&p.deformation, &p.other_deformation})
        if (*d) check_limit((*d)->order(), opt.limits.max_order, "deformation order");
    if (p.automorphism) check_limit(p.automorphism->order(), opt.limits.max_order, "automorphism order");
    return p;
}

std::string print(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace moddef
