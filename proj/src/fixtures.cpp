#include "moddef/fixtures.hpp"

#include "moddef/errors.hpp"

namespace moddef::fixtures {

namespace {

Vector ints(const Field& field, std::initializer_list<long> values) {
    Vector v;
    for (long x : values) v.push_back(field.from_int(x));
    return v;
}

}  // namespace

Algebra dual_numbers(const Field& field) {
    std::vector<std::vector<Vector>> c = {
        {ints(field, {1, 0}), ints(field, {0, 1})},
        {ints(field, {0, 1}), ints(field, {0, 0})},
    };
    return Algebra(field, {"1", "x"}, std::move(c), ints(field, {1, 0}));
}

Algebra matrix_algebra_2(const Field& field) {
    std::vector<std::vector<Vector>> c(4, std::vector<Vector>(4, Vector(4, field.zero())));
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q)
            for (std::size_t s = 0; s < 2; ++s)
                c[2 * p + q][2 * q + s][2 * p + s] = field.one();
    return Algebra(field, {"e11", "e12", "e21", "e22"}, std::move(c), ints(field, {1, 0, 0, 1}));
}

Algebra ground_field(const Field& field) {
    return Algebra(field, {"1"}, {{ints(field, {1})}}, ints(field, {1}));
}

Module fixture_a(const Field& field) {
    return Module(dual_numbers(field), 1, {Matrix::from_ints(field, {{1}}), Matrix::from_ints(field, {{0}})});
}

Module fixture_b(const Field& field) {
    std::vector<Matrix> action;
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
            Matrix unit(field, 2, 2);
            unit(p, q) = field.one();
            action.push_back(std::move(unit));
        }
    return Module(matrix_algebra_2(field), 2, std::move(action));
}

Module fixture_c(const Field& field) {
    return Module(dual_numbers(field), 2,
                  {Matrix::identity(field, 2), Matrix::from_ints(field, {{0, 1}, {0, 0}})});
}

Json fixture_document(std::string_view name) {
    const Field q;
    if (name == "A") {
        Module m = fixture_a(q);
        Json doc = encode_problem(m);
        Cochain sigma = Cochain::zero(m, 1);
        sigma.set({1}, Matrix::from_ints(q, {{1}}));
        doc["cochain"] = encode_cochain(sigma);
        doc["options"] = Json{{"order", 5}};
        return doc;
    }
    if (name == "B") return encode_problem(fixture_b(q));
    if (name == "C") {
        Module m = fixture_c(q);
        Json doc = encode_problem(m);
        Cochain sigma = Cochain::zero(m, 1);
        sigma.set({1}, Matrix::from_ints(q, {{1, 0}, {0, -1}}));
        doc["cochain"] = encode_cochain(sigma);
        doc["options"] = Json{{"order", 10}};
        return doc;
    }
    throw InputError("unknown fixture '" + std::string(name) + "' (expected A, B or C)");
}

Json all_fixture_documents() {
    return Json{{"A", fixture_document("A")}, {"B", fixture_document("B")}, {"C", fixture_document("C")}};
}

}  // namespace moddef::fixtures
