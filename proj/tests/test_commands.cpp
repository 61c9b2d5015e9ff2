#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "moddef/commands.hpp"
#include "moddef/fixtures.hpp"

using namespace moddef;

namespace {

Json fixture(const char* name) { return fixtures::fixture_document(name); }

CommandResult run_json(const char* command, const Json& doc, const Overrides& o = {}) {
    return run_document(command, print(doc), o);
}

Json deformation_doc(std::vector<Json> terms) {
    Json t = Json::array();
    for (auto& x : terms) t.push_back(std::move(x));
    return Json{{"order", t.size()}, {"terms", std::move(t)}};
}

Json cochain_x(Json matrix) {
    return Json{{"degree", 1}, {"entries", Json::array({Json{{"tuple", {1}}, {"matrix", std::move(matrix)}}})}};
}

Json zero_cochain() { return Json{{"degree", 1}, {"entries", Json::array()}}; }

const Json kSigmaC = Json::array({Json::array({"1", "0"}), Json::array({"0", "-1"})});

}  // namespace

TEST_CASE("every command is listed once") {
    auto names = command_names();
    CHECK(names.size() == 11);
    for (const char* name : {"validate", "cohomology", "cocycle", "coboundary", "obstruction", "extend", "integrate",
                             "normalize", "conjugate", "equiv-step", "rigidity"})
        CHECK(std::count(names.begin(), names.end(), std::string_view(name)) == 1);
}

TEST_CASE("validate") {
    for (const char* name : {"A", "B", "C"}) {
        auto r = run_json("validate", fixture(name));
        CHECK(r.exit_code == kAffirmative);
        CHECK(r.document["verdict"] == "valid");
    }
    Json broken = fixture("A");
    broken["algebra"]["structure"][1][0] = Json::array({"0", "0"});
    auto r = run_json("validate", broken);
    CHECK(r.exit_code == kNegative);
    CHECK(r.document["verdict"] == "invalid");
    CHECK_FALSE(r.document["algebra_report"].empty());

    Json bad_module = fixture("C");
    bad_module["module"]["action"][1] = Json::array({Json::array({"1", "0"}), Json::array({"0", "0"})});
    CHECK(run_json("validate", bad_module).exit_code == kNegative);
    // other commands refuse an invalid module
    auto c = run_json("cohomology", bad_module);
    CHECK(c.exit_code == kError);
    CHECK(c.document["error"]["kind"] == "input");
}

TEST_CASE("cohomology and rigidity") {
    auto a = run_json("cohomology", fixture("A"));
    CHECK(a.exit_code == kAffirmative);
    REQUIRE(a.document["cohomology"].size() == 3);
    CHECK(a.document["cohomology"][1]["dim_cohomology"] == 1);
    CHECK(a.document["cohomology"][2]["dim_cohomology"] == 1);
    Overrides only_one;
    only_one.degree = 1;
    CHECK(run_json("cohomology", fixture("B"), only_one).document["cohomology"].size() == 1);

    CHECK(run_json("rigidity", fixture("A")).exit_code == kNegative);
    CHECK(run_json("rigidity", fixture("B")).exit_code == kAffirmative);
    auto c = run_json("rigidity", fixture("C"));
    CHECK(c.exit_code == kAffirmative);
    CHECK(c.document["verdict"] == "rigid-certified");
    CHECK(c.document["dims"]["H1"] == 0);
}

TEST_CASE("cocycle and coboundary") {
    CHECK(run_json("cocycle", fixture("A")).exit_code == kAffirmative);
    CHECK(run_json("coboundary", fixture("A")).exit_code == kNegative);
    auto c = run_json("coboundary", fixture("C"));
    CHECK(c.exit_code == kAffirmative);
    CHECK(c.document["witness"]["entries"][0]["matrix"] == Json::array({Json::array({"0", "0"}), Json::array({"1", "0"})}));

    Json not_cocycle = fixture("A");
    not_cocycle["cochain"]["entries"][0]["tuple"] = Json::array({0});
    auto r = run_json("cocycle", not_cocycle);
    CHECK(r.exit_code == kNegative);
    CHECK(r.document["nonzero_entry"]["tuple"] == Json::array({0, 0}));

    Json missing = fixture("B");
    auto m = run_json("cocycle", missing);
    CHECK(m.exit_code == kError);
    CHECK(m.document["error"]["path"] == "cochain");
}

TEST_CASE("integrate") {
    auto a = run_json("integrate", fixture("A"));
    CHECK(a.exit_code == kNegative);
    CHECK(a.document["reached_order"] == 1);
    CHECK(a.document["witness"].is_null());
    auto c = run_json("integrate", fixture("C"));
    CHECK(c.exit_code == kAffirmative);
    CHECK(c.document["reached_order"] == 10);
    Overrides high;
    high.order = 17;
    auto r = run_json("integrate", fixture("C"), high);
    CHECK(r.exit_code == kError);
    CHECK(r.document["error"]["kind"] == "resource");
}

TEST_CASE("obstruction and extend") {
    Json a = fixture("A");
    a["deformation"] = deformation_doc({cochain_x(Json::array({Json::array({"1"})}))});
    CHECK(run_json("obstruction", a).exit_code == kNegative);
    auto ea = run_json("extend", a);
    CHECK(ea.exit_code == kNegative);
    CHECK(ea.document["deformation"].is_null());

    Json c = fixture("C");
    c["deformation"] = deformation_doc({cochain_x(kSigmaC)});
    CHECK(run_json("obstruction", c).exit_code == kAffirmative);
    auto ec = run_json("extend", c);
    CHECK(ec.exit_code == kAffirmative);
    CHECK(ec.document["deformation"]["order"] == 2);

    Json invalid = fixture("A");
    invalid["deformation"] = deformation_doc({cochain_x(Json::array({Json::array({"1"})})), zero_cochain()});
    auto bad = run_json("extend", invalid);
    CHECK(bad.exit_code == kError);
    CHECK(bad.document["error"]["path"] == "deformation");
}

TEST_CASE("normalize, conjugate and equiv-step") {
    Json c = fixture("C");
    c["deformation"] = deformation_doc({cochain_x(kSigmaC)});
    auto n = run_json("normalize", c);
    CHECK(n.exit_code == kAffirmative);
    CHECK(n.document["trivial"] == true);

    Json conj = c;
    conj["automorphism"] = Json{{"order", 1}, {"terms", Json::array({Json::array({Json::array({"0", "0"}), Json::array({"-1", "0"})})})}};
    auto r = run_json("conjugate", conj);
    CHECK(r.exit_code == kAffirmative);
    CHECK(r.document["deformation"]["terms"][0]["entries"].empty());

    Json eq = fixture("C");
    eq["deformation"] = deformation_doc({zero_cochain()});
    eq["other_deformation"] = deformation_doc({cochain_x(kSigmaC)});
    auto e = run_json("equiv-step", eq);
    CHECK(e.exit_code == kAffirmative);
    CHECK(e.document["verdict"] == "equivalent");

    Json ne = fixture("A");
    ne["deformation"] = deformation_doc({zero_cochain()});
    ne["other_deformation"] = deformation_doc({cochain_x(Json::array({Json::array({"1"})}))});
    auto f = run_json("equiv-step", ne);
    CHECK(f.exit_code == kNegative);
    CHECK(f.document["automorphism"].is_null());
}

TEST_CASE("errors") {
    auto u = run_document("frobnicate", print(fixture("A")));
    CHECK(u.exit_code == kError);
    auto j = run_document("validate", "{");
    CHECK(j.exit_code == kError);
    CHECK(j.document["error"]["kind"] == "input");
    Json bad = fixture("A");
    bad["algebra"]["structure"][0][0][0] = "1/0";
    auto z = run_json("validate", bad);
    CHECK(z.exit_code == kError);
    CHECK(z.document["error"]["path"] == "algebra.structure[0][0][0]");
    Overrides tight;
    tight.max_matrix_entries = 10;
    auto t = run_json("cohomology", fixture("B"), tight);
    CHECK(t.exit_code == kError);
    CHECK(t.document["error"]["kind"] == "resource");
}

TEST_CASE("outputs are byte-identical across runs") {
    for (const char* command : {"validate", "cohomology", "cocycle", "coboundary", "integrate", "rigidity"})
        for (const char* name : {"A", "C"}) {
            const std::string text = print(fixture(name));
            CHECK(print(run_document(command, text).document) == print(run_document(command, text).document));
        }
}
