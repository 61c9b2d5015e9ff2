// moddef: command-line front end over the deformation engine.
//
//   moddef <command> [input.json|-] [--field Q|F_p] [--order N] [--degree n]
//          [--guardrail-*] [--output path]
//   moddef --fixtures [A|B|C]

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "moddef/commands.hpp"
#include "moddef/errors.hpp"
#include "moddef/fixtures.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw moddef::InputError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output);
    if (!out) {
        std::cerr << "moddef: cannot write '" << output << "'\n";
        return moddef::kError;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild deformation theory of modules over finite-dimensional algebras, in exact arithmetic"};
    app.set_version_flag("--version", "moddef 0.1.0");

    std::string command;
    std::string input = "-";
    std::string output;
    std::string field;
    std::string fixture;
    moddef::Overrides overrides;
    std::size_t order = 0, degree = 0;
    std::size_t g_algebra = 0, g_module = 0, g_order = 0, g_degree = 0, g_entries = 0;

    std::string commands;
    for (auto name : moddef::command_names()) commands += (commands.empty() ? "" : ", ") + std::string(name);
    app.add_option("command", command, "One of: " + commands);
    app.add_option("input", input, "Problem document (JSON); '-' reads standard input");
    auto* field_opt = app.add_option("--field", field, "Ground field: Q or F_<p> (overrides the document)");
    auto* order_opt = app.add_option("--order", order, "Truncation / target order N");
    auto* degree_opt = app.add_option("--degree", degree, "Cohomological degree n");
    auto* ga = app.add_option("--guardrail-algebra-dim", g_algebra, "Maximum algebra dimension (default 8)");
    auto* gm = app.add_option("--guardrail-module-dim", g_module, "Maximum module dimension (default 6)");
    auto* go = app.add_option("--guardrail-order", g_order, "Maximum order N (default 16)");
    auto* gd = app.add_option("--guardrail-degree", g_degree, "Maximum degree (default 3)");
    auto* ge = app.add_option("--guardrail-matrix-entries", g_entries, "Maximum differential matrix entries");
    auto* fixtures_opt = app.add_option("--fixtures", fixture, "Print the built-in fixture documents (A, B, C or all)")
                             ->expected(0, 1)
                             ->default_str("all");
    app.add_option("--output", output, "Write the result document here instead of standard output");

    CLI11_PARSE(app, argc, argv);

    if (*fixtures_opt) {
        try {
            auto doc = fixture.empty() || fixture == "all" ? moddef::fixtures::all_fixture_documents()
                                                            : moddef::fixtures::fixture_document(fixture);
            return emit(moddef::print(doc), output);
        } catch (const moddef::InputError& e) {
            std::cerr << "moddef: " << e.what() << '\n';
            return moddef::kError;
        }
    }
    if (command.empty()) {
        std::cerr << app.help();
        return moddef::kError;
    }

    std::string text;
    try {
        if (*field_opt) overrides.field = moddef::Field::parse(field);
        text = read_input(input);
    } catch (const moddef::InputError& e) {
        std::cerr << "moddef: " << e.what() << '\n';
        return moddef::kError;
    }
    if (*order_opt) overrides.order = order;
    if (*degree_opt) overrides.degree = degree;
    if (*ga) overrides.max_algebra_dim = g_algebra;
    if (*gm) overrides.max_module_dim = g_module;
    if (*go) overrides.max_order = g_order;
    if (*gd) overrides.max_degree = g_degree;
    if (*ge) overrides.max_matrix_entries = g_entries;

    auto result = moddef::run_document(command, text, overrides);
    if (result.exit_code == moddef::kError)
        std::cerr << "moddef: " << result.document["error"]["message"].get<std::string>() << '\n';
    if (int rc = emit(moddef::print(result.document), output); rc != 0) return rc;
    return result.exit_code;
}
