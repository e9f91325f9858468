// locoh command-line tool: exact H^1 / H^1_loc computations for finite
// matrix groups over Z/p^nZ, plus the norm-one torus counterexample
// verifier and the mod-p injectivity check for integer matrix groups.
//
// Exit codes: 0 computed/verified, 1 a verification check failed,
//             2 input error, 3 resource cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "locoh/locoh.hpp"

namespace {

using nlohmann::ordered_json;

enum class Format { text, json };

struct GlobalOptions {
    Format format = Format::text;
    std::int64_t cap = locoh::Caps{}.group_order;
    std::int64_t matrix_cap = locoh::Caps{}.constraint_entries;
    int jobs = 1;

    locoh::Caps caps() const { return locoh::Caps{cap, matrix_cap}; }
};

bool use_color() {
    return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json matrix_json(const locoh::ModMatrix& m) {
    auto mj = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        auto rj = ordered_json::array();
        for (int k = 0; k < m.cols; ++k) rj.push_back(m.at(i, k));
        mj.push_back(std::move(rj));
    }
    return mj;
}

int run_verify_counterexample(const GlobalOptions& opts, std::int64_t p) {
    const locoh::VerificationReport rep = locoh::verify_counterexample(p, opts.caps(), opts.jobs);
    if (opts.format == Format::json)
        emit(rep.to_json());
    else
        std::cout << rep.to_text(use_color());
    if (rep.verdict()) return 0;
    return rep.only_resource_failures() ? 3 : 1;
}

int run_cohomology(const GlobalOptions& opts, const std::string& input, bool local, bool print_basis) {
    const locoh::GroupSpecFile spec = locoh::load_group_spec(input);
    const locoh::MatrixGroup group = locoh::build_group(spec, opts.caps());
    const locoh::H1Result res = local ? locoh::h1_loc(group, spec.n, opts.matrix_cap)
                                      : locoh::h1(group, spec.n, opts.matrix_cap);

    ordered_json j;
    j["schema"] = 1;
    j["command"] = local ? "h1loc" : "h1";
    j["label"] = spec.label ? ordered_json(*spec.label) : ordered_json(nullptr);
    j["modulus"] = {{"p", spec.p}, {"n", spec.n}};
    j["dimension"] = spec.dimension;
    j["group_order"] = group.order();
    j["invariant_factors"] = res.invariant_factors();
    if (print_basis) {
        auto basis = ordered_json::array();
        for (std::size_t k = 0; k < res.basis().size(); ++k) {
            ordered_json bj;
            bj["order"] = res.invariant_factors()[k];
            auto vals = ordered_json::array();
            for (const auto& v : res.basis()[k].values) vals.push_back(ordered_json(v.entries));
            bj["values"] = std::move(vals);
            basis.push_back(std::move(bj));
        }
        j["basis"] = std::move(basis);
    }

    if (opts.format == Format::json) {
        emit(j);
        return 0;
    }
    std::cout << "command: " << j["command"].get<std::string>() << "\n";
    if (spec.label) std::cout << "label: " << *spec.label << "\n";
    std::cout << "modulus: " << spec.p << "^" << spec.n << ", dimension " << spec.dimension << "\n";
    std::cout << "group order: " << group.order() << "\n";
    std::cout << "invariant factors: " << ordered_json(res.invariant_factors()).dump() << "\n";
    if (print_basis) {
        for (std::size_t k = 0; k < res.basis().size(); ++k) {
            std::cout << "basis cocycle " << k + 1 << " (order " << res.invariant_factors()[k] << "):\n";
            const auto& z = res.basis()[k];
            for (int i = 0; i < group.order(); ++i)
                std::cout << "  " << i << " [" << group.word_string(i) << "]: "
                          << z.values[static_cast<std::size_t>(i)].to_string() << "\n";
        }
    }
    return 0;
}

int run_sylow(const GlobalOptions& opts, const std::string& input) {
    const locoh::GroupSpecFile spec = locoh::load_group_spec(input);
    const locoh::MatrixGroup group = locoh::build_group(spec, opts.caps());
    const locoh::MatrixGroup sylow = locoh::sylow_p(group, opts.cap);

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "sylow";
    j["label"] = spec.label ? ordered_json(*spec.label) : ordered_json(nullptr);
    j["modulus"] = {{"p", spec.p}, {"n", spec.n}};
    j["group_order"] = group.order();
    j["sylow_order"] = sylow.order();
    auto gens = ordered_json::array();
    for (const auto& g : sylow.generators) gens.push_back(matrix_json(g));
    j["sylow_generators"] = std::move(gens);
    auto reductions = ordered_json::array();
    for (int level = 1; level < spec.n; ++level) {
        const locoh::ReductionResult red = locoh::reduce_mod(group, level);
        ordered_json rj;
        rj["level"] = level;
        rj["image_order"] = red.image.order();
        rj["kernel_order"] = static_cast<std::int64_t>(red.kernel_indices.size());
        reductions.push_back(std::move(rj));
    }
    j["reductions"] = std::move(reductions);

    if (opts.format == Format::json) {
        emit(j);
        return 0;
    }
    std::cout << "command: sylow\n";
    if (spec.label) std::cout << "label: " << *spec.label << "\n";
    std::cout << "group order: " << group.order() << "\n";
    std::cout << "sylow order: " << sylow.order() << "\n";
    for (const auto& g : sylow.generators) std::cout << "  generator: " << g.to_string() << "\n";
    for (const auto& rj : j["reductions"])
        std::cout << "reduction mod " << spec.p << "^" << rj["level"] << ": image order "
                  << rj["image_order"] << ", kernel order " << rj["kernel_order"] << "\n";
    return 0;
}

int run_check_injectivity(const GlobalOptions& opts, const std::string& input, std::int64_t p) {
    if (!locoh::is_odd_prime(p))
        throw locoh::value_error("check-injectivity: p must be an odd prime, got " + std::to_string(p));
    const locoh::IntegerGroupSpecFile spec = locoh::load_integer_group_spec(input);
    const std::int64_t cap = spec.cap.value_or(opts.cap);
    const auto elements = locoh::enumerate_integer_group(spec.generators, cap);

    const locoh::Modulus mod(p, 1);
    std::vector<locoh::ModMatrix> reduced;
    reduced.reserve(spec.generators.size());
    for (const auto& g : spec.generators) reduced.push_back(locoh::ModMatrix::from_int(g, mod));
    for (const auto& g : reduced)
        if (!locoh::is_invertible(g))
            throw locoh::value_error("check-injectivity: a generator is singular mod p");
    const locoh::MatrixGroup image = locoh::enumerate(mod, spec.dimension, reduced,
                                                      static_cast<std::int64_t>(elements.size()));
    const bool injective = image.order() == static_cast<int>(elements.size());

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "check-injectivity";
    j["p"] = p;
    j["dimension"] = spec.dimension;
    j["integer_group_order"] = static_cast<std::int64_t>(elements.size());
    j["image_order"] = image.order();
    j["injective"] = injective;

    if (opts.format == Format::json)
        emit(j);
    else
        std::cout << "command: check-injectivity\n"
                  << "integer group order: " << elements.size() << "\n"
                  << "image order mod " << p << ": " << image.order() << "\n"
                  << "injective: " << (injective ? "yes" : "no") << "\n";
    return injective ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact H^1 and H^1_loc for finite matrix groups over Z/p^nZ"};
    app.require_subcommand(1);

    GlobalOptions opts;
    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", opts.cap, "group-order cap (default 4096)")->check(CLI::PositiveNumber);
    app.add_option("--matrix-cap", opts.matrix_cap, "cocycle-constraint entry cap (default 2e7)")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", opts.jobs, "parallel jobs for per-generator verification checks")
        ->check(CLI::PositiveNumber);

    std::int64_t p_verify = 0;
    auto* verify = app.add_subcommand("verify-counterexample",
                                      "construct and verify the dimension-(p-1) counterexample scenario");
    verify->fallthrough();
    verify->add_option("-p", p_verify, "odd prime")->required();

    std::string h1_input;
    auto* h1cmd = app.add_subcommand("h1", "invariant factors of H^1 for a group-spec file");
    h1cmd->fallthrough();
    h1cmd->add_option("--input", h1_input, "group spec JSON path")->required();
    bool h1_basis = false;
    h1cmd->add_flag("--basis", h1_basis, "also print basis cocycle tables");

    std::string h1loc_input;
    auto* h1loccmd = app.add_subcommand("h1loc", "invariant factors of H^1_loc for a group-spec file");
    h1loccmd->fallthrough();
    h1loccmd->add_option("--input", h1loc_input, "group spec JSON path")->required();
    bool h1loc_basis = false;
    h1loccmd->add_flag("--basis", h1loc_basis, "also print basis cocycle tables");

    std::string sylow_input;
    auto* sylowcmd = app.add_subcommand("sylow", "p-Sylow subgroup and reduction structure");
    sylowcmd->fallthrough();
    sylowcmd->add_option("--input", sylow_input, "group spec JSON path")->required();

    std::string inj_input;
    std::int64_t inj_p = 0;
    auto* injcmd = app.add_subcommand("check-injectivity",
                                      "verify that reduction mod p preserves the order of a finite integer matrix group");
    injcmd->fallthrough();
    injcmd->add_option("--input", inj_input, "integer group spec JSON path")->required();
    injcmd->add_option("-p", inj_p, "odd prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    opts.format = format_name == "json" ? Format::json : Format::text;

    try {
        if (verify->parsed()) return run_verify_counterexample(opts, p_verify);
        if (h1cmd->parsed()) return run_cohomology(opts, h1_input, /*local=*/false, h1_basis);
        if (h1loccmd->parsed()) return run_cohomology(opts, h1loc_input, /*local=*/true, h1loc_basis);
        if (sylowcmd->parsed()) return run_sylow(opts, sylow_input);
        if (injcmd->parsed()) return run_check_injectivity(opts, inj_input, inj_p);
    } catch (const locoh::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const locoh::value_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
