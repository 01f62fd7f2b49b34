#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hsmf/commands.hpp"

namespace {

struct GlobalFlags {
    bool json = false;
    bool no_oracle = false;
    bool assume_restriction_action = false;
    std::uint64_t modulus = 0;
};

void add_common(CLI::App* cmd, std::string& input_path, GlobalFlags& flags) {
    cmd->add_option("file", input_path, "input description file")->required();
    cmd->add_flag("--json", flags.json, "emit a JSON report instead of text");
    cmd->add_option("--modulus", flags.modulus,
                    "prime for the modular pre-pass (verified exactly)");
    cmd->add_flag("--no-oracle", flags.no_oracle, "skip the Hilbert-series cross-check");
    cmd->add_flag("--assume-restriction-action", flags.assume_restriction_action,
                  "resolve untwisted-by-twisted terms by restriction (extension, off by default)");
}

hsmf::InputSpec load(const std::string& path, const GlobalFlags& flags) {
    hsmf::InputSpec spec = hsmf::load_input_file(path);
    spec.options.json |= flags.json;
    spec.options.no_oracle |= flags.no_oracle;
    spec.options.assume_restriction_action |= flags.assume_restriction_action;
    if (flags.modulus != 0) spec.options.modulus = flags.modulus;
    return spec;
}

void emit(const hsmf::Report& report, bool json) {
    std::cout << (json ? report.json : report.text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild-Serre algebra of graded matrix factorizations"};
    app.require_subcommand(1);

    std::string input_path;
    GlobalFlags flags;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Jacobian ring, Milnor number, Hilbert function and sector table");
    add_common(analyze, input_path, flags);

    CLI::App* hh = app.add_subcommand(
        "hh", "Hochschild cohomology and homology dimensions over a range");
    add_common(hh, input_path, flags);
    int kmin = 0, kmax = 0;
    hh->add_option("--kmin", kmin, "lowest k")->required();
    hh->add_option("--kmax", kmax, "highest k")->required();

    CLI::App* hom = app.add_subcommand("hom", "one Hom(Delta, Delta(m)[t]) space");
    add_common(hom, input_path, flags);
    int m = 0, t = 0;
    hom->add_option("-m", m, "twist index m")->required();
    hom->add_option("-t", t, "shift index t")->required();

    CLI::App* gamma = app.add_subcommand(
        "gamma", "the map HH^2 -> Hom(HH_-1, HH_1): matrix rank and kernel");
    add_common(gamma, input_path, flags);

    CLI::App* pairing = app.add_subcommand(
        "pairing", "rank of the multiplication pairing Jac_e1 x Jac_e2 -> Jac_(e1+e2)");
    add_common(pairing, input_path, flags);
    int e1 = 0, e2 = 0;
    bool include_matrix = false;
    pairing->add_option("--e1", e1, "first degree")->required();
    pairing->add_option("--e2", e2, "second degree")->required();
    pairing->add_flag("--matrix", include_matrix, "include the pairing matrix in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        hsmf::InputSpec spec = load(input_path, flags);
        hsmf::Report report;
        if (app.got_subcommand(analyze)) {
            report = hsmf::run_analyze(spec);
        } else if (app.got_subcommand(hh)) {
            report = hsmf::run_hh(spec, kmin, kmax);
        } else if (app.got_subcommand(hom)) {
            report = hsmf::run_hom(spec, m, t);
        } else if (app.got_subcommand(gamma)) {
            report = hsmf::run_gamma(spec);
        } else {
            report = hsmf::run_pairing(spec, e1, e2, include_matrix);
        }
        emit(report, spec.options.json);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hsmf::exit_code_for(e);
    }
}
