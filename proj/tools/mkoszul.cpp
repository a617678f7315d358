// Command-line front end: every verification and table as a reproducible,
// scriptable report. Exit codes: 0 success/verified, 1 usage error, 2
// verification failure.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mkoszul/report.hpp"

using mkoszul::report::Json;

namespace {

struct Output {
    std::string format = "json";
    std::string path;
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "write to a file instead of stdout");
}

int emit(const Json& j, const Output& out) {
    std::string text;
    if (out.format == "json")
        text = j.dump(2) + "\n";
    else if (out.format == "csv")
        text = mkoszul::report::to_csv(j);
    else
        text = mkoszul::report::to_pretty(j);
    if (out.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.path);
        if (!f.good()) {
            std::cerr << "cannot write " << out.path << "\n";
            return 1;
        }
        f << text;
    }
    return mkoszul::report::report_verified(j) ? 0 : 2;
}

std::string read_stdin() {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for the cohomology rings of spaces of stable "
                 "rational curves and their Koszul-dual invariants"};
    app.require_subcommand(1);

    int n = 4, degree = 2, order = 8, jobs = 0;
    int64_t prime = 5;
    bool serial = false, big = false;
    std::string fan_file;
    Output out;

    auto add_n = [&](CLI::App* cmd, int cap = 8) {
        cmd->add_option("--n", n, "number of ordered marked points (the space has n+1)")
            ->required()
            ->check(CLI::Range(1, cap));
    };

    auto* relations = app.add_subcommand("relations", "tagged Gauss-reduced relation families");
    add_n(relations);
    add_output_flags(relations, out);

    auto* gb = app.add_subcommand("gb-check", "verify the quadratic Groebner basis");
    add_n(gb);
    gb->add_option("--jobs", jobs, "parallel reduction workers (0 = all cores)");
    gb->add_flag("--serial", serial, "use the serial reference implementation");
    gb->add_flag("--big", big, "allow n >= 7 (larger runs)");
    add_output_flags(gb, out);

    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of the ring");
    add_n(hilbert);
    add_output_flags(hilbert, out);

    auto* normal = app.add_subcommand("normal", "normal monomials of a given degree");
    add_n(normal);
    normal->add_option("--degree", degree, "degree")->required()->check(CLI::Range(0, 12));
    add_output_flags(normal, out);

    auto* trees = app.add_subcommand("trees", "the recursive shuffle-tree basis");
    add_n(trees, 7);
    add_output_flags(trees, out);

    auto* phi = app.add_subcommand("phi", "tree (stdin, nested lists) -> normal monomial");
    add_n(phi);
    add_output_flags(phi, out);

    auto* psi = app.add_subcommand("psi", "normal monomial (stdin, list of subsets) -> tree");
    add_n(psi);
    add_output_flags(psi, out);

    auto* dual = app.add_subcommand("dual", "quadratic dual presentation data");
    add_n(dual);
    add_output_flags(dual, out);

    auto* lie = app.add_subcommand("lie-check", "verify the homotopy Lie presentation");
    add_n(lie);
    add_output_flags(lie, out);

    auto* ranks = app.add_subcommand("homotopy-ranks", "ranks of rational homotopy groups");
    add_n(ranks);
    ranks->add_option("--order", order, "truncation order")->check(CLI::Range(1, 24));
    add_output_flags(ranks, out);

    auto* hh0 = app.add_subcommand("hh0", "commutator quotient dimensions over F_ell");
    add_n(hh0);
    hh0->add_option("--prime", prime, "modulus (a prime)")->required();
    hh0->add_option("--degree", degree, "maximum degree")->required()->check(CLI::Range(0, 12));
    add_output_flags(hh0, out);

    auto* nonvan = app.add_subcommand("nonvanishing", "divisor squares and top generator powers");
    add_n(nonvan);
    add_output_flags(nonvan, out);

    auto* toric = app.add_subcommand("toric", "flag and Koszulness verdict for a fan file");
    toric->add_option("--fan", fan_file, "fan JSON file")->required();
    add_output_flags(toric, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message or requested help text
        return code == 0 ? 0 : 1;
    }

    try {
        if (relations->parsed()) return emit(mkoszul::report::relations_report(n), out);
        if (gb->parsed()) {
            if (n >= 7 && !big) {
                std::cerr << "gb-check with n >= 7 is a larger run; pass --big to confirm\n";
                return 1;
            }
            return emit(mkoszul::report::gb_report(n, jobs, serial), out);
        }
        if (hilbert->parsed()) return emit(mkoszul::report::hilbert_report(n), out);
        if (normal->parsed()) return emit(mkoszul::report::normal_report(n, degree), out);
        if (trees->parsed()) return emit(mkoszul::report::trees_report(n), out);
        if (phi->parsed()) return emit(mkoszul::report::phi_report(n, read_stdin()), out);
        if (psi->parsed()) return emit(mkoszul::report::psi_report(n, read_stdin()), out);
        if (dual->parsed()) return emit(mkoszul::report::dual_report(n), out);
        if (lie->parsed()) return emit(mkoszul::report::lie_check_report(n), out);
        if (ranks->parsed()) return emit(mkoszul::report::homotopy_report(n, order), out);
        if (hh0->parsed()) return emit(mkoszul::report::hh0_report(n, prime, degree), out);
        if (nonvan->parsed()) return emit(mkoszul::report::nonvanishing_report_json(n), out);
        if (toric->parsed()) return emit(mkoszul::report::toric_report_json(fan_file), out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
