// graphfiber command-line front end.
//
// Subcommands: analyze, beta, milnor, lattice, certify, enumerate, verify.
// Graph input is the canonical JSON document, from a file path or stdin
// ("-"). Exit codes: 0 success, 1 input error, 2 theorem-violation sentinel
// (an identity that must hold mathematically failed, i.e. a bug).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "graphfiber/graphfiber.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw graphfiber::input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const graphfiber::ojson& j) { std::cout << j.dump() << "\n"; }

} // namespace

int main(int argc, char** argv) {
    using namespace graphfiber;

    CLI::App app{"Milnor fiber monodromy of graphic hyperplane arrangements"};
    app.require_subcommand(1);

    std::string input = "-";
    std::vector<long long> extra_primes;
    int opt_d = 0;
    int opt_vmax = 4;
    bool cross_check = false, oracle = false;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "graph JSON file, or - for stdin");
    };

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "full report for one graph");
    add_input(cmd_analyze);
    cmd_analyze->add_flag("--cross-check", cross_check, "double-compute via the OS2 matrix and pattern table");
    cmd_analyze->add_flag("--oracle", oracle, "compare against the brute-force oracle where within cap");

    CLI::App* cmd_beta = app.add_subcommand("beta", "mod-p Aomoto Betti numbers");
    add_input(cmd_beta);
    cmd_beta->add_option("--p", extra_primes, "additional prime (repeatable, one value each)")
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    cmd_beta->add_flag("--cross-check", cross_check, "double-compute via the OS2 matrix");
    cmd_beta->add_flag("--oracle", oracle, "compare against the brute-force oracle where within cap");

    CLI::App* cmd_milnor = app.add_subcommand("milnor", "cyclotomic decomposition of H_1 of the Milnor fiber");
    add_input(cmd_milnor);
    cmd_milnor->add_flag("--cross-check", cross_check, "match against the exceptional-pattern table");

    CLI::App* cmd_lattice = app.add_subcommand("lattice", "intersection-lattice report");
    add_input(cmd_lattice);

    CLI::App* cmd_certify = app.add_subcommand("certify", "vanishing certificate for a divisor of n");
    add_input(cmd_certify);
    cmd_certify->add_option("--d", opt_d, "divisor of n")->required();

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "canonical classes with per-class beta_3");
    cmd_enum->add_option("--vmax", opt_vmax, "vertex cap (<= 6)")->required();
    bool connected_only = false;
    cmd_enum->add_flag("--connected", connected_only, "connected graphs only");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the verification suites");
    cmd_verify->add_option("--vmax", opt_vmax, "vertex cap for the enumeration-backed suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*cmd_analyze) {
            emit(analyze_report(parse_graph(read_input(input)), cross_check, oracle));
        } else if (*cmd_beta) {
            emit(beta_report(parse_graph(read_input(input)), extra_primes, cross_check, oracle));
        } else if (*cmd_milnor) {
            emit(milnor_report(parse_graph(read_input(input)), cross_check));
        } else if (*cmd_lattice) {
            emit(lattice_report(parse_graph(read_input(input))));
        } else if (*cmd_certify) {
            emit(certify_report(parse_graph(read_input(input)), opt_d));
        } else if (*cmd_enum) {
            ojson arr = ojson::array();
            enumerate_graphs(opt_vmax, connected_only, [&](const SignedGraph& g) {
                Arrangement a = build_arrangement(g);
                ojson row;
                row["graph"] = graph_json(g);
                row["n"] = a.n();
                row["rank"] = a.rank;
                row["beta3"] = beta_p(a, 3);
                arr.push_back(std::move(row));
            });
            emit(arr);
        } else if (*cmd_verify) {
            bool ok = true;
            ojson suites = ojson::array();
            for (const SuiteResult& r : run_verification(opt_vmax)) {
                ojson row;
                row["name"] = r.name;
                row["pass"] = r.pass;
                row["fail"] = r.fail;
                suites.push_back(std::move(row));
                for (const std::string& f : r.failures) std::cerr << r.name << ": " << f << "\n";
                ok = ok && r.ok();
            }
            ojson j;
            j["vmax"] = opt_vmax;
            j["suites"] = std::move(suites);
            j["ok"] = ok;
            emit(j);
            if (!ok) return 2;
        }
    } catch (const theorem_violation& e) {
        std::cerr << "theorem violation (bug sentinel): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
