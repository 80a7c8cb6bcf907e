// lhopf: command-line front end for the mod 2 Leibniz-Hopf algebra, its
// dual, and the Steenrod algebra computations built on them.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include "lhopf/dual.hpp"
#include "lhopf/io.hpp"
#include "lhopf/leibniz.hpp"
#include "lhopf/steenrod.hpp"
#include "lhopf/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

namespace {

using namespace lhopf;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Globals {
    unsigned max_degree = 16;
    bool json = false;
    bool quiet = false;

    Limits limits() const { return Limits{max_degree}; }
};

void print_sum(const Globals& g, const F2Sum& x) {
    if (g.json)
        std::cout << to_json(x).dump() << '\n';
    else
        std::cout << to_string(x) << '\n';
}

void print_table(const Globals& g, const DegreeTable& table, bool adem) {
    if (g.json) {
        for (const auto& row : adem ? adem_table_rows(table) : milnor_table_rows(table))
            std::cout << row.dump() << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& j : table.admissibles) {
        if (adem) {
            rows.emplace_back("Sq_" + to_string(j), to_string(table.pi_star_sq.at(j)));
        } else {
            const auto l = gamma(j);
            rows.emplace_back("xi_" + to_string(l), to_string(table.xi_expansions.at(l)));
        }
    }
    std::size_t width = 0;
    for (const auto& r : rows)
        width = std::max(width, r.first.size());
    for (const auto& [label, value] : rows)
        std::cout << label << std::string(width - label.size(), ' ') << " = " << value << '\n';
}

unsigned milnor_n_for_degree(unsigned max_degree) {
    unsigned n = 1;
    while ((2u << n) - 1 <= max_degree)
        ++n;
    return n;
}

std::vector<Report> run_suite(const std::string& suite, const std::string& side, unsigned max_degree,
                              const Limits& limits) {
    std::vector<Side> sides;
    if (side != "dual")
        sides.push_back(Side::Free);
    if (side != "free")
        sides.push_back(Side::Dual);

    std::vector<Report> out;
    const bool all = suite == "all";
    if (all || suite == "antipode")
        for (auto s : sides)
            out.push_back(check_antipode_axiom(s, max_degree));
    if (all || suite == "bialgebra")
        for (auto s : sides)
            out.push_back(check_bialgebra(s, max_degree));
    if (all || suite == "antihom")
        for (auto s : sides)
            out.push_back(check_antihomomorphism(s, 200, max_degree, 0x5eed));
    if (all || suite == "duality")
        out.push_back(check_duality_theorem(max_degree));
    if (all || suite == "invariants")
        for (unsigned d = 0; d <= max_degree; ++d)
            out.push_back(check_invariant_duality(d, limits));
    if (all || suite == "transpose")
        out.push_back(check_transpose(max_degree, limits));
    if (all || suite == "formulas")
        out.push_back(check_formula_agreement(max_degree));
    if (all || suite == "routes")
        out.push_back(check_route_equivalence(max_degree, limits));
    if (all || suite == "triangularity")
        out.push_back(check_triangularity(max_degree, limits));
    if (all || suite == "steenrod")
        out.push_back(check_milnor_round_trip(max_degree, limits));
    if (all || suite == "milnor")
        out.push_back(check_milnor_conjugation(milnor_n_for_degree(max_degree)));
    if (all || suite == "shuffle") {
        out.push_back(check_shuffle_commutativity(max_degree));
        out.push_back(check_shuffle_associativity(1000, max_degree, 0x5eed));
        out.push_back(check_squaring(max_degree));
        out.push_back(check_adjointness(max_degree));
    }
    return out;
}

int run(int argc, char** argv) {
    Globals g;
    CLI::App app{"Computations in the mod 2 Leibniz-Hopf algebra, its dual and the Steenrod algebra"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-degree", g.max_degree, "Degree cap for enumerations")->capture_default_str();
    app.add_flag("--json", g.json, "Emit JSON instead of text");
    app.add_flag("--quiet", g.quiet, "Suppress summaries");

    std::function<int()> action;

    // osp
    std::string osp_x, osp_y;
    auto* osp = app.add_subcommand("osp", "Overlapping shuffle product of two S_ expressions");
    osp->add_option("x", osp_x)->required();
    osp->add_option("y", osp_y)->required();
    osp->callback([&] {
        action = [&] {
            ShuffleAlgebra alg;
            print_sum(g, alg.product(parse_sum(osp_x, Basis::Dual), parse_sum(osp_y, Basis::Dual)));
            return kExitOk;
        };
    });

    // adem
    std::string adem_x;
    auto* adem = app.add_subcommand("adem", "Reduce an S^ expression to admissible Sq^ monomials");
    adem->add_option("x", adem_x)->required();
    adem->callback([&] {
        action = [&] {
            AdemReducer reducer;
            print_sum(g, reducer.reduce(parse_sum(adem_x, Basis::Free)));
            return kExitOk;
        };
    });

    // pistar
    std::string pistar_basis = "Sq", pistar_arg;
    auto* pistar = app.add_subcommand("pistar", "Image of Sq_J or xi^L in the S_ basis");
    pistar->add_option("--basis", pistar_basis)->check(CLI::IsMember({"Sq", "xi"}))->capture_default_str();
    pistar->add_option("seq", pistar_arg, "Bracketed sequence, e.g. [5,1]")->required();
    pistar->callback([&] {
        action = [&] {
            SteenrodContext ctx(g.limits());
            if (pistar_basis == "Sq") {
                const auto j = parse_composition(pistar_arg);
                if (!is_admissible(j))
                    throw Error("Sq_" + to_string(j) + " is not admissible");
                print_sum(g, ctx.pi_star_sq(j));
            } else {
                const auto l = parse_exponent_vector(pistar_arg);
                g.limits().check(l.degree());
                print_sum(g, ctx.pi_star_xi_monomial(l));
            }
            return kExitOk;
        };
    });

    // milnor
    std::string milnor_arg;
    auto* milnor = app.add_subcommand("milnor", "Expand xi^L in the dual admissible basis Sq_J");
    milnor->add_option("L", milnor_arg, "Exponent vector, e.g. [3,1]")->required();
    milnor->callback([&] {
        action = [&] {
            const auto l = parse_exponent_vector(milnor_arg);
            g.limits().check(l.degree());
            SteenrodContext ctx(g.limits());
            print_sum(g, ctx.milnor_to_admissible(l));
            return kExitOk;
        };
    });

    // chi
    std::string chi_side = "dual", chi_x;
    auto* chi = app.add_subcommand("chi", "Antipode of an S^ or S_ expression");
    chi->add_option("--side", chi_side)->check(CLI::IsMember({"free", "dual"}))->capture_default_str();
    chi->add_option("x", chi_x)->required();
    chi->callback([&] {
        action = [&] {
            if (chi_side == "free")
                print_sum(g, chi_free(parse_sum(chi_x, Basis::Free)));
            else
                print_sum(g, chi_dual(parse_sum(chi_x, Basis::Dual)));
            return kExitOk;
        };
    });

    // dualize
    std::string dualize_x;
    auto* dualize = app.add_subcommand("dualize", "Swap '+' and ',' termwise, moving between S^ and S_");
    dualize->add_option("x", dualize_x)->required();
    dualize->callback([&] {
        action = [&] {
            auto e = parse_expression(dualize_x);
            auto* x = std::get_if<F2Sum>(&e);
            if (!x)
                throw Error("dualize expects an S^ or S_ expression");
            print_sum(g, apply_duality(*x));
            return kExitOk;
        };
    });

    // table
    unsigned table_degree = 0;
    std::string table_what = "adem";
    auto* table = app.add_subcommand("table", "All pi*(Sq_J) rows (adem) or xi^L rows (milnor) of one degree");
    table->add_option("--degree", table_degree)->required();
    table->add_option("--what", table_what)->check(CLI::IsMember({"adem", "milnor"}))->capture_default_str();
    table->callback([&] {
        action = [&] {
            SteenrodContext ctx(g.limits());
            print_table(g, ctx.table(table_degree), table_what == "adem");
            return kExitOk;
        };
    });

    // verify
    std::string verify_suite = "all", verify_side = "both", verify_output;
    unsigned verify_degree = 8;
    auto* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
    verify->add_option("--suite", verify_suite)
        ->check(CLI::IsMember({"all", "antipode", "bialgebra", "antihom", "duality", "invariants", "transpose",
                               "formulas", "routes", "triangularity", "steenrod", "milnor", "shuffle"}))
        ->capture_default_str();
    verify->add_option("--max-degree", verify_degree, "Upper end of the checked degree range")
        ->capture_default_str();
    verify->add_option("--side", verify_side)->check(CLI::IsMember({"free", "dual", "both"}))->capture_default_str();
    verify->add_option("--output", verify_output, "Write the JSON report to this file");
    verify->callback([&] {
        action = [&] {
            g.limits().check(verify_degree);
            const auto reports = run_suite(verify_suite, verify_side, verify_degree, g.limits());
            nlohmann::json doc = nlohmann::json::array();
            bool ok = true;
            for (const auto& r : reports) {
                doc.push_back(to_json(r));
                ok = ok && r.passed;
            }
            if (!verify_output.empty()) {
                std::ofstream out(verify_output);
                if (!out)
                    throw Error("cannot open " + verify_output);
                out << doc.dump(2) << '\n';
                if (!g.quiet)
                    for (const auto& r : reports)
                        std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << " side=" << r.side
                                  << " max_degree=" << r.degree << " checked=" << r.checked << '\n';
            } else {
                std::cout << doc.dump(2) << '\n';
            }
            return ok ? kExitOk : kExitVerifyFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
