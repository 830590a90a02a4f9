#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace loopsplit {

/**** Command line front end ****/

// Exit codes: 0 success (all checks pass), 1 failed check or internal error,
// 2 usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"splitting checks for free loop spaces of rank-one symmetric spaces",
                 "loopsplit"};
    app.require_subcommand(1);

    std::string space, format = "text";
    int n = 2, max_degree = 0, max_winding = 0;

    CLI::App* verify =
        app.add_subcommand("verify", "assemble the splitting over a degree window and "
                                     "run every structural check");
    verify->add_option("--space", space, "one of cpn, hpn, op2")->required();
    verify->add_option("--n", n, "projective dimension parameter (default 2)");
    verify->add_option("--max-degree", max_degree, "top degree of the window [0, D]")
        ->required();
    verify->add_option("--format", format, "text or json (default text)");

    CLI::App* table =
        app.add_subcommand("table", "print index and rank data for the critical strata");
    table->add_option("--space", space, "one of cpn, hpn, op2")->required();
    table->add_option("--n", n, "projective dimension parameter (default 2)");
    table->add_option("--max-winding", max_winding, "largest winding number to list")
        ->required();
    table->add_option("--format", format, "text or json (default text)");

    std::vector<const char*> argv{"loopsplit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& pe) {
        err << "error: " << pe.what() << "\n";
        return 2;
    }

    std::optional<SpaceFamily> family;
    if (space == "cpn") family = SpaceFamily::cpn;
    else if (space == "hpn") family = SpaceFamily::hpn;
    else if (space == "op2") family = SpaceFamily::op2;
    if (!family) {
        err << "error: --space must be one of cpn, hpn, op2\n";
        return 2;
    }
    if (format != "text" && format != "json") {
        err << "error: --format must be text or json\n";
        return 2;
    }
    if (*family == SpaceFamily::op2 && n != 2) {
        err << "error: op2 admits only n = 2\n";
        return 2;
    }
    if (n < 2) {
        err << "error: --n must be >= 2\n";
        return 2;
    }
    if (verify->parsed() && max_degree < 0) {
        err << "error: --max-degree must be >= 0\n";
        return 2;
    }
    if (table->parsed() && max_winding < 1) {
        err << "error: --max-winding must be >= 1\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            VerificationReport rep = run_verification(*family, n, max_degree);
            if (format == "json")
                out << to_json(rep).dump(2) << "\n";
            else
                out << to_text(rep);
            return rep.pass ? 0 : 1;
        }
        SymmetricSpaceEntry e = catalog(*family, n);
        std::vector<StratumRow> rows = stratum_table(e, max_winding);
        if (format == "json")
            out << table_to_json(e, rows).dump(2) << "\n";
        else
            out << table_to_text(e, rows);
        return 0;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace loopsplit
