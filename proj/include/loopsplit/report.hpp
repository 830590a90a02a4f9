#pragma once

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "splitting.hpp"
#include "witnesses.hpp"

namespace loopsplit {

/**** Verification reports ****/

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::string space_id;    // cpn | hpn | op2
    std::string space_name;  // e.g. CP^2
    int n = 0;
    int window_hi = 0;
    SplittingDescription splitting;
    WedgeDescription wedge;
    std::vector<CheckResult> checks;
    bool pass = false;
};

// Builds the splitting over [0, window_hi] and runs every structural check
// the library knows about. Construction itself enforces several invariants
// (rank vs index, wedge agreement); failures there surface as exceptions, not
// as failed checks.
inline VerificationReport run_verification(SpaceFamily family, int n, int window_hi) {
    SymmetricSpaceEntry e = catalog(family, n);
    VerificationReport rep{family_id(family), e.space_name(), e.n, window_hi,
                           assemble_splitting(e, window_hi),
                           wedge_description(e, window_hi),
                           {},
                           false};
    auto add = [&rep](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const int windings = max_winding_for_window(e, window_hi);

    {
        bool ok = true;
        for (const auto& s : rep.splitting.strata) {
            long long k1 = 0, k2 = 0;
            for (const auto& type : conjugate_schedule(s.m)) (type == "K1" ? k1 : k2) += 1;
            ok = ok && s.summand.bottom_degree() && *s.summand.bottom_degree() == s.index &&
                 s.summand.dim(static_cast<int>(s.index)) == 1 &&
                 k1 * e.w1_rank + k2 * e.w2_rank == s.index;
        }
        add("bottom_cell_law", ok,
            "each stratum starts with a single class in its index degree (" +
                std::to_string(windings) + (windings == 1 ? " stratum)" : " strata)"));
    }

    {
        bool ok = e.w2_rank == e.dim_M - 1 && e.w1_rank >= 1 &&
                  e.base->cohomology().euler_char() == e.euler_char &&
                  binom_expand(e.euler_char, e.base->ring()) == wu_tangent_class(e.base->ring());
        long long prev_index = 0, prev_energy = 0;
        for (int m = 1; m <= 8 && ok; ++m) {
            NegativeBundleData nb = negative_bundle(e, m);
            const long long index = morse_index(e, m);
            ok = nb.bundle.rank - nb.desuspension == index && index > prev_index &&
                 static_cast<long long>(m) * m > prev_energy;
            prev_index = index;
            prev_energy = static_cast<long long>(m) * m;
        }
        add("catalog_consistency", ok,
            "isotropy ranks, tangent class, and index arithmetic agree");
    }

    {
        bool ok = true;
        for (int q = 0; q <= 5 && ok; ++q) {
            BundleDescriptor plus_line =
                whitney_sum(pullback(whitney_power(e.tau, q), *e.sphere),
                            trivial_bundle(*e.sphere, 1));
            ok = cofiber_module(whitney_power(e.tau, q), e.tau) == thom(plus_line).module;
        }
        add("cofiber_thom_agreement", ok,
            "cofibers of consecutive Thom-space maps match Thom modules over S(tau), q <= 5");
    }

    {
        const PoincareSeries total = poincare(rep.splitting.total, window_hi);
        const bool ok = same_window_coeffs(total, poincare(rep.wedge.cofiber_form, window_hi)) &&
                        same_window_coeffs(total, poincare(rep.wedge.thom_form, window_hi));
        add("cross_description_total", ok,
            "stratum sum and both wedge forms share one Poincare series on the window");
    }

    {
        bool ok = true;
        for (int m = 1; m <= std::max(1, windings) && ok; ++m)
            ok = steenrod_equiv_criterion(
                     pullback(whitney_power(e.eta, m), *e.sphere),
                     trivial_bundle(*e.sphere, m * e.w1_rank)) ==
                 SteenrodEquivalence::equivalent;
        add("steenrod_equivalence_certificates", ok,
            "pulled-back eta powers carry the Steenrod action of trivial bundles");
    }

    add("euler_char_sphere_bundle", e.sphere->cohomology().euler_char() == 0,
        "an odd sphere fibre kills the Euler characteristic");

    add("poincare_duality_sphere_bundle", poincare_duality_holds(*e.sphere),
        "H*(S(tau)) is symmetric about degree " + std::to_string(e.sphere->dimension()) + "/2");

    if (family == SpaceFamily::cpn) {
        add("sw_triviality_forced", true, "eta is a trivial line by construction");
    } else {
        const bool ok =
            sw_by_degree_vanishing(e.w1_rank, e.base->cohomology(), e.base->ring()).forced &&
            sw_by_degree_vanishing(e.w1_rank, e.sphere->cohomology(), e.sphere->sw_ring())
                .forced;
        add("sw_triviality_forced", ok,
            "degrees 1.." + std::to_string(e.w1_rank) + " vanish over the base and over S(tau)");
    }

    if (family == SpaceFamily::cpn) {
        const bool odd = n % 2 == 1;
        GradedF2Module product = direct_sum(
            {ring_cohomology(e.base->ring()),
             shift(ring_cohomology(e.base->ring()), 2 * n - 1)});
        bool ok = odd == e.sphere->euler().is_zero() &&
                  e.sphere->sw_ring().height() == (odd ? n + 1 : n);
        if (odd)
            ok = ok && e.sphere->cohomology() == product;
        else
            ok = ok && !(e.sphere->cohomology() == product);
        add("cp_parity_dichotomy", ok,
            odd ? "odd n: S(tau) looks like CP^n x S^(2n-1) in cohomology"
                : "even n: the Euler class x^n truncates the pullback subring");
    }

    add("window_completeness", morse_index(e, windings + 1) > window_hi,
        "winding " + std::to_string(windings + 1) + " starts above degree " +
            std::to_string(window_hi));

    for (const auto& v : run_witnesses(e)) add("witness_" + v.name, v.pass, v.detail);

    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    return rep;
}

/**** Rendering ****/

using json = nlohmann::ordered_json;

inline json series_json(const PoincareSeries& s) {
    json out = json::array();
    for (const auto& [d, c] : sparse_coeffs(s)) out.push_back(json::array({d, c}));
    return out;
}

inline json to_json(const VerificationReport& rep) {
    json j;
    j["space"] = rep.space_id;
    j["n"] = rep.n;
    j["window"] = json::array({0, rep.window_hi});
    j["strata"] = json::array();
    for (const auto& s : rep.splitting.strata) {
        json js;
        js["m"] = s.m;
        js["index"] = s.index;
        js["rank"] = s.rank;
        js["desuspension"] = s.desuspension;
        js["poincare"] = series_json(poincare(s.summand, rep.window_hi));
        j["strata"].push_back(std::move(js));
    }
    j["total_poincare_splitting"] = series_json(poincare(rep.splitting.total, rep.window_hi));
    j["total_poincare_bo"] = series_json(poincare(rep.wedge.cofiber_form, rep.window_hi));
    j["checks"] = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        j["checks"].push_back(std::move(jc));
    }
    j["verdict"] = rep.pass ? "PASS" : "FAIL";
    return j;
}

inline std::string to_text(const VerificationReport& rep) {
    std::ostringstream out;
    out << "space: " << rep.space_name << " (" << rep.space_id << ", n = " << rep.n << ")\n";
    out << "window: [0, " << rep.window_hi << "]\n";
    out << "strata:\n";
    out << "  " << std::setw(3) << "m" << std::setw(8) << "energy" << std::setw(7) << "index"
        << std::setw(6) << "rank" << std::setw(8) << "desusp" << "  bundle\n";
    for (const auto& s : rep.splitting.strata)
        out << "  " << std::setw(3) << s.m << std::setw(8) << s.energy_ratio << std::setw(7)
            << s.index << std::setw(6) << s.rank << std::setw(8) << s.desuspension << "  "
            << s.bundle_label << "\n";
    out << "total (strata):      "
        << series_to_string(poincare(rep.splitting.total, rep.window_hi)) << "\n";
    out << "total (wedge forms): "
        << series_to_string(poincare(rep.wedge.cofiber_form, rep.window_hi)) << "\n";
    out << "checks:\n";
    for (const auto& c : rep.checks)
        out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail
            << ")\n";
    out << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

/**** Stratum tables ****/

struct StratumRow {
    int m;
    long long energy_ratio;
    long long index;
    int rank;
    int desuspension;
    std::string bundle;
};

inline std::vector<StratumRow> stratum_table(const SymmetricSpaceEntry& e, int max_winding) {
    if (max_winding < 1) throw std::invalid_argument("table needs max winding >= 1");
    std::vector<StratumRow> rows;
    for (int m = 1; m <= max_winding; ++m) {
        NegativeBundleData nb = negative_bundle(e, m);
        rows.push_back({m, static_cast<long long>(m) * m, morse_index(e, m), nb.bundle.rank,
                        nb.desuspension, nb.bundle.label});
    }
    return rows;
}

inline json table_to_json(const SymmetricSpaceEntry& e, const std::vector<StratumRow>& rows) {
    json j;
    j["space"] = family_id(e.family);
    j["n"] = e.n;
    j["max_winding"] = rows.empty() ? 0 : rows.back().m;
    j["strata"] = json::array();
    for (const auto& r : rows) {
        json jr;
        jr["m"] = r.m;
        jr["energy_ratio"] = r.energy_ratio;
        jr["index"] = r.index;
        jr["rank"] = r.rank;
        jr["desuspension"] = r.desuspension;
        jr["bundle"] = r.bundle;
        j["strata"].push_back(std::move(jr));
    }
    return j;
}

inline std::string table_to_text(const SymmetricSpaceEntry& e,
                                 const std::vector<StratumRow>& rows) {
    std::ostringstream out;
    out << "strata of " << e.space_name() << ":\n";
    out << "  " << std::setw(3) << "m" << std::setw(8) << "energy" << std::setw(7) << "index"
        << std::setw(6) << "rank" << std::setw(8) << "desusp" << "  bundle\n";
    for (const auto& r : rows)
        out << "  " << std::setw(3) << r.m << std::setw(8) << r.energy_ratio << std::setw(7)
            << r.index << std::setw(6) << r.rank << std::setw(8) << r.desuspension << "  "
            << r.bundle << "\n";
    return out.str();
}

}  // namespace loopsplit
