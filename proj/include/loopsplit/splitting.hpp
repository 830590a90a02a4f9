#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "parallel.hpp"
#include "thom.hpp"

namespace loopsplit {

/**** Critical strata of the energy function on the free loop space ****/

// A geodesic winding m times passes 2m - 1 interior conjugate points,
// alternating between the half-period isotropy type (K1) and the full-period
// one (K2), starting and ending with K1.
inline std::vector<std::string> conjugate_schedule(int m) {
    if (m < 1) throw std::invalid_argument("winding number must be >= 1");
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(2 * m - 1));
    for (int i = 1; i <= 2 * m - 1; ++i) out.emplace_back(i % 2 == 1 ? "K1" : "K2");
    return out;
}

// Each K1 point contributes w1_rank to the index, each K2 point w2_rank.
inline long long morse_index(const SymmetricSpaceEntry& e, int m) {
    if (m < 1) throw std::invalid_argument("winding number must be >= 1");
    return static_cast<long long>(m) * e.w1_rank +
           static_cast<long long>(m - 1) * e.w2_rank;
}

struct NegativeBundleData {
    BundleDescriptor bundle;  // over S(tau)
    int desuspension;
};

inline std::string stratum_bundle_label(const SymmetricSpaceEntry& e, int m) {
    if (e.family == SpaceFamily::cpn)
        return m == 1 ? "eps" : std::to_string(m - 1) + " p*tau + eps";
    if (m == 1) return "p*eta";
    return "p*(" + std::to_string(m - 1) + " tau + " + std::to_string(m) + " eta)";
}

// The negative bundle of the winding-m stratum, as a bundle over S(tau)
// together with the number of trivial summands split off before forming the
// Thom space.
inline NegativeBundleData negative_bundle(const SymmetricSpaceEntry& e, int m) {
    if (m < 1) throw std::invalid_argument("winding number must be >= 1");
    const SphereBundleSpace& S = *e.sphere;
    BundleDescriptor b =
        whitney_sum(pullback(whitney_power(e.tau, m - 1), S),
                    pullback(whitney_power(e.eta, e.eta_copies(m)), S));
    b.label = stratum_bundle_label(e, m);
    const int desusp = e.desuspension(m);
    if (b.rank - desusp != morse_index(e, m))
        throw std::runtime_error("negative bundle rank disagrees with the index");
    return {std::move(b), desusp};
}

struct CriticalStratum {
    int m;
    long long energy_ratio;  // energy over that of the shortest closed geodesic
    long long index;
    int rank;
    int desuspension;
    std::string bundle_label;
    GradedF2Module summand;
};

inline CriticalStratum make_stratum(const SymmetricSpaceEntry& e, int m) {
    NegativeBundleData nb = negative_bundle(e, m);
    GradedF2Module summand = shift(thom(nb.bundle).module, -nb.desuspension);
    const long long index = morse_index(e, m);
    auto bottom = summand.bottom_degree();
    if (!bottom || *bottom != index)
        throw std::runtime_error("stratum summand must start in the index degree");
    return CriticalStratum{m,
                           static_cast<long long>(m) * m,
                           index,
                           nb.bundle.rank,
                           nb.desuspension,
                           nb.bundle.label,
                           std::move(summand)};
}

// Largest m whose stratum reaches into degrees <= window_hi.
inline int max_winding_for_window(const SymmetricSpaceEntry& e, int window_hi) {
    int m = 0;
    while (morse_index(e, m + 1) <= window_hi) ++m;
    return m;
}

struct SplittingDescription {
    std::string space;
    int n;
    int window_hi;
    GradedF2Module constant_summand;  // the constant loops contribute H*(M)
    std::vector<CriticalStratum> strata;
    GradedF2Module total;
};

// Sum of the constant summand and every stratum whose index lies in [0, D].
// Callers may request extra strata through max_winding but never fewer than
// the window demands.
inline SplittingDescription assemble_splitting(const SymmetricSpaceEntry& e, int window_hi,
                                               std::optional<int> max_winding = std::nullopt) {
    if (window_hi < 0) throw std::invalid_argument("window must be [0, D] with D >= 0");
    int windings = max_winding_for_window(e, window_hi);
    if (max_winding) {
        if (*max_winding < windings)
            throw std::invalid_argument("window [0, " + std::to_string(window_hi) +
                                        "] needs strata up to winding " +
                                        std::to_string(windings));
        windings = *max_winding;
    }
    std::vector<CriticalStratum> strata =
        parallel_map<CriticalStratum>(windings, [&](int i) { return make_stratum(e, i + 1); });
    std::vector<GradedF2Module> parts{e.base->cohomology()};
    for (const auto& s : strata) parts.push_back(s.summand);
    return SplittingDescription{e.space_name(), e.n,    window_hi,
                                e.base->cohomology(),   std::move(strata),
                                direct_sum(parts)};
}

/**** Two wedge presentations of the same total ****/

struct WedgeDescription {
    GradedF2Module cofiber_form;
    GradedF2Module thom_form;
};

// The same splitting total assembled two other ways: from cofibers of
// Thom-space maps Th(q tau) -> Th((q+1) tau), suitably shifted, and from Thom
// modules of q tau pulled back to S(tau) plus trivial summands. Both must
// agree with each other (checked here) and with the stratum sum (checked by
// callers through Poincare series).
inline WedgeDescription wedge_description(const SymmetricSpaceEntry& e, int window_hi) {
    if (window_hi < 0) throw std::invalid_argument("window must be [0, D] with D >= 0");
    const int terms = max_winding_for_window(e, window_hi);
    std::vector<GradedF2Module> cof{e.base->cohomology()};
    std::vector<GradedF2Module> th{e.base->cohomology()};
    for (int q = 0; q < terms; ++q) {
        cof.push_back(shift(cofiber_module(whitney_power(e.tau, q), e.tau),
                            (e.r - 2) * (q + 1)));
        const int m = q + 1;
        BundleDescriptor b =
            whitney_sum(pullback(whitney_power(e.tau, m - 1), *e.sphere),
                        trivial_bundle(*e.sphere, m * (e.r - 1)));
        th.push_back(shift(thom(b).module, -(m - 1)));
    }
    WedgeDescription out{direct_sum(cof), direct_sum(th)};
    if (!(out.cofiber_form == out.thom_form))
        throw std::runtime_error("wedge descriptions disagree");
    return out;
}

}  // namespace loopsplit
