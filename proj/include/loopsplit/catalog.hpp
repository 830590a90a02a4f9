#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "sphere_bundle.hpp"

namespace loopsplit {

/**** Rank-one symmetric space catalog ****/

enum class SpaceFamily { cpn, hpn, op2 };

inline const char* family_id(SpaceFamily f) {
    switch (f) {
        case SpaceFamily::cpn: return "cpn";
        case SpaceFamily::hpn: return "hpn";
        default: return "op2";
    }
}

// Closed geodesics on these spaces come with isotropy groups H < K1 < K2: H
// fixes the whole geodesic, K1 its half-period conjugate points, K2 the unit
// tangent sphere. The quotient dimensions drive every index computation.
struct SymmetricSpaceEntry {
    SpaceFamily family;
    int n;
    int r;  // cohomology generator degree
    int h;  // truncation height
    int dim_M;
    int euler_char;
    long long dim_H, dim_K1, dim_K2;
    int w1_rank, w2_rank;
    std::unique_ptr<BaseSpace> base;
    BundleDescriptor tau;  // tangent bundle
    BundleDescriptor eta;  // dim K1/H bundle (trivial line for cpn)
    std::unique_ptr<SphereBundleSpace> sphere;  // unit tangent sphere bundle S(tau)

    int desuspension(int m) const { return family == SpaceFamily::cpn ? 0 : m - 1; }
    int eta_copies(int m) const { return family == SpaceFamily::cpn ? 1 : m; }
    const std::string& space_name() const { return base->name(); }
};

inline SymmetricSpaceEntry catalog(SpaceFamily family, int n) {
    if (family == SpaceFamily::op2) {
        if (n != 2) throw std::invalid_argument("the octonionic plane has fixed n = 2");
    } else if (n < 2) {
        throw std::invalid_argument("catalog requires n >= 2");
    }

    int r = 0, h = 0, dim_M = 0, chi = 0;
    long long dim_H = 0, dim_K1 = 0, dim_K2 = 0;
    std::string name, symbol;
    switch (family) {
        case SpaceFamily::cpn:
            r = 2;
            h = n + 1;
            dim_M = 2 * n;
            chi = n + 1;
            // H = U(n-1), K1 = U(n-1) x U(1), K2 = U(n)
            dim_H = static_cast<long long>(n - 1) * (n - 1);
            dim_K1 = dim_H + 1;
            dim_K2 = static_cast<long long>(n) * n;
            name = "CP^" + std::to_string(n);
            symbol = "x";
            break;
        case SpaceFamily::hpn:
            r = 4;
            h = n + 1;
            dim_M = 4 * n;
            chi = n + 1;
            // H = Sp(n-1) x Sp(1), K1 adds one Sp(1), K2 = Sp(n) x Sp(1)
            dim_H = static_cast<long long>(n - 1) * (2 * n - 1) + 3;
            dim_K1 = dim_H + 3;
            dim_K2 = static_cast<long long>(n) * (2 * n + 1) + 3;
            name = "HP^" + std::to_string(n);
            symbol = "u";
            break;
        case SpaceFamily::op2:
            r = 8;
            h = 3;
            dim_M = 16;
            chi = 3;
            dim_H = 21;   // Spin(7), embedded through Spin(8)
            dim_K1 = 28;  // Spin(8)
            dim_K2 = 36;  // Spin(9)
            name = "OP^2";
            symbol = "z";
            break;
    }

    const int w1 = static_cast<int>(dim_K1 - dim_H);
    const int w2 = static_cast<int>(dim_K2 - dim_H);
    if (w2 != dim_M - 1)
        throw std::runtime_error("isotropy dimensions disagree with the tangent sphere");
    if (w1 < 1)
        throw std::runtime_error("lowest stratum must have positive index");

    auto base = std::make_unique<BaseSpace>(name, TruncPolyRing(r, h, symbol));

    RingElement w_tau = binom_expand(chi, base->ring());
    if (w_tau.coeff(h - 1) != (chi % 2 == 1))
        throw std::runtime_error("tangent class fails the Euler-characteristic parity cross-check");
    if (!(w_tau == wu_tangent_class(base->ring())))
        throw std::runtime_error("tangent class fails the duality cross-check");
    BundleDescriptor tau = make_bundle(*base, dim_M, w_tau, "tau");

    BundleDescriptor eta = [&] {
        if (family == SpaceFamily::cpn) return trivial_bundle(*base, 1);
        auto det = sw_by_degree_vanishing(w1, base->cohomology(), base->ring());
        if (!det.forced)
            throw std::runtime_error("eta classes are not forced to vanish by degree");
        return make_bundle(*base, w1, det.total_sw, "eta");
    }();

    auto sphere = gysin_sphere(tau);

    return SymmetricSpaceEntry{family,  n,       r,
                               h,       dim_M,   chi,
                               dim_H,   dim_K1,  dim_K2,
                               w1,      w2,      std::move(base),
                               std::move(tau),   std::move(eta),
                               std::move(sphere)};
}

}  // namespace loopsplit
