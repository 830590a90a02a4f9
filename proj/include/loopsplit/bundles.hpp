#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spaces.hpp"

namespace loopsplit {

/**** Bundles and Stiefel-Whitney calculus ****/

struct BundleDescriptor {
    const CohomologySpace* space;
    int rank;
    RingElement total_sw;  // in space->sw_ring(); constant term 1
    std::string label;
};

inline BundleDescriptor make_bundle(const CohomologySpace& space, int rank,
                                    RingElement total_sw, std::string label) {
    if (rank < 0) throw std::invalid_argument("bundle rank must be >= 0");
    if (!(total_sw.ring() == space.sw_ring()))
        throw std::invalid_argument("total class lives in the wrong ring");
    if (!total_sw.coeff(0))
        throw std::invalid_argument("total class must have constant term 1");
    const int r = space.sw_ring().generator_degree();
    for (int j = 1; j < space.sw_ring().height(); ++j)
        if (total_sw.coeff(j) && j * r > rank)
            throw std::invalid_argument("class in degree " + std::to_string(j * r) +
                                        " exceeds bundle rank " + std::to_string(rank));
    return BundleDescriptor{&space, rank, total_sw, std::move(label)};
}

inline BundleDescriptor trivial_bundle(const CohomologySpace& space, int rank) {
    return make_bundle(space, rank, RingElement::one(space.sw_ring()),
                       rank == 1 ? "eps" : "eps^" + std::to_string(rank));
}

inline BundleDescriptor whitney_sum(const BundleDescriptor& a, const BundleDescriptor& b) {
    if (a.space != b.space)
        throw std::invalid_argument("Whitney sum of bundles over different spaces");
    return make_bundle(*a.space, a.rank + b.rank, a.total_sw * b.total_sw,
                       a.label + " + " + b.label);
}

inline BundleDescriptor whitney_power(const BundleDescriptor& b, int copies) {
    if (copies < 0) throw std::invalid_argument("negative copy count");
    std::string label = copies == 1 ? b.label : std::to_string(copies) + "(" + b.label + ")";
    return make_bundle(*b.space, b.rank * copies, b.total_sw.pow(copies), std::move(label));
}

// Mod-2 Euler class: the top Stiefel-Whitney class w_rank.
inline RingElement euler_class(const BundleDescriptor& b) {
    return b.total_sw.homogeneous_part(b.rank);
}

struct SwDetermination {
    bool forced;           // all classes in degrees 1..rank vanish for degree reasons
    RingElement total_sw;  // = 1 when forced
    std::vector<int> unforced_degrees;
};

inline SwDetermination sw_by_degree_vanishing(int rank, const GradedF2Module& base_cohomology,
                                              const TruncPolyRing& ring) {
    SwDetermination det{true, RingElement::one(ring), {}};
    for (int j = 1; j <= rank; ++j)
        if (base_cohomology.dim(j) > 0) {
            det.forced = false;
            det.unforced_degrees.push_back(j);
        }
    return det;
}

enum class SteenrodEquivalence { equivalent, undetermined };

// Equal rank and equal total class give Thom modules with the same Steenrod
// action (Sq^i of the generator is w_i times it). Sufficient, not necessary.
inline SteenrodEquivalence steenrod_equiv_criterion(const BundleDescriptor& a,
                                                    const BundleDescriptor& b) {
    if (a.space != b.space) throw std::invalid_argument("criterion needs a common base");
    return (a.rank == b.rank && a.total_sw == b.total_sw)
               ? SteenrodEquivalence::equivalent
               : SteenrodEquivalence::undetermined;
}

// Tangent class implied by duality for a closed manifold with this cohomology.
// The total square of the generator is x + x^2: intermediate squares land in
// degrees where the ring vanishes, the top one is the squaring axiom. The dual
// class v then has v_j = C(h-1-j, j) from Sq^{jr}(x^{h-1-j}) = C(h-1-j, j) x^{h-1},
// and the tangent class is its total square.
inline RingElement wu_tangent_class(const TruncPolyRing& ring) {
    RingElement w = RingElement::zero(ring);
    const RingElement one_plus_x = RingElement::one(ring) + RingElement::monomial(ring, 1);
    for (int j = 0; j < ring.height(); ++j)
        if (odd_binom(ring.height() - 1 - j, j))
            w = w + RingElement::monomial(ring, j) * one_plus_x.pow(j);
    return w;
}

}  // namespace loopsplit
