#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "bundles.hpp"

namespace loopsplit {

/**** Sphere bundles ****/

// Kernel and cokernel of multiplication by a homogeneous class e on the ring
// cohomology. The kernel is graded by source degree, the cokernel by target
// degree. e must be zero or a single monomial.
struct MultKerCoker {
    GradedF2Module kernel;
    GradedF2Module cokernel;
};

inline MultKerCoker mult_kernel_cokernel(const TruncPolyRing& ring, const RingElement& e) {
    if (!(e.ring() == ring)) throw std::invalid_argument("class from the wrong ring");
    MultKerCoker out;
    if (e.is_zero()) {
        out.kernel = ring_cohomology(ring);
        out.cokernel = ring_cohomology(ring);
        return out;
    }
    const int r = ring.generator_degree(), h = ring.height();
    int j0 = -1;
    for (int j = 0; j < h; ++j)
        if (e.coeff(j)) {
            if (j0 >= 0) throw std::invalid_argument("multiplier must be homogeneous");
            j0 = j;
        }
    // x^j * x^{j0}: hits every monomial of exponent >= j0, dies once j + j0 >= h
    for (int j = 0; j < j0; ++j) out.cokernel.add_class(j * r, monomial_label(ring, j));
    for (int j = h - j0; j < h; ++j) out.kernel.add_class(j * r, monomial_label(ring, j));
    return out;
}

// Unit sphere bundle S of a bundle over a closed base. Cohomology splits as
// the image of p* (the cokernel of multiplication by the Euler class) plus a
// copy of the kernel shifted by rank - 1. Stiefel-Whitney classes of bundles
// pulled back to S live in the pullback subring F2[x]/(x^{j0}).
class SphereBundleSpace final : public CohomologySpace {
public:
    SphereBundleSpace(const BaseSpace& base, BundleDescriptor source)
        : base_(&base),
          source_(std::move(source)),
          euler_(euler_class(source_)),
          pullback_ring_(pullback_ring_of(base.ring(), euler_)),
          dimension_(base.dimension() + source_.rank - 1),
          name_("S(" + source_.label + " over " + base.name() + ")") {
        auto kc = mult_kernel_cokernel(base.ring(), euler_);
        pullback_part_ = kc.cokernel;
        shifted_part_ = relabel_shifted(shift(kc.kernel, source_.rank - 1));
        coh_ = direct_sum({pullback_part_, shifted_part_});
    }

    const BaseSpace& base() const { return *base_; }
    const BundleDescriptor& source() const { return source_; }
    const RingElement& euler() const { return euler_; }
    const GradedF2Module& pullback_part() const { return pullback_part_; }
    const GradedF2Module& shifted_part() const { return shifted_part_; }

    const TruncPolyRing& sw_ring() const override { return pullback_ring_; }
    const GradedF2Module& cohomology() const override { return coh_; }
    int dimension() const override { return dimension_; }
    const std::string& name() const override { return name_; }

private:
    const BaseSpace* base_;
    BundleDescriptor source_;
    RingElement euler_;
    TruncPolyRing pullback_ring_;
    GradedF2Module pullback_part_, shifted_part_, coh_;
    int dimension_;
    std::string name_;

    static TruncPolyRing pullback_ring_of(const TruncPolyRing& ring, const RingElement& e) {
        if (e.is_zero()) return ring;
        int j0 = 0;
        for (int j = 0; j < ring.height(); ++j)
            if (e.coeff(j)) j0 = j;
        if (j0 < 1) throw std::invalid_argument("unit Euler class has no sphere bundle");
        return TruncPolyRing(ring.generator_degree(), j0, ring.symbol());
    }

    static GradedF2Module relabel_shifted(const GradedF2Module& m) {
        GradedF2Module out;
        for (const auto& [d, k] : m.dims()) {
            if (m.degree_labeled(d))
                for (const auto& l : m.labels(d)) out.add_class(d, "s(" + l + ")");
            else
                out.add_dim(d, k);
        }
        return out;
    }
};

inline std::unique_ptr<SphereBundleSpace> gysin_sphere(const BundleDescriptor& source) {
    const auto* base = dynamic_cast<const BaseSpace*>(source.space);
    if (!base) throw std::invalid_argument("sphere-bundle construction needs a closed base");
    if (source.rank < 1) throw std::invalid_argument("sphere bundle needs rank >= 1");
    return std::make_unique<SphereBundleSpace>(*base, source);
}

// p* on total classes: truncation to the pullback subring kills exactly the
// multiples of the Euler class.
inline BundleDescriptor pullback(const BundleDescriptor& b, const SphereBundleSpace& S) {
    if (b.space != &S.base()) throw std::invalid_argument("pullback along the wrong projection");
    RingElement w(S.sw_ring(), b.total_sw.bits());
    return make_bundle(S, b.rank, w, "p*(" + b.label + ")");
}

}  // namespace loopsplit
