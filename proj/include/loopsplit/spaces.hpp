#pragma once

#include <string>
#include <utility>

#include "graded_module.hpp"
#include "trunc_poly.hpp"

namespace loopsplit {

/**** Spaces carrying characteristic classes ****/

// A space whose mod-2 cohomology can hold Stiefel-Whitney classes. In both
// supported cases (a closed base, or a sphere bundle where only the pullback
// subring is ever multiplied) the class algebra is a truncated polynomial
// ring, so one interface serves both.
class CohomologySpace {
public:
    virtual ~CohomologySpace() = default;
    CohomologySpace() = default;
    CohomologySpace(const CohomologySpace&) = delete;
    CohomologySpace& operator=(const CohomologySpace&) = delete;

    virtual const TruncPolyRing& sw_ring() const = 0;
    virtual const GradedF2Module& cohomology() const = 0;
    virtual int dimension() const = 0;
    virtual const std::string& name() const = 0;
};

inline GradedF2Module ring_cohomology(const TruncPolyRing& ring) {
    GradedF2Module m;
    for (int j = 0; j < ring.height(); ++j)
        m.add_class(j * ring.generator_degree(), monomial_label(ring, j));
    return m;
}

class BaseSpace final : public CohomologySpace {
public:
    BaseSpace(std::string name, TruncPolyRing ring)
        : name_(std::move(name)),
          ring_(std::move(ring)),
          coh_(ring_cohomology(ring_)),
          dimension_(ring_.generator_degree() * (ring_.height() - 1)) {}

    const TruncPolyRing& ring() const { return ring_; }
    const TruncPolyRing& sw_ring() const override { return ring_; }
    const GradedF2Module& cohomology() const override { return coh_; }
    int dimension() const override { return dimension_; }
    const std::string& name() const override { return name_; }

private:
    std::string name_;
    TruncPolyRing ring_;
    GradedF2Module coh_;
    int dimension_;
};

inline bool poincare_duality_holds(const CohomologySpace& s) {
    const auto& coh = s.cohomology();
    for (const auto& [deg, k] : coh.dims())
        if (coh.dim(s.dimension() - deg) != k) return false;
    return true;
}

}  // namespace loopsplit
