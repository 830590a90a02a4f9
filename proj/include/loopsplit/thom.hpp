#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sphere_bundle.hpp"

namespace loopsplit {

/**** Thom modules ****/

// Reduced cohomology of the Thom space: base cohomology shifted up by the
// rank, generated over the base by the Thom class u, with Sq^i(u) = w_i u.
struct ThomModule {
    BundleDescriptor bundle;
    GradedF2Module module;
    std::vector<std::pair<int, RingElement>> sq_on_u;  // (i, w_i) for every nonzero w_i
};

namespace detail {
inline GradedF2Module relabel_thom(const GradedF2Module& m) {
    GradedF2Module out;
    for (const auto& [d, k] : m.dims()) {
        if (m.degree_labeled(d))
            for (const auto& l : m.labels(d))
                out.add_class(d, l == "1" ? "u" : l + " u");
        else
            out.add_dim(d, k);
    }
    return out;
}
}  // namespace detail

inline ThomModule thom(const BundleDescriptor& b) {
    ThomModule t{b, detail::relabel_thom(shift(b.space->cohomology(), b.rank)), {}};
    const TruncPolyRing& ring = b.total_sw.ring();
    for (int j = 0; j < ring.height(); ++j)
        if (b.total_sw.coeff(j))
            t.sq_on_u.emplace_back(j * ring.generator_degree(), RingElement::monomial(ring, j));
    return t;
}

// Cohomology of the cofiber of Th(xi1) -> Th(xi1 + xi2), the Thom-space map of
// the first-summand inclusion. That map sends the larger Thom class to
// e(xi2) times the smaller one, so the long exact sequence collapses to the
// kernel and cokernel of multiplication by e(xi2) on the base: the cokernel
// enters one degree above Th(xi1), the kernel at the full rank of the sum.
inline GradedF2Module cofiber_module(const BundleDescriptor& xi1, const BundleDescriptor& xi2) {
    if (xi1.space != xi2.space) throw std::invalid_argument("cofiber needs a common base");
    const auto* base = dynamic_cast<const BaseSpace*>(xi1.space);
    if (!base) throw std::invalid_argument("cofiber module needs a closed base");
    auto kc = mult_kernel_cokernel(base->ring(), euler_class(xi2));
    return direct_sum({shift(kc.cokernel, xi1.rank + 1),
                       shift(kc.kernel, xi1.rank + xi2.rank)});
}

}  // namespace loopsplit
