#include <doctest.h>

#include "loopsplit/sphere_bundle.hpp"

using namespace loopsplit;

namespace {

struct Fixture {
    BaseSpace base;
    BundleDescriptor tau;
    Fixture(const char* name, int r, int h, const char* sym, long long chi)
        : base(name, TruncPolyRing(r, h, sym)),
          tau(make_bundle(base, r * (h - 1), binom_expand(chi, base.ring()), "tau")) {}
};

}  // namespace

TEST_CASE("kernel and cokernel of multiplication by a monomial") {
    TruncPolyRing r(2, 3);
    MultKerCoker kc = mult_kernel_cokernel(r, RingElement::monomial(r, 2));
    CHECK(kc.cokernel == GradedF2Module::from_dims({{0, 1}, {2, 1}}));
    CHECK(kc.kernel == GradedF2Module::from_dims({{2, 1}, {4, 1}}));
    CHECK(kc.cokernel.labels(2) == std::vector<std::string>{"x"});
    CHECK(kc.kernel.labels(4) == std::vector<std::string>{"x^2"});

    MultKerCoker by_x = mult_kernel_cokernel(r, RingElement::monomial(r, 1));
    CHECK(by_x.cokernel == GradedF2Module::from_dims({{0, 1}}));
    CHECK(by_x.kernel == GradedF2Module::from_dims({{4, 1}}));

    MultKerCoker by_zero = mult_kernel_cokernel(r, RingElement::zero(r));
    CHECK(by_zero.cokernel == ring_cohomology(r));
    CHECK(by_zero.kernel == ring_cohomology(r));

    RingElement mixed = RingElement::one(r) + RingElement::monomial(r, 1);
    CHECK_THROWS_AS(mult_kernel_cokernel(r, mixed), std::invalid_argument);
    TruncPolyRing other(2, 4);
    CHECK_THROWS_AS(mult_kernel_cokernel(other, RingElement::monomial(r, 1)),
                    std::invalid_argument);
}

TEST_CASE("sphere bundle of the tangent bundle over CP^2") {
    Fixture f("CP^2", 2, 3, "x", 3);
    auto S = gysin_sphere(f.tau);
    CHECK(S->name() == "S(tau over CP^2)");
    CHECK(S->dimension() == 7);
    CHECK(S->euler() == RingElement::monomial(f.base.ring(), 2));
    CHECK(S->cohomology() ==
          GradedF2Module::from_dims({{0, 1}, {2, 1}, {5, 1}, {7, 1}}));
    CHECK(S->pullback_part() == GradedF2Module::from_dims({{0, 1}, {2, 1}}));
    CHECK(S->shifted_part() == GradedF2Module::from_dims({{5, 1}, {7, 1}}));
    CHECK(S->shifted_part().labels(5) == std::vector<std::string>{"s(x)"});
    CHECK(S->sw_ring().height() == 2);
    CHECK(S->sw_ring().generator_degree() == 2);
}

TEST_CASE("zero Euler class gives the product pattern") {
    Fixture f("CP^3", 2, 4, "x", 4);
    CHECK(euler_class(f.tau).is_zero());
    auto S = gysin_sphere(f.tau);
    CHECK(S->cohomology() ==
          direct_sum({ring_cohomology(f.base.ring()),
                      shift(ring_cohomology(f.base.ring()), 5)}));
    CHECK(S->cohomology() == GradedF2Module::from_dims({{0, 1}, {2, 1}, {4, 1}, {5, 1},
                                                        {6, 1}, {7, 1}, {9, 1}, {11, 1}}));
    CHECK(S->sw_ring().height() == 4);
}

TEST_CASE("sphere bundles over the quaternionic and octonionic planes") {
    Fixture hp2("HP^2", 4, 3, "u", 3);
    auto s_hp2 = gysin_sphere(hp2.tau);
    CHECK(s_hp2->dimension() == 15);
    CHECK(s_hp2->cohomology() ==
          GradedF2Module::from_dims({{0, 1}, {4, 1}, {11, 1}, {15, 1}}));

    Fixture op2("OP^2", 8, 3, "x", 3);
    auto s_op2 = gysin_sphere(op2.tau);
    CHECK(s_op2->dimension() == 31);
    CHECK(s_op2->cohomology() ==
          GradedF2Module::from_dims({{0, 1}, {8, 1}, {23, 1}, {31, 1}}));
}

TEST_CASE("pullback truncates the total class at the Euler exponent") {
    Fixture f("CP^2", 2, 3, "x", 3);
    auto S = gysin_sphere(f.tau);
    BundleDescriptor p_tau = pullback(f.tau, *S);
    CHECK(p_tau.rank == 4);
    CHECK(p_tau.label == "p*(tau)");
    CHECK(p_tau.total_sw == RingElement(S->sw_ring(), 0b11));  // 1 + x, x^2 killed
    CHECK(pullback(trivial_bundle(f.base, 3), *S).total_sw ==
          RingElement::one(S->sw_ring()));

    Fixture other("CP^2 copy", 2, 3, "x", 3);
    CHECK_THROWS_AS(pullback(other.tau, *S), std::invalid_argument);
}

TEST_CASE("only closed bases admit the construction") {
    Fixture f("CP^2", 2, 3, "x", 3);
    auto S = gysin_sphere(f.tau);
    CHECK_THROWS_AS(gysin_sphere(trivial_bundle(f.base, 0)), std::invalid_argument);
    BundleDescriptor over_sphere = pullback(f.tau, *S);
    CHECK_THROWS_AS(gysin_sphere(over_sphere), std::invalid_argument);
}

TEST_CASE("gysin exactness accounting degree by degree") {
    for (auto [r, h, chi] : {std::tuple<int, int, long long>{2, 3, 3},
                             {2, 4, 4}, {2, 5, 5}, {2, 6, 6},
                             {4, 3, 3}, {4, 4, 4}, {4, 5, 5}, {8, 3, 3}}) {
        BaseSpace base("B", TruncPolyRing(r, h));
        BundleDescriptor tau =
            make_bundle(base, r * (h - 1), binom_expand(chi, base.ring()), "tau");
        auto S = gysin_sphere(tau);
        const RingElement e = S->euler();
        int j0 = -1;
        for (int j = 0; j < h; ++j)
            if (e.coeff(j)) j0 = j;
        // rank of multiplication by e out of source degree d
        auto image_rank = [&](int d) -> long long {
            if (j0 < 0 || d < 0 || d % r != 0) return 0;
            const int j = d / r;
            return (j < h && j + j0 < h) ? 1 : 0;
        };
        const auto& B = base.cohomology();
        for (int k = -3; k <= S->dimension() + 3; ++k) {
            const long long lhs = S->cohomology().dim(k) + image_rank(k - tau.rank) +
                                  image_rank(k - tau.rank + 1);
            const long long rhs = B.dim(k) + B.dim(k - tau.rank + 1);
            CHECK(lhs == rhs);
        }
        CHECK(poincare_duality_holds(*S));
        CHECK(S->cohomology().euler_char() == 0);
    }
}
