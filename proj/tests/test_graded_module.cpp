#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "loopsplit/graded_module.hpp"

using namespace loopsplit;

TEST_CASE("dims track added classes and drop zero entries") {
    GradedF2Module m;
    CHECK(m.dim(0) == 0);
    CHECK(m.total_dim() == 0);
    CHECK(!m.bottom_degree());
    CHECK(!m.top_degree());

    m.add_class(2, "x");
    m.add_dim(-3, 2);
    m.add_dim(5, 0);
    CHECK(m.dim(2) == 1);
    CHECK(m.dim(-3) == 2);
    CHECK(m.dim(5) == 0);
    CHECK(m.dims().count(5) == 0);
    CHECK(m.total_dim() == 3);
    CHECK(*m.bottom_degree() == -3);
    CHECK(*m.top_degree() == 2);
    CHECK_THROWS_AS(m.add_dim(0, -1), std::invalid_argument);
}

TEST_CASE("labels survive only while they cover the whole degree") {
    GradedF2Module m;
    m.add_class(4, "u");
    CHECK(m.degree_labeled(4));
    CHECK(m.labels(4) == std::vector<std::string>{"u"});

    m.add_dim(4);  // anonymous class in the same degree invalidates the list
    CHECK(m.dim(4) == 2);
    CHECK(!m.degree_labeled(4));
    CHECK(m.labels(4).empty());
}

TEST_CASE("from_dims round trip and equality by dimensions") {
    std::map<int, long long> dims{{0, 1}, {3, 2}, {7, 1}};
    GradedF2Module a = GradedF2Module::from_dims(dims);
    CHECK(a.dims() == dims);

    GradedF2Module b;
    b.add_class(0, "one");
    b.add_dim(3, 2);
    b.add_dim(7);
    CHECK(a == b);  // labels do not affect equality
}

TEST_CASE("euler characteristic alternates signs by degree parity") {
    GradedF2Module m = GradedF2Module::from_dims({{-1, 1}, {0, 2}, {3, 1}, {4, 1}});
    CHECK(m.euler_char() == -1 + 2 - 1 + 1);
}

TEST_CASE("shift relocates dims and labels") {
    GradedF2Module m;
    m.add_class(0, "1");
    m.add_class(2, "x");
    GradedF2Module s = shift(m, 3);
    CHECK(s.dims() == std::map<int, long long>{{3, 1}, {5, 1}});
    CHECK(s.labels(3) == std::vector<std::string>{"1"});

    CHECK(shift(GradedF2Module::from_dims({{1, 1}, {3, 1}, {6, 1}, {8, 1}}), -1) ==
          GradedF2Module::from_dims({{0, 1}, {2, 1}, {5, 1}, {7, 1}}));
}

TEST_CASE("shift round trips and preserves total dimension") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> deg(-10, 10), count(1, 4), off(-12, 12);
    for (int trial = 0; trial < 50; ++trial) {
        GradedF2Module m;
        for (int i = 0; i < 6; ++i) m.add_dim(deg(rng), count(rng));
        const int s = off(rng);
        GradedF2Module moved = shift(m, s);
        CHECK(moved.total_dim() == m.total_dim());
        CHECK(shift(moved, -s) == m);
    }
}

TEST_CASE("direct sum adds dimensions degree-wise") {
    CHECK(direct_sum({}) == GradedF2Module());
    GradedF2Module a = GradedF2Module::from_dims({{0, 1}});
    GradedF2Module b = GradedF2Module::from_dims({{0, 1}, {2, 1}});
    CHECK(direct_sum({a, b}) == GradedF2Module::from_dims({{0, 2}, {2, 1}}));
    CHECK(direct_sum({a, b}) == direct_sum({b, a}));
}

TEST_CASE("direct sum concatenates labels only when every part is labeled") {
    GradedF2Module a, b, c;
    a.add_class(1, "p");
    b.add_class(1, "q");
    c.add_dim(1);
    GradedF2Module labeled = direct_sum({a, b});
    CHECK(labeled.degree_labeled(1));
    CHECK(labeled.labels(1) == std::vector<std::string>{"p", "q"});
    GradedF2Module mixed = direct_sum({a, c});
    CHECK(mixed.dim(1) == 2);
    CHECK(!mixed.degree_labeled(1));
}

TEST_CASE("poincare series windows the module and flags hidden support") {
    CHECK_THROWS_AS(poincare(GradedF2Module(), -1), std::invalid_argument);

    PoincareSeries zero = poincare(GradedF2Module(), 4);
    CHECK(zero.coeffs == std::vector<long long>{0, 0, 0, 0, 0});
    CHECK(zero.exact_beyond_window);

    GradedF2Module cp2 = GradedF2Module::from_dims({{0, 1}, {2, 1}, {4, 1}});
    PoincareSeries s = poincare(cp2, 10);
    CHECK(s.coeffs[0] == 1);
    CHECK(s.coeffs[2] == 1);
    CHECK(s.coeffs[4] == 1);
    CHECK(s.coeffs[5] == 0);
    CHECK(s.exact_beyond_window);

    PoincareSeries clipped = poincare(cp2, 3);
    CHECK(clipped.coeffs == std::vector<long long>{1, 0, 1, 0});
    CHECK(!clipped.exact_beyond_window);

    // negative-degree support is outside every window but does not unset the flag
    GradedF2Module neg = GradedF2Module::from_dims({{-2, 1}, {1, 1}});
    CHECK(poincare(neg, 3).exact_beyond_window);
}

TEST_CASE("poincare of a direct sum is the coefficient-wise sum") {
    std::mt19937 rng(909090);
    std::uniform_int_distribution<int> deg(0, 12), count(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        GradedF2Module a, b;
        for (int i = 0; i < 5; ++i) {
            a.add_dim(deg(rng), count(rng));
            b.add_dim(deg(rng), count(rng));
        }
        PoincareSeries sum = poincare(direct_sum({a, b}), 12);
        PoincareSeries sa = poincare(a, 12), sb = poincare(b, 12);
        for (int d = 0; d <= 12; ++d)
            CHECK(sum.coeffs[static_cast<size_t>(d)] ==
                  sa.coeffs[static_cast<size_t>(d)] + sb.coeffs[static_cast<size_t>(d)]);
    }
}

TEST_CASE("series helpers: sparse form, window comparison, printing") {
    GradedF2Module m = GradedF2Module::from_dims({{0, 1}, {2, 1}, {7, 2}});
    PoincareSeries s = poincare(m, 8);
    CHECK(sparse_coeffs(s) ==
          std::vector<std::pair<int, long long>>{{0, 1}, {2, 1}, {7, 2}});
    CHECK(series_to_string(s) == "1 + t^2 + 2 t^7");
    CHECK(series_to_string(poincare(GradedF2Module(), 3)) == "0");

    PoincareSeries t = poincare(m, 8);
    t.exact_beyond_window = false;
    CHECK(same_window_coeffs(s, t));
    CHECK(!(s == t));
    CHECK(!same_window_coeffs(s, poincare(m, 7)));
}
