#include "doctest.h"

#include <cmath>
#include <numbers>

#include "faber/univariate.hpp"

using namespace faber;

namespace {

Oracle parabola() {
    return make_oracle_1d([](Real x) { return x * (1.0 - x); });
}

Oracle scaled_sine() {
    return make_oracle_1d([](Real x) { return std::sin(std::numbers::pi * x) / std::numbers::pi; });
}

} // namespace

TEST_CASE("hat function") {
    CHECK(hat(1.0) == 1.0);
    CHECK(hat(0.0) == 0.0);
    CHECK(hat(2.5) == 0.0);
    CHECK(hat(0.5) == 0.5);
    CHECK(hat(-3.0) == 0.0);
}

TEST_CASE("hierarchical hats") {
    CHECK(faber_eval({0, 0}, 0.5) == 1.0);
    CHECK(faber_eval({1, 1}, 0.625) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(faber_eval({1, 0}, 0.9) == 0.0);
    CHECK(faber_eval({-1, 0}, 0.25) == doctest::Approx(0.75));
    CHECK(faber_eval({-1, 1}, 0.25) == doctest::Approx(0.25));
    CHECK_THROWS_AS(faber_eval({1, 2}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(faber_eval({-1, 2}, 0.5), std::invalid_argument);
}

TEST_CASE("nodal hats") {
    CHECK(nodal_hat_eval(0, 1, 0.5) == 1.0);
    CHECK(nodal_hat_eval(1, 2, 0.5) == 1.0);
    CHECK(nodal_hat_eval(1, 1, 0.375) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(nodal_hat_eval(1, 0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(nodal_hat_eval(1, 4, 0.5), std::invalid_argument);
}

TEST_CASE("nodal hats are a subordinate partition of unity") {
    for (int m : {0, 1, 2, 3}) {
        long last = (1L << (m + 1)) - 1;
        Rng rng(17);
        for (int t = 0; t < 400; ++t) {
            Real x = rng.next_real();
            Real sum = 0.0;
            for (long s = 1; s <= last; ++s) sum += nodal_hat_eval(m, s, x);
            CHECK(sum <= 1.0 + 1e-12);
            Real margin = std::ldexp(1.0, -m - 1);
            if (x >= margin && x <= 1.0 - margin) CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("second-difference coefficients") {
    Oracle f = parabola();
    CHECK(faber_coeff(f, {0, 0}) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(faber_coeff(f, {1, 0}) == doctest::Approx(0.0625).epsilon(1e-15));
    Oracle affine = make_oracle_1d([](Real x) { return 0.3 * x + 0.1; });
    for (int k : {0, 1, 3})
        for (long s : {0L, (1L << k) - 1})
            CHECK(faber_coeff(affine, {k, s}) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("truncation interpolates at the dyadic nodes") {
    Oracle f = parabola();
    auto e0 = truncate_univariate(f, 0);
    CHECK(e0.eval(0.5) == doctest::Approx(0.25).epsilon(1e-15));

    auto e3 = truncate_univariate(scaled_sine(), 3);
    Oracle g = scaled_sine();
    CHECK(e3.eval(5.0 / 16.0) == doctest::Approx(g({5.0 / 16.0})).epsilon(1e-14));
    for (long s = 1; s < 16; ++s) {
        Real x = std::ldexp(static_cast<Real>(s), -4);
        CHECK(e3.eval(x) == doctest::Approx(g({x})).epsilon(1e-13));
    }
}

TEST_CASE("truncation is a projector on its own span") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 1 + static_cast<int>(rng.next_below(4));
        UnivariateExpansion e(m);
        for (int k = 0; k <= m; ++k)
            for (long s = 0; s < shifts_per_level(k); ++s)
                e.set({k, s}, 2.0 * rng.next_real() - 1.0);
        Oracle f = make_oracle_1d([&e](Real x) { return e.eval(x); });
        auto back = truncate_univariate(f, m);
        for (int k = 0; k <= m; ++k)
            for (long s = 0; s < shifts_per_level(k); ++s)
                CHECK(back.coefficient({k, s}) ==
                      doctest::Approx(e.coefficient({k, s})).epsilon(1e-12));
    }
}

TEST_CASE("greedy quantizer hand traces") {
    auto c1 = quantize(parabola(), 0, 1.0);
    CHECK(c1.l == std::vector<long long>{0, 0}); // 0.25 ties between 0 and 0.5, resolves down

    auto c2 = quantize(scaled_sine(), 1, 1.0);
    CHECK(c2.l == std::vector<long long>{0, 1, 1, 1});

    auto c3 = quantize(make_oracle_1d([](Real) { return 0.0; }), 2, 0.5);
    for (auto v : c3.l) CHECK(v == 0);

    CHECK_THROWS_AS(quantize(make_oracle_1d([](Real) { return 1.0; }), 1, 1.0),
                    std::invalid_argument);
}

TEST_CASE("quantized evaluation") {
    UnivariateQuantizedCode code{1, 1.0, {0, 1, 1, 1}};
    CHECK(code.eval(0.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(code.eval(0.0) == 0.0);
    CHECK(code.eval(0.125) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(code.eval(1.0) == 0.0);
}

TEST_CASE("interpolation holds across a large random corpus") {
    for (int i = 0; i < 1000; ++i) {
        Rng rng(1000 + static_cast<std::uint64_t>(i));
        int depth = 2 + static_cast<int>(rng.next_below(3));
        UnivariateExpansion e(depth);
        for (int k = 0; k <= depth; ++k)
            for (long s = 0; s < shifts_per_level(k); ++s)
                e.set({k, s}, (2.0 * rng.next_real() - 1.0) * std::ldexp(1.0, -k - 1));
        Oracle f = make_oracle_1d([&e](Real x) { return e.eval(x); });
        int m = static_cast<int>(rng.next_below(9));
        auto rm = truncate_univariate(f, m);
        Real worst = 0.0;
        for (long s = 1; s < (1L << (m + 1)); ++s) {
            Real x = std::ldexp(static_cast<Real>(s), -m - 1);
            worst = std::max(worst, std::abs(rm.eval(x) - f({x})));
        }
        REQUIRE(worst <= 1e-12);
    }
}

TEST_CASE("quantizer node accuracy and truncation distance") {
    // R_m(f) and the quantized interpolant share breakpoints, so the sup of
    // their difference is attained at the nodes
    Oracle f = scaled_sine();
    for (Real alpha : {0.5, 1.0}) {
        for (int m = 0; m <= 6; ++m) {
            auto code = quantize(f, m, alpha);
            CHECK(code.chain_ok());
            Real unit = code.unit();
            Real node_cap = 0.5 * unit + 1e-12;
            Real worst = 0.0;
            for (long s = 0; s < (1L << (m + 1)); ++s) {
                Real x = std::ldexp(static_cast<Real>(s), -m - 1);
                worst = std::max(worst, std::abs(unit * static_cast<Real>(code.l[static_cast<size_t>(s)]) - f({x})));
            }
            CHECK(worst <= node_cap);
            auto rm = truncate_univariate(f, m);
            Real gap = 0.0;
            for (long s = 0; s <= (1L << (m + 1)); ++s) {
                Real x = std::ldexp(static_cast<Real>(s), -m - 1);
                gap = std::max(gap, std::abs(rm.eval(x) - code.eval(x)));
            }
            CHECK(gap <= node_cap);
        }
    }
}
