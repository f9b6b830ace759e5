#include "doctest.h"

#include <cmath>

#include "faber/corpus.hpp"
#include "faber/harness.hpp"

using namespace faber;

TEST_CASE("sup_error reference values") {
    Oracle f = make_oracle_1d([](Real x) { return x * (1.0 - x); });
    CHECK(sup_error(f, f, 8, 1000, 0).value == 0.0);

    // distance of the parabola to its level-0 interpolant peaks at 1/16
    auto r0 = truncate_univariate(f, 0);
    Oracle g = make_oracle_1d([&r0](Real x) { return r0.eval(x); });
    auto res = sup_error(f, g, 10, 0, 0);
    CHECK(res.value == doctest::Approx(0.0625).epsilon(1e-15));
    CHECK_FALSE(res.subsampled);
}

TEST_CASE("grid refinement moves the estimate by at most the modulus") {
    FunctionSpec spec;
    spec.family = "tensor-smooth";
    spec.dim = 1;
    spec.alpha = 1.0;
    spec.g = "sinpi";
    Oracle f = make_function(spec);
    auto rm = truncate_univariate(f, 2);
    Oracle g = make_oracle_1d([&rm](Real x) { return rm.eval(x); });
    for (int L : {5, 7, 9}) {
        Real a = sup_error(f, g, L, 0, 0).value;
        Real b = sup_error(f, g, L + 2, 0, 0).value;
        CHECK(b >= a);
        CHECK(b - a <= 2.0 * std::exp2(-L));
    }
}

TEST_CASE("three-dimensional measurements subsample deterministically") {
    Oracle f{3, [](std::span<const Real> x) { return x[0] * x[1] * x[2]; }};
    Oracle zero{3, [](std::span<const Real>) { return 0.0; }};
    auto a = sup_error(f, zero, 8, 500, 7);
    auto b = sup_error(f, zero, 8, 500, 7);
    CHECK(a.subsampled);
    CHECK(a.value == b.value);
    CHECK(a.points == b.points);
    CHECK(a.value <= 1.0);
}

TEST_CASE("reports serialize deterministically and gate on ratios") {
    SuiteConfig c;
    auto r1 = run_suite("params", c);
    auto r2 = run_suite("params", c);
    CHECK(reports_to_csv(r1) == reports_to_csv(r2));
    CHECK(reports_to_text(r1) == reports_to_text(r2));
    CHECK(all_pass(r1));

    ErrorReport bad;
    bad.measured_error = 2.0;
    bad.bound = 1.0;
    bad.ratio = 2.0;
    CHECK(bad.violation());
    r1.push_back(bad);
    CHECK_FALSE(all_pass(r1));
}
