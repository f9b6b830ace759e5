#include "doctest.h"

#include <cmath>

#include "faber/tensor.hpp"
#include "faber/univariate.hpp"

using namespace faber;

namespace {

Oracle product_parabola(int d) {
    return Oracle{d, [](std::span<const Real> x) {
                      Real p = 1.0;
                      for (Real xi : x) p *= xi * (1.0 - xi);
                      return p;
                  }};
}

} // namespace

TEST_CASE("tensor coefficient values and envelope") {
    Oracle f = product_parabola(2);
    auto [v, b] = tensor_coeff(f, {0, 0}, {0, 0}, 1.0);
    CHECK(v == doctest::Approx(0.0625).epsilon(1e-15));
    CHECK(b == doctest::Approx(0.25).epsilon(1e-15));

    Oracle affine_x = Oracle{2, [](std::span<const Real> x) { return (2.0 * x[0] - 1.0) * x[1]; }};
    for (int k1 : {0, 1, 2})
        CHECK(tensor_coeff(affine_x, {k1, 1}, {0, 0}, 1.0).first == doctest::Approx(0.0).epsilon(1e-15));

    // d = 1 reduces to the univariate coefficient
    Oracle g = make_oracle_1d([](Real x) { return x * (1.0 - x); });
    CHECK(tensor_coeff(g, {1}, {0}, 1.0).first == doctest::Approx(faber_coeff(g, {1, 0})).epsilon(1e-15));
}

TEST_CASE("basis element reproduction") {
    Oracle f = Oracle{2, [](std::span<const Real> x) {
                          return faber_eval({0, 0}, x[0]) * faber_eval({0, 0}, x[1]);
                      }};
    auto e = sparse_truncate(f, 0, 2);
    CHECK(e.coefficient({0, 0}, {0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e.coefficient_count() == 1);
}

TEST_CASE("sparse truncation interpolates on the Smolyak grid") {
    Oracle f = product_parabola(2);
    auto e = sparse_truncate(f, 1, 2);
    CHECK(e.eval({0.5, 0.5}) == doctest::Approx(f({0.5, 0.5})).epsilon(1e-14));
    for (int m : {1, 2, 3}) {
        auto em = sparse_truncate(f, m, 2);
        for (const auto& pt : smolyak_grid(m, 2).points)
            CHECK(em.eval(pt) == doctest::Approx(f(pt)).epsilon(1e-13));
    }
    CHECK(sparse_truncate(f, 2, 2).coefficient_count() == 17);
}

TEST_CASE("sparse truncation is a projector") {
    Rng rng(11);
    for (int d : {2, 3}) {
        int m = 2;
        SparseFaberExpansion e(d, m);
        for (const auto& k : enumerate_levels(d, m))
            for (const auto& s : enumerate_shifts(k)) e.set(k, s, 2.0 * rng.next_real() - 1.0);
        auto back = sparse_truncate(e.as_oracle(), m, d);
        for (const auto& k : enumerate_levels(d, m))
            for (const auto& s : enumerate_shifts(k))
                CHECK(back.coefficient(k, s) == doctest::Approx(e.coefficient(k, s)).epsilon(1e-12));
    }
}

TEST_CASE("per-level supports are disjoint") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        MultiIndex k = {static_cast<int>(rng.next_below(4)), static_cast<int>(rng.next_below(4))};
        Point x = {rng.next_real(), rng.next_real()};
        int nonzero = 0;
        for (const auto& s : enumerate_shifts(k))
            if (tensor_faber_eval(k, s, x) != 0.0) ++nonzero;
        CHECK(nonzero <= 1);
    }
}

TEST_CASE("Smolyak grid counts and dedup") {
    auto g21 = smolyak_grid(1, 2);
    CHECK(g21.points.size() == 5);
    auto g31 = smolyak_grid(1, 3);
    CHECK(g31.points.size() == 7);
    auto g12 = smolyak_grid(2, 1);
    CHECK(g12.points.size() == 7);
    for (const auto& pt : g12.points) {
        CHECK(pt[0] > 0.0);
        CHECK(pt[0] < 1.0);
    }
    // point count stays under (2^d / (d-1)!) 2^m m^{d-1}
    for (int d : {2, 3}) {
        Real fact = d == 2 ? 1.0 : 2.0;
        for (int m = 1; m <= 5; ++m) {
            Real cap = std::exp2(d) / fact * std::exp2(m) * std::pow(static_cast<Real>(m), d - 1);
            CHECK(static_cast<Real>(smolyak_grid(m, d).points.size()) <= cap);
        }
    }
}

TEST_CASE("subspace dimension") {
    CHECK(dim_Fdm(2, 2) == 17);
    CHECK(dim_Fdm(3, 2) == 49);
    for (int m : {0, 1, 4, 7}) CHECK(dim_Fdm(m, 1) == (1LL << (m + 1)) - 1);
}

TEST_CASE("truncation error bound values") {
    CHECK(truncation_error_bound(1.0, 2, 4) == doctest::Approx(0.1875).epsilon(1e-15));
    CHECK(truncation_error_bound(1.0, 2, 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(truncation_error_bound(0.5, 2, 4) == doctest::Approx(6.18198).epsilon(1e-5));
    CHECK(truncation_error_bound(1.0, 1, 3) == doctest::Approx(0.5 * 0.125).epsilon(1e-15));
}
