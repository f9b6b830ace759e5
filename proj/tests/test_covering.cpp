#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>

#include "faber/corpus.hpp"
#include "faber/covering.hpp"

using namespace faber;

namespace {

Oracle product_parabola(int d) {
    return Oracle{d, [](std::span<const Real> x) {
                      Real p = 1.0;
                      for (Real xi : x) p *= xi * (1.0 - xi);
                      return p;
                  }};
}

std::string bank_dump(const CoveringCode& code) {
    std::ostringstream os;
    for (const auto& [key, univ] : code.banks) {
        for (long long v : univ.l) os << v << ',';
        os << ';';
    }
    return os.str();
}

} // namespace

TEST_CASE("slice oracle hand values") {
    Oracle f = product_parabola(2);
    Oracle K = K_function(f, {0}, {0}, 1.0);
    CHECK(K({0.5}) == doctest::Approx(0.125).epsilon(1e-15)); // 0.5 * x(1-x) at 0.5
    CHECK(K({0.25}) == doctest::Approx(0.5 * 0.1875).epsilon(1e-15));
    CHECK(K({0.0}) == 0.0);
    CHECK(K({1.0}) == 0.0);

    Oracle zero{2, [](std::span<const Real>) { return 0.0; }};
    Oracle Kz = K_function(zero, {1}, {1}, 0.5);
    for (Real x : {0.0, 0.3, 0.7, 1.0}) CHECK(Kz({x}) == 0.0);
}

TEST_CASE("covering construction shapes") {
    Oracle f = product_parabola(2);
    CoveringCode code = build_covering(f, 1, 2, 1.0);
    CHECK(code.banks.size() == 3); // kbar = (0) gives 1 bank, kbar = (1) gives 2
    CHECK(code.chain_ok());
    // the level-1 bank of the slice 0.5 x(1-x) quantizes to all zeros
    auto it = code.banks.find(BankKey{{0}, {0}});
    REQUIRE(it != code.banks.end());
    CHECK(it->second.l == std::vector<long long>{0, 0, 0, 0});
    CHECK(code.eval({0.5, 0.5}) == 0.0);

    Oracle zero{2, [](std::span<const Real>) { return 0.0; }};
    for (const auto& [key, univ] : build_covering(zero, 2, 2, 0.5).banks)
        for (long long v : univ.l) CHECK(v == 0);

    // d = 1 degenerates to a single quantized code
    Oracle g = make_oracle_1d([](Real x) { return x * (1.0 - x); });
    CoveringCode c1 = build_covering(g, 2, 1, 1.0);
    CHECK(c1.banks.size() == 1);
    auto direct = quantize(g, 2, 1.0);
    CHECK(c1.banks.begin()->second.l == direct.l);
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        Real x = rng.next_real();
        CHECK(c1.eval({x}) == doctest::Approx(direct.eval(x)).epsilon(1e-15));
    }
}

TEST_CASE("covering parameter count matches the subspace dimension") {
    Oracle f = product_parabola(2);
    for (int m : {1, 2, 3}) CHECK(build_covering(f, m, 2, 1.0).parameter_count() == dim_Fdm(m, 2));
    Oracle f3 = product_parabola(3);
    CHECK(build_covering(f3, 2, 3, 1.0).parameter_count() == dim_Fdm(2, 3));
}

TEST_CASE("slicing representation of the sparse truncation") {
    // R_m(f)(x) = sum over (kbar, sbar) of
    //   2^{-alpha(|kbar|+d-1)} phi_{kbar,sbar}(xbar) R_{m-|kbar|}(K(f))(x_1)
    Rng rng(29);
    for (int d : {2, 3}) {
        for (Real alpha : {0.5, 1.0}) {
            FunctionSpec spec;
            spec.family = "faber-random";
            spec.dim = d;
            spec.alpha = alpha;
            spec.level = 3;
            spec.seed = 7 + static_cast<std::uint64_t>(d);
            Oracle f = make_function(spec);
            int m = 3;
            auto rm = sparse_truncate(f, m, d);
            for (int t = 0; t < 100; ++t) {
                Point x(static_cast<size_t>(d));
                for (auto& xi : x) xi = rng.next_real();
                Real rhs = 0.0;
                for (const auto& kbar : enumerate_levels(d - 1, m)) {
                    int sub = m - static_cast<int>(level_sum(kbar));
                    Real w = std::exp2(-alpha * static_cast<Real>(level_sum(kbar) + d - 1));
                    for (const auto& sbar : enumerate_shifts(kbar)) {
                        Real phi = 1.0;
                        for (size_t i = 0; i < kbar.size(); ++i)
                            phi *= faber_eval({kbar[i], sbar[i]}, x[i + 1]);
                        if (phi == 0.0) continue;
                        Oracle K = K_function(f, kbar, sbar, alpha);
                        rhs += w * phi * truncate_univariate(K, sub).eval(x[0]);
                    }
                }
                CHECK(rm.eval(x) == doctest::Approx(rhs).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("slice outputs stay in the univariate unit ball") {
    for (int d : {2, 3}) {
        for (Real alpha : {0.5, 1.0}) {
            auto specs = standard_corpus(d, alpha, 3);
            for (const auto& spec : specs) {
                Oracle f = make_function(spec);
                for (const auto& kbar : enumerate_levels(d - 1, 2)) {
                    auto shifts = enumerate_shifts(kbar);
                    Oracle K = K_function(f, kbar, shifts.front(), alpha);
                    CHECK(norm_estimate(K, alpha, 1500, 3) <= 1.0 + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("error bound values") {
    CHECK(covering_error_bound(1.0, 2, 4) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(covering_error_bound(1.0, 2, 1) == doctest::Approx(1.5).epsilon(1e-15));
    for (int m : {1, 3, 6})
        CHECK(covering_error_bound(1.0, 1, m) == doctest::Approx(std::exp2(-m)).epsilon(1e-15));
}

TEST_CASE("cardinality bound values") {
    CHECK(cardinality_bound(1, 1).to_decimal() == "81");
    CHECK(cardinality_bound(1, 2).to_decimal() == "6561");
    CHECK(cardinality_bound(0, 1).to_decimal() == "9");
}

TEST_CASE("distinct coverings stay within the cardinality bound") {
    std::set<std::string> seen;
    for (int t = 0; t < 1000; ++t) {
        FunctionSpec spec;
        spec.family = "faber-random";
        spec.dim = 2;
        spec.alpha = 1.0;
        spec.level = 2;
        spec.seed = 40000 + static_cast<std::uint64_t>(t);
        seen.insert(bank_dump(build_covering(make_function(spec), 1, 2, 1.0)));
    }
    CHECK(seen.size() <= 6561);
}
