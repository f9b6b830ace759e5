#include "doctest.h"

#include <sstream>

#include "faber/corpus.hpp"
#include "faber/serialize.hpp"

using namespace faber;

TEST_CASE("expansion text round trip is exact") {
    Rng rng(61);
    SparseFaberExpansion e(2, 3);
    for (const auto& k : enumerate_levels(2, 3))
        for (const auto& s : enumerate_shifts(k)) e.set(k, s, 2.0 * rng.next_real() - 1.0);
    auto text = to_string(e);
    auto back = expansion_from_string(text);
    CHECK(to_string(back) == text);
    for (const auto& k : enumerate_levels(2, 3))
        for (const auto& s : enumerate_shifts(k)) CHECK(back.coefficient(k, s) == e.coefficient(k, s));
}

TEST_CASE("covering text round trip") {
    FunctionSpec spec;
    spec.family = "faber-random";
    spec.dim = 2;
    spec.alpha = 0.5;
    spec.level = 2;
    spec.seed = 5;
    CoveringCode code = build_covering(make_function(spec), 2, 2, 0.5);
    std::ostringstream os;
    write_covering(os, code);
    std::istringstream is(os.str());
    CoveringCode back = read_covering(is);
    CHECK(back.dim == code.dim);
    CHECK(back.level == code.level);
    CHECK(back.alpha == code.alpha);
    REQUIRE(back.banks.size() == code.banks.size());
    Rng rng(8);
    for (int t = 0; t < 200; ++t) {
        Point x = {rng.next_real(), rng.next_real()};
        CHECK(back.eval(x) == code.eval(x));
    }
}

TEST_CASE("manifold code file round trip decodes bit-identically") {
    FunctionSpec spec;
    spec.family = "faber-random";
    spec.dim = 2;
    spec.alpha = 1.0;
    spec.level = 3;
    spec.seed = 21;
    ManifoldCode code = encode(make_function(spec), 1, 3, 1.0);
    auto text = to_string(code);
    ManifoldCode back = manifold_from_string(text);
    CHECK(to_string(back) == text);
    Rng rng(9);
    for (int t = 0; t < 1000; ++t) {
        Point x = {rng.next_real(), rng.next_real()};
        CHECK(back.eval(x) == code.eval(x)); // bit identical
    }
}

TEST_CASE("corrupt documents are rejected") {
    CHECK_THROWS(expansion_from_string("not-an-expansion"));
    FunctionSpec spec;
    spec.family = "fooling";
    spec.dim = 2;
    spec.alpha = 1.0;
    spec.level = 2;
    ManifoldCode code = encode(make_function(spec), 1, 2, 1.0);
    auto text = to_string(code);
    // out-of-range assignment index
    auto pos = text.rfind("theta");
    auto broken = text.substr(0, pos) + "theta 1\n99\nend\n";
    CHECK_THROWS(manifold_from_string(broken));
}
