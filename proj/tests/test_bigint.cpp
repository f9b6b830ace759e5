#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "faber/bigint.hpp"

using namespace faber;

TEST_CASE("construction and decimal round trip") {
    CHECK(BigUint(0ULL).to_decimal() == "0");
    CHECK(BigUint(78892ULL).to_decimal() == "78892");
    CHECK(BigUint::from_decimal("1000000").to_decimal() == "1000000");
    std::string big = "987654321098765432109876543210";
    CHECK(BigUint::from_decimal(big).to_decimal() == big);
    CHECK_THROWS_AS(BigUint::from_decimal("12a"), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    CHECK((BigUint(1ULL << 40) * BigUint(1ULL << 40)).to_decimal() ==
          BigUint::pow(2, 80).to_decimal());
    CHECK((BigUint(999999999ULL) + BigUint(1ULL)).to_decimal() == "1000000000");
    CHECK(BigUint::pow(3, 8).to_decimal() == "6561");
    // 3^64 = 3433683820292512484657849089281
    CHECK(BigUint::pow(3, 64).to_decimal() == "3433683820292512484657849089281");
}

TEST_CASE("comparison") {
    CHECK(BigUint(5ULL) < BigUint(6ULL));
    CHECK(BigUint::pow(3, 30) > BigUint::pow(2, 40));
    CHECK(BigUint(123ULL) == BigUint::from_decimal("123"));
}

TEST_CASE("approximate log2") {
    CHECK(BigUint(1024ULL).log2() == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(BigUint::pow(3, 64).log2() == doctest::Approx(64.0 * std::log2(3.0)).epsilon(1e-12));
    CHECK(BigUint(1000000ULL).log2() == doctest::Approx(std::log2(1e6)).epsilon(1e-12));
}
