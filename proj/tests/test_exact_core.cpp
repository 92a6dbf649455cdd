#include <stdexcept>

#include "doctest.h"

#include "brute.hpp"
#include "stirmix/exact_core.hpp"

using namespace stirmix;

TEST_CASE("binomial basics and symmetry") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 7) == 0);
    for (unsigned n = 0; n <= 14; ++n) {
        CHECK(binomial(n, 0) == 1);
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, n - k));
            if (n >= 1 && k >= 1) {
                CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}

TEST_CASE("multinomial") {
    CHECK(multinomial(3, {2u, 1u}) == 3);
    CHECK(multinomial(4, {2u, 2u}) == 6);
    CHECK(multinomial(6, {2u, 2u, 2u}) == 90);
    CHECK_THROWS_AS(multinomial(5, {2u, 2u}), std::invalid_argument);
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(multinomial(n, {k, n - k}) == binomial(n, k));
}

TEST_CASE("stirling table shape") {
    StirlingTable table(8);
    CHECK(table.entry(0, 0) == 1);
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(table.entry(n, 0) == 0);
        CHECK(table.entry(n, n) == 1);
        CHECK(table.entry(n, n + 3) == 0);
    }
    table.ensure(10);
    CHECK(table.max_n() == 10);
    CHECK(table.entry(10, 2) == stirling2(10, 2));
}

TEST_CASE("stirling2 values and the three independent routes") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2_explicit(0, 0) == 1);
    CHECK(stirling2_explicit(4, 2) == 7);
    CHECK(stirling2_explicit(6, 3) == 90);
    CHECK(stirling2_howard(4, 2) == 7);
    CHECK(stirling2_howard(3, 3) == 1);
    CHECK(stirling2_howard(5, 2) == 15);
    for (unsigned n = 0; n <= 14; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            const Nat reference = stirling2(n, k);
            CHECK(stirling2_explicit(n, k) == reference);
            CHECK(stirling2_howard(n, k) == reference);
        }
}

TEST_CASE("bell numbers: row sums and brute force") {
    CHECK(bell(0) == 1);
    CHECK(bell(3) == 5);
    CHECK(bell(4) == 15);
    for (unsigned n = 0; n <= 14; ++n) {
        Nat sum = 0;
        for (unsigned k = 0; k <= n; ++k) sum += stirling2(n, k);
        CHECK(bell(n) == sum);
    }
    for (unsigned n = 0; n <= 9; ++n) {
        CHECK(bell(n) == Nat(brute::count_partitions(n, std::nullopt)));
    }
}

TEST_CASE("r_stirling") {
    CHECK(r_stirling(4, 3, 2) == 5);
    CHECK_THROWS_AS(r_stirling(2, 2, 3), std::invalid_argument);
    for (unsigned r = 0; r <= 8; ++r) CHECK(r_stirling(r, r, r) == 1);
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(r_stirling(n, k, 1) == stirling2(n, k));
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned r = 0; r <= n; ++r)
            for (unsigned k = 1; k <= n; ++k) {
                CHECK(r_stirling(n, k, r) ==
                      Nat(brute::count_partitions(n, k, 1, std::nullopt, r)));
            }
}
