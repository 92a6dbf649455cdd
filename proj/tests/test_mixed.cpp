#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "stirmix/bounded.hpp"
#include "stirmix/exact_core.hpp"
#include "stirmix/mixed.hpp"
#include "stirmix/oracle.hpp"

using namespace stirmix;

namespace {
const std::vector<SizeBand> kBands{
    SizeBand::unbounded(),  SizeBand::at_most(2),  SizeBand::at_most(3),
    SizeBand::at_least(2),  SizeBand::at_least(3), SizeBand::between(2, 3),
};
}

TEST_CASE("mixed_count examples") {
    CHECK(mixed_count(3, CellSpec::strict({2, 1}), SizeBand::unbounded()) == 3);
    CHECK(mixed_count(4, CellSpec::strict({2, 1}), SizeBand::at_most(2)) == 18);
    // a single cell takes everything
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(mixed_count(n, CellSpec::strict({0, 0, 1}), SizeBand::unbounded()) == 1);
    }
    CHECK_THROWS_AS(
        mixed_count(3, CellSpec::strict({2, 1}).allow_empty(0), SizeBand::unbounded()),
        std::invalid_argument);
}

TEST_CASE("mixed_count is invariant under label permutation and matches the collapsed form") {
    const std::vector<std::vector<unsigned>> shapes{{2, 1}, {1, 2}, {3, 1, 2}, {2, 3, 1}};
    for (const SizeBand& band : kBands) {
        for (unsigned n = 0; n <= 8; ++n) {
            const Nat a = mixed_count(n, CellSpec::strict({2, 1}), band);
            CHECK(a == mixed_count(n, CellSpec::strict({1, 2}), band));
            const Nat b = mixed_count(n, CellSpec::strict({3, 1, 2}), band);
            CHECK(b == mixed_count(n, CellSpec::strict({2, 3, 1}), band));
            CHECK(b == mixed_count(n, CellSpec::strict({1, 2, 3}), band));
            // collapsed form
            CHECK(b == multinomial(6, {3u, 1u, 2u}) * stirling_band(n, 6, band));
        }
    }
}

TEST_CASE("mixed_count_relaxed") {
    // the worked 3-element example: label-1 cells may stay empty
    CellSpec relaxed = CellSpec::strict({2, 1});
    relaxed.allow_empty(0);
    CHECK(mixed_count_relaxed(3, relaxed, SizeBand::at_most(2)) == 9);
    // with nothing relaxed it is plain mixed_count
    for (unsigned n = 0; n <= 8; ++n) {
        const CellSpec spec = CellSpec::strict({2, 1});
        CHECK(mixed_count_relaxed(n, spec, SizeBand::unbounded()) ==
              mixed_count(n, spec, SizeBand::unbounded()));
    }
    // a single label of n cells, all allowed empty, counts all partitions
    for (unsigned n = 0; n <= 9; ++n) {
        CellSpec spec = CellSpec::strict({n});
        spec.allow_empty_everywhere();
        CHECK(mixed_count_relaxed(n, spec, SizeBand::unbounded()) == bell(n));
    }
}

TEST_CASE("mixed_stirling table values") {
    CHECK(mixed_stirling({6, 4, 2, SizeBand::unbounded()}) == 900);
    CHECK(mixed_stirling({7, 3, 3, SizeBand::unbounded()}) == 2800);
    CHECK(mixed_stirling({3, 2, 2, SizeBand::at_most(2)}) == 3);
    CHECK(mixed_stirling({6, 2, 2, SizeBand::at_least(2)}) == 45);
    CHECK_THROWS_AS(mixed_stirling({3, 0, 2, SizeBand::unbounded()}), std::invalid_argument);
}

TEST_CASE("all algorithms agree with each other and with brute force") {
    for (const SizeBand& band : kBands)
        for (unsigned n = 0; n <= 8; ++n)
            for (unsigned k = 1; k <= 4; ++k)
                for (unsigned r = 0; r <= 4; ++r) {
                    const MixedParams p{n, k, r, band};
                    const Nat closed = mixed_stirling(p, MixedAlgorithm::closed_form);
                    CHECK(closed == mixed_stirling(p, MixedAlgorithm::convolution));
                    CHECK(closed == mixed_stirling(p, MixedAlgorithm::element_recurrence));
                    CHECK(closed == mixed_stirling_three_case(p));
                    if (n <= 7) {
                        CHECK(closed ==
                              oracle_count({n, CellSpec::stirling_shape(k, r), band}));
                    }
                }
}

TEST_CASE("three-case recurrence at the arbitration points") {
    CHECK(mixed_stirling_three_case({4, 2, 2, SizeBand::at_most(3)}) ==
          mixed_stirling({4, 2, 2, SizeBand::at_most(3)}));
    CHECK(mixed_stirling_three_case({3, 2, 2, SizeBand::at_least(1)}) == 3);
    CHECK(mixed_stirling_three_case({6, 2, 2, SizeBand::at_least(2)}) == 45);
}

TEST_CASE("degeneracy conventions") {
    for (const SizeBand& band : kBands)
        for (unsigned n = 0; n <= 9; ++n)
            for (unsigned k = 1; k <= 5; ++k) {
                CHECK(mixed_stirling({n, k, 1, band}) == factorial(k) * stirling_band(n, k, band));
                CHECK(mixed_stirling({n, 1, k, band}) == stirling_band(n, k, band));
                CHECK(mixed_stirling({n, k, 0, band}) ==
                      factorial(k - 1) * stirling_band(n, k - 1, band));
            }
}

TEST_CASE("mixed_bell") {
    CHECK(mixed_bell(2, 1, 2) == 2);
    for (unsigned n = 0; n <= 8; ++n) CHECK(mixed_bell(n, 1, n) == bell(n));
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned r = 0; r <= 4; ++r) CHECK(mixed_bell(0, k, r) == 1);
}

TEST_CASE("r-Stirling bridge") {
    CHECK(r_stirling_from_mixed(4, 3, 2) == 5);
    CHECK(r_stirling_from_mixed(5, 4, 2) == r_stirling(5, 4, 2));
    CHECK_THROWS_AS(r_stirling_from_mixed(4, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(r_stirling_from_mixed(3, 4, 2), std::invalid_argument);
    for (unsigned n = 1; n <= 9; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(r_stirling_from_mixed(n, k, 1) == stirling2(n, k));
            for (unsigned r = 1; r <= k; ++r)
                CHECK(r_stirling_from_mixed(n, k, r) == r_stirling(n, k, r));
        }
}
