#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"

#include "brute.hpp"
#include "stirmix/bounded.hpp"
#include "stirmix/exact_core.hpp"
#include "stirmix/mixed.hpp"
#include "stirmix/oracle.hpp"

using namespace stirmix;

TEST_CASE("hand-checked configurations") {
    // two may-be-empty cells of one label on two elements: {{1,2}} and
    // {{1},{2}}; with both cells required non-empty only the second remains
    CellSpec pair = CellSpec::strict({2});
    pair.allow_empty_everywhere();
    const auto both = oracle_enumerate({2, pair});
    REQUIRE(both.size() == 2);
    CHECK(to_string(both[0]) == "{1,2}");
    CHECK(to_string(both[1]) == "{1}{2}");
    const auto strict_only = oracle_enumerate({2, CellSpec::strict({2})});
    REQUIRE(strict_only.size() == 1);
    CHECK(to_string(strict_only[0]) == "{1}{2}");

    // one cell each of two labels on three elements: ordered pairs of blocks
    const auto ordered = oracle_enumerate({3, CellSpec::strict({1, 1})});
    CHECK(ordered.size() == 6);

    const auto single = oracle_enumerate({1, CellSpec::strict({1})});
    REQUIRE(single.size() == 1);
    CHECK(to_string(single[0]) == "{1}");
}

TEST_CASE("the worked 3-element example, strict and relaxed") {
    CHECK(oracle_count({3, CellSpec::strict({2, 1}), SizeBand::at_most(2)}) == 3);
    CellSpec relaxed = CellSpec::strict({2, 1});
    relaxed.allow_empty(0);
    CHECK(oracle_count({3, relaxed, SizeBand::at_most(2)}) == 9);
    CHECK(oracle_count({3, CellSpec::strict({2, 1})}) == 3);
}

TEST_CASE("prefix elements in distinct cells") {
    CHECK(oracle_count({4, CellSpec::strict({3}), SizeBand::unbounded(), 2}) == 5);
    CHECK(oracle_count({4, CellSpec::strict({3}), SizeBand::unbounded(), 2}) ==
          r_stirling(4, 3, 2));
}

TEST_CASE("count and enumerate cohere; canonical forms are distinct") {
    const std::vector<OracleQuery> queries{
        {5, CellSpec::strict({2})},
        {5, CellSpec::strict({2, 1}), SizeBand::at_most(3)},
        {6, CellSpec::strict({2, 1, 1}), SizeBand::at_least(2)},
        {4, CellSpec::strict({2}).allow_empty(0)},
        {5, CellSpec::strict({3}), SizeBand::unbounded(), 2},
    };
    for (const auto& q : queries) {
        const auto all = oracle_enumerate(q);
        CHECK(Nat(all.size()) == oracle_count(q));
        std::set<std::string> seen;
        for (const auto& p : all) seen.insert(to_string(p));
        CHECK(seen.size() == all.size());
        // canonical form: ascending elements inside blocks, same-label blocks
        // ordered by smallest element, one group per label
        for (const auto& p : all) {
            REQUIRE(p.size() == q.spec.labels());
            for (const auto& label_blocks : p) {
                unsigned previous_min = 0;
                for (const auto& block : label_blocks) {
                    REQUIRE_FALSE(block.empty());
                    CHECK(std::is_sorted(block.begin(), block.end()));
                    CHECK(block.front() > previous_min);
                    previous_min = block.front();
                }
            }
        }
        // deterministic order
        const auto again = oracle_enumerate(q);
        REQUIRE(again.size() == all.size());
        for (std::size_t i = 0; i < all.size(); ++i) CHECK(to_string(again[i]) == to_string(all[i]));
    }
}

TEST_CASE("oracle reproduces the table families") {
    for (unsigned n = 0; n <= 8; ++n) {
        CellSpec loose = CellSpec::strict({n});
        loose.allow_empty_everywhere();
        CHECK(oracle_count({n, loose}) == bell(n));
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(oracle_count({n, CellSpec::strict({k})}) == stirling2(n, k));
            CHECK(oracle_count({n, CellSpec::strict({k}), SizeBand::between(2, 3)}) ==
                  stirling_band(n, k, SizeBand::between(2, 3)));
            for (unsigned r = 0; r <= n; ++r) {
                CHECK(oracle_count({n, CellSpec::strict({k}), SizeBand::unbounded(), r}) ==
                      Nat(brute::count_partitions(n, k, 1, std::nullopt, r)));
            }
        }
    }
    // small slice of the three-index family
    for (unsigned n = 2; n <= 7; ++n)
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned r = 1; r <= 4; ++r) {
                CHECK(oracle_count({n, CellSpec::stirling_shape(k, r)}) ==
                      mixed_stirling({n, k, r, SizeBand::unbounded()}));
            }
}

TEST_CASE("explosion guard") {
    CHECK_THROWS_AS(oracle_count({13, CellSpec::strict({2})}), std::invalid_argument);
    OracleQuery raised{13, CellSpec::strict({1})};
    raised.cap = 13;
    CHECK(oracle_count(raised) == 1);
    CHECK_THROWS_AS(oracle_count({3, CellSpec::strict({3}), SizeBand::unbounded(), 4}),
                    std::invalid_argument);
}
