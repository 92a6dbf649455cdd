#include <set>
#include <stdexcept>

#include "doctest.h"

#include "stirmix/bounded.hpp"
#include "stirmix/egf.hpp"
#include "stirmix/exact_core.hpp"
#include "stirmix/mixed.hpp"

using namespace stirmix;

namespace {
Series x_series(unsigned order) { return Series::monomial(1, Rat(1), order); }

Series exp_minus_one(unsigned order) {
    return series_block_class(SizeBand::unbounded(), order);
}
}  // namespace

TEST_CASE("series arithmetic") {
    const Series x = x_series(4);
    const Series x2 = series_mul(x, x);
    CHECK(x2.coeff(2) == 1);
    CHECK(x2.coeff(1) == 0);
    CHECK(x2.coeff(3) == 0);

    Series one_plus_x(4);
    one_plus_x.set_coeff(0, 1);
    one_plus_x.set_coeff(1, 1);
    const Series square = series_pow(one_plus_x, 2);
    CHECK(square.coeff(0) == 1);
    CHECK(square.coeff(1) == 2);
    CHECK(square.coeff(2) == 1);
    CHECK(square.coeff(3) == 0);

    CHECK(series_pow(exp_minus_one(4), 2).coeff(4) == Rat(7, 12));

    // binary operations truncate to the smaller order
    CHECK(series_mul(x_series(7), x_series(3)).order() == 3);
}

TEST_CASE("block classes") {
    const Series s = series_block_class(std::set<unsigned>{1, 2}, 4);
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(2) == Rat(1, 2));
    CHECK(s.coeff(3) == 0);
    CHECK(s.coeff(4) == 0);
    CHECK_THROWS_AS(series_block_class(std::set<unsigned>{0, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(series_block_class(std::set<unsigned>{}, 4), std::invalid_argument);

    // the full range is e^x - 1; a lower bound drops the small terms
    const unsigned order = 6;
    const Series full = series_block_class(SizeBand::unbounded(), order);
    for (unsigned j = 1; j <= order; ++j) CHECK(full.coeff(j) == Rat(1) / Rat(factorial(j)));
    CHECK(full.coeff(0) == 0);
    const Series tail = series_block_class(SizeBand::at_least(3), order);
    CHECK(tail.coeff(2) == 0);
    CHECK(tail.coeff(3) == Rat(1, 6));
}

TEST_CASE("composition") {
    const Series beta = Series::monomial(2, Rat(1, 2), 5);
    const Series composed = series_compose(beta, exp_minus_one(5));
    CHECK(composed.coeff(3) == Rat(1, 2));  // {3 brace 2} / 3!

    const Series alpha = x_series(5);
    CHECK(series_compose(x_series(5), alpha).coeff(1) == 1);
    const Series cube = series_compose(Series::monomial(3, Rat(1, 6), 5), alpha);
    CHECK(cube.coeff(3) == Rat(1, 6));

    Series shifted(5);
    shifted.set_coeff(0, 1);
    CHECK_THROWS_AS(series_compose(beta, shifted), std::invalid_argument);
}

TEST_CASE("count extraction") {
    const Series pairs = series_scale(series_pow(exp_minus_one(5), 2), Rat(1, 2));
    CHECK(count_from_series(pairs, 4) == 7);

    // (x + x^2/2)^3 / 2!
    const Series restricted =
        series_scale(series_pow(series_block_class(SizeBand::at_most(2), 5), 3), Rat(1, 2));
    CHECK(count_from_series(restricted, 4) == 18);

    Series constant(3);
    constant.set_coeff(0, 1);
    CHECK(count_from_series(constant, 0) == 1);
    CHECK_THROWS_AS(count_from_series(constant, 9), std::invalid_argument);

    Series half(3);
    half.set_coeff(1, Rat(1, 2));
    CHECK_THROWS_AS(count_from_series(half, 1), std::domain_error);
    Series negative(3);
    negative.set_coeff(1, -1);
    CHECK_THROWS_AS(count_from_series(negative, 1), std::domain_error);
}

TEST_CASE("assembled families match the tables up to order 12") {
    const unsigned order = 12;
    const std::vector<SizeBand> bands{
        SizeBand::unbounded(),  SizeBand::at_most(2),  SizeBand::at_most(3),
        SizeBand::at_least(2),  SizeBand::at_least(3), SizeBand::between(2, 3),
    };
    for (const SizeBand& band : bands) {
        for (unsigned k = 0; k <= 5; ++k) {
            const Series s = egf_stirling_band(k, band, order);
            for (unsigned n = 0; n <= order; ++n) {
                CHECK(count_from_series(s, n) == stirling_band(n, k, band));
            }
        }
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned r = 0; r <= 4; ++r) {
                const Series s = egf_mixed(MixedParams{0, k, r, band}, order);
                for (unsigned n = 0; n <= order; ++n) {
                    CHECK(count_from_series(s, n) == mixed_stirling({n, k, r, band}));
                }
            }
    }
    const CellSpec spec = CellSpec::strict({2, 1});
    const Series general = egf_mixed(spec, SizeBand::unbounded(), order);
    CHECK(count_from_series(general, 3) == 3);
    for (unsigned n = 0; n <= order; ++n) {
        CHECK(count_from_series(general, n) == mixed_count(n, spec, SizeBand::unbounded()));
    }
    CHECK_THROWS_AS(egf_mixed(CellSpec::strict({2, 1}).allow_empty(1), SizeBand::unbounded(), 4),
                    std::invalid_argument);
}

TEST_CASE("composition reproduces the banded columns") {
    const unsigned order = 10;
    for (unsigned lo = 1; lo <= 3; ++lo)
        for (unsigned hi = lo; hi <= 4; ++hi) {
            const SizeBand band = SizeBand::between(lo, hi);
            for (unsigned k = 1; k <= 4; ++k) {
                const Series beta = Series::monomial(k, Rat(1) / Rat(factorial(k)), order);
                const Series composed = series_compose(beta, series_block_class(band, order));
                for (unsigned n = 0; n <= order; ++n) {
                    CHECK(count_from_series(composed, n) == stirling_band(n, k, band));
                }
            }
        }
}

TEST_CASE("series text dump") {
    Series s(2);
    s.set_coeff(0, 1);
    s.set_coeff(2, Rat(1, 2));
    CHECK(series_to_text(s) == "0: 1\n1: 0\n2: 1/2\n");
}
