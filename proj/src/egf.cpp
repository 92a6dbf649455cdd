#include "stirmix/egf.hpp"

#include <stdexcept>

namespace stirmix {

Series series_block_class(const std::set<unsigned>& sizes, unsigned order) {
    if (sizes.empty()) throw std::invalid_argument("series_block_class: empty size set");
    if (sizes.count(0)) throw std::invalid_argument("series_block_class: blocks are non-empty");
    Series s(order);
    for (unsigned a : sizes) {
        if (a > order) break;
        s.set_coeff(a, Rat(1) / Rat(factorial(a)));
    }
    return s;
}

Series series_block_class(const SizeBand& band, unsigned order) {
    Series s(order);
    const unsigned hi = std::min(band.hi_or(order), order);
    for (unsigned a = band.lo(); a <= hi; ++a) {
        s.set_coeff(a, Rat(1) / Rat(factorial(a)));
    }
    return s;
}

Series series_exp(unsigned order) {
    Series s(order);
    for (unsigned a = 0; a <= order; ++a) s.set_coeff(a, Rat(1) / Rat(factorial(a)));
    return s;
}

Nat count_from_series(const Series& s, unsigned n) {
    if (n > s.order()) {
        throw std::invalid_argument("count_from_series: n exceeds the truncation order");
    }
    const Rat value = s.coeff(n) * Rat(factorial(n));
    if (boost::multiprecision::denominator(value) != 1) {
        throw std::domain_error("count_from_series: n!*[x^n] is not an integer");
    }
    Nat count(boost::multiprecision::numerator(value));
    if (count < 0) throw std::domain_error("count_from_series: negative count");
    return count;
}

Series egf_stirling_band(unsigned k, const SizeBand& band, unsigned order) {
    Series s = series_pow(series_block_class(band, order), k);
    return series_scale(s, Rat(1) / Rat(factorial(k)));
}

Series egf_mixed(const CellSpec& spec, const SizeBand& band, unsigned order) {
    if (spec.any_may_be_empty()) {
        throw std::invalid_argument("egf_mixed: cell spec must be strict");
    }
    Series s = series_pow(series_block_class(band, order), spec.total_cells());
    Rat scale(1);
    for (unsigned c : spec.counts()) scale /= Rat(factorial(c));
    return series_scale(s, scale);
}

Series egf_mixed(const MixedParams& p, unsigned order) {
    if (p.k < 1) throw std::invalid_argument("egf_mixed: requires k >= 1");
    Series s = series_pow(series_block_class(p.band, order), p.r + p.k - 1);
    return series_scale(s, Rat(1) / Rat(factorial(p.r)));
}

}  // namespace stirmix
