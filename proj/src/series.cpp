#include "stirmix/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stirmix {

namespace {
unsigned shared_order(const Series& a, const Series& b) {
    return std::min(a.order(), b.order());
}
}

Series series_add(const Series& a, const Series& b) {
    const unsigned order = shared_order(a, b);
    Series out(order);
    for (unsigned j = 0; j <= order; ++j) out.set_coeff(j, a.coeff(j) + b.coeff(j));
    return out;
}

Series series_sub(const Series& a, const Series& b) {
    const unsigned order = shared_order(a, b);
    Series out(order);
    for (unsigned j = 0; j <= order; ++j) out.set_coeff(j, a.coeff(j) - b.coeff(j));
    return out;
}

Series series_mul(const Series& a, const Series& b) {
    const unsigned order = shared_order(a, b);
    Series out(order);
    for (unsigned i = 0; i <= order; ++i) {
        if (a.coeff(i) == 0) continue;
        for (unsigned j = 0; i + j <= order; ++j) {
            if (b.coeff(j) == 0) continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

Series series_scale(const Series& a, const Rat& factor) {
    Series out(a.order());
    for (unsigned j = 0; j <= a.order(); ++j) out.set_coeff(j, a.coeff(j) * factor);
    return out;
}

Series series_pow(const Series& a, unsigned exponent) {
    Series out = Series::monomial(0, Rat(1), a.order());
    for (unsigned e = 0; e < exponent; ++e) out = series_mul(out, a);
    return out;
}

Series series_compose(const Series& outer, const Series& inner) {
    if (inner.coeff(0) != 0) {
        throw std::invalid_argument("series_compose: inner series must have zero constant term");
    }
    const unsigned order = shared_order(outer, inner);
    // Horner evaluation; with a nilpotent inner argument the truncation is exact.
    Series acc = Series::monomial(0, outer.coeff(order), order);
    for (unsigned j = order; j-- > 0;) {
        acc = series_mul(acc, inner);
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(j));
    }
    return acc;
}

std::string series_to_text(const Series& s) {
    std::ostringstream out;
    for (unsigned j = 0; j <= s.order(); ++j) {
        out << j << ": " << s.coeff(j).str() << '\n';
    }
    return out.str();
}

}  // namespace stirmix
