#pragma once

#include <string>
#include <vector>

#include "stirmix/nat.hpp"

namespace stirmix {

// Truncated power series with exact rational coefficients. Coefficients for
// degrees 0..order() are exact; nothing beyond the order is ever read, so a
// Series stands for a formal series known up to its truncation order.
// Operations take values and return fresh values; binary operations truncate
// to the smaller of the two orders.
class Series {
public:
    explicit Series(unsigned order) : coeffs_(order + 1, Rat(0)) {}

    static Series monomial(unsigned degree, const Rat& coefficient, unsigned order) {
        Series s(order);
        if (degree <= order) s.coeffs_[degree] = coefficient;
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const Rat& coeff(unsigned degree) const { return coeffs_.at(degree); }
    void set_coeff(unsigned degree, Rat value) { coeffs_.at(degree) = std::move(value); }

private:
    std::vector<Rat> coeffs_;
};

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
Series series_scale(const Series& a, const Rat& factor);
Series series_pow(const Series& a, unsigned exponent);

/// outer(inner), exact up to the shared truncation order. Throws
/// std::invalid_argument if inner has a non-zero constant term.
Series series_compose(const Series& outer, const Series& inner);

/// One line per coefficient: "<degree>: <numerator>[/<denominator>]".
std::string series_to_text(const Series& s);

}  // namespace stirmix
