#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <span>

namespace stirmix {

// Every count in this library is exact. Nat values produced by the public
// operations are always non-negative; Rat is the coefficient field of the
// series engine and is kept in reduced form by the backend.
using Nat = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Nat factorial(unsigned n);

/// n-choose-k; 0 when k > n.
Nat binomial(unsigned n, unsigned k);

/// n! / (parts[0]! * parts[1]! * ...). Throws std::invalid_argument unless
/// the parts sum to n.
Nat multinomial(unsigned n, std::span<const unsigned> parts);
Nat multinomial(unsigned n, std::initializer_list<unsigned> parts);

}  // namespace stirmix
