#pragma once

#include <set>

#include "stirmix/cell_spec.hpp"
#include "stirmix/mixed.hpp"
#include "stirmix/series.hpp"
#include "stirmix/size_band.hpp"

namespace stirmix {

// Exponential generating functions for the partition families, assembled
// from the one-block class alpha(x) = sum over admissible sizes a of x^a/a!.
// A family's count is recovered with count_from_series: n! * [x^n].

/// sum_{a in sizes, a <= order} x^a / a!. Throws std::invalid_argument when
/// sizes is empty or contains 0 (blocks are non-empty).
Series series_block_class(const std::set<unsigned>& sizes, unsigned order);

/// Same for all sizes allowed by a band, truncated at the order.
Series series_block_class(const SizeBand& band, unsigned order);

/// e^x truncated at the order.
Series series_exp(unsigned order);

/// n! * [x^n] of s. Throws std::invalid_argument when n exceeds the
/// truncation order and std::domain_error when the value is not a
/// non-negative integer (which signals a wrong formula or truncation bug).
Nat count_from_series(const Series& s, unsigned n);

/// alpha(x)^k / k!  — partitions into exactly k banded blocks.
Series egf_stirling_band(unsigned k, const SizeBand& band, unsigned order);

/// alpha(x)^(c_1 + ... + c_k) / (c_1! ... c_k!) — strict cell specs only.
Series egf_mixed(const CellSpec& spec, const SizeBand& band, unsigned order);

/// alpha(x)^(r + k - 1) / r!  — the S(n, k, r) family for p's band.
Series egf_mixed(const MixedParams& p, unsigned order);

}  // namespace stirmix
