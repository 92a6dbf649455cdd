#pragma once

#include "stirmix/cell_spec.hpp"
#include "stirmix/nat.hpp"
#include "stirmix/size_band.hpp"

namespace stirmix {

// Parameters of the three-index family S(n, k, r): partitions of an n-set
// into r interchangeable cells of label 1 plus one cell for each of the
// labels 2..k, every cell non-empty and every cell size inside the band.
// Degenerate corners follow the usual conventions, which the closed form
// produces without special cases:
//   S(n, 1, r) = {n brace r}_band
//   S(n, k, 0) = (k-1)! * {n brace k-1}_band
//   S(n, k, 1) = k! * {n brace k}_band
struct MixedParams {
    unsigned n;
    unsigned k;  // >= 1
    unsigned r;
    SizeBand band = SizeBand::unbounded();
};

enum class MixedAlgorithm {
    closed_form,         // (k-1)! * C(k+r-1, k-1) * {n brace k+r-1}_band
    convolution,         // split off the label-1 cells, then order the rest
    element_recurrence,  // classify the block of the largest element
    three_case,          // insert the largest element, correcting overshoot
};

/// Number of partitions of an n-set into the cells of the spec with every
/// cell non-empty and every block size inside the band. Computed two
/// independent ways (the
/// label-by-label multinomial convolution and the collapsed single-table
/// form) which must agree; a mismatch throws std::logic_error. Specs with a
/// may-be-empty label are rejected — use mixed_count_relaxed.
Nat mixed_count(unsigned n, const CellSpec& spec, const SizeBand& band);

/// The two routes of mixed_count, exposed for cross-checking.
Nat mixed_count_convolution(unsigned n, const CellSpec& spec, const SizeBand& band);
Nat mixed_count_collapsed(unsigned n, const CellSpec& spec, const SizeBand& band);

/// Sum of mixed_count over all sub-specs where each may-be-empty label may
/// use any number of cells from 0 up to its count (strict labels keep their
/// full count).
Nat mixed_count_relaxed(unsigned n, const CellSpec& spec, const SizeBand& band);

/// S(n, k, r) for the band in p. All algorithms return the same value.
Nat mixed_stirling(const MixedParams& p, MixedAlgorithm alg = MixedAlgorithm::closed_form);

/// The three-case insertion recurrence for S(n, k, r), handling lower and
/// upper size bounds in one recursion with the overshoot terms subtracted.
Nat mixed_stirling_three_case(const MixedParams& p);

/// Relaxed count over the (r, 1, ..., 1) shape with every label allowed to
/// be empty and no size constraint.
Nat mixed_bell(unsigned n, unsigned k, unsigned r);

/// {n brace k}_r evaluated through sum_{i=0..k} C(r,i) * S(n-r, i+1, k-r),
/// independent of the r_stirling recurrence so the two can cross-check.
/// Throws std::invalid_argument unless r <= k <= n.
Nat r_stirling_from_mixed(unsigned n, unsigned k, unsigned r);

}  // namespace stirmix
