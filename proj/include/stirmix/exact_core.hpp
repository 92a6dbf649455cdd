#pragma once

#include <vector>

#include "stirmix/nat.hpp"

namespace stirmix {

// Triangle of set-partition counts {n brace k} (partitions of an n-set into
// k non-empty unlabelled blocks), built by the fundamental recurrence
//
//     {n brace k} = {n-1 brace k-1} + k * {n-1 brace k}
//
// with {0 brace 0} = 1 and {n brace 0} = {0 brace n} = 0. Rows grow on
// demand; a built table is a value-semantic snapshot.
class StirlingTable {
public:
    StirlingTable() = default;
    explicit StirlingTable(unsigned max_n) { ensure(max_n); }

    void ensure(unsigned max_n);
    unsigned max_n() const { return rows_.empty() ? 0 : static_cast<unsigned>(rows_.size()) - 1; }

    /// 0 outside the triangle (k > n). Requires n <= max_n().
    const Nat& entry(unsigned n, unsigned k) const;

private:
    std::vector<std::vector<Nat>> rows_;
};

/// {n brace k} via the memoized fundamental recurrence.
Nat stirling2(unsigned n, unsigned k);

/// Same value via inclusion-exclusion: (1/k!) * sum_{m=0..k} (-1)^(k-m) C(k,m) m^n.
/// Throws std::logic_error if the alternating sum is not divisible by k!.
Nat stirling2_explicit(unsigned n, unsigned k);

/// Same value via the composition sum (n!/k!) * sum 1/(i_1! ... i_k!) over
/// i_1 + ... + i_k = n with every part >= 1, evaluated in exact rationals.
Nat stirling2_howard(unsigned n, unsigned k);

/// Number of partitions of an n-set into any number of non-empty blocks.
Nat bell(unsigned n);

/// Partitions of an n-set into k non-empty blocks with elements 1..r in
/// distinct blocks. Throws std::invalid_argument when n < r.
Nat r_stirling(unsigned n, unsigned k, unsigned r);

}  // namespace stirmix
