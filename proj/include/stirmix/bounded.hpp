#pragma once

#include <vector>

#include "stirmix/nat.hpp"
#include "stirmix/size_band.hpp"

namespace stirmix {

// Partition counts with every block size confined to a band. Rows are built
// by classifying the block of the largest element: if that block keeps i
// companions (so has size i+1, with lo <= i+1 <= hi), the rest contributes a
// (k-1)-block partition of the remaining n-1-i elements:
//
//     T(n, k) = sum_{i = lo-1}^{hi-1} C(n-1, i) * T(n-1-i, k-1)
//
// with T(0,0) = 1. Entries vanish outside k*lo <= n <= k*hi.
class BoundedStirlingTable {
public:
    explicit BoundedStirlingTable(SizeBand band, unsigned max_n = 0) : band_(band) { ensure(max_n); }

    void ensure(unsigned max_n);
    unsigned max_n() const { return rows_.empty() ? 0 : static_cast<unsigned>(rows_.size()) - 1; }
    const SizeBand& band() const { return band_; }

    /// 0 outside the triangle (k > n). Requires n <= max_n().
    const Nat& entry(unsigned n, unsigned k) const;

private:
    SizeBand band_;
    std::vector<std::vector<Nat>> rows_;
};

/// Partitions of an n-set into k non-empty blocks with all sizes in the band.
Nat stirling_band(unsigned n, unsigned k, const SizeBand& band);

/// Blocks of size at most m. Throws std::invalid_argument when m < 1.
Nat stirling_le(unsigned n, unsigned k, unsigned m);

/// Blocks of size at least l. Throws std::invalid_argument when l < 1.
Nat stirling_ge(unsigned n, unsigned k, unsigned l);

/// Partitions into any number of blocks, each of size at most m.
Nat bell_le(unsigned n, unsigned m);

/// sum_{i=1..k} stirling_le(n, i, m). Requires k >= 1.
Nat stirling_le_cumulative(unsigned n, unsigned k, unsigned m);

}  // namespace stirmix
