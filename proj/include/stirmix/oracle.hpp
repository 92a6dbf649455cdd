#pragma once

#include <vector>

#include "stirmix/cell_spec.hpp"
#include "stirmix/nat.hpp"
#include "stirmix/size_band.hpp"

namespace stirmix {

inline constexpr unsigned kOracleDefaultCap = 12;

// Exhaustive enumeration query over partitions of {1..n} into the cells of
// spec. Strict labels must use all of their cells; may-be-empty labels may
// leave cells unused. Block sizes obey the band, and when distinct_prefix is
// r', the elements 1..r' must land in pairwise distinct cells. Queries with
// n above the cap are rejected; raise cap explicitly to override.
struct OracleQuery {
    unsigned n;
    CellSpec spec;
    SizeBand band = SizeBand::unbounded();
    unsigned distinct_prefix = 0;
    unsigned cap = kOracleDefaultCap;
};

// Canonical form of one configuration: for each label (in label order), the
// list of its non-empty blocks ordered by smallest element, every block an
// ascending list of elements.
using OraclePartition = std::vector<std::vector<std::vector<unsigned>>>;

/// Exact count of configurations matching the query.
Nat oracle_count(const OracleQuery& q);

/// Every configuration exactly once, in a deterministic canonical order.
std::vector<OraclePartition> oracle_enumerate(const OracleQuery& q);

/// Render one configuration like "{1,2}{3} | {4}" (labels separated by '|').
std::string to_string(const OraclePartition& p);

}  // namespace stirmix
