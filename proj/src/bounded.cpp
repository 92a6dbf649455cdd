#include "stirmix/bounded.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace stirmix {

namespace {
const Nat kZero = 0;
std::mutex cache_mutex;

// One shared table per band, grown on demand. Lookups copy the entry out
// while the lock is held, so growth never exposes a partially built row.
BoundedStirlingTable& cached_table(const SizeBand& band) {
    static std::map<std::pair<unsigned, long long>, BoundedStirlingTable> tables;
    const std::pair<unsigned, long long> key{band.lo(),
                                             band.hi() ? static_cast<long long>(*band.hi()) : -1};
    auto it = tables.find(key);
    if (it == tables.end()) it = tables.emplace(key, BoundedStirlingTable(band)).first;
    return it->second;
}
}  // namespace

void BoundedStirlingTable::ensure(unsigned max_n) {
    if (rows_.empty()) rows_.push_back({Nat(1)});
    while (rows_.size() <= max_n) {
        const unsigned n = static_cast<unsigned>(rows_.size());
        std::vector<Nat> row(n + 1);
        const unsigned hi_eff = std::min(band_.hi_or(n), n);
        for (unsigned k = 1; k <= n; ++k) {
            Nat v = 0;
            for (unsigned i = band_.lo() - 1; i + 1 <= hi_eff; ++i) {
                const unsigned rest = n - 1 - i;
                if (k - 1 > rest) continue;
                const Nat& sub = rows_[rest][k - 1];
                if (sub != 0) v += binomial(n - 1, i) * sub;
            }
            row[k] = std::move(v);
        }
        rows_.push_back(std::move(row));
    }
}

const Nat& BoundedStirlingTable::entry(unsigned n, unsigned k) const {
    if (n >= rows_.size()) throw std::out_of_range("BoundedStirlingTable: row not built");
    if (k > n) return kZero;
    return rows_[n][k];
}

Nat stirling_band(unsigned n, unsigned k, const SizeBand& band) {
    std::scoped_lock lock(cache_mutex);
    auto& table = cached_table(band);
    table.ensure(n);
    return table.entry(n, k);
}

Nat stirling_le(unsigned n, unsigned k, unsigned m) {
    if (m < 1) throw std::invalid_argument("stirling_le: requires m >= 1");
    return stirling_band(n, k, SizeBand::at_most(m));
}

Nat stirling_ge(unsigned n, unsigned k, unsigned l) {
    if (l < 1) throw std::invalid_argument("stirling_ge: requires l >= 1");
    return stirling_band(n, k, SizeBand::at_least(l));
}

Nat bell_le(unsigned n, unsigned m) {
    if (m < 1) throw std::invalid_argument("bell_le: requires m >= 1");
    Nat sum = 0;
    for (unsigned k = 0; k <= n; ++k) sum += stirling_le(n, k, m);
    return sum;
}

Nat stirling_le_cumulative(unsigned n, unsigned k, unsigned m) {
    if (k < 1) throw std::invalid_argument("stirling_le_cumulative: requires k >= 1");
    if (m < 1) throw std::invalid_argument("stirling_le_cumulative: requires m >= 1");
    Nat sum = 0;
    for (unsigned i = 1; i <= k; ++i) sum += stirling_le(n, i, m);
    return sum;
}

}  // namespace stirmix
