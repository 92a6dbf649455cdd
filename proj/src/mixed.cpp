#include "stirmix/mixed.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "stirmix/bounded.hpp"

namespace stirmix {

namespace {

void require_strict(const CellSpec& spec, const char* who) {
    if (spec.any_may_be_empty()) {
        throw std::invalid_argument(std::string(who) +
                                    ": may-be-empty labels need mixed_count_relaxed");
    }
}

Nat closed_form(const MixedParams& p) {
    return factorial(p.k - 1) * binomial(p.k + p.r - 1, p.k - 1) *
           stirling_band(p.n, p.k + p.r - 1, p.band);
}

Nat convolution(const MixedParams& p) {
    // Pick the i elements that fill the label-1 cells, then order the rest
    // into the k-1 labelled cells.
    Nat total = 0;
    for (unsigned i = 0; i <= p.n; ++i) {
        const Nat left = stirling_band(i, p.r, p.band);
        if (left == 0) continue;
        const Nat right = stirling_band(p.n - i, p.k - 1, p.band);
        if (right == 0) continue;
        total += binomial(p.n, i) * left * right;
    }
    return total * factorial(p.k - 1);
}

using Memo = std::map<std::tuple<unsigned, unsigned, unsigned>, Nat>;

Nat element_rec(unsigned n, unsigned k, unsigned r, const SizeBand& band, Memo& memo) {
    if (k == 1) return stirling_band(n, r, band);
    if (r == 0) return factorial(k - 1) * stirling_band(n, k - 1, band);
    if (n == 0) return 0;  // k >= 2 and r >= 1 leave no room for an empty set
    const auto key = std::make_tuple(n, k, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // The block of the largest element has i companions; it is either one of
    // the r label-1 cells or one of the k-1 labelled cells.
    const unsigned hi_eff = std::min(band.hi_or(n), n);
    Nat v = 0;
    for (unsigned i = band.lo() - 1; i + 1 <= hi_eff; ++i) {
        const unsigned rest = n - 1 - i;
        Nat inner = Nat(k - 1) * element_rec(rest, k - 1, r, band, memo) +
                    element_rec(rest, k, r - 1, band, memo);
        if (inner != 0) v += binomial(n - 1, i) * inner;
    }
    return memo.emplace(key, std::move(v)).first->second;
}

Nat three_case_rec(unsigned n, unsigned k, unsigned r, const SizeBand& band, Memo& memo) {
    if (k == 1) return stirling_band(n, r, band);
    if (r == 0) return factorial(k - 1) * stirling_band(n, k - 1, band);
    if (n == 0) return 0;
    const auto key = std::make_tuple(n, k, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Insert the largest element into an existing cell of a valid partition
    // of the other n-1 elements...
    Nat v = Nat(k + r - 1) * three_case_rec(n - 1, k, r, band, memo);
    // ...add the partitions where its cell has the minimum size...
    const unsigned lo = band.lo();
    if (n >= lo) {
        Nat grown = three_case_rec(n - lo, k, r - 1, band, memo) +
                    Nat(k - 1) * three_case_rec(n - lo, k - 1, r, band, memo);
        if (grown != 0) v += binomial(n - 1, lo - 1) * grown;
    }
    // ...and remove the insertions that pushed a full cell past the cap.
    if (band.hi() && n >= *band.hi() + 1) {
        const unsigned m = *band.hi();
        Nat overshoot = three_case_rec(n - m - 1, k, r - 1, band, memo) +
                        Nat(k - 1) * three_case_rec(n - m - 1, k - 1, r, band, memo);
        if (overshoot != 0) v -= binomial(n - 1, m) * overshoot;
    }
    if (v < 0) throw std::logic_error("mixed_stirling_three_case: negative count");
    return memo.emplace(key, std::move(v)).first->second;
}

}  // namespace

Nat mixed_count_convolution(unsigned n, const CellSpec& spec, const SizeBand& band) {
    require_strict(spec, "mixed_count_convolution");
    const auto& counts = spec.counts();
    Nat total = 0;
    std::function<void(std::size_t, unsigned, const Nat&)> walk =
        [&](std::size_t label, unsigned remaining, const Nat& weight) {
            if (label + 1 == counts.size()) {
                const Nat last = stirling_band(remaining, counts[label], band);
                if (last != 0) total += weight * last;
                return;
            }
            for (unsigned take = 0; take <= remaining; ++take) {
                const Nat part = stirling_band(take, counts[label], band);
                if (part == 0) continue;
                walk(label + 1, remaining - take, weight * binomial(remaining, take) * part);
            }
        };
    walk(0, n, Nat(1));
    return total;
}

Nat mixed_count_collapsed(unsigned n, const CellSpec& spec, const SizeBand& band) {
    require_strict(spec, "mixed_count_collapsed");
    const unsigned cells = spec.total_cells();
    return multinomial(cells, spec.counts()) * stirling_band(n, cells, band);
}

Nat mixed_count(unsigned n, const CellSpec& spec, const SizeBand& band) {
    require_strict(spec, "mixed_count");
    Nat by_convolution = mixed_count_convolution(n, spec, band);
    Nat by_collapse = mixed_count_collapsed(n, spec, band);
    if (by_convolution != by_collapse) {
        throw std::logic_error("mixed_count: convolution and collapsed routes disagree");
    }
    return by_collapse;
}

Nat mixed_count_relaxed(unsigned n, const CellSpec& spec, const SizeBand& band) {
    const auto& counts = spec.counts();
    std::vector<unsigned> used(counts.size());
    Nat total = 0;
    std::function<void(std::size_t)> walk = [&](std::size_t label) {
        if (label == counts.size()) {
            total += mixed_count(n, CellSpec::strict(used), band);
            return;
        }
        if (spec.may_be_empty(label)) {
            for (unsigned j = 0; j <= counts[label]; ++j) {
                used[label] = j;
                walk(label + 1);
            }
        } else {
            used[label] = counts[label];
            walk(label + 1);
        }
    };
    walk(0);
    return total;
}

Nat mixed_stirling(const MixedParams& p, MixedAlgorithm alg) {
    if (p.k < 1) throw std::invalid_argument("mixed_stirling: requires k >= 1");
    switch (alg) {
        case MixedAlgorithm::closed_form:
            return closed_form(p);
        case MixedAlgorithm::convolution:
            return convolution(p);
        case MixedAlgorithm::element_recurrence: {
            Memo memo;
            return element_rec(p.n, p.k, p.r, p.band, memo);
        }
        case MixedAlgorithm::three_case:
            return mixed_stirling_three_case(p);
    }
    throw std::invalid_argument("mixed_stirling: unknown algorithm");
}

Nat mixed_stirling_three_case(const MixedParams& p) {
    if (p.k < 1) throw std::invalid_argument("mixed_stirling_three_case: requires k >= 1");
    Memo memo;
    return three_case_rec(p.n, p.k, p.r, p.band, memo);
}

Nat mixed_bell(unsigned n, unsigned k, unsigned r) {
    CellSpec spec = CellSpec::stirling_shape(k, r);
    spec.allow_empty_everywhere();
    return mixed_count_relaxed(n, spec, SizeBand::unbounded());
}

Nat r_stirling_from_mixed(unsigned n, unsigned k, unsigned r) {
    if (r > k) throw std::invalid_argument("r_stirling_from_mixed: requires r <= k");
    if (k > n) throw std::invalid_argument("r_stirling_from_mixed: requires k <= n");
    Nat total = 0;
    for (unsigned i = 0; i <= k; ++i) {
        const Nat ways = binomial(r, i);
        if (ways == 0) continue;
        total += ways * mixed_stirling({n - r, i + 1, k - r, SizeBand::unbounded()});
    }
    return total;
}

}  // namespace stirmix
