#include "stirmix/verify.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stirmix/bounded.hpp"
#include "stirmix/egf.hpp"
#include "stirmix/exact_core.hpp"
#include "stirmix/mixed.hpp"
#include "stirmix/oracle.hpp"
#include "stirmix/version.hpp"

namespace stirmix {

namespace {

// ---------------------------------------------------------------------------
// small utilities

Nat S(unsigned n, unsigned k, unsigned r, const SizeBand& band) {
    return mixed_stirling(MixedParams{n, k, r, band});
}

struct Pt {
    std::string s;
    Pt& operator()(const char* key, unsigned v) { return add(key, std::to_string(v)); }
    Pt& operator()(const char* key, const std::string& v) { return add(key, v); }
    Pt& add(const char* key, const std::string& v) {
        if (!s.empty()) s += ' ';
        s += key;
        s += '=';
        s += v;
        return *this;
    }
    operator std::string() const { return s; }
};

class Recorder {
public:
    explicit Recorder(unsigned cap) : cap_(cap) {}

    void check(std::string params, const Nat& lhs, const Nat& rhs) {
        record(std::move(params), lhs == rhs, lhs.str(), rhs.str());
    }
    void record(std::string params, bool ok, std::string lhs, std::string rhs) {
        ++points_;
        if (!ok) {
            ++mismatches_;
            if (ces_.size() < cap_) ces_.push_back({std::move(params), std::move(lhs), std::move(rhs)});
        }
    }

    std::uint64_t points() const { return points_; }
    std::uint64_t mismatches() const { return mismatches_; }
    std::vector<Counterexample> take() { return std::move(ces_); }

private:
    unsigned cap_;
    std::uint64_t points_ = 0;
    std::uint64_t mismatches_ = 0;
    std::vector<Counterexample> ces_;
};

std::vector<unsigned> finite_ms(const GridLimits& g) {
    std::vector<unsigned> out;
    for (const auto& m : g.ms)
        if (m) out.push_back(*m);
    return out;
}

// Unbounded first, then each finite size cap.
std::vector<SizeBand> upper_bands(const GridLimits& g) {
    std::vector<SizeBand> out{SizeBand::unbounded()};
    for (unsigned m : finite_ms(g)) out.push_back(SizeBand::at_most(m));
    return out;
}

std::vector<SizeBand> lower_bands(const GridLimits& g) {
    std::vector<SizeBand> out;
    for (unsigned l : g.ls) out.push_back(SizeBand::at_least(l));
    return out;
}

std::vector<SizeBand> all_bands(const GridLimits& g) {
    std::vector<SizeBand> out = upper_bands(g);
    for (unsigned l : g.ls)
        if (l >= 2) out.push_back(SizeBand::at_least(l));
    return out;
}

const std::vector<SizeBand>& std_bands() {
    static const std::vector<SizeBand> bands{
        SizeBand::unbounded(),  SizeBand::at_most(2),  SizeBand::at_most(3),
        SizeBand::at_least(2),  SizeBand::at_least(3), SizeBand::between(2, 3),
    };
    return bands;
}

const std::vector<std::vector<unsigned>>& cell_count_lists() {
    static const std::vector<std::vector<unsigned>> lists{
        {1}, {2}, {3}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {3, 2, 1},
    };
    return lists;
}

// sum_{j=0..upper} x^j/j!, truncated at order
Series partial_exp(unsigned upper, unsigned order) {
    Series s(order);
    for (unsigned j = 0; j <= std::min(upper, order); ++j) {
        s.set_coeff(j, Rat(1) / Rat(factorial(j)));
    }
    return s;
}

std::string iso_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

// ---------------------------------------------------------------------------
// classical layer

void ev_eq_bell(const GridLimits& g, Recorder& rec) {
    for (unsigned n = 1; n <= g.max_n; ++n) {
        Nat rhs = 0;
        for (unsigned k = 1; k <= n; ++k) rhs += stirling2_explicit(n, k);
        rec.check(Pt{}("n", n), bell(n), rhs);
    }
}

void ev_explicit_formula(const GridLimits& g, Recorder& rec) {
    for (unsigned n = 0; n <= g.max_n; ++n)
        for (unsigned k = 0; k <= n; ++k)
            rec.check(Pt{}("n", n)("k", k), stirling2(n, k), stirling2_explicit(n, k));
}

void ev_howard_formula(const GridLimits& g, Recorder& rec) {
    for (unsigned n = 1; n <= g.max_n; ++n)
        for (unsigned k = 1; k <= n; ++k)
            rec.check(Pt{}("n", n)("k", k), stirling2(n, k), stirling2_howard(n, k));
}

void ev_r_stirling_reduction(const GridLimits& g, Recorder& rec) {
    for (unsigned n = 1; n <= g.max_n; ++n)
        for (unsigned k = 0; k <= n; ++k)
            rec.check(Pt{}("n", n)("k", k), r_stirling(n, k, 1), stirling2(n, k));
}

// ---------------------------------------------------------------------------
// size-restricted recurrences

void ev_thm_2_1_as_stated(const GridLimits& g, Recorder& rec) {
    for (unsigned m : finite_ms(g))
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k) {
                Nat rhs = 0;
                for (unsigned i = 0; i < m && i <= n && i <= k; ++i) {
                    rhs += binomial(n, i) * stirling_le(n - i, k - i, m);
                }
                rec.check(Pt{}("n", n)("k", k)("m", m), stirling_le(n, k, m), rhs);
            }
}

void ev_thm_2_1_corrected(const GridLimits& g, Recorder& rec) {
    for (unsigned m : finite_ms(g))
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k) {
                Nat rhs = 0;
                for (unsigned i = 0; i < m && i <= n - 1; ++i) {
                    rhs += binomial(n - 1, i) * stirling_le(n - 1 - i, k - 1, m);
                }
                rec.check(Pt{}("n", n)("k", k)("m", m), stirling_le(n, k, m), rhs);
            }
}

void ev_thm_3_1_as_stated(const GridLimits& g, Recorder& rec) {
    for (unsigned l : g.ls)
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k) {
                Nat rhs = 0;
                for (unsigned i = l; i <= n - 1; ++i) {
                    rhs += binomial(n - 1, i) * stirling_ge(n - i - 1, k - 1, l);
                }
                rec.check(Pt{}("n", n)("k", k)("l", l), stirling_ge(n, k, l), rhs);
            }
}

void ev_thm_3_1_corrected(const GridLimits& g, Recorder& rec) {
    for (unsigned l : g.ls)
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k) {
                Nat rhs = 0;
                for (unsigned i = l - 1; i <= n - 1; ++i) {
                    rhs += binomial(n - 1, i) * stirling_ge(n - 1 - i, k - 1, l);
                }
                rec.check(Pt{}("n", n)("k", k)("l", l), stirling_ge(n, k, l), rhs);
            }
}

void ev_thm_mos(const GridLimits& g, Recorder& rec) {
    for (unsigned l : g.ls)
        for (unsigned m : finite_ms(g)) {
            if (m < l) continue;
            const SizeBand band = SizeBand::between(l, m);
            for (unsigned n = 0; n + 1 <= g.max_n; ++n)
                for (unsigned k = 1; k <= g.max_k; ++k) {
                    Nat rhs = 0;
                    for (unsigned i = l - 1; i < m && i <= n; ++i) {
                        rhs += binomial(n, i) * stirling_band(n - i, k - 1, band);
                    }
                    rec.check(Pt{}("n+1", n + 1)("k", k)("band", to_string(band)),
                              stirling_band(n + 1, k, band), rhs);
                }
        }
}

// ---------------------------------------------------------------------------
// mixed counts over general cell multisets

void ev_thm_2_3(const GridLimits& g, Recorder& rec) {
    for (const SizeBand& band : all_bands(g))
        for (const auto& counts : cell_count_lists()) {
            const CellSpec spec = CellSpec::strict(counts);
            for (unsigned n = 0; n <= g.max_n; ++n) {
                rec.check(
                    Pt{}("n", n)("cells", spec.to_string())("band", to_string(band)),
                    mixed_count_collapsed(n, spec, band),
                    mixed_count_convolution(n, spec, band));
            }
        }
}

// ---------------------------------------------------------------------------
// the S(n,k,r) identities

void conv_case(const std::vector<SizeBand>& bands, const GridLimits& g, Recorder& rec) {
    for (const SizeBand& band : bands)
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k)
                for (unsigned r = 1; r <= g.max_r; ++r) {
                    Nat rhs = 0;
                    for (unsigned i = 0; i <= n; ++i) {
                        const Nat left = stirling_band(i, r, band);
                        if (left == 0) continue;
                        const Nat right = stirling_band(n - i, k - 1, band);
                        if (right == 0) continue;
                        rhs += binomial(n, i) * left * right;
                    }
                    rhs *= factorial(k - 1);
                    rec.check(Pt{}("n", n)("k", k)("r", r)("band", to_string(band)),
                              S(n, k, r, band), rhs);
                }
}

void ev_thm_2_5(const GridLimits& g, Recorder& rec) { conv_case(upper_bands(g), g, rec); }
void ev_thm_3_4(const GridLimits& g, Recorder& rec) { conv_case(lower_bands(g), g, rec); }

void ev_thm_2_6(const GridLimits& g, Recorder& rec) {
    for (const SizeBand& band : upper_bands(g))
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k)
                for (unsigned r = 1; r <= g.max_r; ++r) {
                    const Nat lhs = mixed_stirling({n, k, r, band}, MixedAlgorithm::element_recurrence);
                    const Nat rhs = factorial(k - 1) * binomial(k + r - 1, k - 1) *
                                    stirling_band(n, k + r - 1, band);
                    rec.check(Pt{}("n", n)("k", k)("r", r)("band", to_string(band)), lhs, rhs);
                }
}

void element_case(const std::vector<SizeBand>& bands, const GridLimits& g, Recorder& rec,
                  bool with_coefficient) {
    for (const SizeBand& band : bands)
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = with_coefficient ? 1u : 2u; k <= g.max_k; ++k)
                for (unsigned r = 1; r <= g.max_r; ++r) {
                    const unsigned hi_eff = std::min(band.hi_or(n), n);
                    Nat rhs = 0;
                    for (unsigned i = band.lo() - 1; i + 1 <= hi_eff; ++i) {
                        const unsigned rest = n - 1 - i;
                        Nat inner = S(rest, k, r - 1, band);
                        if (k >= 2) {
                            Nat labelled = S(rest, k - 1, r, band);
                            inner += with_coefficient ? Nat(k - 1) * labelled : labelled;
                        }
                        if (inner != 0) rhs += binomial(n - 1, i) * inner;
                    }
                    rec.check(Pt{}("n", n)("k", k)("r", r)("band", to_string(band)),
                              S(n, k, r, band), rhs);
                }
}

void ev_thm_2_7(const GridLimits& g, Recorder& rec) {
    std::vector<SizeBand> bands;
    for (unsigned m : finite_ms(g)) bands.push_back(SizeBand::at_most(m));
    element_case(bands, g, rec, true);
}

void ev_thm_3_5(const GridLimits& g, Recorder& rec) { element_case(lower_bands(g), g, rec, true); }

void ev_thm_3_5_as_stated(const GridLimits& g, Recorder& rec) {
    element_case(lower_bands(g), g, rec, false);
}

Nat thm_2_8_rhs(unsigned n, unsigned k, unsigned r, unsigned m, bool printed_sign) {
    const SizeBand band = SizeBand::at_most(m);
    Nat v = S(n - 1, k, r - 1, band) + Nat(k + r - 1) * S(n - 1, k, r, band);
    if (k >= 2) v += Nat(k - 1) * S(n - 1, k - 1, r, band);
    if (n >= m + 1) {
        const Nat ways = binomial(n - 1, m);
        const Nat first = ways * S(n - m - 1, k, r - 1, band);
        const Nat second = k >= 2 ? ways * Nat(k - 1) * S(n - m - 1, k - 1, r, band) : Nat(0);
        // printed: -(first - second); the count argument subtracts both
        if (printed_sign) {
            v = v - first + second;
        } else {
            v = v - first - second;
        }
    }
    return v;
}

void thm_2_8_case(const GridLimits& g, Recorder& rec, bool printed_sign) {
    for (unsigned m : finite_ms(g))
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k)
                for (unsigned r = 1; r <= g.max_r; ++r) {
                    rec.check(Pt{}("n", n)("k", k)("r", r)("m", m),
                              S(n, k, r, SizeBand::at_most(m)), thm_2_8_rhs(n, k, r, m, printed_sign));
                }
}

void ev_thm_2_8_as_stated(const GridLimits& g, Recorder& rec) { thm_2_8_case(g, rec, true); }
void ev_thm_2_8_corrected(const GridLimits& g, Recorder& rec) { thm_2_8_case(g, rec, false); }

void ev_thm_3_6(const GridLimits& g, Recorder& rec) {
    for (const SizeBand& band : lower_bands(g)) {
        const unsigned l = band.lo();
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k)
                for (unsigned r = 1; r <= g.max_r; ++r) {
                    Nat rhs = Nat(k + r - 1) * S(n - 1, k, r, band);
                    if (n >= l) {
                        Nat grown = S(n - l, k, r - 1, band);
                        if (k >= 2) grown += Nat(k - 1) * S(n - l, k - 1, r, band);
                        if (grown != 0) rhs += binomial(n - 1, l - 1) * grown;
                    }
                    rec.check(Pt{}("n", n)("k", k)("r", r)("band", to_string(band)),
                              S(n, k, r, band), rhs);
                }
    }
}

// ---------------------------------------------------------------------------
// the block-splitting convolutions with a marked sub-family

enum class Thm29Bounds { printed, natural };

Nat thm_2_9_sum(unsigned n, unsigned k, unsigned r, unsigned s, const SizeBand& band,
                Thm29Bounds bounds) {
    unsigned j_lo = 0;
    unsigned j_hi = n;
    if (bounds == Thm29Bounds::printed) {
        const long lo = static_cast<long>(k) + r + 1 - static_cast<long>(s);
        const long hi = static_cast<long>(n) - static_cast<long>(s);
        if (lo > hi || hi < 0) return 0;
        j_lo = static_cast<unsigned>(std::max(0L, lo));
        j_hi = static_cast<unsigned>(hi);
    }
    Nat total = 0;
    for (unsigned j = j_lo; j <= j_hi && j <= n; ++j) {
        const Nat marked = stirling_band(n - j, s, band);
        if (marked == 0) continue;
        const Nat rest = S(j, k, r - s, band);
        if (rest == 0) continue;
        total += binomial(n, j) * marked * rest;
    }
    return total;
}

Nat thm_2_9_labeled_sum(unsigned n, unsigned k, unsigned r, unsigned s, const SizeBand& band,
                        Thm29Bounds bounds) {
    unsigned j_lo = 0;
    unsigned j_hi = n;
    if (bounds == Thm29Bounds::printed) {
        const long lo = static_cast<long>(k) + r + 1 - static_cast<long>(s);
        const long hi = static_cast<long>(n) - static_cast<long>(s);
        if (lo > hi || hi < 0) return 0;
        j_lo = static_cast<unsigned>(std::max(0L, lo));
        j_hi = static_cast<unsigned>(hi);
    }
    const Nat label_ways = binomial(k - 1, s) * factorial(s);
    Nat total = 0;
    for (unsigned j = j_lo; j <= j_hi && j <= n; ++j) {
        const Nat marked = stirling_band(n - j, s, band);
        if (marked == 0) continue;
        const Nat rest = S(j, k - s, r, band);
        if (rest == 0) continue;
        total += binomial(n, j) * label_ways * marked * rest;
    }
    return total;
}

template <typename SumFn>
void thm_2_9_case(const GridLimits& g, Recorder& rec, SumFn sum, Thm29Bounds bounds,
                  Nat (*divisor)(unsigned k, unsigned r, unsigned s)) {
    for (unsigned n = 1; n <= g.max_n; ++n)
        for (unsigned k = 1; k <= g.max_k; ++k)
            for (unsigned r = 1; r <= g.max_r; ++r) {
                const unsigned s_max = std::min(r, k >= 1 ? k - 1 : 0u);
                for (unsigned s = 1; s <= s_max; ++s)
                    for (const SizeBand& band : upper_bands(g)) {
                        const Nat lhs = S(n, k, r, band);
                        const Nat total = sum(n, k, r, s, band, bounds);
                        std::string params =
                            Pt{}("n", n)("k", k)("r", r)("s", s)("band", to_string(band));
                        if (divisor == nullptr) {
                            rec.record(std::move(params), lhs == total, lhs.str(), total.str());
                        } else {
                            const Nat div = divisor(k, r, s);
                            Nat q, rem;
                            boost::multiprecision::divide_qr(total, div, q, rem);
                            const bool ok = rem == 0 && q == lhs;
                            std::string rhs =
                                rem == 0 ? q.str() : total.str() + "/" + div.str();
                            rec.record(std::move(params), ok, lhs.str(), std::move(rhs));
                        }
                    }
            }
}

Nat div_first_family(unsigned, unsigned r, unsigned s) { return binomial(r, s); }
Nat div_labeled_family(unsigned k, unsigned, unsigned s) { return binomial(k - 1, s); }

void ev_thm_2_9_as_stated(const GridLimits& g, Recorder& rec) {
    thm_2_9_case(g, rec, thm_2_9_sum, Thm29Bounds::printed, nullptr);
}
void ev_thm_2_9_natural(const GridLimits& g, Recorder& rec) {
    thm_2_9_case(g, rec, thm_2_9_sum, Thm29Bounds::natural, nullptr);
}
void ev_thm_2_9_corrected(const GridLimits& g, Recorder& rec) {
    thm_2_9_case(g, rec, thm_2_9_sum, Thm29Bounds::natural, div_first_family);
}
void ev_thm_2_9_labeled_as_stated(const GridLimits& g, Recorder& rec) {
    thm_2_9_case(g, rec, thm_2_9_labeled_sum, Thm29Bounds::printed, nullptr);
}
void ev_thm_2_9_labeled_natural(const GridLimits& g, Recorder& rec) {
    thm_2_9_case(g, rec, thm_2_9_labeled_sum, Thm29Bounds::natural, nullptr);
}
void ev_thm_2_9_labeled_corrected(const GridLimits& g, Recorder& rec) {
    thm_2_9_case(g, rec, thm_2_9_labeled_sum, Thm29Bounds::natural, div_labeled_family);
}

// ---------------------------------------------------------------------------
// the coloured-block and coloured-element identities

unsigned colored_upper(unsigned n, unsigned k, unsigned r, const SizeBand& band) {
    const long feasibility = static_cast<long>(n) + 2 - static_cast<long>(k) - static_cast<long>(r);
    if (feasibility < 1) return 0;
    unsigned upper = static_cast<unsigned>(feasibility);
    if (band.hi()) upper = std::min(upper, *band.hi());
    return std::min(upper, n);
}

void eq_rS_case(const GridLimits& g, Recorder& rec, bool printed) {
    for (const SizeBand& band : upper_bands(g))
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k)
                for (unsigned r = 1; r <= g.max_r; ++r) {
                    const unsigned upper = colored_upper(n, k, r, band);
                    Nat rhs = 0;
                    for (unsigned j = 1; j <= upper; ++j) {
                        rhs += binomial(n, j) * S(printed ? n : n - j, k, r - 1, band);
                    }
                    rec.check(Pt{}("n", n)("k", k)("r", r)("band", to_string(band)),
                              Nat(r) * S(n, k, r, band), rhs);
                }
}

void eq_nS_case(const GridLimits& g, Recorder& rec, bool printed) {
    for (const SizeBand& band : upper_bands(g))
        for (unsigned n = 1; n <= g.max_n; ++n)
            for (unsigned k = 1; k <= g.max_k; ++k)
                for (unsigned r = 1; r <= g.max_r; ++r) {
                    const unsigned upper = colored_upper(n, k, r, band);
                    Nat rhs = 0;
                    for (unsigned j = 1; j <= upper; ++j) {
                        const unsigned rest = printed ? n : n - j;
                        Nat bracket = S(rest, k, r - 1, band);
                        if (k >= 2) bracket += Nat(k - 1) * S(rest, k - 1, r, band);
                        rhs += Nat(j) * binomial(n, j) * bracket;
                    }
                    rec.check(Pt{}("n", n)("k", k)("r", r)("band", to_string(band)),
                              Nat(n) * S(n, k, r, band), rhs);
                }
}

void ev_eq_rS_as_stated(const GridLimits& g, Recorder& rec) { eq_rS_case(g, rec, true); }
void ev_eq_rS_corrected(const GridLimits& g, Recorder& rec) { eq_rS_case(g, rec, false); }
void ev_eq_nS_as_stated(const GridLimits& g, Recorder& rec) { eq_nS_case(g, rec, true); }
void ev_eq_nS_corrected(const GridLimits& g, Recorder& rec) { eq_nS_case(g, rec, false); }

// ---------------------------------------------------------------------------
// the r-Stirling bridge

void ev_thm_fix(const GridLimits& g, Recorder& rec) {
    for (unsigned n = 1; n <= g.max_n; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (unsigned r = 1; r <= k; ++r)
                rec.check(Pt{}("n", n)("k", k)("r", r), r_stirling(n, k, r),
                          r_stirling_from_mixed(n, k, r));
}

// ---------------------------------------------------------------------------
// generating functions

void ev_egf_stirling_le(const GridLimits& g, Recorder& rec) {
    for (unsigned m : finite_ms(g))
        for (unsigned k = 1; k <= g.max_k; ++k) {
            const Series s = egf_stirling_band(k, SizeBand::at_most(m), g.max_n);
            for (unsigned n = 0; n <= g.max_n; ++n)
                rec.check(Pt{}("n", n)("k", k)("m", m), stirling_le(n, k, m),
                          count_from_series(s, n));
        }
}

void egf_ge_case(const GridLimits& g, Recorder& rec, bool printed) {
    for (unsigned l : g.ls)
        for (unsigned m : finite_ms(g))
            for (unsigned k = 1; k <= g.max_k; ++k) {
                // printed form subtracts the partial sum up to m-1 where the
                // lower bound l is expected
                const unsigned cut = printed ? m - 1 : l - 1;
                const Series alpha = series_sub(series_exp(g.max_n), partial_exp(cut, g.max_n));
                const Series s =
                    series_scale(series_pow(alpha, k), Rat(1) / Rat(factorial(k)));
                for (unsigned n = 0; n <= g.max_n; ++n)
                    rec.check(Pt{}("n", n)("k", k)("l", l)("m", m), stirling_ge(n, k, l),
                              count_from_series(s, n));
            }
}

void ev_egf_stirling_ge_as_stated(const GridLimits& g, Recorder& rec) { egf_ge_case(g, rec, true); }
void ev_egf_stirling_ge_corrected(const GridLimits& g, Recorder& rec) { egf_ge_case(g, rec, false); }

void ev_egf_band(const GridLimits& g, Recorder& rec) {
    for (unsigned l : g.ls)
        for (unsigned m : finite_ms(g)) {
            if (m < l) continue;
            const SizeBand band = SizeBand::between(l, m);
            for (unsigned k = 1; k <= g.max_k; ++k) {
                const Series s = egf_stirling_band(k, band, g.max_n);
                for (unsigned n = 0; n <= g.max_n; ++n)
                    rec.check(Pt{}("n", n)("k", k)("band", to_string(band)),
                              stirling_band(n, k, band), count_from_series(s, n));
            }
        }
}

void ev_thm_4_3(const GridLimits& g, Recorder& rec) {
    for (const SizeBand& band : std_bands())
        for (unsigned k = 1; k <= g.max_k; ++k) {
            const Series beta =
                Series::monomial(k, Rat(1) / Rat(factorial(k)), g.max_n);
            const Series composed = series_compose(beta, series_block_class(band, g.max_n));
            for (unsigned n = 0; n <= g.max_n; ++n)
                rec.check(Pt{}("n", n)("k", k)("band", to_string(band)),
                          stirling_band(n, k, band), count_from_series(composed, n));
        }
}

void ev_egf_mixed_general(const GridLimits& g, Recorder& rec) {
    for (const auto& counts : cell_count_lists()) {
        const CellSpec spec = CellSpec::strict(counts);
        const Series s = egf_mixed(spec, SizeBand::unbounded(), g.max_n);
        for (unsigned n = 0; n <= g.max_n; ++n)
            rec.check(Pt{}("n", n)("cells", spec.to_string()),
                      mixed_count(n, spec, SizeBand::unbounded()), count_from_series(s, n));
    }
}

void egf_mixed_stirling_case(const std::vector<SizeBand>& bands, const GridLimits& g,
                             Recorder& rec) {
    for (const SizeBand& band : bands)
        for (unsigned k = 1; k <= g.max_k; ++k)
            for (unsigned r = 1; r <= g.max_r; ++r) {
                const Series s = egf_mixed(MixedParams{0, k, r, band}, g.max_n);
                for (unsigned n = 0; n <= g.max_n; ++n)
                    rec.check(Pt{}("n", n)("k", k)("r", r)("band", to_string(band)),
                              S(n, k, r, band), count_from_series(s, n));
            }
}

void ev_egf_mixed_stirling(const GridLimits& g, Recorder& rec) {
    egf_mixed_stirling_case({SizeBand::unbounded()}, g, rec);
}

void ev_egf_mixed_restricted(const GridLimits& g, Recorder& rec) {
    std::vector<SizeBand> bands;
    for (unsigned m : finite_ms(g)) bands.push_back(SizeBand::at_most(m));
    egf_mixed_stirling_case(bands, g, rec);
}

void egf_mixed_assoc_case(const GridLimits& g, Recorder& rec, bool printed) {
    for (unsigned l : g.ls)
        for (unsigned m : finite_ms(g))
            for (unsigned k = 1; k <= g.max_k; ++k)
                for (unsigned r = 1; r <= g.max_r; ++r) {
                    // printed form subtracts the partial sum up to m where
                    // l-1 is expected
                    const unsigned cut = printed ? m : l - 1;
                    const Series alpha =
                        series_sub(series_exp(g.max_n), partial_exp(cut, g.max_n));
                    const Series s = series_scale(series_pow(alpha, r + k - 1),
                                                  Rat(1) / Rat(factorial(r)));
                    for (unsigned n = 0; n <= g.max_n; ++n)
                        rec.check(Pt{}("n", n)("k", k)("r", r)("l", l)("m", m),
                                  S(n, k, r, SizeBand::at_least(l)), count_from_series(s, n));
                }
}

void ev_egf_mixed_assoc_as_stated(const GridLimits& g, Recorder& rec) {
    egf_mixed_assoc_case(g, rec, true);
}
void ev_egf_mixed_assoc_corrected(const GridLimits& g, Recorder& rec) {
    egf_mixed_assoc_case(g, rec, false);
}

// ---------------------------------------------------------------------------
// the worked example and the brute-force arbitration

void ev_example_strict(const GridLimits&, Recorder& rec) {
    const OracleQuery q{3, CellSpec::strict({2, 1}), SizeBand::at_most(2)};
    rec.check("n=3 cells=2,1 band=<=2", oracle_count(q),
              S(3, 2, 2, SizeBand::at_most(2)));
}

void ev_example_relaxed(const GridLimits&, Recorder& rec) {
    CellSpec spec = CellSpec::strict({2, 1});
    spec.allow_empty(0);
    const OracleQuery q{3, spec, SizeBand::at_most(2)};
    rec.check("n=3 cells=2*,1 band=<=2", oracle_count(q),
              mixed_count_relaxed(3, spec, SizeBand::at_most(2)));
}

void ev_oracle_stirling2(const GridLimits& g, Recorder& rec) {
    const unsigned cap = std::min(g.max_n, 10u);
    for (unsigned n = 0; n <= cap; ++n)
        for (unsigned k = 1; k <= std::min(n, g.max_k); ++k) {
            const OracleQuery q{n, CellSpec::strict({k})};
            rec.check(Pt{}("n", n)("k", k), oracle_count(q), stirling2(n, k));
        }
}

void ev_oracle_bell(const GridLimits& g, Recorder& rec) {
    const unsigned cap = std::min(g.max_n, 10u);
    for (unsigned n = 0; n <= cap; ++n) {
        CellSpec spec = CellSpec::strict({n});
        spec.allow_empty_everywhere();
        const OracleQuery q{n, spec};
        rec.check(Pt{}("n", n), oracle_count(q), bell(n));
    }
}

void ev_oracle_stirling_band(const GridLimits& g, Recorder& rec) {
    const unsigned cap = std::min(g.max_n, 10u);
    for (const SizeBand& band : std_bands())
        for (unsigned n = 0; n <= cap; ++n)
            for (unsigned k = 1; k <= std::min(n, g.max_k); ++k) {
                const OracleQuery q{n, CellSpec::strict({k}), band};
                rec.check(Pt{}("n", n)("k", k)("band", to_string(band)), oracle_count(q),
                          stirling_band(n, k, band));
            }
}

void ev_oracle_mixed_stirling(const GridLimits& g, Recorder& rec) {
    const unsigned cap = std::min(g.max_n, 7u);
    for (unsigned n = 0; n <= cap; ++n)
        for (unsigned k = 1; k <= g.max_k; ++k)
            for (unsigned r = 0; r <= g.max_r; ++r)
                for (const SizeBand& band : std_bands()) {
                    if (!band.is_unbounded() && n > 6) continue;
                    const OracleQuery q{n, CellSpec::stirling_shape(k, r), band};
                    rec.check(Pt{}("n", n)("k", k)("r", r)("band", to_string(band)),
                              oracle_count(q), S(n, k, r, band));
                }
}

void ev_oracle_mixed_bell(const GridLimits& g, Recorder& rec) {
    const unsigned cap = std::min(g.max_n, 8u);
    for (unsigned n = 0; n <= cap; ++n)
        for (unsigned k = 1; k <= std::min(3u, g.max_k); ++k)
            for (unsigned r = 0; r <= std::min(3u, g.max_r); ++r) {
                CellSpec spec = CellSpec::stirling_shape(k, r);
                spec.allow_empty_everywhere();
                const OracleQuery q{n, spec};
                rec.check(Pt{}("n", n)("k", k)("r", r), oracle_count(q), mixed_bell(n, k, r));
            }
}

void ev_oracle_r_stirling(const GridLimits& g, Recorder& rec) {
    const unsigned cap = std::min(g.max_n, 9u);
    for (unsigned n = 0; n <= cap; ++n)
        for (unsigned k = 1; k <= std::min(n, g.max_k); ++k)
            for (unsigned r = 0; r <= std::min(n, g.max_r); ++r) {
                const OracleQuery q{n, CellSpec::strict({k}), SizeBand::unbounded(), r};
                rec.check(Pt{}("n", n)("k", k)("r", r), oracle_count(q), r_stirling(n, k, r));
            }
}

// ---------------------------------------------------------------------------
// registry

struct IdentityDef {
    const char* id;
    const char* note;
    bool expect_flagged;
    void (*eval)(const GridLimits&, Recorder&);
};

const std::vector<IdentityDef>& registry() {
    static const std::vector<IdentityDef> defs{
        {"eq-bell", "row sums of the inclusion-exclusion route", false, ev_eq_bell},
        {"explicit-formula", "recurrence vs inclusion-exclusion", false, ev_explicit_formula},
        {"howard-formula", "recurrence vs composition sum", false, ev_howard_formula},
        {"thm-2.1-as-stated",
         "printed summand C(n,i)*{n-i brace k-i}; the i=0 term repeats the left side", true,
         ev_thm_2_1_as_stated},
        {"thm-2.1-corrected",
         "element form: C(n-1,i)*{n-1-i brace k-1}, block of element n has i companions", false,
         ev_thm_2_1_corrected},
        {"thm-3.1-as-stated", "printed lower summation index l", true, ev_thm_3_1_as_stated},
        {"thm-3.1-corrected",
         "lower index l-1: the block of element n needs only l-1 companions", false,
         ev_thm_3_1_corrected},
        {"thm-mos", "banded recurrence obtained by differentiating the generating function",
         false, ev_thm_mos},
        {"thm-2.3", "label-by-label multinomial product vs collapsed single-table form", false,
         ev_thm_2_3},
        {"thm-2.5", "convolution: choose the label-1 elements, order the rest", false,
         ev_thm_2_5},
        {"thm-3.4", "associated convolution", false, ev_thm_3_4},
        {"thm-2.6", "closed form (k-1)!*C(k+r-1,k-1)*{n brace k+r-1} vs element recurrence",
         false, ev_thm_2_6},
        {"thm-2.7", "element recurrence, restricted", false, ev_thm_2_7},
        {"thm-3.5",
         "element recurrence, associated, with the coefficient k-1 on the labelled-cell term as "
         "in the restricted form (the printed statement omits it)",
         false, ev_thm_3_5},
        {"thm-3.5-as-stated",
         "printed form without the coefficient k-1 on the labelled-cell term (k >= 2 points "
         "only; the k-1 = 0 term is undefined otherwise)",
         true, ev_thm_3_5_as_stated},
        {"thm-2.8-as-stated", "inner sign as printed: -(A - B)", true, ev_thm_2_8_as_stated},
        {"thm-2.8-corrected",
         "both overshoot corrections subtracted: -A - B, as the counting argument requires",
         false, ev_thm_2_8_corrected},
        {"thm-3.6", "associated insertion recurrence", false, ev_thm_3_6},
        {"thm-2.9-as-stated", "printed summation bounds j = k+r+1-s .. n-s, no divisor", true,
         ev_thm_2_9_as_stated},
        {"thm-2.9-natural-bounds",
         "feasibility bounds for j; still missing the division by C(r,s) that removes the "
         "marked-subfamily overcount",
         true, ev_thm_2_9_natural},
        {"thm-2.9-corrected", "feasibility bounds and right side divided by C(r,s)", false,
         ev_thm_2_9_corrected},
        {"thm-2.9-labeled-as-stated", "printed summation bounds, no divisor", true,
         ev_thm_2_9_labeled_as_stated},
        {"thm-2.9-labeled-natural-bounds",
         "feasibility bounds for j; still missing the division by C(k-1,s)", true,
         ev_thm_2_9_labeled_natural},
        {"thm-2.9-labeled-corrected",
         "feasibility bounds and right side divided by C(k-1,s)", false,
         ev_thm_2_9_labeled_corrected},
        {"eq-rS-as-stated", "printed summand S(n,k,r-1) does not depend on j", true,
         ev_eq_rS_as_stated},
        {"eq-rS-corrected", "summand replaced by S(n-j,k,r-1)", false, ev_eq_rS_corrected},
        {"eq-nS-as-stated", "printed bracket S(n,k,r-1) + (k-1)S(n,k-1,r) does not depend on j",
         true, ev_eq_nS_as_stated},
        {"eq-nS-corrected", "bracket replaced by S(n-j,k,r-1) + (k-1)S(n-j,k-1,r)", false,
         ev_eq_nS_corrected},
        {"thm-fix", "r-Stirling numbers through the mixed family", false, ev_thm_fix},
        {"r-stirling-reduction", "prefix of length 1 places no constraint", false,
         ev_r_stirling_reduction},
        {"egf-stirling-le", "(sum_{j=1..m} x^j/j!)^k / k!", false, ev_egf_stirling_le},
        {"egf-stirling-ge-as-stated",
         "printed subtracted partial sum runs to m-1 where the lower bound l is expected", true,
         ev_egf_stirling_ge_as_stated},
        {"egf-stirling-ge-corrected", "subtracted partial sum runs to l-1", false,
         ev_egf_stirling_ge_corrected},
        {"egf-band", "(sum_{j=l..m} x^j/j!)^k / k!", false, ev_egf_band},
        {"thm-4.3", "composition beta(alpha(x)) against the banded tables", false, ev_thm_4_3},
        {"egf-mixed-general", "(e^x - 1)^(c_1+...+c_k) / (c_1! ... c_k!)", false,
         ev_egf_mixed_general},
        {"egf-mixed-stirling", "(e^x - 1)^(r+k-1) / r!", false, ev_egf_mixed_stirling},
        {"egf-mixed-restricted", "(sum_{j=1..m} x^j/j!)^(r+k-1) / r!", false,
         ev_egf_mixed_restricted},
        {"egf-mixed-assoc-as-stated",
         "printed subtracted partial sum runs to m where l-1 is expected", true,
         ev_egf_mixed_assoc_as_stated},
        {"egf-mixed-assoc-corrected", "subtracted partial sum runs to l-1", false,
         ev_egf_mixed_assoc_corrected},
        {"example-2.4-strict",
         "strict reading: every cell non-empty gives S_{<=2}(3,2,2) = 3, brute-force verified; "
         "the printed worked example lists 9 configurations by leaving label-1 cells empty",
         false, ev_example_strict},
        {"example-2.4-relaxed",
         "relaxed reading: label-1 cells may be empty, reproducing the printed value 9; "
         "diverges from the strict definition, which gives 3",
         false, ev_example_relaxed},
        {"oracle-stirling2", "brute force vs the fundamental recurrence", false,
         ev_oracle_stirling2},
        {"oracle-bell", "brute force vs row sums", false, ev_oracle_bell},
        {"oracle-stirling-band", "brute force vs the banded tables", false,
         ev_oracle_stirling_band},
        {"oracle-mixed-stirling", "brute force vs the closed form", false,
         ev_oracle_mixed_stirling},
        {"oracle-mixed-bell", "brute force vs the relaxed sum", false, ev_oracle_mixed_bell},
        {"oracle-r-stirling", "brute force with a distinct prefix vs the recurrence", false,
         ev_oracle_r_stirling},
    };
    return defs;
}

}  // namespace

std::string GridLimits::describe() const {
    std::ostringstream out;
    out << "n<=" << max_n << " k<=" << max_k << " r<=" << max_r << " m in {";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out << ',';
        if (ms[i])
            out << *ms[i];
        else
            out << "inf";
    }
    out << "} l in {";
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i) out << ',';
        out << ls[i];
    }
    out << "} s<=min(r,k-1)";
    return out.str();
}

const IdentityCaseResult* VerificationReport::find(std::string_view id) const {
    for (const auto& c : cases)
        if (c.id == id) return &c;
    return nullptr;
}

bool VerificationReport::all_as_expected() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const IdentityCaseResult& c) { return c.as_expected(); });
}

nlohmann::ordered_json VerificationReport::to_json(bool include_timestamp) const {
    nlohmann::ordered_json j;
    j["engine_version"] = engine_version;
    j["grid"] = grid;
    if (include_timestamp) j["timestamp"] = timestamp;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["status"] = c.status == CaseStatus::pass ? "pass" : "flagged";
        jc["expected"] = c.expect_flagged ? "flagged" : "pass";
        jc["points_checked"] = c.points_checked;
        jc["mismatches"] = c.mismatches;
        jc["note"] = c.note;
        jc["counterexamples"] = nlohmann::ordered_json::array();
        for (const auto& ce : c.counterexamples) {
            jc["counterexamples"].push_back(
                {{"params", ce.params}, {"lhs", ce.lhs}, {"rhs", ce.rhs}});
        }
        j["cases"].push_back(std::move(jc));
    }
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "identity verification report\n";
    out << "engine:    " << engine_version << '\n';
    out << "grid:      " << grid << '\n';
    out << "timestamp: " << timestamp << "\n\n";
    unsigned passed = 0, flagged = 0, surprises = 0;
    for (const auto& c : cases) {
        const bool is_flagged = c.status == CaseStatus::flagged;
        (is_flagged ? flagged : passed) += 1;
        if (!c.as_expected()) ++surprises;
        out << (is_flagged ? "FLAG " : "PASS ");
        out << c.id;
        for (std::size_t pad = c.id.size(); pad < 34; ++pad) out << ' ';
        out << ' ' << c.points_checked << " points";
        if (!c.as_expected()) out << "  ** unexpected (" << (c.expect_flagged ? "expected flagged" : "expected pass") << ") **";
        out << '\n';
        if (!c.note.empty()) out << "     note: " << c.note << '\n';
        for (const auto& ce : c.counterexamples) {
            out << "     counterexample: " << ce.params << "  lhs=" << ce.lhs
                << " rhs=" << ce.rhs << '\n';
        }
        if (c.mismatches > c.counterexamples.size()) {
            out << "     (" << c.mismatches << " mismatching points in total)\n";
        }
    }
    out << '\n'
        << cases.size() << " cases: " << passed << " pass, " << flagged << " flagged, "
        << surprises << " unexpected\n";
    return out.str();
}

const std::vector<std::string>& expected_flagged_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& def : registry())
            if (def.expect_flagged) out.push_back(def.id);
        return out;
    }();
    return ids;
}

VerificationReport run_suite(const GridLimits& grid) {
    VerificationReport report;
    report.engine_version = kEngineVersion;
    report.grid = grid.describe();
    report.timestamp = iso_timestamp();
    for (const auto& def : registry()) {
        Recorder rec(grid.max_counterexamples);
        try {
            def.eval(grid, rec);
        } catch (const std::exception& e) {
            rec.record(std::string("evaluation error: ") + e.what(), false, "-", "-");
        }
        IdentityCaseResult result;
        result.id = def.id;
        result.note = def.note;
        result.expect_flagged = def.expect_flagged;
        result.points_checked = rec.points();
        result.mismatches = rec.mismatches();
        result.status = rec.mismatches() == 0 ? CaseStatus::pass : CaseStatus::flagged;
        result.counterexamples = rec.take();
        report.cases.push_back(std::move(result));
    }
    return report;
}

}  // namespace stirmix
