#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace stirmix {

// Admissible block sizes: lo <= size, and size <= hi when hi is set.
// lo == 1 with no hi places no constraint at all.
class SizeBand {
public:
    SizeBand() = default;

    static SizeBand unbounded() { return {}; }
    static SizeBand at_most(unsigned m) { return SizeBand(1, m); }
    static SizeBand at_least(unsigned l) { return SizeBand(l, std::nullopt); }
    static SizeBand between(unsigned l, unsigned m) { return SizeBand(l, m); }
    static SizeBand make(unsigned l, std::optional<unsigned> m) { return SizeBand(l, m); }

    unsigned lo() const { return lo_; }
    const std::optional<unsigned>& hi() const { return hi_; }
    unsigned hi_or(unsigned fallback) const { return hi_ ? *hi_ : fallback; }
    bool allows(unsigned size) const { return size >= lo_ && (!hi_ || size <= *hi_); }
    bool is_unbounded() const { return lo_ == 1 && !hi_; }

    friend bool operator==(const SizeBand&, const SizeBand&) = default;

private:
    SizeBand(unsigned l, std::optional<unsigned> m) : lo_(l), hi_(m) {
        if (lo_ < 1) throw std::invalid_argument("SizeBand: lo must be >= 1");
        if (hi_ && *hi_ < lo_) throw std::invalid_argument("SizeBand: hi must be >= lo");
    }

    unsigned lo_ = 1;
    std::optional<unsigned> hi_{};
};

inline std::string to_string(const SizeBand& band) {
    if (band.is_unbounded()) return "unbounded";
    if (!band.hi()) return ">=" + std::to_string(band.lo());
    if (band.lo() == 1) return "<=" + std::to_string(*band.hi());
    return "[" + std::to_string(band.lo()) + "," + std::to_string(*band.hi()) + "]";
}

}  // namespace stirmix
