#include "stirmix/oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace stirmix {

namespace {

// Depth-first assignment of elements 1..n to cell slots. Cells sharing a
// label are kept canonical by a restricted-growth rule: within a label, a
// new cell may only be opened in the first unused slot, so same-label cells
// appear in order of their smallest elements and every configuration is
// produced exactly once. Memory stays O(n + total slots) per configuration.
template <typename Visitor>
class Enumerator {
public:
    Enumerator(const OracleQuery& q, Visitor visit) : q_(q), visit_(visit) {
        const auto& counts = q.spec.counts();
        first_slot_.reserve(counts.size());
        unsigned base = 0;
        for (unsigned c : counts) {
            first_slot_.push_back(base);
            base += c;
        }
        total_slots_ = base;
        opened_.assign(counts.size(), 0);
        slot_size_.assign(total_slots_, 0);
        slot_has_prefix_.assign(total_slots_, false);
        assignment_.assign(q.n, 0);
        hi_eff_ = q.band.hi_or(q.n);
    }

    unsigned long long run() {
        assign(0);
        return leaves_;
    }

private:
    bool feasible(unsigned assigned) const {
        const unsigned remaining = q_.n - assigned;
        // Every open undersized cell still needs elements, and every unopened
        // cell of a strict label needs a full quota of lo elements.
        unsigned long long deficit = 0;
        const auto& counts = q_.spec.counts();
        for (std::size_t label = 0; label < counts.size(); ++label) {
            const unsigned base = first_slot_[label];
            for (unsigned j = 0; j < opened_[label]; ++j) {
                const unsigned size = slot_size_[base + j];
                if (size < q_.band.lo()) deficit += q_.band.lo() - size;
            }
            if (!q_.spec.may_be_empty(label)) {
                deficit +=
                    static_cast<unsigned long long>(counts[label] - opened_[label]) * q_.band.lo();
            }
            if (deficit > remaining) return false;
        }
        return true;
    }

    void assign(unsigned e) {
        if (e == q_.n) {
            finish();
            return;
        }
        if (!feasible(e)) return;
        const bool is_prefix = e < q_.distinct_prefix;
        const auto& counts = q_.spec.counts();
        for (std::size_t label = 0; label < counts.size(); ++label) {
            const unsigned base = first_slot_[label];
            for (unsigned j = 0; j < opened_[label]; ++j) {
                const unsigned s = base + j;
                if (slot_size_[s] >= hi_eff_) continue;
                if (is_prefix && slot_has_prefix_[s]) continue;
                ++slot_size_[s];
                const bool had_prefix = slot_has_prefix_[s];
                if (is_prefix) slot_has_prefix_[s] = true;
                assignment_[e] = s;
                assign(e + 1);
                slot_has_prefix_[s] = had_prefix;
                --slot_size_[s];
            }
            if (opened_[label] < counts[label]) {
                const unsigned s = base + opened_[label];
                ++opened_[label];
                slot_size_[s] = 1;
                slot_has_prefix_[s] = is_prefix;
                assignment_[e] = s;
                assign(e + 1);
                slot_has_prefix_[s] = false;
                slot_size_[s] = 0;
                --opened_[label];
            }
        }
    }

    void finish() {
        const auto& counts = q_.spec.counts();
        for (std::size_t label = 0; label < counts.size(); ++label) {
            if (!q_.spec.may_be_empty(label) && opened_[label] != counts[label]) return;
            const unsigned base = first_slot_[label];
            for (unsigned j = 0; j < opened_[label]; ++j) {
                if (slot_size_[base + j] < q_.band.lo()) return;
            }
        }
        ++leaves_;
        visit_(assignment_, first_slot_, opened_);
    }

    const OracleQuery& q_;
    Visitor visit_;
    unsigned total_slots_ = 0;
    unsigned hi_eff_ = 0;
    std::vector<unsigned> first_slot_;
    std::vector<unsigned> opened_;
    std::vector<unsigned> slot_size_;
    std::vector<bool> slot_has_prefix_;
    std::vector<unsigned> assignment_;
    unsigned long long leaves_ = 0;
};

void validate(const OracleQuery& q) {
    if (q.n > q.cap) {
        throw std::invalid_argument("oracle: n exceeds the cap; raise cap explicitly to override");
    }
    if (q.distinct_prefix > q.n) {
        throw std::invalid_argument("oracle: distinct_prefix must not exceed n");
    }
}

}  // namespace

Nat oracle_count(const OracleQuery& q) {
    validate(q);
    auto ignore = [](const std::vector<unsigned>&, const std::vector<unsigned>&,
                     const std::vector<unsigned>&) {};
    Enumerator engine(q, ignore);
    return Nat(engine.run());
}

std::vector<OraclePartition> oracle_enumerate(const OracleQuery& q) {
    validate(q);
    std::vector<OraclePartition> out;
    auto collect = [&](const std::vector<unsigned>& assignment,
                       const std::vector<unsigned>& first_slot,
                       const std::vector<unsigned>& opened) {
        OraclePartition p(q.spec.labels());
        for (std::size_t label = 0; label < q.spec.labels(); ++label) {
            p[label].resize(opened[label]);
        }
        for (unsigned e = 0; e < q.n; ++e) {
            const unsigned s = assignment[e];
            // find the label owning slot s
            std::size_t label = q.spec.labels() - 1;
            while (first_slot[label] > s) --label;
            p[label][s - first_slot[label]].push_back(e + 1);
        }
        out.push_back(std::move(p));
    };
    Enumerator engine(q, collect);
    engine.run();
    return out;
}

std::string to_string(const OraclePartition& p) {
    std::ostringstream out;
    for (std::size_t label = 0; label < p.size(); ++label) {
        if (label) out << " | ";
        if (p[label].empty()) out << "-";
        for (const auto& block : p[label]) {
            out << '{';
            for (std::size_t i = 0; i < block.size(); ++i) {
                if (i) out << ',';
                out << block[i];
            }
            out << '}';
        }
    }
    return out.str();
}

}  // namespace stirmix
