#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirmix {

// A multiset of cells: counts[i] cells carry label i. Cells that share a
// label are indistinguishable; labels themselves are distinct. Each label is
// either strict (all of its cells must end up non-empty) or may-be-empty.
class CellSpec {
public:
    explicit CellSpec(std::vector<unsigned> counts)
        : counts_(std::move(counts)), relaxed_(counts_.size(), false) {
        if (counts_.empty()) throw std::invalid_argument("CellSpec: needs at least one label");
    }

    static CellSpec strict(std::vector<unsigned> counts) { return CellSpec(std::move(counts)); }

    /// The (r, 1, 1, ..., 1) shape with k labels: r interchangeable cells of
    /// label 1 plus one cell for each of the labels 2..k.
    static CellSpec stirling_shape(unsigned k, unsigned r) {
        if (k < 1) throw std::invalid_argument("CellSpec: needs at least one label");
        std::vector<unsigned> counts(k, 1);
        counts[0] = r;
        return CellSpec(std::move(counts));
    }

    CellSpec& allow_empty(std::size_t label) {
        relaxed_.at(label) = true;
        return *this;
    }
    CellSpec& allow_empty_everywhere() {
        relaxed_.assign(relaxed_.size(), true);
        return *this;
    }

    const std::vector<unsigned>& counts() const { return counts_; }
    std::size_t labels() const { return counts_.size(); }
    bool may_be_empty(std::size_t label) const { return relaxed_[label]; }
    bool any_may_be_empty() const {
        for (bool r : relaxed_)
            if (r) return true;
        return false;
    }
    unsigned total_cells() const {
        unsigned total = 0;
        for (unsigned c : counts_) total += c;
        return total;
    }

    /// "2,1" with a '*' marking may-be-empty labels, e.g. "2*,1".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(counts_[i]);
            if (relaxed_[i]) out += '*';
        }
        return out;
    }

private:
    std::vector<unsigned> counts_;
    std::vector<bool> relaxed_;
};

}  // namespace stirmix
