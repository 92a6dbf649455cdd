#include "stirmix/exact_core.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace stirmix {

namespace {
const Nat kZero = 0;
std::mutex table_mutex;
}

void StirlingTable::ensure(unsigned max_n) {
    if (rows_.empty()) rows_.push_back({Nat(1)});
    while (rows_.size() <= max_n) {
        const unsigned n = static_cast<unsigned>(rows_.size());
        const auto& prev = rows_.back();
        std::vector<Nat> row(n + 1);
        for (unsigned k = 1; k <= n; ++k) {
            Nat v = prev[k - 1];
            if (k < n) v += Nat(k) * prev[k];
            row[k] = std::move(v);
        }
        rows_.push_back(std::move(row));
    }
}

const Nat& StirlingTable::entry(unsigned n, unsigned k) const {
    if (n >= rows_.size()) throw std::out_of_range("StirlingTable: row not built");
    if (k > n) return kZero;
    return rows_[n][k];
}

Nat stirling2(unsigned n, unsigned k) {
    std::scoped_lock lock(table_mutex);
    static StirlingTable table;
    table.ensure(n);
    return table.entry(n, k);
}

Nat stirling2_explicit(unsigned n, unsigned k) {
    Nat sum = 0;
    for (unsigned m = 0; m <= k; ++m) {
        const Nat term = binomial(k, m) * boost::multiprecision::pow(Nat(m), n);
        if ((k - m) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Nat quotient, remainder;
    boost::multiprecision::divide_qr(sum, factorial(k), quotient, remainder);
    if (remainder != 0 || quotient < 0) {
        throw std::logic_error("stirling2_explicit: alternating sum not divisible by k!");
    }
    return quotient;
}

Nat stirling2_howard(unsigned n, unsigned k) {
    if (k == 0) return n == 0 ? 1 : 0;
    if (k > n) return 0;
    Rat total = 0;
    // Walk the compositions of n into k positive parts, multiplying 1/part!
    // along the way.
    std::function<void(unsigned, unsigned, const Rat&)> walk =
        [&](unsigned remaining, unsigned parts, const Rat& acc) {
            if (parts == 1) {
                total += acc / Rat(factorial(remaining));
                return;
            }
            for (unsigned head = 1; head + (parts - 1) <= remaining; ++head) {
                walk(remaining - head, parts - 1, acc / Rat(factorial(head)));
            }
        };
    walk(n, k, Rat(1));
    const Rat value = total * Rat(factorial(n)) / Rat(factorial(k));
    if (boost::multiprecision::denominator(value) != 1) {
        throw std::logic_error("stirling2_howard: composition sum is not integral");
    }
    return Nat(boost::multiprecision::numerator(value));
}

Nat bell(unsigned n) {
    Nat sum = 0;
    for (unsigned k = 0; k <= n; ++k) sum += stirling2(n, k);
    return sum;
}

Nat r_stirling(unsigned n, unsigned k, unsigned r) {
    if (n < r) throw std::invalid_argument("r_stirling: requires n >= r");
    // Row DP upward from the base row {r brace j}_r = [j == r].
    std::vector<Nat> row(k + 1, Nat(0));
    if (r <= k) row[r] = 1;
    for (unsigned m = r + 1; m <= n; ++m) {
        std::vector<Nat> next(k + 1);
        for (unsigned j = 0; j <= k; ++j) {
            next[j] = Nat(j) * row[j];
            if (j >= 1) next[j] += row[j - 1];
        }
        row = std::move(next);
    }
    return row[k];
}

}  // namespace stirmix
