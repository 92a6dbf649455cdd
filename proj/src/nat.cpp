#include "stirmix/nat.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace stirmix {

namespace {
std::mutex fact_mutex;
}

Nat factorial(unsigned n) {
    std::scoped_lock lock(fact_mutex);
    static std::vector<Nat> cache{Nat(1)};
    while (cache.size() <= n) {
        cache.push_back(cache.back() * static_cast<unsigned>(cache.size()));
    }
    return cache[n];
}

Nat binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    // Pascal-row product; the division is exact at every step.
    Nat result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

Nat multinomial(unsigned n, std::span<const unsigned> parts) {
    unsigned long long sum = 0;
    for (unsigned p : parts) sum += p;
    if (sum != n) throw std::invalid_argument("multinomial: parts must sum to n");
    Nat result = factorial(n);
    for (unsigned p : parts) result /= factorial(p);
    return result;
}

Nat multinomial(unsigned n, std::initializer_list<unsigned> parts) {
    return multinomial(n, std::span<const unsigned>(parts.begin(), parts.size()));
}

}  // namespace stirmix
