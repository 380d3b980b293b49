#include "fareysum/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace fareysum::arith {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::vector<std::int64_t> totient_table(std::int64_t limit) {
    if (limit < 0) throw std::invalid_argument("negative sieve limit");
    std::vector<std::int64_t> phi(static_cast<std::size_t>(limit) + 1);
    std::iota(phi.begin(), phi.end(), std::int64_t{0});
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue;  // composite: already touched by a smaller prime
        for (std::int64_t m = p; m <= limit; m += p) {
            phi[m] -= phi[m] / p;
        }
    }
    return phi;
}

std::vector<std::int64_t> divisor_count_table(std::int64_t limit) {
    if (limit < 0) throw std::invalid_argument("negative sieve limit");
    std::vector<std::int64_t> tau(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t d = 1; d <= limit; ++d) {
        for (std::int64_t m = d; m <= limit; m += d) ++tau[m];
    }
    return tau;
}

std::int64_t divisor_count(std::int64_t n) {
    if (n < 1) throw std::domain_error("divisor_count needs n >= 1");
    std::int64_t count = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

std::int64_t totient(std::int64_t n) {
    if (n < 1) throw std::domain_error("totient needs n >= 1");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace fareysum::arith
