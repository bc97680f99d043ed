#ifndef COLLIDE_TEST_ORACLES_HPP
#define COLLIDE_TEST_ORACLES_HPP

// Brute-force reference computations for the analytical formulas. These stay
// independent of the library's evaluation path: direct products and
// definitional sums, no log-domain tricks, no nested folding.

#include <cstdint>
#include <vector>

namespace oracles {

// Pr(W > c) as the direct product of no-collision factors (1 - k/n).
inline double tail_product(std::uint64_t n, std::uint64_t c) {
    if (c <= 1) return 1.0;
    if (c > n) return 0.0;
    double p = 1.0;
    for (std::uint64_t k = 1; k < c; ++k)
        p *= 1.0 - static_cast<double>(k) / static_cast<double>(n);
    return p;
}

// Pr(W = k) as a difference of tail products.
inline double pmf_diff(std::uint64_t n, std::uint64_t k) {
    if (k < 2 || k > n + 1) return 0.0;
    return tail_product(n, k - 1) - tail_product(n, k);
}

// Full pmf vector indexed by block size, 0..n+1.
inline std::vector<double> pmf_table(std::uint64_t n) {
    std::vector<double> table(n + 2, 0.0);
    for (std::uint64_t k = 2; k <= n + 1; ++k) table[k] = pmf_diff(n, k);
    return table;
}

// E(W^j | W > c) from the definitional sum over the support.
inline double conditional_moment_sum(std::uint64_t n, unsigned j,
                                     std::uint64_t c) {
    const auto pmf = pmf_table(n);
    double num = 0.0;
    double denom = 0.0;
    const std::uint64_t lo = c < 1 ? 2 : c + 1;
    for (std::uint64_t k = lo; k <= n + 1; ++k) {
        double kj = 1.0;
        for (unsigned i = 0; i < j; ++i) kj *= static_cast<double>(k);
        num += pmf[k] * kj;
        denom += pmf[k];
    }
    return num / denom;
}

inline double mean_sum(std::uint64_t n) {
    return conditional_moment_sum(n, 1, 0);
}

inline double variance_sum(std::uint64_t n) {
    const double m1 = conditional_moment_sum(n, 1, 0);
    const double m2 = conditional_moment_sum(n, 2, 0);
    return m2 - m1 * m1;
}

}  // namespace oracles

#endif
