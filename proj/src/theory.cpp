#include "collide/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace collide::theory {

namespace {
constexpr double kPi = std::numbers::pi;

double pow_j(double x, unsigned j) {
    switch (j) {
        case 1: return x;
        case 2: return x * x;
        default: return std::pow(x, static_cast<double>(j));
    }
}
}  // namespace

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::exact: return "exact";
        case Kind::asymptotic: return "asymptotic";
        case Kind::approximation: return "approximation";
    }
    return "?";
}

std::uint64_t clip_limit(double k, std::uint64_t n) {
    if (!(k > 0.0)) throw std::invalid_argument("K must be positive");
    return static_cast<std::uint64_t>(
        std::ceil(k * std::sqrt(static_cast<double>(n))));
}

double tail_prob(std::uint64_t n, std::uint64_t c) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (c <= 1) return 1.0;
    if (c > n) return 0.0;
    const double log_n = std::log(static_cast<double>(n));
    double log_p = 0.0;
    for (std::uint64_t k = 1; k < c; ++k)
        log_p += std::log(static_cast<double>(n - k)) - log_n;
    return std::exp(log_p);
}

double tail_prob_approx(std::uint64_t n, std::uint64_t c) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double cd = static_cast<double>(c);
    return std::exp(-cd * (cd - 1.0) / (2.0 * static_cast<double>(n)));
}

double tail_prob_approx_k(double k) { return std::exp(-k * k / 2.0); }

double pmf(std::uint64_t n, std::uint64_t k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 2 || k > n + 1) return 0.0;
    return tail_prob(n, k - 1) * static_cast<double>(k - 1) /
           static_cast<double>(n);
}

double conditional_moment(std::uint64_t n, unsigned j, std::uint64_t c) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (j < 1) throw std::invalid_argument("j must be >= 1");
    if (c > n) throw std::invalid_argument("c must be <= n");
    const double nd = static_cast<double>(n);
    // a_k = (k+1)^j - k^j; fold from the innermost term a_n/n outward.
    double acc = pow_j(nd + 1.0, j) - pow_j(nd, j);
    const double inv_n = 1.0 / nd;
    if (j == 1) {
        for (std::uint64_t k = n; k-- > c;)
            acc = 1.0 + static_cast<double>(n - k) * inv_n * acc;
    } else if (j == 2) {
        for (std::uint64_t k = n; k-- > c;)
            acc = (2.0 * static_cast<double>(k) + 1.0) +
                  static_cast<double>(n - k) * inv_n * acc;
    } else {
        for (std::uint64_t k = n; k-- > c;) {
            const double kd = static_cast<double>(k);
            acc = pow_j(kd + 1.0, j) - pow_j(kd, j) +
                  static_cast<double>(n - k) * inv_n * acc;
        }
    }
    return pow_j(static_cast<double>(c), j) + acc;
}

double mean_w_exact(std::uint64_t n) { return conditional_moment(n, 1, 0); }

double mean_w_asymptotic(std::uint64_t n, int terms) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (terms != 2 && terms != 5)
        throw std::invalid_argument("terms must be 2 or 5");
    const double nd = static_cast<double>(n);
    double v = std::sqrt(kPi * nd / 2.0) + 2.0 / 3.0;
    if (terms == 5) {
        v += std::sqrt(kPi / (2.0 * nd)) / 12.0 - 4.0 / (135.0 * nd) +
             std::sqrt(kPi / (2.0 * nd * nd * nd)) / 288.0;
    }
    return v;
}

double var_w_exact(std::uint64_t n) {
    const double e = mean_w_exact(n);
    return 2.0 * static_cast<double>(n) + e - e * e;
}

double var_w_large_n(std::uint64_t n) {
    const double nd = static_cast<double>(n);
    return 2.0 * nd - kPi / 2.0 * nd -
           4.0 / 3.0 * std::sqrt(kPi / 2.0 * nd);
}

double bias_alpha(std::uint64_t n, std::uint64_t l) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    const double nd = static_cast<double>(n);
    const double e = mean_w_exact(n);
    return (1.0 / nd) * (2.0 / kPi) * (2.0 * nd - e * e + e) /
           static_cast<double>(l);
}

double bias_alpha_large_n(std::uint64_t l) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    return 0.27 / static_cast<double>(l);
}

double clip_epsilon1(std::uint64_t n, std::uint64_t c) {
    if (c < 2 || c > n) throw std::invalid_argument("need 2 <= c <= n");
    return tail_prob(n, c) *
           (conditional_moment(n, 1, c) - static_cast<double>(c + 1)) /
           mean_w_exact(n);
}

double clip_epsilon2(std::uint64_t n, std::uint64_t c) {
    const double e1 = clip_epsilon1(n, c);
    return e1 * (2.0 - e1);
}

double cv_squared(std::uint64_t n, std::uint64_t l) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    const double e = mean_w_exact(n);
    return (1.0 / static_cast<double>(l)) * (8.0 / kPi) *
           (2.0 - e * (e - 1.0) / static_cast<double>(n));
}

double cv_squared_large_n(std::uint64_t l) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    return 1.09 / static_cast<double>(l);
}

}  // namespace collide::theory
