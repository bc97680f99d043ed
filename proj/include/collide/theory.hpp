#ifndef COLLIDE_THEORY_HPP
#define COLLIDE_THEORY_HPP

#include <cstdint>

namespace collide::theory {

enum class Kind { exact, asymptotic, approximation };

// A scalar analytical output, labeled by which formula family produced it.
struct TheoryResult {
    double value = 0.0;
    Kind kind = Kind::exact;
};

const char* kind_name(Kind k);

// c = ceil(K * sqrt(n)).
std::uint64_t clip_limit(double k, std::uint64_t n);

// Pr(W > c), exact. Total: 1 for c <= 1, 0 for c > n. The falling-factorial
// ratio is evaluated as a running sum of logarithms.
double tail_prob(std::uint64_t n, std::uint64_t c);

// Pr(W > c) ~ exp(-c(c-1)/(2n)), valid when c/n is small.
double tail_prob_approx(std::uint64_t n, std::uint64_t c);

// Same approximation parameterized by K = c / sqrt(n): exp(-K^2/2).
double tail_prob_approx_k(double k);

// Pr(W = k); zero outside the support 2..n+1.
double pmf(std::uint64_t n, std::uint64_t k);

// E(W^j | W > c), evaluated by the nested one-step formula, innermost term
// first, with an explicit loop. c in {0, 1} gives the unconditional moment;
// c = n gives (n+1)^j.
double conditional_moment(std::uint64_t n, unsigned j, std::uint64_t c);

// E(W), exact.
double mean_w_exact(std::uint64_t n);

// Truncated expansion of E(W); terms must be 2 or 5.
double mean_w_asymptotic(std::uint64_t n, int terms);

// Var(W) = 2n + E(W) - E(W)^2, exact E(W).
double var_w_exact(std::uint64_t n);

// Large-n variance: 2n - (pi/2)n - (4/3)sqrt((pi/2)n).
double var_w_large_n(std::uint64_t n);

// Relative bias of the plain quadratic estimator, exact E(W).
double bias_alpha(std::uint64_t n, std::uint64_t l);

// Large-n bias: 0.27 / l.
double bias_alpha_large_n(std::uint64_t l);

// Relative deficit of E(W_c) versus E(W).
double clip_epsilon1(std::uint64_t n, std::uint64_t c);

// Relative underestimate of N induced by clipping: eps1 * (2 - eps1).
// Reported as a positive fraction; the bias sign convention (-eps2) is the
// caller's.
double clip_epsilon2(std::uint64_t n, std::uint64_t c);

// Squared coefficient of variation of the estimate, exact E(W).
double cv_squared(std::uint64_t n, std::uint64_t l);

// Large-n form: 1.09 / l.
double cv_squared_large_n(std::uint64_t l);

}  // namespace collide::theory

#endif
