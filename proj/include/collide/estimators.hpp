#ifndef COLLIDE_ESTIMATORS_HPP
#define COLLIDE_ESTIMATORS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "collide/segmenter.hpp"

namespace collide {

enum class Variant { floor_quadratic, debiased, least_squares };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

struct EstimateReport {
    std::uint64_t n_hat = 0;
    double mean_w = 0.0;
    std::uint64_t l = 0;
    std::optional<std::uint64_t> c;
    std::uint64_t clip_count_y = 0;
    Variant variant = Variant::floor_quadratic;
};

// floor((2/pi) * (mean_w - 2/3)^2). Requires mean_w >= 2.
std::uint64_t estimate_floor(double mean_w);

// Large-N debiased form: the floor estimator scaled by 1/(1 + 0.27/l).
std::uint64_t estimate_debiased(double mean_w, std::uint64_t l);

// Fitted quadratic floor(0.6366 m^2 - 0.8493 m + 0.1272). Optional variant.
std::uint64_t estimate_least_squares(double mean_w);

// Number of blocks needed for a target coefficient of variation:
// ceil(1.09 / cv^2). Requires 0 < target_cv < 1.
std::uint64_t blocks_for_cv(double target_cv);

EstimateReport estimate_from_sample(const Sample& sample, Variant variant,
                                    std::optional<std::uint64_t> c = std::nullopt);

}  // namespace collide

#endif
