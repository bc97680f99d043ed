#include "collide/estimators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace collide {

namespace {
void require_mean(double mean_w) {
    if (!(mean_w >= 2.0))
        throw std::invalid_argument("mean block size must be >= 2");
}
}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::floor_quadratic: return "floor";
        case Variant::debiased: return "debiased";
        case Variant::least_squares: return "least-squares";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
    if (name == "floor") return Variant::floor_quadratic;
    if (name == "debiased") return Variant::debiased;
    if (name == "least-squares") return Variant::least_squares;
    return std::nullopt;
}

std::uint64_t estimate_floor(double mean_w) {
    require_mean(mean_w);
    const double d = mean_w - 2.0 / 3.0;
    return static_cast<std::uint64_t>(
        std::floor(2.0 / std::numbers::pi * d * d));
}

std::uint64_t estimate_debiased(double mean_w, std::uint64_t l) {
    require_mean(mean_w);
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    const double d = mean_w - 2.0 / 3.0;
    const double raw = 2.0 / std::numbers::pi * d * d;
    return static_cast<std::uint64_t>(
        std::floor(raw / (1.0 + 0.27 / static_cast<double>(l))));
}

std::uint64_t estimate_least_squares(double mean_w) {
    require_mean(mean_w);
    return static_cast<std::uint64_t>(
        std::floor(0.6366 * mean_w * mean_w - 0.8493 * mean_w + 0.1272));
}

std::uint64_t blocks_for_cv(double target_cv) {
    if (!(target_cv > 0.0) || !(target_cv < 1.0))
        throw std::invalid_argument("target CV must be in (0, 1)");
    return static_cast<std::uint64_t>(
        std::ceil(1.09 / (target_cv * target_cv)));
}

EstimateReport estimate_from_sample(const Sample& sample, Variant variant,
                                    std::optional<std::uint64_t> c) {
    if (sample.count_l < 1)
        throw std::invalid_argument("sample must contain at least one block");
    EstimateReport report;
    report.mean_w = static_cast<double>(sample.sum_sizes) /
                    static_cast<double>(sample.count_l);
    report.l = sample.count_l;
    report.c = c;
    report.clip_count_y = sample.clip_count_y;
    report.variant = variant;
    switch (variant) {
        case Variant::floor_quadratic:
            report.n_hat = estimate_floor(report.mean_w);
            break;
        case Variant::debiased:
            report.n_hat = estimate_debiased(report.mean_w, report.l);
            break;
        case Variant::least_squares:
            report.n_hat = estimate_least_squares(report.mean_w);
            break;
    }
    return report;
}

}  // namespace collide
