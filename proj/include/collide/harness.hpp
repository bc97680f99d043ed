#ifndef COLLIDE_HARNESS_HPP
#define COLLIDE_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "collide/estimators.hpp"

namespace collide::harness {

struct ExperimentConfig {
    std::vector<std::uint64_t> n_values;
    std::uint64_t l = 109;
    std::vector<double> k_values;  // empty: no clipping
    std::uint64_t repetitions = 2000;
    std::uint64_t seed = 1;
    std::vector<Variant> variants{Variant::debiased};
};

struct CellResult {
    std::uint64_t n = 0;
    std::optional<double> k;
    std::optional<std::uint64_t> c;
    std::uint64_t l = 0;
    std::uint64_t repetitions = 0;
    double bias_percent = 0.0;
    double cv_percent = 0.0;
    double mean_clip_count = 0.0;
    std::uint64_t seed = 0;
    Variant variant = Variant::debiased;
};

struct TheoryCell {
    std::uint64_t n = 0;
    double k = 0.0;
    std::uint64_t c = 0;
    double bias_percent = 0.0;  // -100 * eps2
};

struct DiffCell {
    std::uint64_t n = 0;
    double k = 0.0;
    double diff_percent = 0.0;  // theoretical minus empirical bias
};

// Deterministic sub-seed for one replication; order-independent so
// replications can run in parallel.
std::uint64_t sub_seed(std::uint64_t base, std::uint64_t rep);

// Runs `repetitions` independent estimates over seeded uniform sources and
// aggregates bias, CV and mean clip count. Deterministic given arguments;
// replications fan out across threads (capped by COLLIDE_COUNT_THREADS).
CellResult run_cell(std::uint64_t n, std::uint64_t l,
                    std::optional<std::uint64_t> c, std::uint64_t repetitions,
                    std::uint64_t seed, Variant variant);

// Cross-product of n_values x k_values (x variants), one run_cell each.
std::vector<CellResult> run_table(const ExperimentConfig& config);

// Deterministic clipping-bias predictions, c = ceil(K sqrt(n)).
std::vector<TheoryCell> theory_table(const std::vector<std::uint64_t>& n_values,
                                     const std::vector<double>& k_values);

// Theoretical minus empirical bias per (n, K) cell. Throws on key mismatch.
std::vector<DiffCell> diff_tables(const std::vector<CellResult>& empirical,
                                  const std::vector<TheoryCell>& theoretical);

// Fixed column order: n, K, l, reps, bias_pct, cv_pct, mean_Y, seed, variant.
void write_csv(std::ostream& out, const std::vector<CellResult>& cells);
void write_csv(std::ostream& out, const std::vector<TheoryCell>& cells);
void write_csv(std::ostream& out, const std::vector<DiffCell>& cells);
void write_json(std::ostream& out, int table_id,
                const std::vector<CellResult>& cells);
void write_json(std::ostream& out, int table_id,
                const std::vector<TheoryCell>& cells);
void write_json(std::ostream& out, int table_id,
                const std::vector<DiffCell>& cells);

// The experiment grids the CLI exposes as tables 1-4.
ExperimentConfig table1_config(std::uint64_t repetitions, std::uint64_t seed);
ExperimentConfig table2_config(std::uint64_t repetitions, std::uint64_t seed);
std::vector<std::uint64_t> table3_n_values();
std::vector<double> table3_k_values();

}  // namespace collide::harness

#endif
