#include "collide/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "collide/segmenter.hpp"
#include "collide/sources.hpp"
#include "collide/theory.hpp"

namespace collide::harness {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

unsigned worker_count(std::uint64_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* cap = std::getenv("COLLIDE_COUNT_THREADS")) {
        const long v = std::strtol(cap, nullptr, 10);
        if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return static_cast<unsigned>(std::min<std::uint64_t>(n, jobs));
}

// Static partition of [0, jobs) across threads; results must be written to
// per-index slots so the reduction is order-independent.
template <typename Fn>
void parallel_for(std::uint64_t jobs, Fn&& fn) {
    const unsigned workers = worker_count(jobs);
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::uint64_t i = w; i < jobs; i += workers) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

std::string csv_k(const std::optional<double>& k) {
    if (!k) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", *k);
    return buf;
}

nlohmann::json cell_json(const CellResult& cell) {
    nlohmann::json j{{"n", cell.n},
                     {"l", cell.l},
                     {"reps", cell.repetitions},
                     {"bias_pct", cell.bias_percent},
                     {"cv_pct", cell.cv_percent},
                     {"mean_Y", cell.mean_clip_count},
                     {"seed", cell.seed},
                     {"variant", variant_name(cell.variant)}};
    if (cell.k) j["K"] = *cell.k;
    if (cell.c) j["c"] = *cell.c;
    return j;
}

}  // namespace

std::uint64_t sub_seed(std::uint64_t base, std::uint64_t rep) {
    return splitmix64(splitmix64(base) ^ splitmix64(rep + 1));
}

CellResult run_cell(std::uint64_t n, std::uint64_t l,
                    std::optional<std::uint64_t> c, std::uint64_t repetitions,
                    std::uint64_t seed, Variant variant) {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    if (c && *c < 2) throw std::invalid_argument("memory limit c must be >= 2");

    std::vector<double> estimates(repetitions);
    std::vector<std::uint64_t> clip_counts(repetitions);
    parallel_for(repetitions, [&](std::uint64_t rep) {
        auto source = make_uniform(n, sub_seed(seed, rep));
        Segmenter segmenter(*source);
        const Sample sample = segmenter.collect_sample(l, c);
        const EstimateReport report = estimate_from_sample(sample, variant, c);
        estimates[rep] = static_cast<double>(report.n_hat);
        clip_counts[rep] = report.clip_count_y;
    });

    double sum = 0.0;
    for (double v : estimates) sum += v;
    const double mean = sum / static_cast<double>(repetitions);
    double sq = 0.0;
    for (double v : estimates) sq += (v - mean) * (v - mean);
    const double stddev = std::sqrt(sq / static_cast<double>(repetitions));
    double clip_sum = 0.0;
    for (std::uint64_t y : clip_counts) clip_sum += static_cast<double>(y);

    CellResult cell;
    cell.n = n;
    cell.c = c;
    cell.l = l;
    cell.repetitions = repetitions;
    cell.bias_percent = (mean - static_cast<double>(n)) /
                        static_cast<double>(n) * 100.0;
    cell.cv_percent = mean != 0.0 ? stddev / mean * 100.0 : 0.0;
    cell.mean_clip_count = clip_sum / static_cast<double>(repetitions);
    cell.seed = seed;
    cell.variant = variant;
    return cell;
}

std::vector<CellResult> run_table(const ExperimentConfig& config) {
    std::vector<CellResult> cells;
    std::uint64_t cell_index = 0;
    for (std::uint64_t n : config.n_values) {
        for (Variant variant : config.variants) {
            if (config.k_values.empty()) {
                CellResult cell =
                    run_cell(n, config.l, std::nullopt, config.repetitions,
                             sub_seed(config.seed, 1000 + cell_index++), variant);
                cells.push_back(cell);
            } else {
                for (double k : config.k_values) {
                    CellResult cell = run_cell(
                        n, config.l, theory::clip_limit(k, n),
                        config.repetitions,
                        sub_seed(config.seed, 1000 + cell_index++), variant);
                    cell.k = k;
                    cells.push_back(cell);
                }
            }
        }
    }
    return cells;
}

std::vector<TheoryCell> theory_table(const std::vector<std::uint64_t>& n_values,
                                     const std::vector<double>& k_values) {
    std::vector<TheoryCell> cells;
    for (std::uint64_t n : n_values) {
        for (double k : k_values) {
            TheoryCell cell;
            cell.n = n;
            cell.k = k;
            cell.c = theory::clip_limit(k, n);
            cell.bias_percent = -100.0 * theory::clip_epsilon2(n, cell.c);
            cells.push_back(cell);
        }
    }
    return cells;
}

std::vector<DiffCell> diff_tables(const std::vector<CellResult>& empirical,
                                  const std::vector<TheoryCell>& theoretical) {
    std::vector<DiffCell> diffs;
    for (const CellResult& cell : empirical) {
        if (!cell.k) throw std::invalid_argument("empirical cell lacks K");
        const auto it = std::find_if(
            theoretical.begin(), theoretical.end(), [&](const TheoryCell& t) {
                return t.n == cell.n && t.k == *cell.k;
            });
        if (it == theoretical.end())
            throw std::invalid_argument("no theory cell for empirical (n, K)");
        diffs.push_back({cell.n, *cell.k,
                         it->bias_percent - cell.bias_percent});
    }
    return diffs;
}

void write_csv(std::ostream& out, const std::vector<CellResult>& cells) {
    out << "n,K,l,reps,bias_pct,cv_pct,mean_Y,seed,variant\n";
    for (const CellResult& cell : cells) {
        out << cell.n << ',' << csv_k(cell.k) << ',' << cell.l << ','
            << cell.repetitions << ',' << cell.bias_percent << ','
            << cell.cv_percent << ',' << cell.mean_clip_count << ','
            << cell.seed << ',' << variant_name(cell.variant) << '\n';
    }
}

void write_csv(std::ostream& out, const std::vector<TheoryCell>& cells) {
    out << "n,K,c,bias_pct\n";
    for (const TheoryCell& cell : cells) {
        out << cell.n << ',' << csv_k(cell.k) << ',' << cell.c << ','
            << cell.bias_percent << '\n';
    }
}

void write_csv(std::ostream& out, const std::vector<DiffCell>& cells) {
    out << "n,K,diff_pct\n";
    for (const DiffCell& cell : cells) {
        out << cell.n << ',' << csv_k(cell.k) << ',' << cell.diff_percent
            << '\n';
    }
}

void write_json(std::ostream& out, int table_id,
                const std::vector<CellResult>& cells) {
    nlohmann::json j{{"table", table_id},
                     {"cells", nlohmann::json::array()}};
    for (const CellResult& cell : cells) j["cells"].push_back(cell_json(cell));
    out << j.dump(2) << '\n';
}

void write_json(std::ostream& out, int table_id,
                const std::vector<TheoryCell>& cells) {
    nlohmann::json j{{"table", table_id},
                     {"cells", nlohmann::json::array()}};
    for (const TheoryCell& cell : cells) {
        j["cells"].push_back({{"n", cell.n},
                              {"K", cell.k},
                              {"c", cell.c},
                              {"bias_pct", cell.bias_percent}});
    }
    out << j.dump(2) << '\n';
}

void write_json(std::ostream& out, int table_id,
                const std::vector<DiffCell>& cells) {
    nlohmann::json j{{"table", table_id},
                     {"cells", nlohmann::json::array()}};
    for (const DiffCell& cell : cells) {
        j["cells"].push_back(
            {{"n", cell.n}, {"K", cell.k}, {"diff_pct", cell.diff_percent}});
    }
    out << j.dump(2) << '\n';
}

ExperimentConfig table1_config(std::uint64_t repetitions, std::uint64_t seed) {
    ExperimentConfig config;
    config.n_values = {10, 100, 1000, 10000, 100000, 1000000};
    config.l = 109;
    config.repetitions = repetitions;
    config.seed = seed;
    config.variants = {Variant::floor_quadratic, Variant::debiased};
    return config;
}

ExperimentConfig table2_config(std::uint64_t repetitions, std::uint64_t seed) {
    ExperimentConfig config;
    config.n_values = {100, 1000, 10000, 100000, 1000000};
    config.l = 109;
    config.k_values = {2.7, 2.8, 2.9, 3.0};
    config.repetitions = repetitions;
    config.seed = seed;
    config.variants = {Variant::debiased};
    return config;
}

std::vector<std::uint64_t> table3_n_values() {
    return {100, 1000, 10000, 100000, 1000000, 10000000};
}

std::vector<double> table3_k_values() { return {2.7, 2.8, 2.9, 3.0}; }

}  // namespace collide::harness
