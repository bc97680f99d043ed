#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "collide/estimators.hpp"
#include "collide/harness.hpp"
#include "collide/segmenter.hpp"
#include "collide/sources.hpp"
#include "collide/theory.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

collide::Tokenization parse_tokenization(const std::string& name) {
    if (name == "byte") return collide::Tokenization::byte;
    if (name == "line") return collide::Tokenization::line;
    if (name == "token") return collide::Tokenization::whitespace;
    throw CLI::ValidationError("--tokenization must be byte, line or token");
}

struct EstimateOptions {
    std::string input = "-";
    std::uint64_t l = 0;
    double cv = 0.0;
    std::uint64_t c = 0;
    std::string variant = "debiased";
    std::string tokenization = "token";
    std::uint64_t synthetic_n = 0;
    std::uint64_t synthetic_seed = 1;
    bool json_output = false;
};

int run_estimate(const EstimateOptions& opt) {
    if ((opt.l == 0) == (opt.cv == 0.0)) {
        std::cerr << "estimate: exactly one of --l or --cv is required\n";
        return kExitUsage;
    }
    const auto variant = collide::variant_from_name(opt.variant);
    if (!variant) {
        std::cerr << "estimate: unknown variant '" << opt.variant << "'\n";
        return kExitUsage;
    }
    const std::uint64_t l =
        opt.l != 0 ? opt.l : collide::blocks_for_cv(opt.cv);
    std::optional<std::uint64_t> c;
    if (opt.c != 0) c = opt.c;

    collide::SourceSpec spec;
    if (opt.synthetic_n != 0) {
        spec.kind = collide::SourceSpec::Kind::uniform;
        spec.n = opt.synthetic_n;
        spec.seed = opt.synthetic_seed;
    } else if (opt.input == "-") {
        spec.kind = collide::SourceSpec::Kind::stdin_;
    } else {
        spec.kind = collide::SourceSpec::Kind::file;
        spec.path = opt.input;
    }
    spec.tokenization = parse_tokenization(opt.tokenization);

    collide::EstimateReport report;
    try {
        auto source = collide::make_source(spec);
        collide::Segmenter segmenter(*source);
        const collide::Sample sample = segmenter.collect_sample(l, c);
        report = collide::estimate_from_sample(sample, *variant, c);
    } catch (const collide::InsufficientInputError& e) {
        std::cerr << "estimate: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "estimate: " << e.what() << '\n';
        return kExitInput;
    }

    if (opt.json_output) {
        json j{{"n_hat", report.n_hat},
               {"mean_w", report.mean_w},
               {"l", report.l},
               {"clip_count_y", report.clip_count_y},
               {"variant", collide::variant_name(report.variant)},
               {"clip_warning", report.clip_count_y > 0}};
        if (report.c) j["c"] = *report.c;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "N_hat   = " << report.n_hat << '\n'
                  << "mean_w  = " << report.mean_w << '\n'
                  << "l       = " << report.l << '\n';
        if (report.c) std::cout << "c       = " << *report.c << '\n';
        std::cout << "Y       = " << report.clip_count_y << '\n'
                  << "variant = " << collide::variant_name(report.variant)
                  << '\n';
        if (report.clip_count_y > 0) {
            std::cout << "warning: memory limit bound the measurement in "
                      << report.clip_count_y << " of " << report.l
                      << " blocks; N_hat underestimates N\n";
        }
    }
    return 0;
}

struct TheoryOptions {
    std::string quantity;
    std::uint64_t n = 0;
    std::uint64_t c = 0;
    double k = 0.0;
    std::uint64_t l = 0;
    unsigned j = 1;
    std::uint64_t w = 0;
    double cv = 0.0;
    int terms = 0;
    bool approx = false;
    bool large_n = false;
};

void print_result(double value, collide::theory::Kind kind) {
    std::cout << value << " (" << collide::theory::kind_name(kind) << ")\n";
}

int run_theory(const TheoryOptions& opt) {
    namespace th = collide::theory;
    const std::string& q = opt.quantity;

    auto need = [&](bool ok, const char* msg) {
        if (!ok) throw CLI::ValidationError(msg);
    };
    auto clip_c = [&]() -> std::uint64_t {
        need(opt.c != 0 || opt.k != 0.0, "--c or --k required");
        return opt.c != 0 ? opt.c : th::clip_limit(opt.k, opt.n);
    };

    if (q == "blocks-for-cv") {
        need(opt.cv != 0.0, "--cv required");
        std::cout << collide::blocks_for_cv(opt.cv) << '\n';
        return 0;
    }
    need(opt.n != 0, "--n required");
    if (q == "mean") {
        if (opt.terms != 0)
            print_result(th::mean_w_asymptotic(opt.n, opt.terms),
                         th::Kind::asymptotic);
        else
            print_result(th::mean_w_exact(opt.n), th::Kind::exact);
    } else if (q == "var") {
        if (opt.large_n)
            print_result(th::var_w_large_n(opt.n), th::Kind::asymptotic);
        else
            print_result(th::var_w_exact(opt.n), th::Kind::exact);
    } else if (q == "tail") {
        const std::uint64_t c = clip_c();
        if (opt.approx)
            print_result(th::tail_prob_approx(opt.n, c),
                         th::Kind::approximation);
        else
            print_result(th::tail_prob(opt.n, c), th::Kind::exact);
    } else if (q == "pmf") {
        need(opt.w != 0, "--w required");
        print_result(th::pmf(opt.n, opt.w), th::Kind::exact);
    } else if (q == "cond-moment") {
        print_result(th::conditional_moment(opt.n, opt.j, opt.c),
                     th::Kind::exact);
    } else if (q == "alpha") {
        need(opt.l != 0, "--l required");
        if (opt.large_n)
            print_result(th::bias_alpha_large_n(opt.l), th::Kind::asymptotic);
        else
            print_result(th::bias_alpha(opt.n, opt.l), th::Kind::exact);
    } else if (q == "eps1") {
        print_result(th::clip_epsilon1(opt.n, clip_c()), th::Kind::exact);
    } else if (q == "eps2") {
        const double eps2 = th::clip_epsilon2(opt.n, clip_c());
        char line[128];
        std::snprintf(line, sizeof(line), "%g (exact)  bias = %.2f%%\n", eps2,
                      -100.0 * eps2);
        std::cout << line;
    } else if (q == "cv") {
        need(opt.l != 0, "--l required");
        const double cv2 = opt.large_n ? th::cv_squared_large_n(opt.l)
                                       : th::cv_squared(opt.n, opt.l);
        print_result(std::sqrt(cv2),
                     opt.large_n ? th::Kind::asymptotic : th::Kind::exact);
    } else {
        throw CLI::ValidationError("unknown --quantity '" + q + "'");
    }
    return 0;
}

struct ExperimentOptions {
    int table = 0;
    std::uint64_t reps = 2000;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
};

int run_experiment(const ExperimentOptions& opt) {
    namespace hn = collide::harness;
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.out.empty()) {
        file.open(opt.out);
        if (!file) {
            std::cerr << "experiment: cannot write " << opt.out << '\n';
            return kExitInput;
        }
        out = &file;
    }
    const bool json_format = opt.format == "json";

    switch (opt.table) {
        case 1: {
            const auto cells =
                hn::run_table(hn::table1_config(opt.reps, opt.seed));
            json_format ? hn::write_json(*out, 1, cells)
                        : hn::write_csv(*out, cells);
            break;
        }
        case 2: {
            const auto cells =
                hn::run_table(hn::table2_config(opt.reps, opt.seed));
            json_format ? hn::write_json(*out, 2, cells)
                        : hn::write_csv(*out, cells);
            break;
        }
        case 3: {
            const auto cells = hn::theory_table(hn::table3_n_values(),
                                                hn::table3_k_values());
            json_format ? hn::write_json(*out, 3, cells)
                        : hn::write_csv(*out, cells);
            break;
        }
        case 4: {
            const auto config = hn::table2_config(opt.reps, opt.seed);
            const auto empirical = hn::run_table(config);
            const auto theoretical =
                hn::theory_table(config.n_values, config.k_values);
            const auto diffs = hn::diff_tables(empirical, theoretical);
            json_format ? hn::write_json(*out, 4, diffs)
                        : hn::write_csv(*out, diffs);
            break;
        }
        default:
            throw CLI::ValidationError("--table must be 1, 2, 3 or 4");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alphabet-size estimation from birthday-collision blocks"};
    app.require_subcommand(1);

    EstimateOptions est;
    CLI::App* estimate =
        app.add_subcommand("estimate", "Estimate N from a symbol stream");
    estimate->add_option("input", est.input, "Input file, or - for stdin");
    estimate->add_option("--l", est.l, "Number of blocks to collect");
    estimate->add_option("--cv", est.cv,
                         "Target CV; sets l = ceil(1.09/cv^2)");
    estimate->add_option("--c", est.c, "Memory limit (symbols per block)");
    estimate->add_option("--variant", est.variant,
                         "floor, debiased or least-squares");
    estimate->add_option("--tokenization", est.tokenization,
                         "byte, line or token");
    estimate->add_option("--synthetic-n", est.synthetic_n,
                         "Use a seeded uniform source of this alphabet size");
    estimate->add_option("--seed-for-synthetic", est.synthetic_seed,
                         "Seed for the synthetic source");
    estimate->add_flag("--json", est.json_output, "JSON output");

    TheoryOptions th;
    CLI::App* theory =
        app.add_subcommand("theory", "Evaluate analytical quantities");
    theory
        ->add_option("--quantity", th.quantity,
                     "mean|var|tail|pmf|cond-moment|alpha|eps1|eps2|cv|"
                     "blocks-for-cv")
        ->required();
    theory->add_option("--n", th.n, "Alphabet size N");
    theory->add_option("--c", th.c, "Threshold / memory limit c");
    theory->add_option("--k", th.k, "K multiplier; c = ceil(K sqrt(N))");
    theory->add_option("--l", th.l, "Block count l");
    theory->add_option("--j", th.j, "Moment order (cond-moment)");
    theory->add_option("--w", th.w, "Block size point (pmf)");
    theory->add_option("--cv", th.cv, "Target CV (blocks-for-cv)");
    theory->add_option("--terms", th.terms,
                       "Asymptotic mean truncation: 2 or 5");
    theory->add_flag("--approx", th.approx, "Feller tail approximation");
    theory->add_flag("--large-n", th.large_n, "Large-N form");

    ExperimentOptions exp;
    CLI::App* experiment =
        app.add_subcommand("experiment", "Run a Monte Carlo table");
    experiment->add_option("--table", exp.table, "Table id: 1, 2, 3 or 4")
        ->required();
    experiment->add_option("--reps", exp.reps, "Repetitions per cell");
    experiment->add_option("--seed", exp.seed, "Base seed");
    experiment->add_option("--out", exp.out, "Output path (default stdout)");
    experiment->add_option("--format", exp.format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (estimate->parsed()) return run_estimate(est);
        if (theory->parsed()) return run_theory(th);
        return run_experiment(exp);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
