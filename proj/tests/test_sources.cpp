#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "collide/estimators.hpp"
#include "collide/segmenter.hpp"
#include "collide/sources.hpp"
#include "collide/theory.hpp"

using namespace collide;

namespace {
std::vector<SymbolKey> take(SymbolStream& stream, std::size_t count) {
    std::vector<SymbolKey> keys(count);
    for (auto& k : keys) REQUIRE(stream.next(k));
    return keys;
}
}  // namespace

TEST_CASE("uniform source: single-symbol alphabet") {
    auto source = make_uniform(1, 99);
    SymbolKey s;
    for (int i = 0; i < 100; ++i) {
        REQUIRE(source->next(s));
        CHECK(s == 0);
    }
}

TEST_CASE("uniform source: identical spec yields identical stream") {
    auto a = make_uniform(1000, 12345);
    auto b = make_uniform(1000, 12345);
    CHECK(take(*a, 1000000) == take(*b, 1000000));
}

TEST_CASE("uniform source: keys in range, frequencies within 5 sigma") {
    const std::uint64_t n = 100;
    const std::size_t draws = 1000000;
    auto source = make_uniform(n, 777);
    std::vector<std::uint64_t> counts(n, 0);
    SymbolKey s;
    for (std::size_t i = 0; i < draws; ++i) {
        REQUIRE(source->next(s));
        REQUIRE(s < n);
        ++counts[s];
    }
    const double expected = static_cast<double>(draws) / n;
    const double sigma = std::sqrt(expected * (1.0 - 1.0 / n));
    for (std::uint64_t c : counts)
        CHECK(std::abs(static_cast<double>(c) - expected) < 5.0 * sigma);
}

TEST_CASE("nonuniform weights are normalized and skewed") {
    const auto weights = nonuniform_weights(1000, 1.0);
    const double total =
        std::accumulate(weights.begin(), weights.end(), 0.0);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(weights.front() > weights.back());
    CHECK_THROWS_AS(nonuniform_weights(1000, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_nonuniform(1000, -1.0, 1), std::invalid_argument);
}

TEST_CASE("nonuniform source with vanishing skew behaves like uniform") {
    auto source = make_nonuniform(1000, 1e-9, 21);
    Segmenter segmenter(*source);
    const Sample sample = segmenter.collect_sample(2000);
    const double mean = static_cast<double>(sample.sum_sizes) / 2000.0;
    const double expected = theory::mean_w_exact(1000);
    const double band =
        4.0 * std::sqrt(theory::var_w_exact(1000) / 2000.0);
    CHECK(std::abs(mean - expected) < band);
}

TEST_CASE("nonuniform source drives the estimate below N") {
    const std::uint64_t n = 1000;
    int below = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        auto source = make_nonuniform(n, 0.5, 1000 + t);
        Segmenter segmenter(*source);
        const Sample sample = segmenter.collect_sample(109);
        const EstimateReport report =
            estimate_from_sample(sample, Variant::debiased);
        if (report.n_hat < n) ++below;
    }
    CHECK(below >= trials * 99 / 100);
}

TEST_CASE("token stream canonicalizes the worked letter sequence") {
    std::istringstream in("A B K D E I M D");
    auto stream = make_token_stream(in, Tokenization::whitespace);
    const auto keys = take(*stream, 8);
    // The only repeat is D, at positions 4 and 8.
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j) CHECK(keys[i] != keys[j]);
    CHECK(keys[7] == keys[3]);
    SymbolKey s;
    CHECK_FALSE(stream->next(s));
}

TEST_CASE("byte and line tokenization") {
    SUBCASE("byte") {
        std::istringstream in("abca");
        auto stream = make_token_stream(in, Tokenization::byte);
        const auto keys = take(*stream, 4);
        CHECK(keys[0] == keys[3]);
        CHECK(keys[0] != keys[1]);
    }
    SUBCASE("line") {
        std::istringstream in("foo\nbar\nfoo\n");
        auto stream = make_token_stream(in, Tokenization::line);
        const auto keys = take(*stream, 3);
        CHECK(keys[0] == keys[2]);
        CHECK(keys[0] != keys[1]);
    }
}

TEST_CASE("missing input file is an error") {
    SourceSpec spec;
    spec.kind = SourceSpec::Kind::file;
    spec.path = "/nonexistent/collide-input";
    CHECK_THROWS_AS(make_source(spec), std::runtime_error);
}

TEST_CASE("decimation drops exactly every m-th symbol") {
    std::vector<SymbolKey> counter(20);
    std::iota(counter.begin(), counter.end(), 1);
    class Replay final : public SymbolStream {
    public:
        explicit Replay(std::vector<SymbolKey> keys) : keys_(std::move(keys)) {}
        bool next(SymbolKey& out) override {
            if (pos_ >= keys_.size()) return false;
            out = keys_[pos_++];
            return true;
        }
    private:
        std::vector<SymbolKey> keys_;
        std::size_t pos_ = 0;
    };
    auto stream = decimate(std::make_unique<Replay>(counter), 2);
    const auto kept = take(*stream, 10);
    CHECK(kept == std::vector<SymbolKey>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19});
    CHECK_THROWS_AS(decimate(std::make_unique<Replay>(counter), 1),
                    std::invalid_argument);
}

TEST_CASE("decimating a constant stream still yields blocks of size 2") {
    auto stream = decimate(make_uniform(1, 3), 10);
    Segmenter segmenter(*stream);
    for (int i = 0; i < 50; ++i) CHECK(segmenter.next_block().size == 2);
}

TEST_CASE("decimation leaves the mean block size statistically unchanged") {
    const std::uint64_t n = 1000;
    const std::uint64_t l = 500;
    auto plain_source = make_uniform(n, 2024);
    Segmenter plain_seg(*plain_source);
    const Sample plain = plain_seg.collect_sample(l);

    auto decimated = decimate(make_uniform(n, 9090), 10);
    Segmenter dec_seg(*decimated);
    const Sample dec = dec_seg.collect_sample(l);

    const double mean_plain =
        static_cast<double>(plain.sum_sizes) / static_cast<double>(l);
    const double mean_dec =
        static_cast<double>(dec.sum_sizes) / static_cast<double>(l);
    const double band = 4.0 * std::sqrt(theory::var_w_exact(n) /
                                        static_cast<double>(l));
    CHECK(std::abs(mean_dec - mean_plain) < band);
}
