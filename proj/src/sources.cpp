#include "collide/sources.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <istream>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace collide {

namespace {

std::uint64_t mask_for(std::uint64_t max_value) {
    std::uint64_t mask = max_value;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    return mask;
}

// mt19937_64 with masked rejection: portable, unlike
// std::uniform_int_distribution whose mapping is implementation-defined.
class UniformSource final : public SymbolStream {
public:
    UniformSource(std::uint64_t n, std::uint64_t seed)
        : n_(n), mask_(mask_for(n - 1)), rng_(seed) {
        if (n < 1) throw std::invalid_argument("alphabet size must be >= 1");
    }

    bool next(SymbolKey& out) override {
        if (n_ == 1) {
            out = 0;
            return true;
        }
        for (;;) {
            const std::uint64_t v = rng_() & mask_;
            if (v < n_) {
                out = v;
                return true;
            }
        }
    }

    std::uint64_t key_bound() const override { return n_; }

private:
    std::uint64_t n_;
    std::uint64_t mask_;
    std::mt19937_64 rng_;
};

// Inverse-CDF sampling over a fixed cumulative weight table.
class NonUniformSource final : public SymbolStream {
public:
    NonUniformSource(std::uint64_t n, double skew, std::uint64_t seed)
        : n_(n), rng_(seed) {
        const auto weights = nonuniform_weights(n, skew);
        cdf_.resize(weights.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            cdf_[i] = acc;
        }
        cdf_.back() = 1.0;
    }

    bool next(SymbolKey& out) override {
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        out = static_cast<SymbolKey>(it - cdf_.begin());
        if (out >= n_) out = n_ - 1;
        return true;
    }

    std::uint64_t key_bound() const override { return n_; }

private:
    std::uint64_t n_;
    std::mt19937_64 rng_;
    std::vector<double> cdf_;
};

class Dictionary {
public:
    SymbolKey encode(const std::string& token) {
        const auto [it, inserted] = keys_.try_emplace(token, keys_.size());
        return it->second;
    }

private:
    std::unordered_map<std::string, SymbolKey> keys_;
};

class TokenStream final : public SymbolStream {
public:
    TokenStream(std::istream& in, Tokenization tokenization)
        : in_(&in), tokenization_(tokenization) {}

    bool next(SymbolKey& out) override {
        switch (tokenization_) {
            case Tokenization::byte: {
                const int ch = in_->get();
                if (ch == std::char_traits<char>::eof()) return false;
                out = static_cast<SymbolKey>(static_cast<unsigned char>(ch));
                return true;
            }
            case Tokenization::line: {
                std::string line;
                if (!std::getline(*in_, line)) return false;
                out = dict_.encode(line);
                return true;
            }
            case Tokenization::whitespace: {
                std::string token;
                if (!(*in_ >> token)) return false;
                out = dict_.encode(token);
                return true;
            }
        }
        return false;
    }

    std::uint64_t key_bound() const override {
        return tokenization_ == Tokenization::byte ? 256 : 0;
    }

private:
    std::istream* in_;
    Tokenization tokenization_;
    Dictionary dict_;
};

class FileTokenStream final : public SymbolStream {
public:
    FileTokenStream(const std::string& path, Tokenization tokenization)
        : file_(path, std::ios::binary), inner_(file_, tokenization) {
        if (!file_) throw std::runtime_error("cannot open input: " + path);
    }

    bool next(SymbolKey& out) override { return inner_.next(out); }
    std::uint64_t key_bound() const override { return inner_.key_bound(); }

private:
    std::ifstream file_;
    TokenStream inner_;
};

class DecimatedStream final : public SymbolStream {
public:
    DecimatedStream(std::unique_ptr<SymbolStream> inner, std::uint64_t m)
        : inner_(std::move(inner)), m_(m) {
        if (m < 2) throw std::invalid_argument("decimation period must be >= 2");
    }

    bool next(SymbolKey& out) override {
        for (;;) {
            if (!inner_->next(out)) return false;
            if (++position_ % m_ != 0) return true;
        }
    }

    std::uint64_t key_bound() const override { return inner_->key_bound(); }

private:
    std::unique_ptr<SymbolStream> inner_;
    std::uint64_t m_;
    std::uint64_t position_ = 0;
};

}  // namespace

std::vector<double> nonuniform_weights(std::uint64_t n, double skew) {
    if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (!(skew > 0.0)) throw std::invalid_argument("skew must be positive");
    std::vector<double> weights(n);
    double total = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        weights[i] = std::pow(static_cast<double>(i + 1), -skew);
        total += weights[i];
    }
    for (auto& w : weights) w /= total;
    return weights;
}

std::unique_ptr<SymbolStream> make_uniform(std::uint64_t n,
                                           std::uint64_t seed) {
    return std::make_unique<UniformSource>(n, seed);
}

std::unique_ptr<SymbolStream> make_nonuniform(std::uint64_t n, double skew,
                                              std::uint64_t seed) {
    nonuniform_weights(n, skew);  // validate
    return std::make_unique<NonUniformSource>(n, skew, seed);
}

std::unique_ptr<SymbolStream> make_token_stream(std::istream& in,
                                                Tokenization tokenization) {
    return std::make_unique<TokenStream>(in, tokenization);
}

std::unique_ptr<SymbolStream> make_source(const SourceSpec& spec) {
    switch (spec.kind) {
        case SourceSpec::Kind::uniform:
            return make_uniform(spec.n, spec.seed);
        case SourceSpec::Kind::nonuniform:
            return make_nonuniform(spec.n, spec.skew, spec.seed);
        case SourceSpec::Kind::file:
            return std::make_unique<FileTokenStream>(spec.path,
                                                     spec.tokenization);
        case SourceSpec::Kind::stdin_:
            return make_token_stream(std::cin, spec.tokenization);
    }
    throw std::invalid_argument("invalid source kind");
}

std::unique_ptr<SymbolStream> decimate(std::unique_ptr<SymbolStream> inner,
                                       std::uint64_t m) {
    return std::make_unique<DecimatedStream>(std::move(inner), m);
}

}  // namespace collide
