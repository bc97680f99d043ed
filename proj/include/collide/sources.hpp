#ifndef COLLIDE_SOURCES_HPP
#define COLLIDE_SOURCES_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "collide/stream.hpp"

namespace collide {

enum class Tokenization { byte, line, whitespace };

struct SourceSpec {
    enum class Kind { uniform, nonuniform, file, stdin_ };
    Kind kind = Kind::uniform;
    std::uint64_t n = 1;          // alphabet size, synthetic kinds only
    std::uint64_t seed = 1;
    double skew = 1.0;            // nonuniform only
    std::string path;             // file only
    Tokenization tokenization = Tokenization::whitespace;
};

// i.i.d. uniform draws over {0, ..., n-1}, reproducible by seed.
std::unique_ptr<SymbolStream> make_uniform(std::uint64_t n,
                                           std::uint64_t seed);

// i.i.d. draws with power-law weights w_i proportional to (i+1)^(-skew),
// normalized to sum 1. Directional-test source only.
std::unique_ptr<SymbolStream> make_nonuniform(std::uint64_t n, double skew,
                                              std::uint64_t seed);

// The normalized weight vector make_nonuniform samples from.
std::vector<double> nonuniform_weights(std::uint64_t n, double skew);

// Tokenizes an input stream and dictionary-encodes tokens to keys. The
// dictionary grows with the number of distinct tokens; the memory limit c
// bounds block detection, not tokenization.
std::unique_ptr<SymbolStream> make_token_stream(std::istream& in,
                                                Tokenization tokenization);

std::unique_ptr<SymbolStream> make_source(const SourceSpec& spec);

// Drops every m-th symbol (positions m, 2m, ...). Requires m >= 2.
std::unique_ptr<SymbolStream> decimate(std::unique_ptr<SymbolStream> inner,
                                       std::uint64_t m);

}  // namespace collide

#endif
