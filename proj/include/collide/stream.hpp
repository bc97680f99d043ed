#ifndef COLLIDE_STREAM_HPP
#define COLLIDE_STREAM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace collide {

// Canonical symbol identity. Raw tokens are dictionary-encoded to keys at
// ingestion; only equality of keys is meaningful.
using SymbolKey = std::uint64_t;

// Single-consumer cursor over a symbol sequence.
class SymbolStream {
public:
    virtual ~SymbolStream() = default;

    // Yields the next symbol. Returns false when the stream is exhausted.
    virtual bool next(SymbolKey& out) = 0;

    // If nonzero, every key yielded by this stream is < key_bound().
    // Lets consumers use flat tables instead of hashing.
    virtual std::uint64_t key_bound() const { return 0; }
};

// The stream ended in the middle of a block. A truncated block is not a
// valid observation, so this is an error rather than a short result.
class InsufficientInputError : public std::runtime_error {
public:
    explicit InsufficientInputError(std::uint64_t blocks_completed)
        : std::runtime_error("stream exhausted mid-block after " +
                             std::to_string(blocks_completed) +
                             " complete block(s)"),
          blocks_completed_(blocks_completed) {}

    std::uint64_t blocks_completed() const { return blocks_completed_; }

private:
    std::uint64_t blocks_completed_;
};

}  // namespace collide

#endif
