#ifndef COLLIDE_SEGMENTER_HPP
#define COLLIDE_SEGMENTER_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "collide/stream.hpp"

namespace collide {

// One measured block: its size (W, or the clipped W_c) and whether the
// memory limit cut the measurement short.
struct BlockObservation {
    std::uint64_t size = 0;
    bool clipped = false;
};

// Aggregate of l block observations.
struct Sample {
    std::uint64_t count_l = 0;
    std::uint64_t sum_sizes = 0;
    std::uint64_t clip_count_y = 0;
};

// Splits a symbol stream into blocks, each ending at the first symbol that
// repeats an earlier symbol of the same block. The optional memory limit c
// caps both the symbols read and the symbols stored per block; a block with
// no repeat within c symbols is reported as size c+1 with clipped=true.
//
// Single-consumer cursor: not safe for concurrent use, safe to move between
// threads between calls.
class Segmenter {
public:
    explicit Segmenter(SymbolStream& stream);

    // Unclipped block. Throws InsufficientInputError if the stream ends
    // before a repeat.
    BlockObservation next_block();

    // Clipped block per the memory-restricted rule: reads at most c symbols,
    // stores at most c. Throws std::invalid_argument if c == 0.
    BlockObservation next_block_clipped(std::uint64_t c);

    // Collects l blocks. InsufficientInputError carries how many completed.
    Sample collect_sample(std::uint64_t l,
                          std::optional<std::uint64_t> c = std::nullopt);

    // Distinct symbols held in the table for the most recent block.
    std::uint64_t last_block_stored() const { return stored_; }

private:
    void begin_block();
    // True if s was already seen in the current block; inserts it otherwise.
    bool seen_or_insert(SymbolKey s);

    SymbolStream* stream_;
    bool dense_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> stamps_;                    // dense keys
    std::unordered_map<SymbolKey, std::uint32_t> table_;   // unbounded keys
    std::uint64_t stored_ = 0;
};

}  // namespace collide

#endif
