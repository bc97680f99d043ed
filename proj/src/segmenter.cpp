#include "collide/segmenter.hpp"

#include <limits>
#include <stdexcept>

namespace collide {

namespace {
// Above this bound a flat stamp table would cost too much memory; fall back
// to hashing.
constexpr std::uint64_t kDenseLimit = 1ull << 24;
}  // namespace

Segmenter::Segmenter(SymbolStream& stream) : stream_(&stream) {
    const std::uint64_t bound = stream.key_bound();
    dense_ = bound > 0 && bound <= kDenseLimit;
    if (dense_) stamps_.assign(bound, 0);
}

void Segmenter::begin_block() {
    if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
        // Stamp wrap: flush stale entries so old stamps cannot alias.
        if (dense_) stamps_.assign(stamps_.size(), 0);
        table_.clear();
        epoch_ = 0;
    }
    ++epoch_;
    stored_ = 0;
}

bool Segmenter::seen_or_insert(SymbolKey s) {
    if (dense_) {
        std::uint32_t& stamp = stamps_[s];
        if (stamp == epoch_) return true;
        stamp = epoch_;
    } else {
        auto [it, inserted] = table_.try_emplace(s, epoch_);
        if (!inserted) {
            if (it->second == epoch_) return true;
            it->second = epoch_;
        }
    }
    ++stored_;
    return false;
}

BlockObservation Segmenter::next_block() {
    begin_block();
    SymbolKey s;
    for (std::uint64_t pos = 1;; ++pos) {
        if (!stream_->next(s)) throw InsufficientInputError(0);
        if (seen_or_insert(s)) return {pos, false};
    }
}

BlockObservation Segmenter::next_block_clipped(std::uint64_t c) {
    if (c == 0) throw std::invalid_argument("memory limit c must be >= 1");
    begin_block();
    SymbolKey s;
    for (std::uint64_t j = 1; j <= c; ++j) {
        if (!stream_->next(s)) throw InsufficientInputError(0);
        if (seen_or_insert(s)) return {j, false};
    }
    // c symbols read, no repeat: the limit bound the measurement.
    return {c + 1, true};
}

Sample Segmenter::collect_sample(std::uint64_t l,
                                 std::optional<std::uint64_t> c) {
    if (l < 1) throw std::invalid_argument("block count l must be >= 1");
    Sample sample;
    for (std::uint64_t i = 0; i < l; ++i) {
        BlockObservation obs;
        try {
            obs = c ? next_block_clipped(*c) : next_block();
        } catch (const InsufficientInputError&) {
            throw InsufficientInputError(i);
        }
        ++sample.count_l;
        sample.sum_sizes += obs.size;
        if (obs.clipped) ++sample.clip_count_y;
    }
    return sample;
}

}  // namespace collide
