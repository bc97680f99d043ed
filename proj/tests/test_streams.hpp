#ifndef COLLIDE_TEST_STREAMS_HPP
#define COLLIDE_TEST_STREAMS_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "collide/stream.hpp"

namespace testutil {

// Replays a fixed key sequence, then reports exhaustion.
class VectorStream final : public collide::SymbolStream {
public:
    explicit VectorStream(std::vector<collide::SymbolKey> keys)
        : keys_(std::move(keys)) {}

    bool next(collide::SymbolKey& out) override {
        if (pos_ >= keys_.size()) return false;
        out = keys_[pos_++];
        return true;
    }

private:
    std::vector<collide::SymbolKey> keys_;
    std::size_t pos_ = 0;
};

// "A,B,K,D" style shorthand: each letter is one symbol.
inline std::vector<collide::SymbolKey> letters(const std::string& seq) {
    std::vector<collide::SymbolKey> keys;
    for (char ch : seq)
        if (ch != ',' && ch != ' ')
            keys.push_back(static_cast<collide::SymbolKey>(ch));
    return keys;
}

}  // namespace testutil

#endif
