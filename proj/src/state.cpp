#include "ppeval/state.hpp"

#include "ppeval/errors.hpp"

namespace ppeval {

State::State(int width) : width_(width), words_((width + 63) / 64, 0) {
    if (width < 0)
        throw Error("negative state width");
}

State State::from_index(int width, std::uint64_t index) {
    if (width > 64)
        throw Error("from_index requires width <= 64");
    State s(width);
    if (width > 0)
        s.words_[0] = width == 64 ? index : (index & ((std::uint64_t{1} << width) - 1));
    return s;
}

State State::from_bits(std::string_view bits) {
    State s(static_cast<int>(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            s.set(static_cast<int>(i), true);
        else if (bits[i] != '0')
            throw Error("state bit string must contain only 0/1");
    }
    return s;
}

std::uint64_t State::index() const {
    if (width_ > 64)
        throw Error("index() requires width <= 64");
    return words_.empty() ? 0 : words_[0];
}

std::string State::to_bits() const {
    std::string out(width_, '0');
    for (int i = 0; i < width_; ++i)
        if (get(i))
            out[i] = '1';
    return out;
}

bool operator<(const State& a, const State& b) {
    if (a.width_ != b.width_)
        return a.width_ < b.width_;
    return a.words_ < b.words_;
}

std::size_t State::hash() const {
    std::size_t h = std::hash<int>{}(width_);
    for (std::uint64_t w : words_)
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw Error("duplicate variable name '" + names_[i] + "'");
    }
}

std::optional<int> VariableTable::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

}  // namespace ppeval
