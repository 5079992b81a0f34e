#ifndef PPEVAL_STATE_HPP
#define PPEVAL_STATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ppeval {

// Assignment to the domain's boolean state variables: a fixed-width bit
// vector, bit i = value of the i-th declared variable.
class State {
public:
    State() = default;
    explicit State(int width);

    // Little-endian construction: bit i of `index` becomes variable i.
    // Only valid for width <= 64.
    static State from_index(int width, std::uint64_t index);
    // From a string like "01", character i = variable i.
    static State from_bits(std::string_view bits);

    int width() const { return width_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    // Inverse of from_index; requires width <= 64.
    std::uint64_t index() const;
    std::string to_bits() const;

    friend bool operator==(const State& a, const State& b) {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }
    friend bool operator!=(const State& a, const State& b) { return !(a == b); }
    friend bool operator<(const State& a, const State& b);

    std::size_t hash() const;

private:
    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StateHash {
    std::size_t operator()(const State& s) const { return s.hash(); }
};

// Ordered variable names with index lookup. Declaration order fixes the state
// bit order and the circuit input numbering.
class VariableTable {
public:
    VariableTable() = default;
    explicit VariableTable(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    std::optional<int> index_of(std::string_view name) const;

    friend bool operator==(const VariableTable& a, const VariableTable& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace ppeval

#endif
