#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ducci {

using Integer = boost::multiprecision::cpp_int;

// An ordered cyclic k-tuple of nonnegative integers, k >= 2.
//
// Entries are arbitrary precision. The constructor validates the invariants,
// so every live GameTuple is a legal game state.
class GameTuple {
public:
    GameTuple() = default;
    explicit GameTuple(std::vector<Integer> entries);
    GameTuple(std::initializer_list<long long> entries);

    // Skips validation. Only for entries already known to be a legal state.
    static GameTuple unchecked(std::vector<Integer> entries) {
        GameTuple t;
        t.entries_ = std::move(entries);
        return t;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }
    // Cyclic access: index reduced mod k.
    const Integer& at_cyclic(std::size_t i) const { return entries_[i % entries_.size()]; }

    std::span<const Integer> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    const Integer& max() const;
    const Integer& min() const;
    bool is_zero() const;

    std::string to_string(std::string_view sep = " ") const;

    // Lexicographic on entry lists, numeric per entry.
    friend bool operator==(const GameTuple&, const GameTuple&) = default;
    friend std::strong_ordering operator<=>(const GameTuple& a, const GameTuple& b);

private:
    std::vector<Integer> entries_;
};

// Parses comma- or whitespace-separated decimal naturals.
GameTuple parse_tuple(std::string_view text);
GameTuple parse_tuple(std::span<const std::string> tokens);

GameTuple rotate(const GameTuple& t, std::size_t r);
GameTuple reverse(const GameTuple& t);

struct GameTupleHash {
    std::size_t operator()(const GameTuple& t) const noexcept;
};

}  // namespace ducci
