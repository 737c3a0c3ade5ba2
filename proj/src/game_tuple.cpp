#include "ducci/game_tuple.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <boost/functional/hash.hpp>

#include "ducci/errors.hpp"

namespace ducci {

GameTuple::GameTuple(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) {
        throw ValidationError("a game tuple needs at least 2 entries, got " +
                              std::to_string(entries_.size()));
    }
    for (const auto& e : entries_) {
        if (e < 0) throw ValidationError("negative entry " + e.str() + " in game tuple");
    }
}

GameTuple::GameTuple(std::initializer_list<long long> entries)
    : GameTuple(std::vector<Integer>(entries.begin(), entries.end())) {}

const Integer& GameTuple::max() const { return *std::max_element(entries_.begin(), entries_.end()); }

const Integer& GameTuple::min() const { return *std::min_element(entries_.begin(), entries_.end()); }

bool GameTuple::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e == 0; });
}

std::string GameTuple::to_string(std::string_view sep) const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += sep;
        out += entries_[i].str();
    }
    return out;
}

std::strong_ordering operator<=>(const GameTuple& a, const GameTuple& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return std::strong_ordering::less;
        if (b[i] < a[i]) return std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

namespace {

Integer parse_natural(std::string_view tok) {
    if (tok.empty()) throw ValidationError("empty tuple entry");
    if (tok.front() == '-') throw ValidationError("negative entry '" + std::string(tok) + "'");
    if (tok.front() == '+') tok.remove_prefix(1);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ValidationError("not a decimal natural: '" + std::string(tok) + "'");
    }
    return Integer(std::string(tok));
}

}  // namespace

GameTuple parse_tuple(std::string_view text) {
    std::vector<Integer> entries;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) {
            entries.push_back(parse_natural(tok));
            tok.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            tok += c;
        }
    }
    flush();
    return GameTuple(std::move(entries));
}

GameTuple parse_tuple(std::span<const std::string> tokens) {
    std::string joined;
    for (const auto& t : tokens) {
        joined += t;
        joined += ' ';
    }
    return parse_tuple(std::string_view(joined));
}

GameTuple rotate(const GameTuple& t, std::size_t r) {
    std::vector<Integer> out(t.begin(), t.end());
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r % out.size()), out.end());
    return GameTuple(std::move(out));
}

GameTuple reverse(const GameTuple& t) {
    return GameTuple(std::vector<Integer>(t.entries().rbegin(), t.entries().rend()));
}

std::size_t GameTupleHash::operator()(const GameTuple& t) const noexcept {
    std::size_t seed = t.size();
    for (const auto& e : t) boost::hash_combine(seed, e);
    return seed;
}

}  // namespace ducci
