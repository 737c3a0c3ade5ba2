#include "ducci/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "ducci/errors.hpp"
#include "ducci/json_io.hpp"

namespace ducci {

GameTuple diff_step(const GameTuple& t) {
    const std::size_t k = t.size();
    std::vector<Integer> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Integer& a = t[i];
        const Integer& b = t[(i + 1) % k];
        out[i] = a < b ? Integer(b - a) : Integer(a - b);
    }
    return GameTuple::unchecked(std::move(out));
}

GameTuple iterate(const GameTuple& t, std::size_t n) {
    GameTuple cur = t;
    for (std::size_t i = 0; i < n; ++i) cur = diff_step(cur);
    return cur;
}

Trajectory trajectory(const GameTuple& t, std::size_t step_cap) {
    Trajectory tr;
    std::unordered_map<GameTuple, std::size_t, GameTupleHash> seen;
    tr.states.push_back(t);
    seen.emplace(t, 0);
    for (;;) {
        if (tr.states.size() > step_cap) throw StepCapExceeded(step_cap);
        GameTuple next = diff_step(tr.states.back());
        const std::size_t index = tr.states.size();
        auto [it, inserted] = seen.try_emplace(next, index);
        tr.states.push_back(std::move(next));
        if (!inserted) {
            tr.repeat_at = index;
            tr.repeat_target = it->second;
            break;
        }
    }
    tr.life = tr.repeat_at - 1;
    tr.terminal = tr.states[tr.repeat_target].is_zero() ? TerminalKind::Zero : TerminalKind::Cycle;
    return tr;
}

std::size_t life(const GameTuple& t, std::size_t step_cap) { return trajectory(t, step_cap).life; }

bool is_periodic(const GameTuple& t, std::size_t step_cap) {
    return trajectory(t, step_cap).repeat_target == 0;
}

GameTuple scale_shift(const GameTuple& t, const Integer& lambda, const Integer& delta) {
    if (lambda <= 0) throw ValidationError("scale factor must be a positive integer");
    if (delta < 0) throw ValidationError("shift must be nonnegative");
    std::vector<Integer> out;
    out.reserve(t.size());
    for (const auto& e : t) out.emplace_back(lambda * e + delta);
    return GameTuple::unchecked(std::move(out));
}

GameTuple canonical_form(const GameTuple& t) {
    const Integer lo = t.min();
    std::vector<Integer> reduced;
    reduced.reserve(t.size());
    Integer g = 0;
    for (const auto& e : t) {
        reduced.emplace_back(e - lo);
        g = boost::multiprecision::gcd(g, reduced.back());
    }
    if (g > 1) {
        for (auto& e : reduced) e /= g;
    }

    const std::size_t k = reduced.size();
    const auto base = GameTuple::unchecked(std::move(reduced));
    const auto mirrored = reverse(base);
    GameTuple best = base;
    for (std::size_t r = 0; r < k; ++r) {
        for (const auto* src : {&base, &mirrored}) {
            // Compare the rotation in place before materializing it.
            bool smaller = false;
            for (std::size_t i = 0; i < k; ++i) {
                const Integer& x = src->at_cyclic(i + r);
                if (x < best[i]) {
                    smaller = true;
                    break;
                }
                if (best[i] < x) break;
            }
            if (smaller) best = rotate(*src, r);
        }
    }
    return best;
}

bool is_power_of_two(std::size_t k) noexcept { return std::has_single_bit(k); }

bool divisibility_check(const GameTuple& t, std::size_t h) {
    if (!is_power_of_two(t.size())) {
        throw ValidationError("divisibility check needs k a power of 2, got k=" + std::to_string(t.size()));
    }
    const GameTuple a = iterate(t, h * t.size());
    return std::all_of(a.begin(), a.end(), [h](const Integer& e) {
        return e == 0 || boost::multiprecision::lsb(e) >= h;
    });
}

ZeroBound zero_bound(const GameTuple& t) {
    if (!is_power_of_two(t.size())) {
        throw ValidationError("zero bound needs k a power of 2, got k=" + std::to_string(t.size()));
    }
    const Integer& c = t.max();
    ZeroBound b;
    b.h = c == 0 ? 0 : boost::multiprecision::msb(c) + 1;
    b.steps = b.h * t.size();
    return b;
}

bool necessary_parity_condition(const GameTuple& t) {
    const std::size_t k = t.size();
    if (is_power_of_two(k)) {
        throw ValidationError("parity condition is vacuous for k a power of 2, got k=" + std::to_string(k));
    }
    const std::size_t stride = std::size_t{1} << std::countr_zero(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (boost::multiprecision::bit_test(t[i], 0) != boost::multiprecision::bit_test(t.at_cyclic(i + stride), 0)) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> find_zero_sum_signs(const GameTuple& t) {
    const std::size_t k = t.size();
    if (k > kSubsetSumCap) {
        throw CapExceeded("subset-sum search is capped at k=" + std::to_string(kSubsetSumCap) +
                          ", got k=" + std::to_string(k));
    }
    const std::size_t split = k / 2;
    const std::size_t right_n = k - split;

    struct Half {
        Integer sum;
        std::uint32_t mask;
    };
    std::vector<Half> right;
    right.reserve(std::size_t{1} << right_n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << right_n); ++mask) {
        Integer s = 0;
        for (std::size_t j = 0; j < right_n; ++j) {
            if (mask >> j & 1U) {
                s -= t[split + j];
            } else {
                s += t[split + j];
            }
        }
        right.push_back({std::move(s), mask});
    }
    std::sort(right.begin(), right.end(), [](const Half& a, const Half& b) {
        return a.sum != b.sum ? a.sum < b.sum : a.mask < b.mask;
    });

    // Bit 0 of the left mask is index 0, whose sign stays +1.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << split); mask += 2) {
        Integer s = 0;
        for (std::size_t j = 0; j < split; ++j) {
            if (mask >> j & 1U) {
                s -= t[j];
            } else {
                s += t[j];
            }
        }
        const Integer want = -s;
        auto it = std::lower_bound(right.begin(), right.end(), want,
                                   [](const Half& h, const Integer& v) { return h.sum < v; });
        if (it == right.end() || it->sum != want) continue;
        std::vector<int> signs(k, 1);
        for (std::size_t j = 0; j < split; ++j) {
            if (mask >> j & 1U) signs[j] = -1;
        }
        for (std::size_t j = 0; j < right_n; ++j) {
            if (it->mask >> j & 1U) signs[split + j] = -1;
        }
        return signs;
    }
    return std::nullopt;
}

bool is_difference_set(const GameTuple& t) { return find_zero_sum_signs(t).has_value(); }

std::optional<GameTuple> find_preimage(const GameTuple& t) {
    auto signs = find_zero_sum_signs(t);
    if (!signs) return std::nullopt;
    const std::size_t k = t.size();
    std::vector<Integer> partial(k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        partial[i + 1] = partial[i] + (*signs)[i] * t[i];
    }
    const Integer lo = *std::min_element(partial.begin(), partial.end());
    for (auto& p : partial) p -= lo;
    return GameTuple(std::move(partial));
}

std::string to_json(const Trajectory& tr) {
    std::string out = "{\"states\":[";
    for (std::size_t i = 0; i < tr.states.size(); ++i) {
        if (i) out += ',';
        out += json_array(tr.states[i]);
    }
    out += "],\"life\":" + std::to_string(tr.life);
    out += ",\"repeat_at\":" + std::to_string(tr.repeat_at);
    out += ",\"repeat_target\":" + std::to_string(tr.repeat_target);
    out += ",\"terminal\":\"";
    out += tr.terminal == TerminalKind::Zero ? "zero" : "cycle";
    out += "\"}";
    return out;
}

Trajectory trajectory_from_json(const std::string& text) {
    const auto doc = parse_json_exact(text);
    if (!doc.is_object()) throw ValidationError("trajectory JSON must be an object");
    for (const char* key : {"states", "life", "repeat_at", "repeat_target", "terminal"}) {
        if (!doc.contains(key)) throw ValidationError(std::string("trajectory JSON lacks \"") + key + "\"");
    }
    Trajectory tr;
    for (const auto& s : doc.at("states")) tr.states.push_back(json_tuple(s));
    tr.life = doc.at("life").get<std::size_t>();
    tr.repeat_at = doc.at("repeat_at").get<std::size_t>();
    tr.repeat_target = doc.at("repeat_target").get<std::size_t>();
    const auto terminal = doc.at("terminal").get<std::string>();
    if (terminal != "zero" && terminal != "cycle") throw ValidationError("unknown terminal kind: " + terminal);
    tr.terminal = terminal == "zero" ? TerminalKind::Zero : TerminalKind::Cycle;

    if (tr.states.size() < 2) throw ValidationError("trajectory needs at least two states");
    if (tr.repeat_at != tr.states.size() - 1 || tr.repeat_target >= tr.repeat_at) {
        throw ValidationError("repeat indices inconsistent with state count");
    }
    if (tr.life != tr.repeat_at - 1) throw ValidationError("life must equal repeat_at - 1");
    for (std::size_t i = 0; i + 1 < tr.states.size(); ++i) {
        if (tr.states[i].size() != tr.states[0].size() || diff_step(tr.states[i]) != tr.states[i + 1]) {
            throw ValidationError("state " + std::to_string(i + 1) + " is not the difference of its predecessor");
        }
    }
    if (tr.states[tr.repeat_at] != tr.states[tr.repeat_target]) {
        throw ValidationError("repeat_at state does not equal repeat_target state");
    }
    std::unordered_set<GameTuple, GameTupleHash> distinct(tr.states.begin(), tr.states.end() - 1);
    if (distinct.size() != tr.states.size() - 1) throw ValidationError("states repeat before repeat_at");
    const bool zero = tr.states[tr.repeat_target].is_zero();
    if (zero != (tr.terminal == TerminalKind::Zero)) throw ValidationError("terminal kind mismatch");
    return tr;
}

}  // namespace ducci
