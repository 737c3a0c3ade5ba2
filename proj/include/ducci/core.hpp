#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ducci/game_tuple.hpp"

namespace ducci {

inline constexpr std::size_t kDefaultStepCap = 10'000'000;
inline constexpr std::size_t kSubsetSumCap = 30;

enum class TerminalKind { Zero, Cycle };

// A0 .. At where At is the first state equal to an earlier state As.
//
// life = repeat_at - 1. For zero-terminating tuples the all-zero state first
// appears at index life and repeats itself one step later, so this matches
// the "least n with An all zero" count; for cycling tuples it counts the
// steps taken just short of the first repetition.
struct Trajectory {
    std::vector<GameTuple> states;
    std::size_t repeat_at = 0;
    std::size_t repeat_target = 0;
    std::size_t life = 0;
    TerminalKind terminal = TerminalKind::Zero;

    std::size_t pre_period() const { return repeat_target; }
    std::size_t cycle_length() const { return repeat_at - repeat_target; }
};

// result[i] = |t[i+1] - t[i]|, indices mod k.
GameTuple diff_step(const GameTuple& t);

GameTuple iterate(const GameTuple& t, std::size_t n);

// Throws StepCapExceeded when more than step_cap differencings are needed.
Trajectory trajectory(const GameTuple& t, std::size_t step_cap = kDefaultStepCap);

std::size_t life(const GameTuple& t, std::size_t step_cap = kDefaultStepCap);

// True when t lies on its own cycle (its trajectory returns to index 0).
bool is_periodic(const GameTuple& t, std::size_t step_cap = kDefaultStepCap);

// lambda * t[i] + delta. Rejects lambda = 0.
//
// Life is preserved except in one corner: when delta > 0 and t is itself
// periodic (all-zero, or on a {0, c} cycle), the shifted tuple is not periodic
// and lives exactly one step longer.
GameTuple scale_shift(const GameTuple& t, const Integer& lambda, const Integer& delta);

// Subtract the minimum, divide by the gcd (1 for all zeros), then take the
// lexicographically smallest of the 2k rotations/reflections.
GameTuple canonical_form(const GameTuple& t);

bool is_power_of_two(std::size_t k) noexcept;

// Every entry of A_{h*k} divisible by 2^h. k must be a power of 2.
bool divisibility_check(const GameTuple& t, std::size_t h);

struct ZeroBound {
    std::size_t h = 0;      // least h with 2^h > max(t)
    std::size_t steps = 0;  // h * k
};

// Upper bound on life for k a power of 2.
ZeroBound zero_bound(const GameTuple& t);

// With k = 2^alpha * K (K odd > 1): t[i + 2^alpha] == t[i] (mod 2) for all i.
// Necessary for the trajectory to reach all zeros. Rejects k a power of 2.
bool necessary_parity_condition(const GameTuple& t);

// A zero-sum sign vector (+1/-1 per entry), or empty.
//
// Meet-in-the-middle over the 2^(k-1) assignments with signs[0] fixed to +1.
// Among solutions, the one with the smallest left-half mask and then the
// smallest right-half mask is returned (bit set = negative sign).
std::optional<std::vector<int>> find_zero_sum_signs(const GameTuple& t);

// Some tuple maps onto t under diff_step. Throws CapExceeded for k > 30.
bool is_difference_set(const GameTuple& t);

// A tuple u with diff_step(u) == t and min(u) == 0, or empty.
std::optional<GameTuple> find_preimage(const GameTuple& t);

std::string to_json(const Trajectory& tr);
Trajectory trajectory_from_json(const std::string& text);

}  // namespace ducci
