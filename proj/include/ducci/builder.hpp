#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ducci/game_tuple.hpp"

namespace ducci {

// (0, A, B, C) with A, B, C not all zero, B >= A >= 0 and C >= A + B.
class CanonicalQuad {
public:
    CanonicalQuad(Integer a, Integer b, Integer c);
    static CanonicalQuad from_tuple(const GameTuple& t);

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }
    GameTuple tuple() const;

    static bool satisfies(const Integer& a, const Integer& b, const Integer& c);

    friend bool operator==(const CanonicalQuad&, const CanonicalQuad&) = default;

private:
    Integer a_, b_, c_;
};

// One four-number extension: a' = 2q + delta with delta = C - B - A, and the
// result is the tuple whose differences are a'. Lives one step longer.
struct QuadExtension {
    CanonicalQuad next;
    GameTuple scaled;  // a', equal to diff_step(next.tuple())
    Integer delta;
};

QuadExtension extend_quad_detailed(const CanonicalQuad& q);
CanonicalQuad extend_quad(const CanonicalQuad& q);

using Matrix3 = std::array<std::array<Integer, 3>, 3>;

// Advances a canonical quad's life by `steps` (a power of 2).
struct SkipTransform {
    Matrix3 matrix;
    std::uint64_t steps = 1;
};

Matrix3 base_skip_matrix();
Matrix3 multiply(const Matrix3& x, const Matrix3& y);
// Divides every entry by the largest power of 2 common to all of them.
Matrix3 remove_common_power_of_two(Matrix3 m);

inline constexpr std::uint64_t kMaxSkipSteps = std::uint64_t{1} << 20;

// steps = 1 is the base matrix; each doubling squares and normalizes.
SkipTransform skip_transform(std::uint64_t steps);

CanonicalQuad apply_skip(const SkipTransform& s, const CanonicalQuad& q);

// Stages 0..n. Stages 1 and 2 come from the un-normalized one-step matrix,
// later stages from X(n+1) = 4 X(n-1) + 4 X(n-2) applied to A, B and C.
std::vector<CanonicalQuad> recurrence_chain(const CanonicalQuad& q0, std::size_t n);

// S = (0, a1, b1, ..., al, bl), k = 2l + 1.
// Requires all a_i, b_i > 0, b_i > a_i, and b_1 > b_i, a_1 > a_i for i >= 2.
class OddSeed {
public:
    OddSeed(std::vector<Integer> a, std::vector<Integer> b);
    static OddSeed from_tuple(const GameTuple& t);
    // l = (k - 1) / 2: a_i = l + 1 - i, b_i = a_i + 1.
    static OddSeed minimal(std::size_t k);

    std::size_t l() const noexcept { return a_.size(); }
    const std::vector<Integer>& a() const noexcept { return a_; }
    const std::vector<Integer>& b() const noexcept { return b_; }
    GameTuple tuple() const;

    static bool satisfies(const std::vector<Integer>& a, const std::vector<Integer>& b);

private:
    std::vector<Integer> a_, b_;
};

// S = (0, c, a1, b1, ..., al, bl), k = 2l + 2.
// Requires all entries >= 0, b_1 > a_1 + c, b_i > a_i for i >= 2, and
// b_1 > b_i, a_1 > a_i for i >= 2.
class EvenSeed {
public:
    EvenSeed(Integer c, std::vector<Integer> a, std::vector<Integer> b);
    static EvenSeed from_tuple(const GameTuple& t);
    // c = 0, a = (1, 0, ..., 0), b = (2, 1, ..., 1).
    static EvenSeed minimal(std::size_t k);
    // Holds the shape without checking the inequalities; see extend_even.
    static EvenSeed unchecked(Integer c, std::vector<Integer> a, std::vector<Integer> b);

    bool valid() const { return satisfies(c_, a_, b_); }

    std::size_t l() const noexcept { return a_.size(); }
    const Integer& c() const noexcept { return c_; }
    const std::vector<Integer>& a() const noexcept { return a_; }
    const std::vector<Integer>& b() const noexcept { return b_; }
    GameTuple tuple() const;

    static bool satisfies(const Integer& c, const std::vector<Integer>& a, const std::vector<Integer>& b);

private:
    EvenSeed() = default;

    Integer c_;
    std::vector<Integer> a_, b_;
};

struct OddExtension {
    OddSeed next;
    Integer delta;  // diff_step(next) == S + delta
};

struct EvenExtension {
    EvenSeed next;
    Integer shift;  // diff_step(next) == 2S + shift
};

OddExtension extend_odd_detailed(const OddSeed& s);
OddSeed extend_odd(const OddSeed& s);

// The output is itself a valid seed only when a_1 > 0; extending it further
// throws otherwise. Lives one step longer either way.
EvenExtension extend_even_detailed(const EvenSeed& s);
EvenSeed extend_even(const EvenSeed& s);

struct ChainStage {
    std::size_t stage = 0;
    GameTuple tuple;
    std::size_t life = 0;
};

// Step-by-step construction from the minimal seed for k until life >= target.
// k = 4 walks the four-number chain from (0, 0, 0, 1); other k use the odd or
// even seed constructions. Each stage's life is simulated.
std::vector<ChainStage> build_chain(std::size_t k, std::size_t target);

// A tuple of k entries whose simulated life is >= target. k = 4 jumps with
// skip transforms; the result is re-verified before it is returned.
// Throws Infeasible for k <= 2.
GameTuple build_with_life(std::size_t k, std::size_t target);

}  // namespace ducci
