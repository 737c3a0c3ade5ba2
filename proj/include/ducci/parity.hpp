#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ducci/game_tuple.hpp"

namespace ducci {

// bits[i] = t[i] mod 2.
struct ParityVector {
    std::vector<std::uint8_t> bits;

    bool all_zero() const;
    friend bool operator==(const ParityVector&, const ParityVector&) = default;
};

ParityVector parity_vector(const GameTuple& t);

// Parity of iterate(t, n)[i] without simulating, from the mod-2 Newton
// expansion: sum over j of C(n, j) * t[i + n - j] (indices mod k).
std::uint8_t newton_parity(const GameTuple& t, std::uint64_t n, std::size_t i);

// C(n, j) is odd iff j is a bitwise submask of n. Rejects j > n.
bool binomial_is_even(std::uint64_t n, std::uint64_t j);

// Parity of iterate(t, 2^r): (t[i + 2^r] + t[i]) mod 2.
ParityVector power_of_two_shift_parity(const GameTuple& t, unsigned r);

std::uint64_t euler_totient(std::uint64_t K);

struct CongruentExponent {
    unsigned alpha = 0;      // k = 2^alpha * K, K odd
    std::uint64_t K = 1;
    std::uint64_t phi = 1;   // euler_totient(K)
    std::uint64_t lambda = 1;
    std::uint64_t m = 0;     // lambda * phi + alpha
};

// Least lambda >= 1 with 2^(lambda*phi(K) + alpha) >= n_min. Then
// 2^m == 2^alpha (mod k). Rejects k < 2 and k a power of 2.
CongruentExponent congruent_power_exponent(std::uint64_t k, const Integer& n_min);

}  // namespace ducci
