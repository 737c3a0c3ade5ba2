#include "ducci/parity.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ducci/errors.hpp"

namespace ducci {

bool ParityVector::all_zero() const {
    return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; });
}

namespace {

std::uint8_t low_bit(const Integer& x) { return boost::multiprecision::bit_test(x, 0) ? 1 : 0; }

}  // namespace

ParityVector parity_vector(const GameTuple& t) {
    ParityVector p;
    p.bits.reserve(t.size());
    for (const auto& e : t) p.bits.push_back(low_bit(e));
    return p;
}

bool binomial_is_even(std::uint64_t n, std::uint64_t j) {
    if (j > n) throw ValidationError("binomial C(n, j) needs j <= n");
    return (j & n) != j;
}

std::uint8_t newton_parity(const GameTuple& t, std::uint64_t n, std::size_t i) {
    const std::size_t k = t.size();
    // Coefficients of (1 + x)^n mod (x^k - 1) over GF(2). Lucas splits the
    // power into one factor (1 + x^(2^b)) per set bit b of n, so coeff[d] is
    // the parity of the sum of C(n, j) over j == d (mod k).
    std::vector<std::uint8_t> coeff(k, 0);
    coeff[0] = 1;
    std::size_t stride = 1 % k;
    for (std::uint64_t rest = n; rest != 0; rest >>= 1) {
        if (rest & 1U) {
            std::vector<std::uint8_t> next = coeff;
            for (std::size_t d = 0; d < k; ++d) next[(d + stride) % k] ^= coeff[d];
            coeff = std::move(next);
        }
        stride = (stride * 2) % k;
    }
    std::uint8_t acc = 0;
    for (std::size_t d = 0; d < k; ++d) {
        if (coeff[d]) acc ^= low_bit(t.at_cyclic(i + d));
    }
    return acc;
}

ParityVector power_of_two_shift_parity(const GameTuple& t, unsigned r) {
    const std::size_t k = t.size();
    // 2^r mod k without overflow for large r.
    std::size_t shift = 1 % k;
    for (unsigned s = 0; s < r; ++s) shift = (shift * 2) % k;
    ParityVector p;
    p.bits.reserve(k);
    for (std::size_t i = 0; i < k; ++i) p.bits.push_back(low_bit(t[i]) ^ low_bit(t.at_cyclic(i + shift)));
    return p;
}

std::uint64_t euler_totient(std::uint64_t K) {
    if (K == 0) throw ValidationError("totient needs K >= 1");
    std::uint64_t result = K;
    std::uint64_t rest = K;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        result -= result / p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

CongruentExponent congruent_power_exponent(std::uint64_t k, const Integer& n_min) {
    if (k < 2 || std::has_single_bit(k)) {
        throw ValidationError("congruent exponent needs k >= 2 not a power of 2, got k=" + std::to_string(k));
    }
    CongruentExponent c;
    c.alpha = static_cast<unsigned>(std::countr_zero(k));
    c.K = k >> c.alpha;
    c.phi = euler_totient(c.K);
    for (c.lambda = 1;; ++c.lambda) {
        c.m = c.lambda * c.phi + c.alpha;
        if ((Integer(1) << static_cast<unsigned>(c.m)) >= n_min) break;
    }
    return c;
}

}  // namespace ducci
