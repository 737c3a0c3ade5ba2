#pragma once

// Independent brute-force references used only by tests. Everything here
// works on plain long long vectors and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "ducci/game_tuple.hpp"

namespace oracle {

using Vec = std::vector<long long>;

inline Vec step(const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::llabs(v[(i + 1) % v.size()] - v[i]);
    return out;
}

// Index of the first state equal to an earlier one, minus 1.
inline std::size_t life(const Vec& v) {
    std::vector<Vec> seen{v};
    for (;;) {
        Vec next = step(seen.back());
        if (std::find(seen.begin(), seen.end(), next) != seen.end()) return seen.size() - 1;
        seen.push_back(std::move(next));
    }
}

inline std::vector<Vec> states(const Vec& v, std::size_t n) {
    std::vector<Vec> out{v};
    for (std::size_t i = 0; i < n; ++i) out.push_back(step(out.back()));
    return out;
}

// Min-subtract, gcd-divide, then the smallest of all 2k dihedral images.
inline Vec canonical(const Vec& v) {
    const long long lo = *std::min_element(v.begin(), v.end());
    Vec r;
    long long g = 0;
    for (long long x : v) {
        r.push_back(x - lo);
        g = std::gcd(g, x - lo);
    }
    if (g > 1) {
        for (auto& x : r) x /= g;
    }
    Vec best = r;
    const std::size_t k = r.size();
    for (int refl = 0; refl < 2; ++refl) {
        Vec base = r;
        if (refl) std::reverse(base.begin(), base.end());
        for (std::size_t s = 0; s < k; ++s) {
            Vec cand(k);
            for (std::size_t i = 0; i < k; ++i) cand[i] = base[(i + s) % k];
            best = std::min(best, cand);
        }
    }
    return best;
}

// Exhaustive over all 2^k sign vectors.
inline bool has_zero_sum_signs(const Vec& v) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.size()); ++mask) {
        long long s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += (mask >> i & 1U) ? -v[i] : v[i];
        if (s == 0) return true;
    }
    return false;
}

inline Vec to_vec(const ducci::GameTuple& t) {
    Vec out;
    for (const auto& e : t) out.push_back(e.convert_to<long long>());
    return out;
}

inline ducci::GameTuple to_tuple(const Vec& v) {
    return ducci::GameTuple(std::vector<ducci::Integer>(v.begin(), v.end()));
}

// Every tuple in [0, bound]^k, in odometer order.
template <class F>
void for_each_tuple(std::size_t k, long long bound, F&& f) {
    Vec v(k, 0);
    for (;;) {
        f(v);
        std::size_t pos = k;
        while (pos > 0 && v[pos - 1] == bound) v[--pos] = 0;
        if (pos == 0) return;
        ++v[pos - 1];
    }
}

}  // namespace oracle
