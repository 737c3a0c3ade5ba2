#include "ducci/builder.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "ducci/core.hpp"
#include "ducci/errors.hpp"

namespace ducci {

// ---- four-number chain -----------------------------------------------------

CanonicalQuad::CanonicalQuad(Integer a, Integer b, Integer c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!satisfies(a_, b_, c_)) {
        throw ValidationError("(0, " + a_.str() + ", " + b_.str() + ", " + c_.str() +
                              ") is not a canonical quad: need B >= A >= 0, C >= A + B, not all zero");
    }
}

bool CanonicalQuad::satisfies(const Integer& a, const Integer& b, const Integer& c) {
    const bool nonzero = a != 0 || b != 0 || c != 0;
    return nonzero && a >= 0 && b >= a && c >= a + b;
}

CanonicalQuad CanonicalQuad::from_tuple(const GameTuple& t) {
    if (t.size() != 4 || t[0] != 0) throw ValidationError("a canonical quad has the form (0, A, B, C)");
    return CanonicalQuad(t[1], t[2], t[3]);
}

GameTuple CanonicalQuad::tuple() const { return GameTuple::unchecked({0, a_, b_, c_}); }

QuadExtension extend_quad_detailed(const CanonicalQuad& q) {
    Integer delta = q.c() - q.b() - q.a();
    std::vector<Integer> scaled{delta, 2 * q.a() + delta, 2 * q.b() + delta, 2 * q.c() + delta};
    Integer b2 = scaled[0];
    Integer b3 = b2 + scaled[1];
    Integer b4 = b3 + scaled[2];
    return QuadExtension{CanonicalQuad(std::move(b2), std::move(b3), std::move(b4)),
                         GameTuple::unchecked(std::move(scaled)), std::move(delta)};
}

CanonicalQuad extend_quad(const CanonicalQuad& q) { return extend_quad_detailed(q).next; }

// ---- skip transforms -------------------------------------------------------

Matrix3 base_skip_matrix() {
    return Matrix3{{{-1, -1, 1}, {0, -2, 2}, {-1, -1, 3}}};
}

Matrix3 multiply(const Matrix3& x, const Matrix3& y) {
    Matrix3 out{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Integer s = 0;
            for (std::size_t l = 0; l < 3; ++l) s += x[i][l] * y[l][j];
            out[i][j] = std::move(s);
        }
    }
    return out;
}

Matrix3 remove_common_power_of_two(Matrix3 m) {
    std::size_t shift = SIZE_MAX;
    for (const auto& row : m) {
        for (const auto& v : row) {
            if (v != 0) shift = std::min<std::size_t>(shift, boost::multiprecision::lsb(abs(v)));
        }
    }
    if (shift == SIZE_MAX || shift == 0) return m;
    const Integer divisor = Integer(1) << shift;
    for (auto& row : m) {
        for (auto& v : row) v /= divisor;
    }
    return m;
}

SkipTransform skip_transform(std::uint64_t steps) {
    if (!std::has_single_bit(steps)) {
        throw ValidationError("skip steps must be a power of 2, got " + std::to_string(steps));
    }
    if (steps > kMaxSkipSteps) {
        throw ValidationError("skip steps capped at " + std::to_string(kMaxSkipSteps));
    }
    SkipTransform s{base_skip_matrix(), 1};
    while (s.steps < steps) {
        s.matrix = remove_common_power_of_two(multiply(s.matrix, s.matrix));
        s.steps *= 2;
    }
    return s;
}

namespace {

std::array<Integer, 3> mat_vec(const Matrix3& m, const std::array<Integer, 3>& v) {
    std::array<Integer, 3> out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return out;
}

}  // namespace

CanonicalQuad apply_skip(const SkipTransform& s, const CanonicalQuad& q) {
    auto v = mat_vec(s.matrix, {q.a(), q.b(), q.c()});
    return CanonicalQuad(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

std::vector<CanonicalQuad> recurrence_chain(const CanonicalQuad& q0, std::size_t n) {
    std::vector<std::array<Integer, 3>> x{{q0.a(), q0.b(), q0.c()}};
    const Matrix3 m = base_skip_matrix();
    for (std::size_t s = 1; s <= n; ++s) {
        if (s <= 2) {
            x.push_back(mat_vec(m, x.back()));
            continue;
        }
        std::array<Integer, 3> next;
        for (std::size_t c = 0; c < 3; ++c) next[c] = 4 * x[s - 2][c] + 4 * x[s - 3][c];
        x.push_back(std::move(next));
    }
    std::vector<CanonicalQuad> out;
    out.reserve(x.size());
    for (auto& v : x) out.emplace_back(std::move(v[0]), std::move(v[1]), std::move(v[2]));
    return out;
}

// ---- odd k -----------------------------------------------------------------

bool OddSeed::satisfies(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= 0 || b[i] <= a[i]) return false;
        if (i > 0 && (b[0] <= b[i] || a[0] <= a[i])) return false;
    }
    return true;
}

OddSeed::OddSeed(std::vector<Integer> a, std::vector<Integer> b) : a_(std::move(a)), b_(std::move(b)) {
    if (!satisfies(a_, b_)) {
        throw ValidationError("odd seed needs a_i, b_i > 0, b_i > a_i, and b_1 > b_i, a_1 > a_i for i >= 2");
    }
}

OddSeed OddSeed::from_tuple(const GameTuple& t) {
    if (t.size() < 3 || t.size() % 2 == 0 || t[0] != 0) {
        throw ValidationError("odd seed has the form (0, a1, b1, ..., al, bl)");
    }
    std::vector<Integer> a, b;
    for (std::size_t i = 1; i < t.size(); i += 2) {
        a.push_back(t[i]);
        b.push_back(t[i + 1]);
    }
    return OddSeed(std::move(a), std::move(b));
}

OddSeed OddSeed::minimal(std::size_t k) {
    if (k < 3 || k % 2 == 0) throw ValidationError("odd seed needs odd k >= 3");
    const std::size_t l = (k - 1) / 2;
    std::vector<Integer> a, b;
    for (std::size_t i = 1; i <= l; ++i) {
        a.emplace_back(l + 1 - i);
        b.emplace_back(l + 2 - i);
    }
    return OddSeed(std::move(a), std::move(b));
}

GameTuple OddSeed::tuple() const {
    std::vector<Integer> out{0};
    for (std::size_t i = 0; i < l(); ++i) {
        out.push_back(a_[i]);
        out.push_back(b_[i]);
    }
    return GameTuple::unchecked(std::move(out));
}

OddExtension extend_odd_detailed(const OddSeed& s) {
    Integer delta = 0;
    for (std::size_t i = 0; i < s.l(); ++i) delta += s.b()[i] - s.a()[i];
    std::vector<Integer> a, b;
    Integer prefix = 0;
    for (std::size_t i = 0; i < s.l(); ++i) {
        a.push_back(delta - prefix);
        b.push_back(2 * delta + s.a()[i] - prefix);
        prefix += s.b()[i] - s.a()[i];
    }
    return OddExtension{OddSeed(std::move(a), std::move(b)), std::move(delta)};
}

OddSeed extend_odd(const OddSeed& s) { return extend_odd_detailed(s).next; }

// ---- even k ----------------------------------------------------------------

bool EvenSeed::satisfies(const Integer& c, const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || a.size() != b.size() || c < 0) return false;
    if (b[0] <= a[0] + c) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || b[i] < 0) return false;
        if (i > 0 && (b[i] <= a[i] || b[0] <= b[i] || a[0] <= a[i])) return false;
    }
    return true;
}

EvenSeed::EvenSeed(Integer c, std::vector<Integer> a, std::vector<Integer> b)
    : c_(std::move(c)), a_(std::move(a)), b_(std::move(b)) {
    if (!valid()) {
        throw ValidationError(
            "even seed needs entries >= 0, b_1 > a_1 + c, b_i > a_i, and b_1 > b_i, a_1 > a_i for i >= 2");
    }
}

EvenSeed EvenSeed::unchecked(Integer c, std::vector<Integer> a, std::vector<Integer> b) {
    EvenSeed s;
    s.c_ = std::move(c);
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    return s;
}

EvenSeed EvenSeed::from_tuple(const GameTuple& t) {
    if (t.size() < 4 || t.size() % 2 != 0 || t[0] != 0) {
        throw ValidationError("even seed has the form (0, c, a1, b1, ..., al, bl)");
    }
    std::vector<Integer> a, b;
    for (std::size_t i = 2; i < t.size(); i += 2) {
        a.push_back(t[i]);
        b.push_back(t[i + 1]);
    }
    return EvenSeed(t[1], std::move(a), std::move(b));
}

EvenSeed EvenSeed::minimal(std::size_t k) {
    if (k < 4 || k % 2 != 0) throw ValidationError("even seed needs even k >= 4");
    const std::size_t l = (k - 2) / 2;
    std::vector<Integer> a(l, 0), b(l, 1);
    a[0] = 1;
    b[0] = 2;
    return EvenSeed(0, std::move(a), std::move(b));
}

GameTuple EvenSeed::tuple() const {
    std::vector<Integer> out{0, c_};
    for (std::size_t i = 0; i < l(); ++i) {
        out.push_back(a_[i]);
        out.push_back(b_[i]);
    }
    return GameTuple::unchecked(std::move(out));
}

EvenExtension extend_even_detailed(const EvenSeed& s) {
    if (!s.valid()) throw ValidationError("extend_even needs a seed satisfying the even-seed inequalities");
    Integer total = 0;
    for (std::size_t i = 0; i < s.l(); ++i) total += s.b()[i] - s.a()[i];
    Integer shift = total - s.c();

    std::vector<Integer> a(s.l()), b(s.l());
    Integer suffix = 0;
    for (std::size_t i = s.l(); i-- > 0;) {
        suffix += s.b()[i] - s.a()[i];
        a[i] = 2 * suffix;
        b[i] = a[i] + 2 * s.a()[i] + shift;
    }
    return EvenExtension{EvenSeed::unchecked(shift, std::move(a), std::move(b)), std::move(shift)};
}

EvenSeed extend_even(const EvenSeed& s) { return extend_even_detailed(s).next; }

// ---- building to a target life --------------------------------------------

std::vector<ChainStage> build_chain(std::size_t k, std::size_t target) {
    if (k <= 2) throw Infeasible("no construction extends life for k <= 2 (life is at most 2)");

    std::vector<ChainStage> chain;
    auto push = [&](GameTuple t) {
        const std::size_t l = life(t);
        if (!chain.empty() && l != chain.back().life + 1) {
            throw std::logic_error("construction did not extend life by one at stage " +
                                   std::to_string(chain.size()));
        }
        chain.push_back({chain.size(), std::move(t), l});
    };

    if (k == 4) {
        CanonicalQuad q(0, 0, 1);
        push(q.tuple());
        while (chain.back().life < target) {
            q = extend_quad(q);
            push(q.tuple());
        }
    } else if (k % 2 == 1) {
        OddSeed s = OddSeed::minimal(k);
        push(s.tuple());
        while (chain.back().life < target) {
            s = extend_odd(s);
            push(s.tuple());
        }
    } else {
        EvenSeed s = EvenSeed::minimal(k);
        push(s.tuple());
        while (chain.back().life < target) {
            s = extend_even(s);
            push(s.tuple());
        }
    }
    return chain;
}

GameTuple build_with_life(std::size_t k, std::size_t target) {
    if (k <= 2) throw Infeasible("no construction extends life for k <= 2 (life is at most 2)");

    GameTuple result;
    if (k == 4) {
        CanonicalQuad q(0, 0, 1);
        const std::size_t base = life(q.tuple());
        if (target > base) {
            const std::uint64_t extra = target - base;
            for (std::uint64_t bit = std::bit_floor(extra); bit != 0; bit >>= 1) {
                if (extra & bit) q = apply_skip(skip_transform(bit), q);
            }
        }
        result = q.tuple();
    } else if (k % 2 == 1) {
        OddSeed s = OddSeed::minimal(k);
        for (std::size_t l = life(s.tuple()); l < target; ++l) s = extend_odd(s);
        result = s.tuple();
    } else {
        EvenSeed s = EvenSeed::minimal(k);
        for (std::size_t l = life(s.tuple()); l < target; ++l) s = extend_even(s);
        result = s.tuple();
    }

    if (life(result) < target) {
        throw std::logic_error("constructed tuple falls short of life " + std::to_string(target));
    }
    return result;
}

}  // namespace ducci
