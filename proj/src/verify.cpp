#include "ducci/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "ducci/builder.hpp"
#include "ducci/core.hpp"
#include "ducci/errors.hpp"
#include "ducci/parity.hpp"

namespace ducci {

bool VerifyReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

std::string VerifyReport::to_text() const {
    std::string out;
    for (const auto& r : results) {
        out += r.passed ? "PASS " : "FAIL ";
        out += r.suite + "/" + r.name + " (" + std::to_string(r.cases) + " cases)";
        if (!r.detail.empty()) out += " [" + r.detail + "]";
        if (!r.passed) out += "\n     counterexample: " + r.counterexample;
        out += "\n";
    }
    return out;
}

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string VerifyReport::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (i) out += ",";
        out += "{\"suite\":\"" + r.suite + "\",\"name\":\"" + r.name + "\",\"cases\":" + std::to_string(r.cases) +
               ",\"passed\":" + (r.passed ? "true" : "false");
        if (!r.passed) out += ",\"counterexample\":\"" + escape(r.counterexample) + "\"";
        if (!r.detail.empty()) out += ",\"detail\":\"" + escape(r.detail) + "\"";
        out += "}";
    }
    return out + "]";
}

namespace {

using Rng = std::mt19937_64;
using Failure = std::optional<std::string>;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

GameTuple random_tuple(Rng& rng, std::size_t k, std::uint64_t max_entry) {
    std::vector<Integer> e(k);
    for (auto& x : e) x = uniform(rng, 0, max_entry);
    return GameTuple(std::move(e));
}

// Mostly uniform tuples, plus offset {0, c} patterns so cycle states and
// constant tuples show up often enough to exercise the shift corner.
GameTuple mixed_tuple(Rng& rng, std::size_t k, std::uint64_t max_entry) {
    if (uniform(rng, 0, 3) != 0) return random_tuple(rng, k, max_entry);
    const std::uint64_t c = uniform(rng, 1, 9);
    const std::uint64_t offset = uniform(rng, 0, 1) ? 0 : uniform(rng, 1, 5);
    std::vector<Integer> e(k);
    for (auto& x : e) x = offset + (uniform(rng, 0, 1) ? c : 0);
    return GameTuple(std::move(e));
}

std::string show(const GameTuple& t) { return "(" + t.to_string(",") + ")"; }

class Runner {
public:
    Runner(VerifyReport& report, std::size_t cases, std::uint64_t seed) : report_(report), cases_(cases), seed_(seed) {}

    void suite(std::string name) { suite_ = std::move(name); }

    // Runs `body` on `cases_` draws; stops at the first failure.
    void property(const std::string& name, const std::function<Failure(Rng&)>& body, std::size_t cases = 0) {
        if (cases == 0) cases = cases_;
        Rng rng(seed_ + std::hash<std::string>{}(name) % 1'000'003);
        PropertyResult r{suite_, name, 0, true, {}, {}};
        for (std::size_t i = 0; i < cases; ++i) {
            ++r.cases;
            Failure f;
            try {
                f = body(rng);
            } catch (const std::exception& ex) {
                f = std::string("exception: ") + ex.what();
            }
            if (f) {
                r.passed = false;
                r.counterexample = *f;
                break;
            }
        }
        report_.results.push_back(std::move(r));
    }

    void annotate_last(std::string d) { report_.results.back().detail = std::move(d); }

private:
    VerifyReport& report_;
    std::size_t cases_;
    std::uint64_t seed_;
    std::string suite_;
};

// ---- equivalence -----------------------------------------------------------

void equivalence_suite(Runner& run) {
    run.suite("equivalence");
    run.property("rotation_preserves_life", [](Rng& rng) -> Failure {
        const auto t = mixed_tuple(rng, uniform(rng, 3, 8), 1000);
        const auto r = uniform(rng, 1, t.size() - 1);
        if (life(rotate(t, r)) != life(t)) return show(t) + " rotated by " + std::to_string(r);
        return std::nullopt;
    });
    run.property("reflection_preserves_life", [](Rng& rng) -> Failure {
        const auto t = mixed_tuple(rng, uniform(rng, 3, 8), 1000);
        if (life(reverse(t)) != life(t)) return show(t);
        return std::nullopt;
    });
    run.property("scale_preserves_life", [](Rng& rng) -> Failure {
        const auto t = mixed_tuple(rng, uniform(rng, 3, 8), 1000);
        const Integer lambda = uniform(rng, 1, 5);
        if (life(scale_shift(t, lambda, 0)) != life(t)) return show(t) + " lambda=" + lambda.str();
        return std::nullopt;
    });
    std::size_t periodic_hits = 0;
    run.property("shift_preserves_life", [&](Rng& rng) -> Failure {
        // Exact except when delta > 0 and t is a cycle state: then the
        // shifted tuple is off the cycle and lives one step longer.
        const auto t = mixed_tuple(rng, uniform(rng, 3, 8), 1000);
        const std::uint64_t delta = uniform(rng, 0, 7);
        const bool periodic = is_periodic(t);
        periodic_hits += periodic && delta > 0;
        const std::size_t expected = life(t) + (periodic && delta > 0 ? 1 : 0);
        if (life(scale_shift(t, 1, delta)) != expected) return show(t) + " delta=" + std::to_string(delta);
        return std::nullopt;
    });
    run.annotate_last("periodic inputs with delta > 0: " + std::to_string(periodic_hits));
    run.property("scale_shift_preserves_life", [](Rng& rng) -> Failure {
        auto t = random_tuple(rng, uniform(rng, 3, 8), 1000);
        if (is_periodic(t)) return std::nullopt;
        static constexpr int lambdas[] = {1, 2, 3, 5};
        static constexpr int deltas[] = {0, 1, 7};
        const Integer lambda = lambdas[uniform(rng, 0, 3)];
        const Integer delta = deltas[uniform(rng, 0, 2)];
        if (life(scale_shift(t, lambda, delta)) != life(t)) {
            return show(t) + " lambda=" + lambda.str() + " delta=" + delta.str();
        }
        return std::nullopt;
    });
    run.property("homogeneity", [](Rng& rng) -> Failure {
        const auto t = random_tuple(rng, uniform(rng, 2, 8), 1000);
        const Integer lambda = uniform(rng, 1, 5);
        const std::size_t n = uniform(rng, 0, 20);
        if (iterate(scale_shift(t, lambda, 0), n) != scale_shift(iterate(t, n), lambda, 0)) {
            return show(t) + " lambda=" + lambda.str() + " n=" + std::to_string(n);
        }
        return std::nullopt;
    });
    run.property("max_never_grows", [](Rng& rng) -> Failure {
        const auto t = random_tuple(rng, uniform(rng, 2, 8), 1'000'000);
        GameTuple cur = t;
        for (std::size_t n = 0; n <= 40; ++n, cur = diff_step(cur)) {
            if (cur.max() > t.max()) return show(t) + " at n=" + std::to_string(n);
        }
        return std::nullopt;
    });
    run.property("canonical_form_life", [](Rng& rng) -> Failure {
        const auto t = mixed_tuple(rng, uniform(rng, 3, 8), 1000);
        const auto canon = canonical_form(t);
        if (canonical_form(canon) != canon) return show(t) + " canonical form not idempotent";
        GameTuple shifted = t;
        if (t.min() > 0) {
            std::vector<Integer> e;
            for (const auto& x : t) e.push_back(x - t.min());
            shifted = GameTuple(std::move(e));
        }
        const bool off_by_one = t.min() > 0 && is_periodic(shifted);
        if (life(t) != life(canon) + (off_by_one ? 1 : 0)) return show(t);
        return std::nullopt;
    });
}

// ---- parity ----------------------------------------------------------------

void parity_suite(Runner& run) {
    run.suite("parity");
    run.property("newton_parity_matches_simulation", [](Rng& rng) -> Failure {
        const auto t = random_tuple(rng, uniform(rng, 2, 8), 1000);
        const std::uint64_t n = uniform(rng, 0, 32);
        const auto sim = parity_vector(iterate(t, n));
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (newton_parity(t, n, i) != sim.bits[i]) return show(t) + " n=" + std::to_string(n) + " i=" + std::to_string(i);
        }
        return std::nullopt;
    });
    run.property("shift_parity_matches_simulation", [](Rng& rng) -> Failure {
        const auto t = random_tuple(rng, uniform(rng, 2, 8), 1000);
        const unsigned r = static_cast<unsigned>(uniform(rng, 0, 5));
        if (power_of_two_shift_parity(t, r) != parity_vector(iterate(t, std::size_t{1} << r))) {
            return show(t) + " r=" + std::to_string(r);
        }
        return std::nullopt;
    });
    run.property("power_of_two_k_step_all_even", [](Rng& rng) -> Failure {
        static constexpr std::size_t ks[] = {2, 4, 8};
        const std::size_t k = ks[uniform(rng, 0, 2)];
        const auto t = random_tuple(rng, k, 1'000'000);
        if (!parity_vector(iterate(t, k)).all_zero()) return show(t);
        return std::nullopt;
    });
    {
        // Every pair (n, j) with j <= n <= 64 against exact binomials.
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        for (std::uint64_t n = 0; n <= 64; ++n) {
            for (std::uint64_t j = 0; j <= n; ++j) pairs.emplace_back(n, j);
        }
        std::size_t idx = 0;
        run.property(
            "binomial_parity_matches_exact",
            [&](Rng&) -> Failure {
                const auto [n, j] = pairs[idx++];
                Integer c = 1;
                for (std::uint64_t i = 0; i < j; ++i) c = c * (n - i) / (i + 1);
                if (binomial_is_even(n, j) != !boost::multiprecision::bit_test(c, 0)) {
                    return "C(" + std::to_string(n) + "," + std::to_string(j) + ")";
                }
                return std::nullopt;
            },
            pairs.size());
    }
    {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        for (unsigned r = 0; r <= 10; ++r) {
            for (std::uint64_t j = 1; j < (std::uint64_t{1} << r); ++j) pairs.emplace_back(std::uint64_t{1} << r, j);
        }
        std::size_t idx = 0;
        run.property(
            "binomial_power_of_two_even",
            [&](Rng&) -> Failure {
                const auto [n, j] = pairs[idx++];
                if (!binomial_is_even(n, j)) return "C(" + std::to_string(n) + "," + std::to_string(j) + ")";
                return std::nullopt;
            },
            pairs.size());
    }
    run.property("congruent_exponent", [](Rng& rng) -> Failure {
        std::uint64_t k = 0;
        do k = uniform(rng, 3, 1000);
        while (std::has_single_bit(k));
        const Integer n_min = uniform(rng, 0, 1'000'000);
        const auto c = congruent_power_exponent(k, n_min);
        const Integer km = k;
        const Integer pow_m = Integer(1) << static_cast<unsigned>(c.m);
        const Integer pow_a = Integer(1) << c.alpha;
        const bool congruent = pow_m % km == pow_a % km;
        const bool minimal = c.lambda == 1 || (Integer(1) << static_cast<unsigned>(c.m - c.phi)) < n_min;
        if (!congruent || pow_m < n_min || !minimal) return "k=" + std::to_string(k) + " n_min=" + n_min.str();
        return std::nullopt;
    });
}

// ---- divisibility ----------------------------------------------------------

void divisibility_suite(Runner& run) {
    run.suite("divisibility");
    run.property("a4h_divisible_by_2h", [](Rng& rng) -> Failure {
        const auto t = random_tuple(rng, 4, 1'000'000);
        const std::size_t h = uniform(rng, 1, 5);
        if (!divisibility_check(t, h)) return show(t) + " h=" + std::to_string(h);
        return std::nullopt;
    });
    run.property("terminates_within_zero_bound", [](Rng& rng) -> Failure {
        static constexpr std::size_t ks[] = {2, 4, 8};
        const auto t = random_tuple(rng, ks[uniform(rng, 0, 2)], 1'000'000);
        const auto tr = trajectory(t);
        if (tr.terminal != TerminalKind::Zero || tr.life > zero_bound(t).steps) return show(t);
        return std::nullopt;
    });
    run.property("pair_life_at_most_two", [](Rng& rng) -> Failure {
        const auto t = random_tuple(rng, 2, 1'000'000'000);
        if (life(t) > 2) return show(t);
        return std::nullopt;
    });
}

// ---- necessity -------------------------------------------------------------

void necessity_suite(Runner& run) {
    run.suite("necessity");
    std::size_t reached = 0;
    run.property("zero_reaching_satisfies_parity_condition", [&](Rng& rng) -> Failure {
        static constexpr std::size_t ks[] = {3, 5, 6};
        const std::size_t k = ks[uniform(rng, 0, 2)];
        GameTuple t;
        if (uniform(rng, 0, 1)) {
            t = random_tuple(rng, k, 20);
        } else {
            // Walk backwards from a constant tuple through preimages.
            t = GameTuple(std::vector<Integer>(k, Integer(uniform(rng, 0, 20))));
            for (std::size_t depth = uniform(rng, 0, 4); depth > 0; --depth) {
                auto pre = find_preimage(t);
                if (!pre) break;
                t = std::move(*pre);
            }
            t = scale_shift(t, uniform(rng, 1, 3), uniform(rng, 0, 5));
        }
        if (trajectory(t).terminal != TerminalKind::Zero) return std::nullopt;
        ++reached;
        if (!necessary_parity_condition(t)) return show(t);
        return std::nullopt;
    });
    run.annotate_last("zero-reaching inputs: " + std::to_string(reached));
}

// ---- builders --------------------------------------------------------------

// Entries <= max_entry with B >= A and C >= A + B.
CanonicalQuad random_quad(Rng& rng, std::uint64_t max_entry) {
    for (;;) {
        const auto a = uniform(rng, 0, max_entry / 4);
        const auto b = uniform(rng, a, a + max_entry / 4);
        const auto c = uniform(rng, a + b, max_entry);
        if (CanonicalQuad::satisfies(a, b, c)) return CanonicalQuad(a, b, c);
    }
}

OddSeed random_odd_seed(Rng& rng, std::size_t k) {
    const std::size_t l = (k - 1) / 2;
    std::vector<Integer> a(l), b(l);
    std::uint64_t max_a = 0, max_b = 0;
    for (std::size_t i = 1; i < l; ++i) {
        const auto ai = uniform(rng, 1, 20);
        const auto bi = uniform(rng, ai + 1, 40);
        a[i] = ai;
        b[i] = bi;
        max_a = std::max(max_a, ai);
        max_b = std::max(max_b, bi);
    }
    const auto a1 = uniform(rng, max_a + 1, 45);
    a[0] = a1;
    b[0] = uniform(rng, std::max(a1, max_b) + 1, 50);
    return OddSeed(std::move(a), std::move(b));
}

EvenSeed random_even_seed(Rng& rng, std::size_t k) {
    const std::size_t l = (k - 2) / 2;
    std::vector<Integer> a(l), b(l);
    const auto c = uniform(rng, 0, 10);
    std::uint64_t max_a = 0, max_b = 0;
    for (std::size_t i = 1; i < l; ++i) {
        const auto ai = uniform(rng, 0, 15);
        const auto bi = uniform(rng, ai + 1, 30);
        a[i] = ai;
        b[i] = bi;
        max_a = std::max(max_a, ai);
        max_b = std::max(max_b, bi);
    }
    const auto a1 = uniform(rng, l > 1 ? max_a + 1 : 0, 20);
    a[0] = a1;
    b[0] = uniform(rng, std::max(a1 + c, max_b) + 1, 50);
    return EvenSeed(c, std::move(a), std::move(b));
}

std::array<Integer, 3> triple(const CanonicalQuad& q) { return {q.a(), q.b(), q.c()}; }

std::array<Integer, 3> mul(const Matrix3& m, const std::array<Integer, 3>& v) {
    std::array<Integer, 3> out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return out;
}

void builders_suite(Runner& run) {
    run.suite("builders");
    run.property("extend_quad_adds_one_step", [](Rng& rng) -> Failure {
        const auto q = random_quad(rng, 1'000'000);
        const auto ext = extend_quad_detailed(q);
        if (diff_step(ext.next.tuple()) != scale_shift(q.tuple(), 2, ext.delta)) return show(q.tuple()) + " identity";
        if (life(ext.next.tuple()) != life(q.tuple()) + 1) return show(q.tuple()) + " life";
        return std::nullopt;
    });
    run.property("extend_odd_adds_one_step", [](Rng& rng) -> Failure {
        static constexpr std::size_t ks[] = {3, 5, 7};
        const auto s = random_odd_seed(rng, ks[uniform(rng, 0, 2)]);
        const auto ext = extend_odd_detailed(s);
        const auto t = ext.next.tuple();
        if (diff_step(t) != scale_shift(s.tuple(), 1, ext.delta)) return show(s.tuple()) + " identity";
        if (!OddSeed::satisfies(ext.next.a(), ext.next.b())) return show(s.tuple()) + " closure";
        if (life(t) != life(s.tuple()) + 1) return show(s.tuple()) + " life";
        return std::nullopt;
    });
    std::size_t closure_checked = 0;
    run.property("extend_even_adds_one_step", [&](Rng& rng) -> Failure {
        static constexpr std::size_t ks[] = {4, 6, 8};
        const auto s = random_even_seed(rng, ks[uniform(rng, 0, 2)]);
        const auto ext = extend_even_detailed(s);
        const auto t = ext.next.tuple();
        if (diff_step(t) != scale_shift(s.tuple(), 2, ext.shift)) return show(s.tuple()) + " identity";
        // The output meets the seed inequalities whenever a_1 > 0.
        if (s.a()[0] > 0) {
            ++closure_checked;
            if (!ext.next.valid()) return show(s.tuple()) + " closure";
        }
        if (life(t) != life(s.tuple()) + 1) return show(s.tuple()) + " life";
        return std::nullopt;
    });
    run.annotate_last("closure checked on " + std::to_string(closure_checked) + " seeds with a_1 > 0");
    run.property(
        "skip_matrix_is_normalized_power",
        [step = std::uint64_t{1}](Rng&) mutable -> Failure {
            // Against the un-normalized power of the base matrix.
            Matrix3 power = base_skip_matrix();
            for (std::uint64_t i = 1; i < step; ++i) power = multiply(power, base_skip_matrix());
            const bool ok = skip_transform(step).matrix == remove_common_power_of_two(power);
            const auto failed = std::to_string(step);
            step *= 2;
            if (!ok) return "steps=" + failed;
            return std::nullopt;
        },
        8);
    run.property("skip_adds_power_of_two_steps", [](Rng& rng) -> Failure {
        const auto q = random_quad(rng, 100);
        const std::uint64_t steps = std::uint64_t{1} << uniform(rng, 0, 4);
        const auto out = apply_skip(skip_transform(steps), q);
        if (life(out.tuple()) != life(q.tuple()) + steps) return show(q.tuple()) + " steps=" + std::to_string(steps);
        return std::nullopt;
    });
    run.property("recurrence_matches_matrix", [](Rng& rng) -> Failure {
        const auto q = random_quad(rng, 100);
        const std::size_t n = uniform(rng, 0, 12);
        const auto chain = recurrence_chain(q, n);
        auto v = triple(q);
        const std::size_t base = life(q.tuple());
        for (std::size_t s = 0; s <= n; ++s) {
            if (triple(chain[s]) != v) return show(q.tuple()) + " stage " + std::to_string(s);
            if (life(chain[s].tuple()) != base + s) return show(q.tuple()) + " life at stage " + std::to_string(s);
            v = mul(base_skip_matrix(), v);
        }
        return std::nullopt;
    });
    std::size_t found = 0;
    run.property("preimage_sound", [&](Rng& rng) -> Failure {
        const std::size_t k = uniform(rng, 2, 10);
        // Half the inputs are known difference sets.
        const bool known = uniform(rng, 0, 1);
        const auto t = known ? diff_step(random_tuple(rng, k, 30)) : random_tuple(rng, k, 30);
        const auto pre = find_preimage(t);
        if (known && !pre) return show(t) + " has a preimage but none was found";
        if (!pre) return std::nullopt;
        ++found;
        if (diff_step(*pre) != t || pre->min() != 0) return show(t) + " -> " + show(*pre);
        return std::nullopt;
    });
    run.annotate_last("preimages found: " + std::to_string(found));
}

}  // namespace

VerifyReport verify_suites(const std::vector<std::string>& selection, std::size_t cases, std::uint64_t seed) {
    std::set<std::string> chosen;
    for (const auto& s : selection) {
        if (s == "all") {
            chosen.insert(suite_names().begin(), suite_names().end());
        } else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) {
            chosen.insert(s);
        } else {
            throw ValidationError("unknown verify suite: " + s);
        }
    }
    VerifyReport report;
    Runner run(report, cases, seed);
    // Fixed order independent of how the selection was spelled.
    if (chosen.count("parity")) parity_suite(run);
    if (chosen.count("divisibility")) divisibility_suite(run);
    if (chosen.count("builders")) builders_suite(run);
    if (chosen.count("equivalence")) equivalence_suite(run);
    if (chosen.count("necessity")) necessity_suite(run);
    return report;
}

}  // namespace ducci
