#include "ducci/survey.hpp"

#include <exception>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ducci/core.hpp"
#include "ducci/errors.hpp"
#include "ducci/json_io.hpp"

namespace ducci {

std::size_t oracle_life(const GameTuple& t, std::size_t step_cap) {
    std::vector<GameTuple> seen{t};
    while (seen.size() <= step_cap) {
        GameTuple next = diff_step(seen.back());
        for (std::size_t j = 0; j < seen.size(); ++j) {
            if (seen[j] == next) return seen.size() - 1;
        }
        seen.push_back(std::move(next));
    }
    throw StepCapExceeded(step_cap);
}

void SurveyRecord::merge(const SurveyRecord& other) {
    examined += other.examined;
    for (const auto& [l, n] : other.histogram) histogram[l] += n;
    for (const auto& [l, t] : other.witnesses) {
        auto [it, inserted] = witnesses.try_emplace(l, t);
        if (!inserted && t < it->second) it->second = t;
    }
}

namespace {

void check_budget(std::size_t k, std::uint64_t bound, std::uint64_t budget) {
    if (k < 2) throw ValidationError("survey needs k >= 2");
    // (bound + 1)^k <= budget, without overflow.
    long double total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= static_cast<long double>(bound) + 1;
        if (total > static_cast<long double>(budget)) {
            throw CapExceeded("exhaustive survey of (bound+1)^k tuples exceeds budget of " +
                              std::to_string(budget));
        }
    }
}

void tally(SurveyRecord& rec, std::size_t l, const GameTuple& witness) {
    ++rec.examined;
    ++rec.histogram[l];
    auto [it, inserted] = rec.witnesses.try_emplace(l, witness);
    if (!inserted && witness < it->second) it->second = witness;
}

// Canonical representatives start with their minimum, which is 0, so only
// tuples (0, second, rest...) are visited. One shard per value of `second`.
SurveyRecord survey_shard(std::size_t k, std::uint64_t bound, std::uint64_t second) {
    SurveyRecord rec;
    std::vector<std::uint64_t> digits(k, 0);
    digits[1] = second;
    std::vector<Integer> entries(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) entries[i] = digits[i];
        GameTuple t = GameTuple::unchecked(entries);
        if (canonical_form(t) == t) tally(rec, life(t), t);

        std::size_t pos = k;
        while (pos > 2 && digits[pos - 1] == bound) digits[--pos] = 0;
        if (pos == 2) break;
        ++digits[pos - 1];
    }
    return rec;
}

SurveyRecord blank(std::size_t k, std::uint64_t bound, SurveyMode mode) {
    SurveyRecord r;
    r.k = k;
    r.bound = bound;
    r.mode = mode;
    return r;
}

int clamp_jobs(int jobs) { return jobs < 1 ? 1 : jobs; }

}  // namespace

SurveyRecord exhaustive_survey_serial(std::size_t k, std::uint64_t bound, std::uint64_t budget) {
    check_budget(k, bound, budget);
    SurveyRecord out = blank(k, bound, SurveyMode::Exhaustive);
    if (k == 2) {
        // Second entry is the last one; the odometer has nothing to advance.
        for (std::uint64_t v = 0; v <= bound; ++v) {
            GameTuple t = GameTuple::unchecked({0, v});
            if (canonical_form(t) == t) tally(out, life(t), t);
        }
        return out;
    }
    for (std::uint64_t second = 0; second <= bound; ++second) out.merge(survey_shard(k, bound, second));
    return out;
}

SurveyRecord exhaustive_survey(std::size_t k, std::uint64_t bound, int jobs, std::uint64_t budget) {
    check_budget(k, bound, budget);
    if (k == 2 || clamp_jobs(jobs) == 1) return exhaustive_survey_serial(k, bound, budget);

    const auto shards = static_cast<std::ptrdiff_t>(bound + 1);
    std::vector<SurveyRecord> partial(static_cast<std::size_t>(shards));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(clamp_jobs(jobs))
    for (std::ptrdiff_t s = 0; s < shards; ++s) {
        try {
            partial[static_cast<std::size_t>(s)] = survey_shard(k, bound, static_cast<std::uint64_t>(s));
        } catch (...) {
#pragma omp critical(ducci_survey_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    SurveyRecord out = blank(k, bound, SurveyMode::Exhaustive);
    for (const auto& p : partial) out.merge(p);
    return out;
}

SurveyRecord random_survey(std::size_t k, std::uint64_t bound, std::uint64_t samples, std::uint64_t seed,
                           int jobs) {
    if (k < 2) throw ValidationError("survey needs k >= 2");
    if (samples < 1) throw ValidationError("random survey needs at least one sample");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> draw(0, bound);
    std::vector<GameTuple> tuples;
    tuples.reserve(samples);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::vector<Integer> entries(k);
        for (auto& e : entries) e = draw(rng);
        tuples.push_back(GameTuple::unchecked(std::move(entries)));
    }

    const auto n = static_cast<std::ptrdiff_t>(samples);
    std::vector<std::size_t> lives(samples);
    std::exception_ptr failure;
#pragma omp parallel for schedule(static) num_threads(clamp_jobs(jobs))
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            lives[static_cast<std::size_t>(i)] = life(tuples[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical(ducci_survey_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    SurveyRecord out = blank(k, bound, SurveyMode::Random);
    out.samples = samples;
    out.seed = seed;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        // Min-subtraction can shorten life by one when it lands on a cycle
        // state; keep the drawn tuple as witness in that case.
        GameTuple canon = canonical_form(tuples[i]);
        const bool same = canon == tuples[i] || life(canon) == lives[i];
        tally(out, lives[i], same ? canon : tuples[i]);
    }
    return out;
}

std::string mode_name(const SurveyRecord& r) {
    if (r.mode == SurveyMode::Exhaustive) return "exhaustive";
    return "random(samples=" + std::to_string(r.samples) + ";rng=" + kRngName + ")";
}

std::string to_csv(const SurveyRecord& r) {
    std::string out = "# k=" + std::to_string(r.k) + " bound=" + std::to_string(r.bound) +
                      " mode=" + mode_name(r) + " seed=" +
                      (r.mode == SurveyMode::Random ? std::to_string(r.seed) : std::string("none")) + "\n";
    out += "life,count\n";
    for (const auto& [l, n] : r.histogram) out += std::to_string(l) + "," + std::to_string(n) + "\n";
    return out;
}

std::string records_json(const SurveyRecord& r) {
    std::string out = "[";
    bool first = true;
    for (auto it = r.witnesses.rbegin(); it != r.witnesses.rend(); ++it) {
        if (!first) out += ",";
        first = false;
        out += "{\"life\":" + std::to_string(it->first) + ",\"tuple\":" + json_array(it->second) + "}";
    }
    return out + "]";
}

std::string to_json(const SurveyRecord& r) {
    std::string out = "{\"k\":" + std::to_string(r.k) + ",\"bound\":" + std::to_string(r.bound) +
                      ",\"mode\":\"" + mode_name(r) + "\"";
    out += ",\"seed\":" + (r.mode == SurveyMode::Random ? std::to_string(r.seed) : std::string("null"));
    out += ",\"examined\":" + std::to_string(r.examined) + ",\"histogram\":{";
    bool first = true;
    for (const auto& [l, n] : r.histogram) {
        if (!first) out += ",";
        first = false;
        out += "\"" + std::to_string(l) + "\":" + std::to_string(n);
    }
    out += "},\"records\":" + records_json(r) + "}";
    return out;
}

}  // namespace ducci
