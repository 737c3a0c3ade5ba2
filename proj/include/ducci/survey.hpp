#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ducci/game_tuple.hpp"

namespace ducci {

// Life by naive list scan: each new state is compared against every earlier
// one. Quadratic, hash-free, and deliberately independent of core::trajectory.
std::size_t oracle_life(const GameTuple& t, std::size_t step_cap = 1'000'000);

enum class SurveyMode { Exhaustive, Random };

inline constexpr std::uint64_t kExhaustiveBudget = 200'000'000;
inline constexpr char kRngName[] = "mt19937_64";

struct SurveyRecord {
    std::size_t k = 0;
    std::uint64_t bound = 0;
    SurveyMode mode = SurveyMode::Exhaustive;
    std::uint64_t samples = 0;  // random mode only
    std::uint64_t seed = 0;     // random mode only
    std::uint64_t examined = 0;
    std::map<std::size_t, std::uint64_t> histogram;  // life -> count
    // For each life seen, the lexicographically smallest witness.
    std::map<std::size_t, GameTuple> witnesses;

    std::size_t max_life() const { return witnesses.empty() ? 0 : witnesses.rbegin()->first; }

    // Additive on histograms, min on witnesses; associative and commutative.
    void merge(const SurveyRecord& other);

    friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

// Canonical class representatives of all k-tuples with entries <= bound,
// each counted once. Single-threaded reference kernel.
SurveyRecord exhaustive_survey_serial(std::size_t k, std::uint64_t bound,
                                      std::uint64_t budget = kExhaustiveBudget);

// Same enumeration sharded over the second entry and run on `jobs` OpenMP
// threads. Output is identical to the serial kernel for every jobs value.
SurveyRecord exhaustive_survey(std::size_t k, std::uint64_t bound, int jobs = 1,
                               std::uint64_t budget = kExhaustiveBudget);

// Uniform entries in [0, bound] drawn from mt19937_64(seed); histogram is over
// samples. Life evaluation runs on `jobs` threads; results don't depend on it.
SurveyRecord random_survey(std::size_t k, std::uint64_t bound, std::uint64_t samples,
                           std::uint64_t seed, int jobs = 1);

std::string mode_name(const SurveyRecord& r);

// "# k=.. bound=.. mode=.. seed=.." then "life,count" rows, ascending.
std::string to_csv(const SurveyRecord& r);
// [{"life": v, "tuple": [...]}], highest life first.
std::string records_json(const SurveyRecord& r);
std::string to_json(const SurveyRecord& r);

}  // namespace ducci
