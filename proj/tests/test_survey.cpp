#include <doctest.h>

#include <map>
#include <random>

#include "ducci/core.hpp"
#include "ducci/errors.hpp"
#include "ducci/json_io.hpp"
#include "ducci/survey.hpp"
#include "ducci/verify.hpp"
#include "oracles.hpp"

using namespace ducci;

namespace {

// Histogram of oracle lives over canonical representatives in [0, bound]^k.
std::map<std::size_t, std::uint64_t> brute_histogram(std::size_t k, long long bound) {
    std::map<std::size_t, std::uint64_t> h;
    oracle::for_each_tuple(k, bound, [&](const oracle::Vec& v) {
        if (oracle::canonical(v) == v) ++h[oracle::life(v)];
    });
    return h;
}

}  // namespace

TEST_SUITE("survey") {

TEST_CASE("oracle_life") {
    CHECK(oracle_life({0, 6, 17, 37}) == 12);
    CHECK(oracle_life({0, 0, 0, 0}) == 0);
    CHECK(oracle_life({2, 5, 9}) == 7);
    CHECK_THROWS_AS(oracle_life({2, 5, 9}, 4), StepCapExceeded);
}

TEST_CASE("oracle_life equals core life exhaustively") {
    oracle::for_each_tuple(3, 6, [](const oracle::Vec& v) {
        const auto t = oracle::to_tuple(v);
        CHECK(oracle_life(t) == life(t));
    });
    std::size_t mismatches = 0;
    oracle::for_each_tuple(4, 8, [&](const oracle::Vec& v) {
        const auto t = oracle::to_tuple(v);
        mismatches += oracle_life(t) != life(t);
    });
    CHECK(mismatches == 0);
}

TEST_CASE("exhaustive survey, small cases") {
    const auto r = exhaustive_survey_serial(4, 1);
    CHECK(r.examined == 5);  // (0000) (0001) (0011) (0101) (0111)
    CHECK(r.max_life() == 4);
    CHECK(r.witnesses.at(4) == GameTuple{0, 0, 0, 1});
    CHECK(r.histogram == std::map<std::size_t, std::uint64_t>{{0, 1}, {2, 1}, {3, 1}, {4, 2}});

    for (std::uint64_t b = 0; b <= 10; ++b) CHECK(exhaustive_survey(2, b).max_life() <= 2);

    const auto r37 = exhaustive_survey(4, 37, 4);
    CHECK(r37.max_life() >= 12);
}

TEST_CASE("exhaustive survey matches brute-force histogram") {
    for (std::size_t k : {3, 4, 5}) {
        for (long long b : {2, 5, 8}) {
            if (k == 5 && b > 5) continue;
            CHECK(exhaustive_survey_serial(k, b).histogram == brute_histogram(k, b));
        }
    }
}

TEST_CASE("witnesses re-verify and are minimal") {
    const auto r = exhaustive_survey(5, 4, 3);
    for (const auto& [l, t] : r.witnesses) {
        CHECK(life(t) == l);
        CHECK(canonical_form(t) == t);
    }
    std::uint64_t total = 0;
    for (const auto& [l, n] : r.histogram) total += n;
    CHECK(total == r.examined);
}

TEST_CASE("sharded and serial kernels agree") {
    for (std::size_t k : {3, 4, 6}) {
        const std::uint64_t bound = k == 6 ? 3 : 9;
        const auto serial = exhaustive_survey_serial(k, bound);
        for (int jobs : {1, 2, 3, 8}) {
            const auto par = exhaustive_survey(k, bound, jobs);
            CHECK(par == serial);
            CHECK(to_csv(par) == to_csv(serial));
            CHECK(records_json(par) == records_json(serial));
        }
    }
}

TEST_CASE("merge is order independent") {
    SurveyRecord a, b, c;
    a.histogram = {{1, 2}, {3, 1}};
    a.witnesses.emplace(3, GameTuple{0, 2, 1});
    a.examined = 3;
    b.histogram = {{3, 4}};
    b.witnesses.emplace(3, GameTuple{0, 1, 5});
    b.examined = 4;
    c.histogram = {{7, 1}};
    c.witnesses.emplace(7, GameTuple{0, 1, 9});
    c.examined = 1;
    SurveyRecord x = a, y = c;
    x.merge(b);
    x.merge(c);
    y.merge(b);
    y.merge(a);
    CHECK(x == y);
    CHECK(x.witnesses.at(3) == GameTuple{0, 1, 5});
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(exhaustive_survey(8, 1000), CapExceeded);
    CHECK_THROWS_AS(exhaustive_survey_serial(4, 10, 100), CapExceeded);
}

TEST_CASE("random survey") {
    const auto zero = random_survey(4, 0, 10, 5);
    CHECK(zero.histogram == std::map<std::size_t, std::uint64_t>{{0, 10}});

    const auto a = random_survey(4, 100, 2000, 1, 1);
    const auto b = random_survey(4, 100, 2000, 1, 4);
    CHECK(a == b);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(a.examined == 2000);
    CHECK(random_survey(4, 100, 2000, 2) != a);
    for (const auto& [l, t] : a.witnesses) CHECK(life(t) == l);
    CHECK_THROWS_AS(random_survey(4, 10, 0, 1), ValidationError);
}

TEST_CASE("survey output formats") {
    const auto r = exhaustive_survey(4, 1);
    CHECK(to_csv(r) == "# k=4 bound=1 mode=exhaustive seed=none\nlife,count\n0,1\n2,1\n3,1\n4,2\n");
    const auto recs = parse_json_exact(records_json(r));
    REQUIRE(recs.is_array());
    CHECK(recs[0]["life"] == 4);
    CHECK(json_tuple(recs[0]["tuple"]) == GameTuple{0, 0, 0, 1});
    CHECK(recs.back()["life"] == 0);

    const auto rnd = random_survey(3, 9, 20, 42);
    CHECK(to_csv(rnd).rfind("# k=3 bound=9 mode=random(samples=20;rng=mt19937_64) seed=42\n", 0) == 0);
    const auto doc = parse_json_exact(to_json(rnd));
    CHECK(doc["seed"] == 42);
    CHECK(doc["examined"] == 20);
}

TEST_CASE("verify_suites") {
    CHECK(verify_suites({}).results.empty());
    const auto div = verify_suites({"divisibility"});
    CHECK(div.all_passed());
    CHECK(div.results.size() == 3);
    const auto b = verify_suites({"builders"}, 64);
    CHECK(b.all_passed());
    CHECK_THROWS_AS(verify_suites({"nonsense"}), ValidationError);
    const auto all = verify_suites({"all"}, 32);
    CHECK(all.results.size() == verify_suites({"parity", "divisibility", "builders", "equivalence", "necessity"}, 32).results.size());
    CHECK(parse_json_exact(all.to_json()).is_array());
}

}  // TEST_SUITE
