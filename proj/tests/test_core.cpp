#include <doctest.h>

#include <random>

#include "ducci/core.hpp"
#include "ducci/errors.hpp"
#include "oracles.hpp"

using namespace ducci;

TEST_SUITE("core") {

TEST_CASE("game tuple validation and parsing") {
    CHECK(parse_tuple("8,17,3,107") == GameTuple{8, 17, 3, 107});
    CHECK(parse_tuple("8 17\t3 , 107") == GameTuple{8, 17, 3, 107});
    CHECK(parse_tuple("123456789012345678901234567890 0")[0] == Integer("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_tuple("1 -2 3"), ValidationError);
    CHECK_THROWS_AS(parse_tuple("1 x 3"), ValidationError);
    CHECK_THROWS_AS(parse_tuple("7"), ValidationError);
    CHECK_THROWS_AS((GameTuple{1, -1}), ValidationError);
}

TEST_CASE("diff_step") {
    CHECK(diff_step({8, 17, 3, 107}) == GameTuple{9, 14, 104, 99});
    CHECK(diff_step({0, 0, 0, 0}) == GameTuple{0, 0, 0, 0});
    CHECK(diff_step({2, 5, 9}) == GameTuple{3, 4, 7});
}

TEST_CASE("iterate") {
    CHECK(iterate({8, 17, 3, 107}, 4) == GameTuple{0, 0, 0, 0});
    CHECK(iterate({1, 11, 130, 1760}, 5) == GameTuple{218, 218, 218, 218});
    CHECK(iterate({2, 5, 9}, 0) == GameTuple{2, 5, 9});
}

TEST_CASE("trajectory") {
    SUBCASE("cycle for k = 3") {
        const auto tr = trajectory({2, 5, 9});
        CHECK(tr.repeat_at == 8);
        CHECK(tr.repeat_target == 5);
        CHECK(tr.life == 7);
        CHECK(tr.terminal == TerminalKind::Cycle);
        CHECK(tr.cycle_length() == 3);
        CHECK(tr.states.size() == 9);
    }
    SUBCASE("zero for k = 4") {
        const auto tr = trajectory({0, 0, 0, 1});
        CHECK(tr.life == 4);
        CHECK(tr.terminal == TerminalKind::Zero);
        CHECK(tr.cycle_length() == 1);
    }
    SUBCASE("constant pair") {
        const auto tr = trajectory({7, 7});
        CHECK(tr.repeat_at == 2);
        CHECK(tr.repeat_target == 1);
        CHECK(tr.life == 1);
        CHECK(tr.terminal == TerminalKind::Zero);
    }
    SUBCASE("step cap") {
        CHECK_THROWS_AS(trajectory({2, 5, 9}, 3), StepCapExceeded);
        CHECK(trajectory({2, 5, 9}, 8).life == 7);
    }
}

TEST_CASE("trajectory invariants against the plain simulation") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 200; ++n) {
        const std::size_t k = 2 + rng() % 7;
        oracle::Vec v(k);
        for (auto& x : v) x = static_cast<long long>(rng() % 200);
        const auto tr = trajectory(oracle::to_tuple(v));
        CHECK(tr.life == oracle::life(v));
        CHECK(tr.states[tr.repeat_at] == tr.states[tr.repeat_target]);
        for (std::size_t i = 0; i + 1 < tr.states.size(); ++i) CHECK(diff_step(tr.states[i]) == tr.states[i + 1]);
        CHECK((tr.terminal == TerminalKind::Zero) == tr.states[tr.repeat_target].is_zero());
        if (tr.terminal == TerminalKind::Zero) CHECK(tr.cycle_length() == 1);
    }
}

TEST_CASE("life") {
    CHECK(life({0, 6, 17, 37}) == 12);
    CHECK(life({1, 11, 130, 1760}) == 6);
    CHECK(life({0, 193, 548, 1201}) == 20);
    CHECK(life({0, 0, 0, 0}) == 0);
}

TEST_CASE("scale_shift") {
    CHECK(scale_shift({0, 0, 0, 1}, 2, 1) == GameTuple{1, 1, 1, 3});
    CHECK(scale_shift({1, 4, 2, 2}, 3, 0) == GameTuple{3, 12, 6, 6});
    CHECK(iterate({3, 12, 6, 6}, 1) == scale_shift(iterate({1, 4, 2, 2}, 1), 3, 0));
    CHECK(iterate({3, 12, 6, 6}, 2) == GameTuple{3, 6, 3, 6});
    CHECK(scale_shift({2, 5, 9}, 1, 0) == GameTuple{2, 5, 9});
    CHECK_THROWS_AS(scale_shift({1, 2}, 0, 3), ValidationError);
}

TEST_CASE("shift on a periodic state adds one step") {
    // The shifted tuple leaves the cycle, so it is one step further away.
    CHECK(is_periodic({0, 0, 0, 0}));
    CHECK(life({0, 0, 0, 0}) == 0);
    CHECK(life(scale_shift({0, 0, 0, 0}, 1, 1)) == 1);
    CHECK(is_periodic({0, 1, 1}));
    CHECK(life({0, 1, 1}) == 2);
    CHECK(life({1, 2, 2}) == 3);
    CHECK_FALSE(is_periodic({2, 5, 9}));
}

TEST_CASE("canonical_form") {
    CHECK(canonical_form({17, 3, 107, 8}) == canonical_form({8, 17, 3, 107}));
    CHECK(canonical_form({8, 17, 3, 107}) == GameTuple{0, 14, 5, 104});
    CHECK(canonical_form({3, 12, 6, 6}) == GameTuple{0, 1, 1, 3});
    CHECK(canonical_form({1, 4, 2, 2}) == GameTuple{0, 1, 1, 3});
    CHECK(canonical_form({0, 0, 0, 0}) == GameTuple{0, 0, 0, 0});
    CHECK(canonical_form({5, 5, 5}) == GameTuple{0, 0, 0});
}

TEST_CASE("canonical_form matches brute-force symmetry search") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 300; ++n) {
        const std::size_t k = 2 + rng() % 7;
        oracle::Vec v(k);
        for (auto& x : v) x = static_cast<long long>(rng() % 60);
        CHECK(oracle::to_vec(canonical_form(oracle::to_tuple(v))) == oracle::canonical(v));
    }
}

TEST_CASE("divisibility_check") {
    CHECK(divisibility_check({8, 17, 3, 107}, 1));
    CHECK(divisibility_check({5, 2, 9, 1}, 0));
    CHECK(iterate({0, 6, 17, 37}, 8) == GameTuple{4, 4, 4, 12});
    CHECK(divisibility_check({0, 6, 17, 37}, 2));
    CHECK(divisibility_check({0, 6, 17, 37}, 3));
    CHECK_THROWS_AS(divisibility_check({1, 2, 3}, 1), ValidationError);
}

TEST_CASE("zero_bound") {
    const auto b = zero_bound({8, 17, 3, 107});
    CHECK(b.h == 7);
    CHECK(b.steps == 28);
    CHECK(life({8, 17, 3, 107}) <= b.steps);
    CHECK(zero_bound({0, 0, 0, 0}).steps == 0);
    CHECK(zero_bound({0, 6, 17, 37}).h == 6);
    CHECK(zero_bound({0, 6, 17, 37}).steps == 24);
    CHECK_THROWS_AS(zero_bound({1, 2, 3}), ValidationError);
}

TEST_CASE("necessary_parity_condition") {
    CHECK_FALSE(necessary_parity_condition({2, 5, 9}));
    CHECK(trajectory({2, 5, 9}).terminal == TerminalKind::Cycle);
    CHECK(necessary_parity_condition({1, 1, 1}));
    CHECK(trajectory({1, 1, 1}).terminal == TerminalKind::Zero);
    CHECK(necessary_parity_condition({1, 3, 5, 7, 9, 11}));
    CHECK_THROWS_AS(necessary_parity_condition({1, 2, 3, 4}), ValidationError);
}

TEST_CASE("is_difference_set") {
    CHECK_FALSE(is_difference_set({2, 3, 7, 7}));
    CHECK(is_difference_set({2, 3, 7, 6}));
    CHECK(is_difference_set({2, 3, 7, 12}));
    CHECK(is_difference_set({0, 0}));
    std::vector<Integer> big(31, 1);
    CHECK_THROWS_AS(is_difference_set(GameTuple(big)), CapExceeded);
    big.pop_back();
    CHECK(is_difference_set(GameTuple(big)));
}

TEST_CASE("is_difference_set agrees with exhaustive sign search") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 300; ++n) {
        const std::size_t k = 2 + rng() % 10;
        oracle::Vec v(k);
        for (auto& x : v) x = static_cast<long long>(rng() % 25);
        CHECK(is_difference_set(oracle::to_tuple(v)) == oracle::has_zero_sum_signs(v));
    }
}

TEST_CASE("find_preimage") {
    CHECK(find_preimage({2, 3, 7, 12}) == GameTuple{0, 2, 5, 12});
    const auto p = find_preimage({2, 3, 7, 6});
    REQUIRE(p);
    CHECK(*p == GameTuple{1, 3, 0, 7});
    CHECK(diff_step(*p) == GameTuple{2, 3, 7, 6});
    // One more preimage is the shift by 4.
    CHECK(diff_step({5, 7, 4, 11}) == GameTuple{2, 3, 7, 6});
    CHECK_FALSE(find_preimage({2, 3, 7, 7}));
}

TEST_CASE("trajectory JSON") {
    const auto tr = trajectory({2, 5, 9});
    const auto text = to_json(tr);
    CHECK(text.find("\"terminal\":\"cycle\"") != std::string::npos);
    const auto back = trajectory_from_json(text);
    CHECK(back.states == tr.states);
    CHECK(back.life == 7);
    CHECK(back.repeat_target == 5);

    SUBCASE("big entries stay exact") {
        const GameTuple t = parse_tuple("0 340282366920938463463374607431768211457 1 99999999999999999999999");
        const auto round = trajectory_from_json(to_json(trajectory(t)));
        CHECK(round.states.front() == t);
    }
    SUBCASE("inconsistent documents are rejected") {
        CHECK_THROWS_AS(trajectory_from_json(R"({"states":[[1,2],[1,1],[0,0],[0,0]],"life":3,"repeat_at":3,"repeat_target":2,"terminal":"zero"})"),
                        ValidationError);
        CHECK_THROWS_AS(trajectory_from_json(R"({"states":[[0,0],[0,0]],"life":1,"repeat_at":1,"repeat_target":0,"terminal":"zero"})"),
                        ValidationError);
        CHECK_THROWS_AS(trajectory_from_json("{\"states\":"), ValidationError);
    }
}

}  // TEST_SUITE
