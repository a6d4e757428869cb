#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ptsep/pt_separation.hpp"
#include "ptsep/subword_oracle.hpp"

using namespace ptsep;
using namespace ptsep::testing;
using pt::pt_separable;

namespace {

Automaton ab_plus() {
    return quick_automaton(3, "ab", {0}, {2}, {"0a1", "1b2", "2a1"});
}

Automaton ba_plus() {
    return quick_automaton(3, "ab", {0}, {2}, {"0b1", "1a2", "2b1"});
}

Automaton a_star() { return quick_automaton(1, "a", {0}, {0}, {"0a0"}); }

Automaton b_plus() {
    return quick_automaton(2, "b", {0}, {1}, {"0b1", "1b1"});
}

const AlphabetSet kAB{Letter("a"), Letter("b")};

std::vector<AlphabetSet> nonempty_subsets(const AlphabetSet& alphabet) {
    const auto& members = alphabet.members();
    std::vector<AlphabetSet> out;
    for (std::uint32_t pick = 1; pick < (1u << members.size()); ++pick) {
        std::vector<Letter> chosen;
        for (std::size_t i = 0; i < members.size(); ++i)
            if ((pick >> i) & 1) chosen.push_back(members[i]);
        out.emplace_back(std::move(chosen));
    }
    return out;
}

}  // namespace

TEST_CASE("the common loop alphabet of the two canonical cycles is both letters") {
    const Automaton a1 = ab_plus(), a2 = ba_plus();
    CHECK(pt::max_common_loop_alphabet(a1, 1, a2, 1) == kAB);
    CHECK(pt::max_common_loop_alphabet(a1, 2, a2, 2) == kAB);
    // the start states sit in trivial components
    CHECK_FALSE(pt::max_common_loop_alphabet(a1, 0, a2, 1).has_value());
    CHECK_THROWS_AS(pt::max_common_loop_alphabet(a1, 3, a2, 0),
                    std::invalid_argument);
}

TEST_CASE("the loop fixpoint can shrink to nothing") {
    // a cycle that needs b to come back cannot survive restriction to a
    const Automaton needs_b = quick_automaton(2, "ab", {0}, {1}, {"0a1", "1b0"});
    const Automaton only_a = quick_automaton(1, "ab", {0}, {0}, {"0a0"});
    CHECK_FALSE(pt::max_common_loop_alphabet(needs_b, 0, only_a, 0).has_value());

    // with matching loops the first intersection is already the fixpoint
    const Automaton two_loops =
        quick_automaton(1, "ab", {0}, {0}, {"0a0", "0b0"});
    CHECK(pt::max_common_loop_alphabet(two_loops, 0, only_a, 0) ==
          AlphabetSet{Letter("a")});
}

TEST_CASE("the loop alphabet is exact and maximal against explicit cycle search") {
    std::mt19937 rng(555);
    const AlphabetSet abc{Letter("a"), Letter("b"), Letter("c")};
    const auto subsets = nonempty_subsets(abc);
    for (int i = 0; i < 120; ++i) {
        const Automaton a1 = random_automaton(rng, 1 + int(rng() % 4), abc, 200);
        const Automaton a2 = random_automaton(rng, 1 + int(rng() % 4), abc, 200);
        for (State q1 = 0; q1 < a1.num_states; ++q1)
            for (State q2 = 0; q2 < a2.num_states; ++q2) {
                const auto common = pt::max_common_loop_alphabet(a1, q1, a2, q2);
                if (common) {
                    // realizable on both sides
                    CHECK(loop_oracle(a1, q1, *common));
                    CHECK(loop_oracle(a2, q2, *common));
                }
                // nothing bigger is realizable on both sides
                for (const AlphabetSet& candidate : subsets) {
                    if (!loop_oracle(a1, q1, candidate) ||
                        !loop_oracle(a2, q2, candidate))
                        continue;
                    REQUIRE(common.has_value());
                    CHECK(candidate.subset_of(*common));
                }
            }
    }
}

TEST_CASE("pattern tuples are deduplicated and certified by real paths") {
    const Automaton a1 = ab_plus(), a2 = ba_plus();
    const auto tuples = pt::enumerate_pattern_tuples(a1, a2);
    REQUIRE_FALSE(tuples.empty());

    std::set<std::tuple<State, State, State, State>> endpoints;
    for (const auto& t : tuples) {
        CHECK(t.witness_B == kAB);
        CHECK(endpoints.insert({t.p1, t.r1, t.p2, t.r2}).second);

        // each endpoint pair is justified by travel through the loop state
        const auto r1 = reachability_matrix(restrict_alphabet(a1, t.witness_B));
        const auto r2 = reachability_matrix(restrict_alphabet(a2, t.witness_B));
        CHECK(r1[t.p1][t.witness_q1]);
        CHECK(r1[t.witness_q1][t.r1]);
        CHECK(r2[t.p2][t.witness_q2]);
        CHECK(r2[t.witness_q2][t.r2]);
    }
    // the initial states can jump straight to the final states
    CHECK(endpoints.contains({0, 2, 0, 2}));
}

TEST_CASE("extension adds one shared fresh letter per tuple") {
    const Automaton a1 = ab_plus(), a2 = ba_plus();
    const auto tuples = pt::enumerate_pattern_tuples(a1, a2);
    const auto [e1, e2] = pt::build_extended(a1, a2);

    CHECK(e1.pattern_letters.size() == tuples.size());
    CHECK(e2.pattern_letters.size() == tuples.size());
    CHECK(e1.base.num_states == a1.num_states);
    CHECK(e2.base.num_states == a2.num_states);
    CHECK(e1.base.alphabet == e2.base.alphabet);
    CHECK(e1.base.alphabet.size() == kAB.size() + tuples.size());

    for (const auto& [letter, tuple] : e1.pattern_letters) {
        CHECK(letter.token().front() == '@');
        CHECK(e2.pattern_letters.at(letter) == tuple);
        // the jump transitions are present on each side
        CHECK(std::count(e1.base.transitions.begin(), e1.base.transitions.end(),
                         Transition{tuple.p1, letter, tuple.r1}) == 1);
        CHECK(std::count(e2.base.transitions.begin(), e2.base.transitions.end(),
                         Transition{tuple.p2, letter, tuple.r2}) == 1);
    }

    // alphabets that already use the reserved prefix are rejected
    const Automaton clash = make_automaton(
        1, AlphabetSet{Letter("@0")}, {0}, {0}, {{0, Letter("@0"), 0}});
    CHECK_THROWS_AS(pt::build_extended(clash, a_star()), std::invalid_argument);
}

TEST_CASE("separability of the canonical pairs") {
    CHECK_FALSE(pt_separable(ab_plus(), ba_plus()));
    CHECK(pt_separable(a_star(), b_plus()));
}

TEST_CASE("the quick decision agrees with the explicit extended product") {
    std::mt19937 rng(909);
    for (int i = 0; i < 150; ++i) {
        const Automaton a1 = random_automaton(rng, 1 + int(rng() % 4), kAB, 260);
        const Automaton a2 = random_automaton(rng, 1 + int(rng() % 4), kAB, 260);
        const auto [e1, e2] = pt::build_extended(a1, a2);
        CHECK(pt_separable(a1, a2) == is_empty(product(e1.base, e2.base)));
    }
}

TEST_CASE("separability is symmetric and refuted by shared words") {
    std::mt19937 rng(1618);
    for (int i = 0; i < 80; ++i) {
        const Automaton a1 = random_automaton(rng, 1 + int(rng() % 3), kAB, 300);
        const Automaton a2 = random_automaton(rng, 1 + int(rng() % 3), kAB, 300);
        CHECK(pt_separable(a1, a2) == pt_separable(a2, a1));
        if (!is_empty(product(a1, a2))) CHECK_FALSE(pt_separable(a1, a2));
    }
    // any nonempty language against itself
    CHECK_FALSE(pt_separable(ab_plus(), ab_plus()));
    // the empty language separates from everything
    const Automaton none = make_automaton(0, kAB, {}, {}, {});
    CHECK(pt_separable(none, ab_plus()));
    CHECK(pt_separable(ab_plus(), none));
    CHECK(pt_separable(none, none));
}

TEST_CASE("a negative decision is backed by common profiles at low levels") {
    std::mt19937 rng(271828);
    oracle::OracleLimits limits;
    limits.max_n = 5;
    int negatives = 0;
    for (int i = 0; i < 60; ++i) {
        const Automaton a1 = random_automaton(rng, 1 + int(rng() % 3), kAB, 280);
        const Automaton a2 = random_automaton(rng, 1 + int(rng() % 3), kAB, 280);
        const bool separable = pt_separable(a1, a2);
        const auto verdict = oracle::oracle_pt_separable(a1, a2, limits);
        if (!separable) {
            ++negatives;
            CHECK_FALSE(verdict.separable);
        }
        if (verdict.separable) CHECK(separable);
    }
    CHECK(negatives > 0);
}

TEST_CASE("pattern extraction decodes the canonical obstruction") {
    const auto [e1, e2] = pt::build_extended(ab_plus(), ba_plus());
    const auto pattern = pt::extract_pattern(e1, e2);
    REQUIRE(pattern.has_value());
    CHECK(pattern->u == std::vector<Word>{Word{}, Word{}});
    CHECK(pattern->B == std::vector<AlphabetSet>{kAB});

    const auto [s1, s2] = pt::build_extended(a_star(), b_plus());
    CHECK_FALSE(pt::extract_pattern(s1, s2).has_value());
}

TEST_CASE("witnesses are accepted and share subword profiles") {
    const Automaton a1 = ab_plus(), a2 = ba_plus();
    for (int n = 1; n <= 4; ++n) {
        const auto w = pt::separation_witnesses(a1, a2, n);
        REQUIRE(w.has_value());
        CHECK(w->canonical == pattern_witness(w->pattern, n));
        CHECK(accepts(a1, w->in_first));
        CHECK(accepts(a2, w->in_second));
        CHECK(oracle::subword_profile(w->in_first, n) ==
              oracle::subword_profile(w->canonical, n));
        CHECK(oracle::subword_profile(w->in_second, n) ==
              oracle::subword_profile(w->canonical, n));
        CHECK(oracle::matches_pattern(w->pattern, w->in_first));
        CHECK(oracle::matches_pattern(w->pattern, w->in_second));
    }
    CHECK_FALSE(pt::separation_witnesses(a_star(), b_plus(), 2).has_value());
    CHECK_THROWS_AS(pt::separation_witnesses(a1, a2, 0), std::invalid_argument);
}

TEST_CASE("witnesses hold across random inseparable pairs") {
    std::mt19937 rng(5150);
    int covered = 0;
    while (covered < 12) {
        const Automaton a1 = random_automaton(rng, 1 + int(rng() % 3), kAB, 300);
        const Automaton a2 = random_automaton(rng, 1 + int(rng() % 3), kAB, 300);
        if (pt_separable(a1, a2)) continue;
        ++covered;
        for (int n = 1; n <= 3; ++n) {
            const auto w = pt::separation_witnesses(a1, a2, n);
            REQUIRE(w.has_value());
            CHECK(accepts(a1, w->in_first));
            CHECK(accepts(a2, w->in_second));
            CHECK(oracle::subword_profile(w->in_first, n) ==
                  oracle::subword_profile(w->canonical, n));
            CHECK(oracle::subword_profile(w->in_second, n) ==
                  oracle::subword_profile(w->canonical, n));
        }
    }
}

TEST_CASE("the fixpoint instrumentation stays within the alphabet size") {
    std::mt19937 rng(8080);
    const AlphabetSet abc{Letter("a"), Letter("b"), Letter("c")};
    for (int i = 0; i < 100; ++i) {
        const Automaton a1 = random_automaton(rng, 1 + int(rng() % 5), abc, 240);
        const Automaton a2 = random_automaton(rng, 1 + int(rng() % 5), abc, 240);
        pt::SeparationStats stats;
        pt_separable(a1, a2, &stats);
        CHECK(stats.max_fixpoint_refinements <=
              static_cast<long long>(abc.size()));
        CHECK(stats.fixpoint_runs <=
              static_cast<long long>(a1.num_states) * a2.num_states);
    }
}

TEST_CASE("piecewise testability of single languages") {
    const Automaton a_star_b_star =
        quick_automaton(2, "ab", {0}, {0, 1}, {"0a0", "0b1", "1b1"});
    CHECK(pt::is_piecewise_testable(a_star_b_star));

    const Automaton even_a = quick_automaton(2, "a", {0}, {0}, {"0a1", "1a0"});
    CHECK_FALSE(pt::is_piecewise_testable(even_a));

    CHECK_THROWS_AS(pt::is_piecewise_testable(
                        quick_automaton(2, "a", {0}, {1}, {"0a1", "0a0"})),
                    std::invalid_argument);
}
