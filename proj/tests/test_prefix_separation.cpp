#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "ptsep/prefix_separation.hpp"

using namespace ptsep;
using namespace ptsep::testing;
using prefix::prefix_separable;

namespace {

const AlphabetSet kAB{Letter("a"), Letter("b")};

Automaton a_star() { return quick_automaton(1, "ab", {0}, {0}, {"0a0"}); }

Automaton a_star_b() {
    return quick_automaton(2, "ab", {0}, {1}, {"0a0", "0b1"});
}

/// transitions only go forward, so the language is finite
Automaton random_dag(std::mt19937& rng, int states) {
    std::vector<Transition> transitions;
    std::uniform_int_distribution<int> roll(0, 999);
    const std::vector<Letter> letters{Letter("a"), Letter("b")};
    for (State from = 0; from < states; ++from)
        for (State to = from + 1; to < states; ++to)
            for (const Letter& l : letters)
                if (roll(rng) < 350) transitions.push_back({from, l, to});
    std::vector<State> final;
    for (State s = 0; s < states; ++s)
        if (roll(rng) < 400) final.push_back(s);
    return make_automaton(states, kAB, {0}, std::move(final),
                          std::move(transitions));
}

}  // namespace

TEST_CASE("the closure trims and accepts everywhere") {
    const Automaton a = quick_automaton(
        3, "ab", {0}, {1}, {"0a0", "0b1", "2a2"});  // state 2 is garbage
    const auto closure = prefix::closure_buchi(a);
    CHECK(closure.a.num_states == 2);
    CHECK(closure.a.final.size() == 2);
    CHECK(accepts(closure.a, word_of("aa")));  // prefixes become accepting
}

TEST_CASE("infinite-run product detection demands total acceptance") {
    prefix::BuchiAutomaton bad{quick_automaton(2, "ab", {0}, {1}, {"0a1"})};
    prefix::BuchiAutomaton good{
        quick_automaton(2, "ab", {0}, {0, 1}, {"0a1"})};
    CHECK_THROWS_AS(prefix::buchi_product_nonempty(bad, good),
                    std::invalid_argument);

    // a shared self loop is an infinite joint run
    prefix::BuchiAutomaton loop{quick_automaton(1, "ab", {0}, {0}, {"0a0"})};
    CHECK(prefix::buchi_product_nonempty(loop, loop));

    // a joint cycle longer than a self loop counts too
    prefix::BuchiAutomaton swing{
        quick_automaton(2, "ab", {0}, {0, 1}, {"0a1", "1b0"})};
    CHECK(prefix::buchi_product_nonempty(swing, swing));

    // no cycle in the product, no infinite run
    CHECK_FALSE(prefix::buchi_product_nonempty(good, good));

    // empty automata have no runs at all
    prefix::BuchiAutomaton none{make_automaton(0, kAB, {}, {}, {})};
    CHECK_FALSE(prefix::buchi_product_nonempty(none, loop));
}

TEST_CASE("prefix separability of the canonical pairs") {
    CHECK_FALSE(prefix_separable(a_star(), a_star_b()));

    const Automaton a_first =
        quick_automaton(2, "ab", {0}, {1}, {"0a1", "1a1", "1b1"});
    const Automaton b_first =
        quick_automaton(2, "ab", {0}, {1}, {"0b1", "1a1", "1b1"});
    CHECK(prefix_separable(a_first, b_first));
}

TEST_CASE("prefix separability needs disjointness and no shared limit") {
    // a language never prefix-separates from itself unless empty
    CHECK_FALSE(prefix_separable(a_star(), a_star()));
    const Automaton none = make_automaton(0, kAB, {}, {}, {});
    CHECK(prefix_separable(none, none));
    CHECK(prefix_separable(none, a_star()));

    std::mt19937 rng(2718);
    for (int i = 0; i < 80; ++i) {
        const Automaton a1 = random_automaton(rng, 3, kAB, 280);
        const Automaton a2 = random_automaton(rng, 3, kAB, 280);
        if (!is_empty(product(a1, a2))) CHECK_FALSE(prefix_separable(a1, a2));
        CHECK(prefix_separable(a1, a2) == prefix_separable(a2, a1));
    }
}

TEST_CASE("for finite languages prefix separation is plain disjointness") {
    std::mt19937 rng(31337);
    int disjoint_seen = 0, overlapping_seen = 0;
    for (int i = 0; i < 150; ++i) {
        const Automaton a1 = random_dag(rng, 1 + int(rng() % 4));
        const Automaton a2 = random_dag(rng, 1 + int(rng() % 4));
        const bool disjoint = is_empty(product(a1, a2));
        CHECK(prefix_separable(a1, a2) == disjoint);
        (disjoint ? disjoint_seen : overlapping_seen) += 1;
    }
    CHECK(disjoint_seen > 0);
    CHECK(overlapping_seen > 0);
}
