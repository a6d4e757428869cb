/* helpers.hpp -- brute-force reference implementations and generators shared
 * by the test binaries. Everything here trades efficiency for obviousness so
 * the production code can be checked against it. */

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ptsep/automaton.hpp"
#include "ptsep/word.hpp"

namespace ptsep {
namespace testing {

/// All words over `alphabet` of length <= max_len, shortest first.
inline std::vector<Word> all_words(const AlphabetSet& alphabet, int max_len) {
    std::vector<Word> out{Word{}};
    std::size_t layer_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (const Letter& l : alphabet) {
                Word w = out[i];
                w.push_back(l);
                out.push_back(std::move(w));
            }
        layer_begin = layer_end;
    }
    return out;
}

/// The language cut at length max_len, by direct membership tests.
inline std::set<Word> language_upto(const Automaton& a, int max_len) {
    std::set<Word> out;
    for (const Word& w : all_words(a.alphabet, max_len))
        if (accepts(a, w)) out.insert(w);
    return out;
}

/// Quadratic strongly-connected-components oracle: states are equivalent
/// when each reaches the other.
inline std::vector<std::vector<char>> reachability_matrix(const Automaton& a) {
    std::vector<std::vector<char>> reach(
        a.num_states, std::vector<char>(a.num_states, 0));
    for (State s = 0; s < a.num_states; ++s) reach[s][s] = 1;
    for (const Transition& t : a.transitions) reach[t.from][t.to] = 1;
    for (State k = 0; k < a.num_states; ++k)
        for (State i = 0; i < a.num_states; ++i)
            if (reach[i][k])
                for (State j = 0; j < a.num_states; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    return reach;
}

inline bool same_scc_oracle(const std::vector<std::vector<char>>& reach,
                            State x, State y) {
    return reach[x][y] && reach[y][x];
}

/// Is there a cycle through q whose labels are exactly B? Explicit search
/// over (state, letters covered so far) pairs, restricted to letters of B.
inline bool loop_oracle(const Automaton& a, State q, const AlphabetSet& B) {
    const auto& members = B.members();
    const int k = static_cast<int>(members.size());
    if (k == 0 || k > 20) return false;
    auto letter_bit = [&](const Letter& l) {
        const auto pos = std::lower_bound(members.begin(), members.end(), l);
        if (pos == members.end() || *pos != l) return -1;
        return static_cast<int>(pos - members.begin());
    };

    std::set<std::pair<State, std::uint32_t>> visited;
    std::vector<std::pair<State, std::uint32_t>> stack{{q, 0}};
    const std::uint32_t all = (std::uint32_t{1} << k) - 1;
    while (!stack.empty()) {
        auto [s, covered] = stack.back();
        stack.pop_back();
        for (const Transition& t : a.transitions) {
            if (t.from != s) continue;
            const int bit = letter_bit(t.letter);
            if (bit < 0) continue;
            const std::uint32_t next = covered | (std::uint32_t{1} << bit);
            if (t.to == q && next == all) return true;
            if (visited.insert({t.to, next}).second) stack.push_back({t.to, next});
        }
    }
    return false;
}

/// Subwords of length <= n by enumerating all 2^|w| letter selections.
inline std::set<Word> naive_subwords(const Word& w, int n) {
    std::set<Word> out;
    const std::size_t len = w.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << len); ++pick) {
        Word sub;
        for (std::size_t i = 0; i < len; ++i)
            if ((pick >> i) & 1) sub.push_back(w[i]);
        if (static_cast<int>(sub.size()) <= n) out.insert(std::move(sub));
    }
    return out;
}

/// Seeded random NFA with initial state 0; edge_permille is the chance, out
/// of 1000, of each (from, letter, to) transition.
inline Automaton random_automaton(std::mt19937& rng, int states,
                                  const AlphabetSet& alphabet,
                                  int edge_permille) {
    std::uniform_int_distribution<int> roll(0, 999);
    std::vector<Transition> transitions;
    for (State from = 0; from < states; ++from)
        for (const Letter& l : alphabet)
            for (State to = 0; to < states; ++to)
                if (roll(rng) < edge_permille)
                    transitions.push_back({from, l, to});
    std::vector<State> final;
    for (State s = 0; s < states; ++s)
        if (roll(rng) < 400) final.push_back(s);
    return make_automaton(states, alphabet, {0}, std::move(final),
                          std::move(transitions));
}

/// Compact builder: states 0..n-1, tokens of one letter each, transitions
/// written "0a1" style as (from, letter, to) triples.
inline Automaton quick_automaton(int states, const std::string& letters,
                                 std::vector<State> initial,
                                 std::vector<State> final,
                                 const std::vector<std::string>& edges) {
    std::vector<Letter> members;
    for (char c : letters) members.emplace_back(std::string(1, c));
    std::vector<Transition> transitions;
    for (const std::string& edge : edges)
        transitions.push_back({edge[0] - '0', Letter(std::string(1, edge[1])),
                               edge[2] - '0'});
    return make_automaton(states, AlphabetSet(std::move(members)),
                          std::move(initial), std::move(final),
                          std::move(transitions));
}

inline Word word_of(const std::string& letters) {
    Word w;
    for (char c : letters) w.emplace_back(std::string(1, c));
    return w;
}

}  // namespace testing
}  // namespace ptsep
