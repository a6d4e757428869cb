/* automaton.hpp -- nondeterministic finite automata and the graph algorithms
 * the separation procedures are built on. */

#pragma once

#include <vector>

#include "ptsep/letter.hpp"
#include "ptsep/word.hpp"

namespace ptsep {

using State = int;

struct Transition {
    State from;
    Letter letter;
    State to;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A nondeterministic finite automaton over a token alphabet.
///
/// States are dense integers 0..num_states-1. Every transition letter must
/// belong to `alphabet` and every endpoint must be a valid state; initial,
/// final and transitions are kept sorted and unique. Automata with zero
/// states are legal and denote the empty language. Values are immutable
/// after construction: all operations below are pure functions.
struct Automaton {
    int num_states = 0;
    AlphabetSet alphabet;
    std::vector<State> initial;
    std::vector<State> final;
    std::vector<Transition> transitions;

    friend bool operator==(const Automaton&, const Automaton&) = default;
};

/// Validating constructor: sorts and dedupes the state sets and transitions,
/// rejects out-of-range states and undeclared letters.
Automaton make_automaton(int num_states, AlphabetSet alphabet,
                         std::vector<State> initial, std::vector<State> final,
                         std::vector<Transition> transitions);

/// Derived, never stored: at most one initial state and functional delta.
bool is_deterministic(const Automaton& a);

/// True iff some initial-to-final path is labeled `word`. The empty word is
/// accepted iff an initial state is final. Letters outside the declared
/// alphabet are a contract violation, not a rejection.
bool accepts(const Automaton& a, const Word& word);

/// Keeps exactly the states that are reachable from an initial state and
/// co-reachable to a final state; the language is unchanged. May be empty.
Automaton trim(const Automaton& a);

struct SccDecomposition {
    /// state -> index into components
    std::vector<int> component_of;
    /// Maximal strongly connected state sets in reverse topological order:
    /// components[i] can only reach components[j] for j <= i.
    std::vector<std::vector<State>> components;
};

/// Tarjan's algorithm, linear in states + transitions.
SccDecomposition tarjan_scc(const Automaton& a);

/// Labels of the transitions with both endpoints in scc(state); empty for a
/// trivial component without a self-loop.
AlphabetSet scc_content(const Automaton& a, State state);

/// Same states, initial and final; transitions filtered to labels in
/// `letters`. The declared alphabet is kept unchanged.
Automaton restrict_alphabet(const Automaton& a, const AlphabetSet& letters);

/// Product over the union alphabet: states are the reachable pairs, and a
/// transition exists only when both components move on the same letter.
/// Recognizes L(a1) intersected with L(a2).
Automaton product(const Automaton& a1, const Automaton& a2);

/// True iff no final state is reachable from an initial state.
bool is_empty(const Automaton& a);

/// Subset construction; language preserved. The result is complete (a dead
/// sink subset appears when some letter has no successor).
Automaton determinize(const Automaton& a);

/// Completes a deterministic automaton with a sink, then swaps final and
/// non-final states. Recognizes the complement over a's declared alphabet.
/// Nondeterministic input is a contract violation.
Automaton complement(const Automaton& a);

}  // namespace ptsep
