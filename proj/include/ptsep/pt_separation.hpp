/* pt_separation.hpp -- separability of two NFA languages by a piecewise
 * testable language.
 *
 * Two regular languages cannot be separated by any piecewise testable
 * language exactly when, for every n, they contain words with equal subword
 * profiles at level n. The decision procedure finds the finite obstruction:
 * state pairs (q1, q2) that both carry loops using exactly the same letter
 * set B. Jumping over such pairs with a shared fresh letter turns the
 * infinite family of common witnesses into ordinary nonemptiness of a
 * product.
 */

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ptsep/automaton.hpp"
#include "ptsep/pattern.hpp"

namespace ptsep {
namespace pt {

/// The largest alphabet B such that q1 and q2 each sit on a cycle whose
/// label set is exactly B; nullopt when no nonempty such B exists.
/// Computed as the fixpoint of C -> scc-content intersection under
/// restriction to C, which shrinks at most |alphabet| times.
std::optional<AlphabetSet> max_common_loop_alphabet(const Automaton& a1,
                                                    State q1,
                                                    const Automaton& a2,
                                                    State q2);

/// One jump opportunity: in automaton i, some path p_i ->* q_i ->* r_i uses
/// only letters of B, with a loop at q_i using exactly B. Empty path halves
/// are allowed (p_i == q_i or q_i == r_i). The witness fields record one
/// loop pair the endpoints were derived from.
struct PatternTuple {
    State p1, r1;
    State p2, r2;
    State witness_q1, witness_q2;
    AlphabetSet witness_B;

    friend bool operator==(const PatternTuple&, const PatternTuple&) = default;
};

/// All tuples in canonical order: grouped by (witness_q1, witness_q2) in
/// state order, then by (p1, r1, p2, r2). An endpoint 4-tuple reachable
/// from several loop pairs is emitted once, with the first witnessing
/// (q1, q2).
std::vector<PatternTuple> enumerate_pattern_tuples(const Automaton& a1,
                                                   const Automaton& a2);

/// An input automaton extended with one fresh jump letter per tuple. Fresh
/// letters are spelled "@0", "@1", ... in tuple order and shared between
/// the two sides; the '@' prefix is rejected by the parser, so freshness
/// is guaranteed.
struct ExtendedAutomaton {
    Automaton base;
    std::map<Letter, PatternTuple> pattern_letters;
};

/// Extends copies of a1 and a2 with the jump transitions p1 -> r1 resp.
/// p2 -> r2 for every enumerated tuple, one shared fresh letter each.
std::pair<ExtendedAutomaton, ExtendedAutomaton> build_extended(
    const Automaton& a1, const Automaton& a2);

struct SeparationStats {
    /// Loop-alphabet fixpoint computations that ran, and the largest number
    /// of strict shrink steps any of them needed (bounded by the joint
    /// alphabet size).
    long long fixpoint_runs = 0;
    long long max_fixpoint_refinements = 0;
    /// jump edges counted through the deduplicated loop groups
    long long tuple_count = 0;
    /// product states explored by the emptiness check
    long long explored_pairs = 0;
};

/// True iff some piecewise testable language contains L(a1) and is disjoint
/// from L(a2); equivalent to emptiness of the product of the two extended
/// automata. The predicate is symmetric in its arguments. The decision runs
/// on an implicit product (jump edges are never materialized), polynomial
/// in states and alphabet together.
bool pt_separable(const Automaton& a1, const Automaton& a2,
                  SeparationStats* stats = nullptr);

/// Decodes one shortest accepted word of the extended product (ties broken
/// lexicographically) into the pattern u0 B1 u1 ... Bp up whose instances
/// witness non-separability: maximal runs of ordinary letters become the
/// u_i, every jump letter contributes its loop alphabet. nullopt when the
/// product is empty, i.e. the languages are separable. Both arguments must
/// come from one build_extended call; a jump letter missing from the
/// metadata map is an internal error.
std::optional<FactorizationPattern> extract_pattern(
    const ExtendedAutomaton& e1, const ExtendedAutomaton& e2);

/// Witnesses at level n >= 1 for a non-separable pair: the canonical
/// pattern instance plus one word accepted by each input automaton, all
/// three with equal subword profiles at level n.
struct WitnessPair {
    FactorizationPattern pattern;
    Word canonical;
    Word in_first;
    Word in_second;
};

/// nullopt when the languages are separable (no witness exists).
std::optional<WitnessPair> separation_witnesses(const Automaton& a1,
                                                const Automaton& a2, int n);

/// A regular language is piecewise testable iff it is PT-separable from its
/// complement. Requires a deterministic automaton.
bool is_piecewise_testable(const Automaton& a);

}  // namespace pt
}  // namespace ptsep
