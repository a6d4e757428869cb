/* prefix_separation.hpp -- separability by prefix testable languages.
 *
 * A prefix testable language is a boolean combination of languages wA*.
 * Separability fails in exactly two ways: the languages intersect, or they
 * contain words with arbitrarily long common prefixes. The second condition
 * is an infinite-run property, decided on Buchi closures of the automata.
 */

#pragma once

#include "ptsep/automaton.hpp"

namespace ptsep {
namespace prefix {

/// A finite automaton read with the Buchi condition: a run is accepting when
/// it visits the accepting set infinitely often.
struct BuchiAutomaton {
    Automaton a;
};

/// The closure of L(a) under extension and restriction of suffixes: trims a,
/// then makes every remaining state accepting. An infinite word is accepted
/// iff infinitely many of its prefixes extend to words of L(a).
BuchiAutomaton closure_buchi(const Automaton& a);

/// True iff the product of the two automata admits an infinite run that is
/// accepting for both. Only valid when every state of both inputs is
/// accepting (as closure_buchi guarantees); anything else is a contract
/// violation. Reduces to: the reachable product has a nontrivial SCC or a
/// self-loop.
bool buchi_product_nonempty(const BuchiAutomaton& b1, const BuchiAutomaton& b2);

/// True iff some prefix testable language contains L(a1) and is disjoint
/// from L(a2). Symmetric in its arguments.
bool prefix_separable(const Automaton& a1, const Automaton& a2);

}  // namespace prefix
}  // namespace ptsep
