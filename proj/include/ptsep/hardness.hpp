/* hardness.hpp -- reduction from 3-SAT to the common-content problem.
 *
 * Deciding whether two NFAs accept words with the same letter content is
 * NP-hard. The reduction maps a 3-CNF formula over variables x1..xn to two
 * deterministic automata over the 2n tokens x1, ~x1, ..., xn, ~xn: the first
 * accepts exactly the valuation words (one literal per variable, in order),
 * the second accepts a chosen literal from each clause followed by a
 * valuation word. The formula is satisfiable iff the two languages contain
 * words with equal content.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ptsep/automaton.hpp"
#include "ptsep/word.hpp"

namespace ptsep {
namespace hardness {

/// A clause of one to three literals; literal k > 0 means xk, k < 0 means
/// the negation. Duplicated literals inside a clause are allowed.
using Clause = std::vector<int>;

struct Cnf3 {
    int num_variables = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const Cnf3&, const Cnf3&) = default;
};

/// Throws std::invalid_argument on empty or oversized clauses and on
/// out-of-range or zero literals.
Cnf3 make_cnf3(int num_variables, std::vector<Clause> clauses);

/// DIMACS cnf: optional 'c' comment lines, one 'p cnf <vars> <clauses>'
/// header, then 0-terminated clauses of one to three literals. Throws
/// std::invalid_argument on malformed input.
Cnf3 parse_dimacs(std::istream& in);
Cnf3 parse_dimacs(const std::string& text);

/// The token for a literal: "x3" for 3, "~x3" for -3.
Letter literal_letter(int literal);

struct SatReduction {
    /// valuation words x(1)...x(n), one polarity per variable
    Automaton valuations;
    /// one satisfied-literal token per clause, then a valuation word
    Automaton clause_chain;
};

SatReduction sat_reduction(const Cnf3& cnf);

/// Reads the valuation off any word whose content picks exactly one
/// polarity per variable; result[i] is the value of x(i+1). Throws
/// std::invalid_argument otherwise.
std::vector<bool> decode_valuation(const Cnf3& cnf, const Word& word);

struct SameContentResult {
    bool found = false;
    /// Meaningful when !found: true iff the search saw every reachable
    /// (state, content) configuration of both automata within the length
    /// bound, so no common content exists at any length; false when the
    /// bound cut it short.
    bool conclusive = true;
    AlphabetSet content;
    Word in_first;
    Word in_second;
};

/// Searches for accepted words of length <= len_bound with equal content by
/// exploring (state, content) configurations breadth-first, memoized per
/// state. For reduction outputs a bound of clauses + variables suffices,
/// since the chain automata accept only words of that fixed length. This is
/// the NP-hard target of the reduction; the search is exponential in the
/// alphabet by design.
SameContentResult same_content_witness(const Automaton& a1,
                                       const Automaton& a2, int len_bound);

}  // namespace hardness
}  // namespace ptsep
