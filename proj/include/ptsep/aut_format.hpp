/* aut_format.hpp -- the textual .aut exchange format.
 *
 * A file is a sequence of lines; '#' starts a comment that runs to end of
 * line, blank lines are skipped. The remaining lines are sections:
 *
 *   alphabet: <token> <token> ...
 *   states: <count>
 *   initial: <state> <state> ...
 *   final: <state> <state> ...
 *   trans: <from> <token> <to>
 *
 * `alphabet:` and `states:` are required and may appear once; `initial:` and
 * `final:` are optional and may appear once; `trans:` may repeat. Sections
 * may come in any order. Tokens must be whitespace-free, must not contain
 * ':' and must not start with '@' (reserved for letters synthesized
 * internally). Serialization is canonical: alphabet, states, initial, final,
 * then transitions sorted by (from, token, to), so equal automata print as
 * byte-identical files.
 */

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ptsep/automaton.hpp"

namespace ptsep {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);

    /// 1-based line of the offending input; 0 when the problem is global
    /// (e.g. a required section is missing).
    int line() const { return line_; }

private:
    int line_;
};

/// Throws ParseError on malformed input.
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton(const std::string& text);
Automaton load_automaton(const std::string& path);

/// Canonical form; parse(serialize(a)) == a for any valid automaton.
std::string serialize_automaton(const Automaton& a);
void save_automaton(const Automaton& a, const std::string& path);

}  // namespace ptsep
