/* pattern.hpp -- factorization patterns u0 B1 u1 ... Bp up.
 *
 * A pattern denotes the word family u0 b1^n u1 ... bp^n up where bi is any
 * enumeration of the block Bi; it is the common shape of the witnesses that
 * certify two languages share subword profiles at every level.
 */

#pragma once

#include <string>
#include <vector>

#include "ptsep/letter.hpp"
#include "ptsep/word.hpp"

namespace ptsep {

/// Invariant: u.size() == B.size() + 1 and every Bi is nonempty.
struct FactorizationPattern {
    std::vector<Word> u;
    std::vector<AlphabetSet> B;

    friend bool operator==(const FactorizationPattern&,
                           const FactorizationPattern&) = default;
};

/// Throws std::invalid_argument unless u.size() == B.size() + 1 and all
/// blocks are nonempty.
FactorizationPattern make_pattern(std::vector<Word> u,
                                  std::vector<AlphabetSet> B);

/// A pattern is proper when no block letter can be absorbed from an
/// adjacent word (for each block i, last(u[i]) and first(u[i+1]) lie
/// outside B[i]) and, whenever an inner word is empty, the two blocks it
/// separates are incomparable under inclusion.
bool is_proper(const FactorizationPattern& pattern);

/// Rewrites toward a proper pattern: absorbs boundary letters into adjacent
/// blocks and merges comparable blocks that touch across an empty inner
/// word, keeping the larger. The denoted word family at each level n only
/// grows equivalent representatives; terminates because each step shrinks
/// total word length + block count.
FactorizationPattern normalize(const FactorizationPattern& pattern);

/// The word u0 b1^n u1 ... bp^n up with each bi the sorted enumeration of
/// B[i]. Level n >= 1.
Word pattern_witness(const FactorizationPattern& pattern, int n);

std::string pattern_to_string(const FactorizationPattern& pattern);

}  // namespace ptsep
