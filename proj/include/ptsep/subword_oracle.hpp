/* subword_oracle.hpp -- brute-force ground truth for subword profiles.
 *
 * The profile of a word at level n is its set of (scattered) subwords of
 * length at most n. Two words are n-equivalent when their profiles agree; a
 * piecewise testable separator at level n exists exactly when no profile is
 * realized by both languages. These routines decide that by exhaustive
 * profile enumeration and are meant as oracles for small instances, not as
 * the production decision procedure.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ptsep/automaton.hpp"
#include "ptsep/pattern.hpp"
#include "ptsep/word.hpp"

namespace ptsep {
namespace oracle {

/// Subwords of length <= n, sorted; includes the empty word.
struct SubwordProfile {
    int n = 0;
    std::vector<Word> subwords;

    friend bool operator==(const SubwordProfile&,
                           const SubwordProfile&) = default;
};

SubwordProfile subword_profile(const Word& word, int n);

/// x is a (scattered) subword of y.
bool is_subword(const Word& x, const Word& y);

/// All level-n profiles realized by words of L(a). Terminates because a
/// profile is determined by a bounded abstraction of the word read so far.
std::vector<SubwordProfile> profile_set(const Automaton& a, int n);

/// The same profiles as canonical bitset encodings over the rank domain of
/// `alphabet`, sorted and duplicate-free; equal encodings mean equal
/// profiles. The alphabet must cover a's declared letters, so encodings
/// built against a shared alphabet are comparable across languages. Nothing
/// is materialized, which keeps bulk cross-language comparisons cheap.
std::vector<std::vector<std::uint64_t>> profile_fingerprints(
    const Automaton& a, const AlphabetSet& alphabet, int n,
    std::size_t max_configs = std::size_t{1} << 22);

/// Guards against the doubly exponential profile lattice.
struct OracleLimits {
    int max_n = 6;
    std::size_t max_profiles = 1u << 20;
};

class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleVerdict {
    bool separable = false;
    /// Smallest n whose profiles are disjoint when separable; otherwise the
    /// largest level checked, at every one of which a common profile exists.
    int level = 0;
};

/// Checks levels 0..limits.max_n in turn. Throws BoundError when a level
/// would exceed limits.max_profiles. A verdict with separable == false is
/// evidence up to `level` only; PT-separability may still fail beyond it.
OracleVerdict oracle_pt_separable(const Automaton& a1, const Automaton& a2,
                                  const OracleLimits& limits = {});

/// True iff word = u0 w1 u1 ... wp up with content(wi) == B[i]; decided by
/// automaton membership for the pattern language.
bool matches_pattern(const FactorizationPattern& pattern, const Word& word);

/// Factorization tree of a word under the content morphism: leaves are
/// single letters, binary nodes concatenate, wider nodes are allowed only
/// when all children share one content (an idempotent of the union
/// semilattice). Height is bounded by 3 * 2^|alphabet|, independent of
/// word length.
struct FactorizationTree {
    Word label;
    std::vector<FactorizationTree> children;

    friend bool operator==(const FactorizationTree&,
                           const FactorizationTree&) = default;
};

/// Requires a nonempty word; throws std::invalid_argument on the empty one.
FactorizationTree ramsey_factorization(const Word& word);

/// Leaves have height 0.
int tree_height(const FactorizationTree& tree);

/// Throws std::logic_error when the tree violates the forest invariants:
/// label mismatch with children, non-leaf with < 2 children, or a wide node
/// whose children's contents differ.
void validate_forest(const FactorizationTree& tree);

}  // namespace oracle
}  // namespace ptsep
