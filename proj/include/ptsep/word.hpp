/* word.hpp -- finite words over an alphabet. */

#pragma once

#include <string>
#include <vector>

#include "ptsep/letter.hpp"

namespace ptsep {

using Word = std::vector<Letter>;

/// The set of letters occurring in the word.
AlphabetSet content(const Word& word);

Word make_word(const std::vector<std::string>& tokens);

/// Tokens joined by single spaces; the empty word prints as "".
std::string word_to_string(const Word& word);

}  // namespace ptsep
