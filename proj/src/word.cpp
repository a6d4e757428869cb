#include "ptsep/word.hpp"

namespace ptsep {

AlphabetSet content(const Word& word) {
    return AlphabetSet(std::vector<Letter>(word.begin(), word.end()));
}

Word make_word(const std::vector<std::string>& tokens) {
    Word word;
    word.reserve(tokens.size());
    for (const auto& token : tokens) word.emplace_back(token);
    return word;
}

std::string word_to_string(const Word& word) {
    std::string out;
    for (const Letter& letter : word) {
        if (!out.empty()) out += ' ';
        out += letter.token();
    }
    return out;
}

}  // namespace ptsep
