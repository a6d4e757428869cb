#include "ptsep/letter.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ptsep {

Letter::Letter(std::string token) : token_(std::move(token)) {
    if (token_.empty())
        throw std::invalid_argument("letter token must be nonempty");
    for (unsigned char c : token_) {
        if (std::isspace(c) || c == ':')
            throw std::invalid_argument("letter token '" + token_ +
                                        "' contains whitespace or ':'");
    }
}

AlphabetSet::AlphabetSet(std::vector<Letter> letters) : members_(std::move(letters)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

AlphabetSet::AlphabetSet(std::initializer_list<Letter> letters)
    : AlphabetSet(std::vector<Letter>(letters)) {}

bool AlphabetSet::contains(const Letter& letter) const {
    return std::binary_search(members_.begin(), members_.end(), letter);
}

void AlphabetSet::insert(const Letter& letter) {
    auto it = std::lower_bound(members_.begin(), members_.end(), letter);
    if (it == members_.end() || *it != letter) members_.insert(it, letter);
}

AlphabetSet AlphabetSet::set_union(const AlphabetSet& other) const {
    AlphabetSet out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out.members_));
    return out;
}

AlphabetSet AlphabetSet::set_intersection(const AlphabetSet& other) const {
    AlphabetSet out;
    std::set_intersection(members_.begin(), members_.end(),
                          other.members_.begin(), other.members_.end(),
                          std::back_inserter(out.members_));
    return out;
}

AlphabetSet AlphabetSet::set_difference(const AlphabetSet& other) const {
    AlphabetSet out;
    std::set_difference(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
    return out;
}

bool AlphabetSet::subset_of(const AlphabetSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

}  // namespace ptsep
