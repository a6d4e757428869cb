/* letter.hpp -- alphabet letters and letter sets. */

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ptsep {

/// A letter is a nonempty token without whitespace or ':' (the section
/// delimiter of the file format). Construction validates.
class Letter {
public:
    explicit Letter(std::string token);

    const std::string& token() const { return token_; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter& lhs, const Letter& rhs) {
        return lhs.token_ <=> rhs.token_;
    }

private:
    std::string token_;
};

/// An ordered set of letters. Comparisons are lexicographic on the sorted
/// member sequence, which gives a total order usable as a map key.
class AlphabetSet {
public:
    AlphabetSet() = default;
    explicit AlphabetSet(std::vector<Letter> letters);
    AlphabetSet(std::initializer_list<Letter> letters);

    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    bool contains(const Letter& letter) const;
    void insert(const Letter& letter);

    AlphabetSet set_union(const AlphabetSet& other) const;
    AlphabetSet set_intersection(const AlphabetSet& other) const;
    AlphabetSet set_difference(const AlphabetSet& other) const;
    bool subset_of(const AlphabetSet& other) const;

    /// sorted, duplicate-free
    const std::vector<Letter>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const AlphabetSet&, const AlphabetSet&) = default;
    friend auto operator<=>(const AlphabetSet&, const AlphabetSet&) = default;

private:
    std::vector<Letter> members_;
};

}  // namespace ptsep
