#include "ptsep/pattern.hpp"

#include <stdexcept>

namespace ptsep {

FactorizationPattern make_pattern(std::vector<Word> u,
                                  std::vector<AlphabetSet> B) {
    if (u.size() != B.size() + 1)
        throw std::invalid_argument("pattern needs one more word than blocks");
    for (const AlphabetSet& block : B)
        if (block.empty())
            throw std::invalid_argument("pattern blocks must be nonempty");
    return FactorizationPattern{std::move(u), std::move(B)};
}

bool is_proper(const FactorizationPattern& pattern) {
    const auto& u = pattern.u;
    const auto& B = pattern.B;
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (!u[i].empty() && B[i].contains(u[i].back())) return false;
        if (!u[i + 1].empty() && B[i].contains(u[i + 1].front())) return false;
    }
    for (std::size_t i = 1; i < B.size(); ++i)
        if (u[i].empty() &&
            (B[i - 1].subset_of(B[i]) || B[i].subset_of(B[i - 1])))
            return false;
    return true;
}

FactorizationPattern normalize(const FactorizationPattern& pattern) {
    auto u = pattern.u;
    auto B = pattern.B;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < B.size(); ++i) {
            while (!u[i].empty() && B[i].contains(u[i].back())) {
                u[i].pop_back();
                changed = true;
            }
            while (!u[i + 1].empty() && B[i].contains(u[i + 1].front())) {
                u[i + 1].erase(u[i + 1].begin());
                changed = true;
            }
        }
        for (std::size_t i = 1; i < B.size(); ++i) {
            if (!u[i].empty()) continue;
            if (B[i - 1].subset_of(B[i])) {
                B.erase(B.begin() + static_cast<long>(i) - 1);
            } else if (B[i].subset_of(B[i - 1])) {
                B.erase(B.begin() + static_cast<long>(i));
            } else {
                continue;
            }
            u.erase(u.begin() + static_cast<long>(i));
            changed = true;
            break;
        }
    }
    return FactorizationPattern{std::move(u), std::move(B)};
}

Word pattern_witness(const FactorizationPattern& pattern, int n) {
    if (n < 1) throw std::invalid_argument("witness level must be positive");
    Word out = pattern.u[0];
    for (std::size_t i = 0; i < pattern.B.size(); ++i) {
        for (int k = 0; k < n; ++k)
            for (const Letter& l : pattern.B[i]) out.push_back(l);
        out.insert(out.end(), pattern.u[i + 1].begin(), pattern.u[i + 1].end());
    }
    return out;
}

std::string pattern_to_string(const FactorizationPattern& pattern) {
    std::string out;
    auto append = [&](const std::string& part) {
        if (part.empty()) return;
        if (!out.empty()) out += ' ';
        out += part;
    };
    append(word_to_string(pattern.u[0]));
    for (std::size_t i = 0; i < pattern.B.size(); ++i) {
        std::string block = "{";
        for (const Letter& l : pattern.B[i]) {
            if (block.size() > 1) block += ' ';
            block += l.token();
        }
        block += "}^n";
        append(block);
        append(word_to_string(pattern.u[i + 1]));
    }
    return out;
}

}  // namespace ptsep
