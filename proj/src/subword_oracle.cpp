#include "ptsep/subword_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace ptsep {
namespace oracle {

namespace {

/// Ranks all words of length <= n over a fixed alphabet and stores profiles
/// as bitsets over those ranks. Rank blocks are grouped by length; appending
/// letter j to the word of rank r and length l gives rank
/// offset[l+1] + (r - offset[l]) * k + j, so profiles grow in O(total bits).
struct ProfileDomain {
    using Bits = std::vector<std::uint64_t>;

    std::vector<Letter> letters;
    int n = 0;
    std::vector<std::size_t> offset;  // offset[l] = count of words shorter than l
    std::size_t total = 0;

    static constexpr std::size_t kMaxRanks = std::size_t{1} << 22;

    ProfileDomain(const AlphabetSet& alphabet, int level)
        : letters(alphabet.members()), n(level) {
        const std::size_t k = letters.size();
        offset.assign(static_cast<std::size_t>(n) + 2, 0);
        std::size_t words_of_len = 1;
        for (int l = 0; l <= n; ++l) {
            offset[l + 1] = offset[l] + words_of_len;
            if (offset[l + 1] > kMaxRanks)
                throw BoundError("subword profile domain exceeds " +
                                 std::to_string(kMaxRanks) + " ranks");
            words_of_len *= k;
        }
        total = offset[n + 1];
    }

    Bits empty_profile() const {
        Bits bits((total + 63) / 64, 0);
        bits[0] |= 1;  // rank 0 is the empty word
        return bits;
    }

    static bool test(const Bits& bits, std::size_t rank) {
        return (bits[rank >> 6] >> (rank & 63)) & 1;
    }

    static void set(Bits& bits, std::size_t rank) {
        bits[rank >> 6] |= std::uint64_t{1} << (rank & 63);
    }

    Bits extend(const Bits& profile, std::size_t letter) const {
        Bits out = profile;
        const std::size_t k = letters.size();
        for (int l = 0; l < n; ++l)
            for (std::size_t r = offset[l]; r < offset[l + 1]; ++r)
                if (test(profile, r))
                    set(out, offset[l + 1] + (r - offset[l]) * k + letter);
        return out;
    }

    Word word_of(std::size_t rank) const {
        const auto block =
            std::upper_bound(offset.begin(), offset.end(), rank) - 1;
        const int length = static_cast<int>(block - offset.begin());
        std::size_t digits = rank - *block;
        Word word;
        for (int i = 0; i < length; ++i) {
            word.push_back(letters[digits % letters.size()]);
            digits /= letters.size();
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    SubwordProfile to_profile(const Bits& bits) const {
        SubwordProfile out;
        out.n = n;
        for (std::size_t r = 0; r < total; ++r)
            if (test(bits, r)) out.subwords.push_back(word_of(r));
        std::sort(out.subwords.begin(), out.subwords.end());
        return out;
    }
};

/// Profiles of accepted words, as domain bitsets. The search state is the
/// pair (reachable state set, profile of the word read), which determines
/// all future behaviour.
std::set<ProfileDomain::Bits> accepted_profiles(const Automaton& a,
                                                const ProfileDomain& domain,
                                                std::size_t max_configs) {
    std::vector<char> is_final(a.num_states, 0);
    for (State s : a.final) is_final[s] = 1;

    const std::size_t k = domain.letters.size();
    std::vector<std::vector<std::vector<State>>> delta(
        k, std::vector<std::vector<State>>(a.num_states));
    for (const Transition& t : a.transitions) {
        auto pos = std::lower_bound(domain.letters.begin(),
                                    domain.letters.end(), t.letter);
        delta[pos - domain.letters.begin()][t.from].push_back(t.to);
    }

    using Config = std::pair<std::vector<State>, ProfileDomain::Bits>;
    std::set<Config> visited;
    std::deque<Config> queue;
    std::set<ProfileDomain::Bits> accepted;

    auto visit = [&](Config config) {
        if (config.first.empty()) return;
        if (!visited.insert(config).second) return;
        if (visited.size() > max_configs)
            throw BoundError("profile search exceeded " +
                             std::to_string(max_configs) + " configurations");
        if (std::any_of(config.first.begin(), config.first.end(),
                        [&](State s) { return is_final[s]; }))
            accepted.insert(config.second);
        queue.push_back(std::move(config));
    };

    visit({a.initial, domain.empty_profile()});
    while (!queue.empty()) {
        Config config = std::move(queue.front());
        queue.pop_front();
        for (std::size_t li = 0; li < k; ++li) {
            std::vector<char> mark(a.num_states, 0);
            for (State s : config.first)
                for (State t : delta[li][s]) mark[t] = 1;
            std::vector<State> next;
            for (State s = 0; s < a.num_states; ++s)
                if (mark[s]) next.push_back(s);
            if (next.empty()) continue;
            visit({std::move(next), domain.extend(config.second, li)});
        }
    }
    return accepted;
}

Automaton word_chain(const AlphabetSet& alphabet, const Word& word) {
    Automaton a;
    a.num_states = static_cast<int>(word.size()) + 1;
    a.alphabet = alphabet;
    a.initial = {0};
    a.final = {a.num_states - 1};
    for (std::size_t i = 0; i < word.size(); ++i)
        a.transitions.push_back({static_cast<State>(i), word[i],
                                 static_cast<State>(i + 1)});
    return a;
}

/// Words with content exactly B: states are the subsets of B already seen.
Automaton exact_content(const AlphabetSet& alphabet, const AlphabetSet& B) {
    if (B.size() > 16)
        throw BoundError("pattern block too large for the membership test");
    const auto& members = B.members();
    const int k = static_cast<int>(members.size());
    Automaton a;
    a.num_states = 1 << k;
    a.alphabet = alphabet;
    a.initial = {0};
    a.final = {a.num_states - 1};
    for (State subset = 0; subset < a.num_states; ++subset)
        for (int j = 0; j < k; ++j)
            a.transitions.push_back({subset, members[j], subset | (1 << j)});
    std::sort(a.transitions.begin(), a.transitions.end());
    return a;
}

/// Epsilon-free concatenation; both inputs share one declared alphabet.
Automaton concat(const Automaton& x, const Automaton& y) {
    Automaton out;
    out.num_states = x.num_states + y.num_states;
    out.alphabet = x.alphabet;
    const int off = x.num_states;

    out.transitions = x.transitions;
    for (const Transition& t : y.transitions)
        out.transitions.push_back({t.from + off, t.letter, t.to + off});

    std::vector<char> y_initial(y.num_states, 0);
    for (State s : y.initial) y_initial[s] = 1;
    for (const Transition& t : y.transitions)
        if (y_initial[t.from])
            for (State f : x.final)
                out.transitions.push_back({f, t.letter, t.to + off});

    auto accepts_empty = [](const Automaton& a) {
        for (State i : a.initial)
            if (std::find(a.final.begin(), a.final.end(), i) != a.final.end())
                return true;
        return false;
    };
    out.initial = x.initial;
    if (accepts_empty(x))
        for (State s : y.initial) out.initial.push_back(s + off);
    for (State s : y.final) out.final.push_back(s + off);
    if (accepts_empty(y))
        for (State s : x.final) out.final.push_back(s);

    std::sort(out.initial.begin(), out.initial.end());
    std::sort(out.final.begin(), out.final.end());
    std::sort(out.transitions.begin(), out.transitions.end());
    out.transitions.erase(
        std::unique(out.transitions.begin(), out.transitions.end()),
        out.transitions.end());
    return out;
}

Automaton pattern_automaton(const FactorizationPattern& pattern) {
    AlphabetSet alphabet = content(pattern.u[0]);
    for (std::size_t i = 0; i < pattern.B.size(); ++i) {
        alphabet = alphabet.set_union(pattern.B[i]);
        alphabet = alphabet.set_union(content(pattern.u[i + 1]));
    }
    Automaton a = word_chain(alphabet, pattern.u[0]);
    for (std::size_t i = 0; i < pattern.B.size(); ++i) {
        a = concat(a, exact_content(alphabet, pattern.B[i]));
        a = concat(a, word_chain(alphabet, pattern.u[i + 1]));
    }
    return a;
}

FactorizationTree leaf(const Word& label) { return {label, {}}; }

FactorizationTree node(Word label, std::vector<FactorizationTree> children) {
    return {std::move(label), std::move(children)};
}

FactorizationTree build_tree(const Word& w) {
    if (w.size() <= 1) return leaf(w);
    const AlphabetSet B = content(w);

    // greedy split into minimal factors of content exactly B
    std::vector<std::pair<std::size_t, std::size_t>> factors;
    std::size_t pos = 0;
    while (pos < w.size()) {
        AlphabetSet seen;
        std::size_t end = pos;
        while (end < w.size()) {
            seen.insert(w[end]);
            ++end;
            if (seen == B) break;
        }
        if (seen != B) break;  // remainder with strictly smaller content
        factors.push_back({pos, end});
        pos = end;
    }
    const std::size_t rem_begin = pos;

    // a minimal factor is v c where c completes the content: recurse on v
    auto factor_node = [&](std::size_t begin, std::size_t end) {
        if (end - begin == 1) return leaf({w[begin]});
        const Word v(w.begin() + static_cast<long>(begin),
                     w.begin() + static_cast<long>(end) - 1);
        return node(Word(w.begin() + static_cast<long>(begin),
                         w.begin() + static_cast<long>(end)),
                    {build_tree(v), leaf({w[end - 1]})});
    };

    std::vector<FactorizationTree> parts;
    for (const auto& [begin, end] : factors) parts.push_back(factor_node(begin, end));
    FactorizationTree core =
        parts.size() == 1
            ? std::move(parts.front())
            : node(Word(w.begin(), w.begin() + static_cast<long>(rem_begin)),
                   std::move(parts));
    if (rem_begin == w.size()) return core;

    const Word rest(w.begin() + static_cast<long>(rem_begin), w.end());
    return node(w, {std::move(core), build_tree(rest)});
}

}  // namespace

SubwordProfile subword_profile(const Word& word, int n) {
    if (n < 0) throw std::invalid_argument("profile level must be nonnegative");
    std::set<Word> subwords{Word{}};
    for (const Letter& a : word) {
        std::set<Word> grown = subwords;
        for (const Word& x : subwords) {
            if (static_cast<int>(x.size()) >= n) continue;
            Word xa = x;
            xa.push_back(a);
            grown.insert(std::move(xa));
        }
        subwords = std::move(grown);
    }
    return {n, std::vector<Word>(subwords.begin(), subwords.end())};
}

bool is_subword(const Word& x, const Word& y) {
    std::size_t i = 0;
    for (const Letter& l : y) {
        if (i < x.size() && x[i] == l) ++i;
    }
    return i == x.size();
}

std::vector<SubwordProfile> profile_set(const Automaton& a, int n) {
    if (n < 0) throw std::invalid_argument("profile level must be nonnegative");
    const ProfileDomain domain(a.alphabet, n);
    const auto profiles =
        accepted_profiles(a, domain, ProfileDomain::kMaxRanks);
    std::vector<SubwordProfile> out;
    for (const auto& bits : profiles) out.push_back(domain.to_profile(bits));
    std::sort(out.begin(), out.end(),
              [](const SubwordProfile& x, const SubwordProfile& y) {
                  return x.subwords < y.subwords;
              });
    return out;
}

std::vector<std::vector<std::uint64_t>> profile_fingerprints(
    const Automaton& a, const AlphabetSet& alphabet, int n,
    std::size_t max_configs) {
    if (n < 0) throw std::invalid_argument("profile level must be nonnegative");
    if (!a.alphabet.subset_of(alphabet))
        throw std::invalid_argument(
            "fingerprint alphabet must cover the automaton's letters");
    const ProfileDomain domain(alphabet, n);
    const auto profiles = accepted_profiles(a, domain, max_configs);
    return {profiles.begin(), profiles.end()};
}

OracleVerdict oracle_pt_separable(const Automaton& a1, const Automaton& a2,
                                  const OracleLimits& limits) {
    if (limits.max_n < 0)
        throw std::invalid_argument("oracle level bound must be nonnegative");
    const AlphabetSet joint = a1.alphabet.set_union(a2.alphabet);
    int level = 0;
    for (; level <= limits.max_n; ++level) {
        const auto p1 =
            profile_fingerprints(a1, joint, level, limits.max_profiles);
        const auto p2 =
            profile_fingerprints(a2, joint, level, limits.max_profiles);
        auto x = p1.begin();
        auto y = p2.begin();
        bool common = false;
        while (x != p1.end() && y != p2.end()) {
            if (*x < *y)
                ++x;
            else if (*y < *x)
                ++y;
            else {
                common = true;
                break;
            }
        }
        if (!common) return {true, level};
    }
    return {false, limits.max_n};
}

bool matches_pattern(const FactorizationPattern& pattern, const Word& word) {
    if (pattern.u.size() != pattern.B.size() + 1)
        throw std::invalid_argument("malformed pattern");
    const Automaton a = pattern_automaton(pattern);
    for (const Letter& l : word)
        if (!a.alphabet.contains(l)) return false;
    return accepts(a, word);
}

FactorizationTree ramsey_factorization(const Word& word) {
    if (word.empty())
        throw std::invalid_argument("factorization needs a nonempty word");
    return build_tree(word);
}

int tree_height(const FactorizationTree& tree) {
    int height = 0;
    for (const FactorizationTree& child : tree.children)
        height = std::max(height, 1 + tree_height(child));
    return height;
}

void validate_forest(const FactorizationTree& tree) {
    if (tree.children.empty()) {
        if (tree.label.size() != 1)
            throw std::logic_error("leaf label must be a single letter");
        return;
    }
    if (tree.children.size() < 2)
        throw std::logic_error("inner node needs at least two children");
    Word joined;
    for (const FactorizationTree& child : tree.children)
        joined.insert(joined.end(), child.label.begin(), child.label.end());
    if (joined != tree.label)
        throw std::logic_error("node label must be the children in order");
    if (tree.children.size() >= 3) {
        const AlphabetSet first = content(tree.children.front().label);
        for (const FactorizationTree& child : tree.children)
            if (content(child.label) != first)
                throw std::logic_error(
                    "wide node children must share one content");
    }
    for (const FactorizationTree& child : tree.children) validate_forest(child);
}

}  // namespace oracle
}  // namespace ptsep
