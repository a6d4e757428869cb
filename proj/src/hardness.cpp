#include "ptsep/hardness.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ptsep {
namespace hardness {

namespace {

void check_literal(int literal, int num_variables) {
    const int var = literal > 0 ? literal : -literal;
    if (var == 0 || var > num_variables)
        throw std::invalid_argument("literal " + std::to_string(literal) +
                                    " out of range");
}

using Mask = std::vector<std::uint64_t>;

void set_bit(Mask& m, int i) {
    m[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

bool test_bit(const Mask& m, int i) {
    return (m[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
}

/// Breadth-first closure of (state, content) configurations with parent
/// links for word reconstruction, cut at the word-length bound;
/// `exhausted` reports whether anything reachable was left unseen.
struct ContentSearch {
    struct Config {
        State state;
        Mask content;
        int parent;
        int letter;  // joint-alphabet index, -1 at roots
        int depth;
    };
    std::vector<Config> configs;
    /// content realized by an accepted word -> first config reaching it
    std::map<Mask, int> accepting;
    bool exhausted = true;
};

/// Memory guard: reachable configurations are exponential in the alphabet.
constexpr std::size_t kConfigCap = std::size_t{1} << 22;

ContentSearch explore_contents(const Automaton& a,
                               const std::vector<Letter>& letters,
                               int len_bound) {
    ContentSearch out;
    std::vector<char> is_final(a.num_states, 0);
    for (State s : a.final) is_final[s] = 1;

    std::vector<std::vector<std::pair<int, State>>> adj(a.num_states);
    for (const Transition& t : a.transitions) {
        const auto pos =
            std::lower_bound(letters.begin(), letters.end(), t.letter);
        adj[t.from].push_back({static_cast<int>(pos - letters.begin()), t.to});
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());

    const Mask no_letters((letters.size() + 63) / 64, 0);
    std::set<std::pair<State, Mask>> visited;
    std::deque<int> queue;
    auto visit = [&](State s, Mask content, int parent, int letter,
                     int depth) {
        if (!visited.insert({s, content}).second) return;
        if (out.configs.size() >= kConfigCap) {
            out.exhausted = false;
            return;
        }
        const int id = static_cast<int>(out.configs.size());
        out.configs.push_back({s, std::move(content), parent, letter, depth});
        if (is_final[s]) out.accepting.try_emplace(out.configs[id].content, id);
        queue.push_back(id);
    };

    std::set<std::pair<State, Mask>> cut;
    for (State s : a.initial) visit(s, no_letters, -1, -1, 0);
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        const int depth = out.configs[id].depth;
        for (const auto& [letter, to] : adj[out.configs[id].state]) {
            Mask content = out.configs[id].content;
            set_bit(content, letter);
            if (depth == len_bound)
                cut.insert({to, std::move(content)});
            else
                visit(to, std::move(content), id, letter, depth + 1);
        }
    }
    // the cut is harmless exactly when every edge it dropped points back
    // into the visited set
    for (const auto& target : cut)
        if (!visited.contains(target)) out.exhausted = false;
    return out;
}

Word word_of_config(const ContentSearch& search,
                    const std::vector<Letter>& letters, int id) {
    Word word;
    for (int at = id; search.configs[at].parent != -1;
         at = search.configs[at].parent)
        word.push_back(letters[search.configs[at].letter]);
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace

Cnf3 make_cnf3(int num_variables, std::vector<Clause> clauses) {
    if (num_variables < 0)
        throw std::invalid_argument("negative variable count");
    for (const Clause& clause : clauses) {
        if (clause.empty() || clause.size() > 3)
            throw std::invalid_argument(
                "every clause needs one to three literals");
        for (int literal : clause) check_literal(literal, num_variables);
    }
    return Cnf3{num_variables, std::move(clauses)};
}

Cnf3 parse_dimacs(std::istream& in) {
    std::string line;
    int num_variables = -1;
    long long num_clauses = -1;
    std::vector<int> pending;
    std::vector<Clause> clauses;

    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head)) continue;
        if (head == "c") continue;
        if (head == "p") {
            if (num_variables >= 0)
                throw std::invalid_argument("duplicate DIMACS header");
            std::string format;
            if (!(fields >> format >> num_variables >> num_clauses) ||
                format != "cnf" || num_variables < 0 || num_clauses < 0)
                throw std::invalid_argument("malformed DIMACS header");
            continue;
        }
        if (num_variables < 0)
            throw std::invalid_argument("clause before DIMACS header");
        std::istringstream rest(line);
        int literal;
        while (rest >> literal) {
            if (literal == 0) {
                if (pending.empty() || pending.size() > 3)
                    throw std::invalid_argument(
                        "every clause needs one to three literals");
                clauses.push_back(pending);
                pending.clear();
            } else {
                pending.push_back(literal);
            }
        }
        if (!rest.eof()) throw std::invalid_argument("malformed literal");
    }
    if (num_variables < 0) throw std::invalid_argument("missing DIMACS header");
    if (!pending.empty())
        throw std::invalid_argument("unterminated final clause");
    if (static_cast<long long>(clauses.size()) != num_clauses)
        throw std::invalid_argument("clause count disagrees with header");
    return make_cnf3(num_variables, std::move(clauses));
}

Cnf3 parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

Letter literal_letter(int literal) {
    if (literal == 0) throw std::invalid_argument("zero literal");
    return Letter(literal > 0 ? "x" + std::to_string(literal)
                              : "~x" + std::to_string(-literal));
}

SatReduction sat_reduction(const Cnf3& cnf) {
    std::vector<Letter> letters;
    for (int v = 1; v <= cnf.num_variables; ++v) {
        letters.push_back(literal_letter(v));
        letters.push_back(literal_letter(-v));
    }
    const AlphabetSet alphabet(std::move(letters));
    const int n = cnf.num_variables;
    const int k = static_cast<int>(cnf.clauses.size());

    auto valuation_chain = [&](Automaton& a, State base) {
        for (int v = 1; v <= n; ++v) {
            a.transitions.push_back(
                {base + v - 1, literal_letter(v), base + v});
            a.transitions.push_back(
                {base + v - 1, literal_letter(-v), base + v});
        }
    };

    SatReduction out;
    out.valuations.num_states = n + 1;
    out.valuations.alphabet = alphabet;
    out.valuations.initial = {0};
    out.valuations.final = {n};
    valuation_chain(out.valuations, 0);
    std::sort(out.valuations.transitions.begin(),
              out.valuations.transitions.end());

    out.clause_chain.num_states = k + n + 1;
    out.clause_chain.alphabet = alphabet;
    out.clause_chain.initial = {0};
    out.clause_chain.final = {k + n};
    for (int j = 0; j < k; ++j)
        for (int literal : cnf.clauses[j])
            out.clause_chain.transitions.push_back(
                {j, literal_letter(literal), j + 1});
    valuation_chain(out.clause_chain, k);
    std::sort(out.clause_chain.transitions.begin(),
              out.clause_chain.transitions.end());
    out.clause_chain.transitions.erase(
        std::unique(out.clause_chain.transitions.begin(),
                    out.clause_chain.transitions.end()),
        out.clause_chain.transitions.end());
    return out;
}

std::vector<bool> decode_valuation(const Cnf3& cnf, const Word& word) {
    const AlphabetSet seen = content(word);
    std::vector<bool> valuation;
    for (int v = 1; v <= cnf.num_variables; ++v) {
        const bool positive = seen.contains(literal_letter(v));
        const bool negative = seen.contains(literal_letter(-v));
        if (positive == negative)
            throw std::invalid_argument(
                "word does not pick exactly one polarity for x" +
                std::to_string(v));
        valuation.push_back(positive);
    }
    return valuation;
}

SameContentResult same_content_witness(const Automaton& a1,
                                       const Automaton& a2, int len_bound) {
    if (len_bound < 0)
        throw std::invalid_argument("length bound must be nonnegative");
    const std::vector<Letter> letters =
        a1.alphabet.set_union(a2.alphabet).members();
    const ContentSearch s1 = explore_contents(a1, letters, len_bound);
    const ContentSearch s2 = explore_contents(a2, letters, len_bound);

    for (const auto& [mask, id1] : s1.accepting) {
        const auto hit = s2.accepting.find(mask);
        if (hit == s2.accepting.end()) continue;
        SameContentResult out;
        out.found = true;
        std::vector<Letter> common;
        for (std::size_t i = 0; i < letters.size(); ++i)
            if (test_bit(mask, static_cast<int>(i))) common.push_back(letters[i]);
        out.content = AlphabetSet(std::move(common));
        out.in_first = word_of_config(s1, letters, id1);
        out.in_second = word_of_config(s2, letters, hit->second);
        return out;
    }
    SameContentResult out;
    out.found = false;
    out.conclusive = s1.exhausted && s2.exhausted;
    return out;
}

}  // namespace hardness
}  // namespace ptsep
