#include "ptsep/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace ptsep {

namespace {

void check_state(State s, int num_states, const char* role) {
    if (s < 0 || s >= num_states)
        throw std::invalid_argument(std::string(role) + " state " +
                                    std::to_string(s) + " out of range");
}

/// per-state successor lists, ignoring labels
std::vector<std::vector<State>> successors(const Automaton& a) {
    std::vector<std::vector<State>> succ(a.num_states);
    for (const Transition& t : a.transitions) succ[t.from].push_back(t.to);
    return succ;
}

std::vector<char> reachable_from(const std::vector<std::vector<State>>& succ,
                                 const std::vector<State>& sources) {
    std::vector<char> seen(succ.size(), 0);
    std::deque<State> queue;
    for (State s : sources)
        if (!seen[s]) {
            seen[s] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (State t : succ[s])
            if (!seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
    }
    return seen;
}

}  // namespace

Automaton make_automaton(int num_states, AlphabetSet alphabet,
                         std::vector<State> initial, std::vector<State> final,
                         std::vector<Transition> transitions) {
    if (num_states < 0) throw std::invalid_argument("negative state count");
    for (State s : initial) check_state(s, num_states, "initial");
    for (State s : final) check_state(s, num_states, "final");
    for (const Transition& t : transitions) {
        check_state(t.from, num_states, "transition source");
        check_state(t.to, num_states, "transition target");
        if (!alphabet.contains(t.letter))
            throw std::invalid_argument("transition letter '" +
                                        t.letter.token() + "' not in alphabet");
    }
    auto dedupe = [](auto& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(initial);
    dedupe(final);
    dedupe(transitions);
    return Automaton{num_states, std::move(alphabet), std::move(initial),
                     std::move(final), std::move(transitions)};
}

bool is_deterministic(const Automaton& a) {
    if (a.initial.size() > 1) return false;
    for (std::size_t i = 1; i < a.transitions.size(); ++i) {
        const Transition& prev = a.transitions[i - 1];
        const Transition& cur = a.transitions[i];
        if (prev.from == cur.from && prev.letter == cur.letter) return false;
    }
    return true;
}

bool accepts(const Automaton& a, const Word& word) {
    for (const Letter& l : word)
        if (!a.alphabet.contains(l))
            throw std::invalid_argument("word letter '" + l.token() +
                                        "' not in automaton alphabet");
    std::vector<char> current(a.num_states, 0);
    for (State s : a.initial) current[s] = 1;
    for (const Letter& l : word) {
        std::vector<char> next(a.num_states, 0);
        for (const Transition& t : a.transitions)
            if (t.letter == l && current[t.from]) next[t.to] = 1;
        current = std::move(next);
    }
    for (State s : a.final)
        if (current[s]) return true;
    return false;
}

Automaton trim(const Automaton& a) {
    auto succ = successors(a);
    std::vector<std::vector<State>> pred(a.num_states);
    for (const Transition& t : a.transitions) pred[t.to].push_back(t.from);
    auto forward = reachable_from(succ, a.initial);
    auto backward = reachable_from(pred, a.final);

    std::vector<int> renumber(a.num_states, -1);
    int kept = 0;
    for (State s = 0; s < a.num_states; ++s)
        if (forward[s] && backward[s]) renumber[s] = kept++;

    Automaton out;
    out.num_states = kept;
    out.alphabet = a.alphabet;
    for (State s : a.initial)
        if (renumber[s] != -1) out.initial.push_back(renumber[s]);
    for (State s : a.final)
        if (renumber[s] != -1) out.final.push_back(renumber[s]);
    for (const Transition& t : a.transitions)
        if (renumber[t.from] != -1 && renumber[t.to] != -1)
            out.transitions.push_back(
                {renumber[t.from], t.letter, renumber[t.to]});
    std::sort(out.transitions.begin(), out.transitions.end());
    return out;
}

SccDecomposition tarjan_scc(const Automaton& a) {
    const int n = a.num_states;
    auto succ = successors(a);

    SccDecomposition out;
    out.component_of.assign(n, -1);
    std::vector<int> index(n, -1);
    std::vector<int> low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<State> stack;
    int next_index = 0;

    struct Frame {
        State v;
        std::size_t child;
    };
    std::vector<Frame> call;

    for (State root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& frame = call.back();
            const State v = frame.v;
            if (frame.child < succ[v].size()) {
                const State w = succ[v][frame.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<State> members;
                    State w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        out.component_of[w] =
                            static_cast<int>(out.components.size());
                        members.push_back(w);
                    } while (w != v);
                    std::sort(members.begin(), members.end());
                    out.components.push_back(std::move(members));
                }
            }
        }
    }
    return out;
}

AlphabetSet scc_content(const Automaton& a, State state) {
    check_state(state, a.num_states, "query");
    auto scc = tarjan_scc(a);
    const int c = scc.component_of[state];
    std::vector<Letter> letters;
    for (const Transition& t : a.transitions)
        if (scc.component_of[t.from] == c && scc.component_of[t.to] == c)
            letters.push_back(t.letter);
    return AlphabetSet(std::move(letters));
}

Automaton restrict_alphabet(const Automaton& a, const AlphabetSet& letters) {
    Automaton out = a;
    out.transitions.clear();
    for (const Transition& t : a.transitions)
        if (letters.contains(t.letter)) out.transitions.push_back(t);
    return out;
}

Automaton product(const Automaton& a1, const Automaton& a2) {
    Automaton out;
    out.alphabet = a1.alphabet.set_union(a2.alphabet);

    // per state, letter token -> successor list
    auto index_edges = [](const Automaton& a) {
        std::vector<std::map<Letter, std::vector<State>>> edges(a.num_states);
        for (const Transition& t : a.transitions)
            edges[t.from][t.letter].push_back(t.to);
        return edges;
    };
    auto edges1 = index_edges(a1);
    auto edges2 = index_edges(a2);

    std::map<std::pair<State, State>, State> id;
    std::deque<std::pair<State, State>> queue;
    auto intern = [&](State q1, State q2) {
        auto [it, fresh] = id.try_emplace({q1, q2},
                                          static_cast<State>(id.size()));
        if (fresh) queue.push_back({q1, q2});
        return it->second;
    };

    for (State i1 : a1.initial)
        for (State i2 : a2.initial) out.initial.push_back(intern(i1, i2));

    std::vector<char> final1(a1.num_states, 0), final2(a2.num_states, 0);
    for (State s : a1.final) final1[s] = 1;
    for (State s : a2.final) final2[s] = 1;

    while (!queue.empty()) {
        auto [q1, q2] = queue.front();
        queue.pop_front();
        const State from = id.at({q1, q2});
        if (final1[q1] && final2[q2]) out.final.push_back(from);
        for (const auto& [letter, succ1] : edges1[q1]) {
            auto it = edges2[q2].find(letter);
            if (it == edges2[q2].end()) continue;
            for (State t1 : succ1)
                for (State t2 : it->second)
                    out.transitions.push_back({from, letter, intern(t1, t2)});
        }
    }
    out.num_states = static_cast<int>(id.size());
    std::sort(out.initial.begin(), out.initial.end());
    out.initial.erase(std::unique(out.initial.begin(), out.initial.end()),
                      out.initial.end());
    std::sort(out.final.begin(), out.final.end());
    std::sort(out.transitions.begin(), out.transitions.end());
    out.transitions.erase(
        std::unique(out.transitions.begin(), out.transitions.end()),
        out.transitions.end());
    return out;
}

bool is_empty(const Automaton& a) {
    auto seen = reachable_from(successors(a), a.initial);
    for (State s : a.final)
        if (seen[s]) return false;
    return true;
}

Automaton determinize(const Automaton& a) {
    Automaton out;
    out.alphabet = a.alphabet;

    // letter index -> per-state successors
    const auto& letters = a.alphabet.members();
    std::vector<std::vector<std::vector<State>>> delta(
        letters.size(), std::vector<std::vector<State>>(a.num_states));
    for (const Transition& t : a.transitions) {
        auto pos = std::lower_bound(letters.begin(), letters.end(), t.letter);
        delta[pos - letters.begin()][t.from].push_back(t.to);
    }
    std::vector<char> is_final(a.num_states, 0);
    for (State s : a.final) is_final[s] = 1;

    std::map<std::vector<State>, State> id;
    std::deque<std::vector<State>> queue;
    auto intern = [&](std::vector<State> subset) {
        auto [it, fresh] =
            id.try_emplace(std::move(subset), static_cast<State>(id.size()));
        if (fresh) queue.push_back(it->first);
        return it->second;
    };

    out.initial.push_back(intern(a.initial));
    while (!queue.empty()) {
        std::vector<State> subset = queue.front();
        queue.pop_front();
        const State from = id.at(subset);
        if (std::any_of(subset.begin(), subset.end(),
                        [&](State s) { return is_final[s]; }))
            out.final.push_back(from);
        for (std::size_t li = 0; li < letters.size(); ++li) {
            std::vector<char> mark(a.num_states, 0);
            for (State s : subset)
                for (State t : delta[li][s]) mark[t] = 1;
            std::vector<State> next;
            for (State s = 0; s < a.num_states; ++s)
                if (mark[s]) next.push_back(s);
            out.transitions.push_back({from, letters[li], intern(std::move(next))});
        }
    }
    out.num_states = static_cast<int>(id.size());
    std::sort(out.final.begin(), out.final.end());
    std::sort(out.transitions.begin(), out.transitions.end());
    return out;
}

Automaton complement(const Automaton& a) {
    if (!is_deterministic(a))
        throw std::invalid_argument("complement requires a deterministic automaton");

    Automaton work = a;
    const auto& letters = work.alphabet.members();

    // locate the missing (state, letter) slots
    std::vector<std::vector<char>> covered(
        work.num_states, std::vector<char>(letters.size(), 0));
    for (const Transition& t : work.transitions) {
        auto pos = std::lower_bound(letters.begin(), letters.end(), t.letter);
        covered[t.from][pos - letters.begin()] = 1;
    }
    bool incomplete = work.initial.empty();
    for (const auto& row : covered)
        for (char c : row)
            if (!c) incomplete = true;

    if (incomplete) {
        const State sink = work.num_states++;
        for (State s = 0; s < sink; ++s)
            for (std::size_t li = 0; li < letters.size(); ++li)
                if (!covered[s][li])
                    work.transitions.push_back({s, letters[li], sink});
        for (const Letter& l : letters) work.transitions.push_back({sink, l, sink});
        if (work.initial.empty()) work.initial.push_back(sink);
        std::sort(work.transitions.begin(), work.transitions.end());
    }

    std::vector<char> was_final(work.num_states, 0);
    for (State s : work.final) was_final[s] = 1;
    work.final.clear();
    for (State s = 0; s < work.num_states; ++s)
        if (!was_final[s]) work.final.push_back(s);
    return work;
}

}  // namespace ptsep
