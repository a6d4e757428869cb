#include "ptsep/pt_separation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace ptsep {
namespace pt {

namespace {

/// bitset over letters or states
using Mask = std::vector<std::uint64_t>;

Mask make_mask(std::size_t bits) { return Mask((bits + 63) / 64, 0); }

void set_bit(Mask& m, int i) {
    m[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

bool test_bit(const Mask& m, int i) {
    return (m[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
}

Mask full_mask(std::size_t bits) {
    Mask m = make_mask(bits);
    for (std::size_t i = 0; i < bits; ++i) set_bit(m, static_cast<int>(i));
    return m;
}

Mask mask_and(const Mask& a, const Mask& b) {
    Mask out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

bool mask_empty(const Mask& m) {
    return std::all_of(m.begin(), m.end(),
                       [](std::uint64_t w) { return w == 0; });
}

long long mask_count(const Mask& m) {
    long long count = 0;
    for (std::uint64_t w : m) count += std::popcount(w);
    return count;
}

std::vector<State> mask_to_states(const Mask& m, int n) {
    std::vector<State> out;
    for (State s = 0; s < n; ++s)
        if (test_bit(m, s)) out.push_back(s);
    return out;
}

/// Tarjan on a plain successor graph; component ids in emission order, so a
/// component only reaches components with smaller or equal id.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& succ) {
    const int n = static_cast<int>(succ.size());
    std::vector<int> comp(n, -1), index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;
    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> call;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& frame = call.back();
            const int v = frame.v;
            if (frame.child < succ[v].size()) {
                const int w = succ[v][frame.child++];
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
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                    } while (w != v);
                    ++next_comp;
                }
            }
        }
    }
    return comp;
}

/// One automaton re-indexed over the shared letter table.
struct Indexed {
    int n = 0;
    std::vector<char> final_flag;
    std::vector<State> initial;
    /// per state, sorted pairs (letter index, endpoint)
    std::vector<std::vector<std::pair<int, State>>> adj;
    std::vector<std::vector<std::pair<int, State>>> radj;
};

/// Joint view of the two inputs plus every memo the loop analysis needs.
/// All restriction-dependent data is cached per letter mask, so the number
/// of Tarjan runs is the number of distinct masks, not of state pairs.
struct PairContext {
    std::vector<Letter> letters;
    std::size_t bits = 0;
    Indexed side[2];

    struct RestrictionInfo {
        std::vector<int> comp;
        /// per component: letters of transitions inside it
        std::vector<Mask> comp_content;
    };
    std::map<Mask, RestrictionInfo> restriction_memo[2];

    const RestrictionInfo& restricted(int s, const Mask& letter_mask) {
        auto it = restriction_memo[s].find(letter_mask);
        if (it != restriction_memo[s].end()) return it->second;
        const Indexed& a = side[s];
        std::vector<std::vector<int>> succ(a.n);
        for (int u = 0; u < a.n; ++u)
            for (const auto& [letter, v] : a.adj[u])
                if (test_bit(letter_mask, letter)) succ[u].push_back(v);
        RestrictionInfo info;
        info.comp = scc_ids(succ);
        const int ncomp = a.n == 0
                              ? 0
                              : 1 + *std::max_element(info.comp.begin(),
                                                      info.comp.end());
        info.comp_content.assign(ncomp, make_mask(bits));
        for (int u = 0; u < a.n; ++u)
            for (const auto& [letter, v] : a.adj[u])
                if (test_bit(letter_mask, letter) &&
                    info.comp[u] == info.comp[v])
                    set_bit(info.comp_content[info.comp[u]], letter);
        return restriction_memo[s]
            .emplace(letter_mask, std::move(info))
            .first->second;
    }

    const Mask& content_of(int s, const Mask& letter_mask, State q) {
        const RestrictionInfo& info = restricted(s, letter_mask);
        return info.comp_content[info.comp[q]];
    }

    int letter_index(const Letter& l) const {
        auto pos = std::lower_bound(letters.begin(), letters.end(), l);
        if (pos == letters.end() || *pos != l)
            throw std::logic_error("letter missing from joint alphabet");
        return static_cast<int>(pos - letters.begin());
    }

    Mask to_mask(const AlphabetSet& set) const {
        Mask m = make_mask(bits);
        for (const Letter& l : set) set_bit(m, letter_index(l));
        return m;
    }

    AlphabetSet from_mask(const Mask& m) const {
        std::vector<Letter> out;
        for (std::size_t i = 0; i < bits; ++i)
            if (test_bit(m, static_cast<int>(i))) out.push_back(letters[i]);
        return AlphabetSet(std::move(out));
    }
};

PairContext make_context(const Automaton& a1, const Automaton& a2) {
    PairContext ctx;
    ctx.letters = a1.alphabet.set_union(a2.alphabet).members();
    ctx.bits = ctx.letters.size();
    const Automaton* inputs[2] = {&a1, &a2};
    for (int s = 0; s < 2; ++s) {
        const Automaton& a = *inputs[s];
        Indexed& ix = ctx.side[s];
        ix.n = a.num_states;
        ix.final_flag.assign(a.num_states, 0);
        for (State f : a.final) ix.final_flag[f] = 1;
        ix.initial = a.initial;
        ix.adj.assign(a.num_states, {});
        ix.radj.assign(a.num_states, {});
        for (const Transition& t : a.transitions) {
            const int li = ctx.letter_index(t.letter);
            ix.adj[t.from].push_back({li, t.to});
            ix.radj[t.to].push_back({li, t.from});
        }
        for (auto& row : ix.adj) std::sort(row.begin(), row.end());
        for (auto& row : ix.radj) std::sort(row.begin(), row.end());
    }
    return ctx;
}

/// Fixpoint of C -> content(q1 | C) & content(q2 | C) starting from the
/// unrestricted contents. Each strict step drops a letter, so the chain
/// length is at most the joint alphabet size; `refinement_high_water` keeps
/// the largest number of strict steps seen.
std::optional<Mask> max_common_loop(PairContext& ctx, State q1, State q2,
                                    long long* refinement_high_water) {
    const Mask full = full_mask(ctx.bits);
    Mask c = mask_and(ctx.content_of(0, full, q1), ctx.content_of(1, full, q2));
    long long steps = 0;
    std::optional<Mask> result;
    while (!mask_empty(c)) {
        Mask next =
            mask_and(ctx.content_of(0, c, q1), ctx.content_of(1, c, q2));
        if (next == c) {
            result = std::move(c);
            break;
        }
        ++steps;
        c = std::move(next);
    }
    if (refinement_high_water)
        *refinement_high_water = std::max(*refinement_high_water, steps);
    return result;
}

/// States connected to q by a path using only letters of `letter_mask`;
/// forward picks successors, otherwise predecessors. Always contains q.
Mask reach_states(const Indexed& a, State q, const Mask& letter_mask,
                  bool forward) {
    Mask seen = make_mask(a.n);
    set_bit(seen, q);
    std::deque<State> queue{q};
    while (!queue.empty()) {
        const State u = queue.front();
        queue.pop_front();
        for (const auto& [letter, v] : forward ? a.adj[u] : a.radj[u]) {
            if (!test_bit(letter_mask, letter) || test_bit(seen, v)) continue;
            set_bit(seen, v);
            queue.push_back(v);
        }
    }
    return seen;
}

/// One deduplicated family of jump edges: every pair in pre1 x pre2 may
/// move to every pair in post1 x post2. Firing it once saturates it.
struct JumpGroup {
    Mask pre2;
    std::vector<State> post1, post2;
    long long edge_count = 0;
};

/// Lex-least among the shortest accepted words, or nullopt when the
/// language is empty. Runs the subset construction on the fly: in the
/// determinized automaton each subset is first reached by exactly the
/// lex-least shortest word leading to it, because subsets are discovered
/// in (parent rank, letter) order and that order is word order.
std::optional<Word> shortest_accepted(const Automaton& a) {
    std::vector<char> is_final(a.num_states, 0);
    for (State s : a.final) is_final[s] = 1;
    const auto& letters = a.alphabet.members();
    std::vector<std::vector<std::vector<State>>> delta(
        letters.size(), std::vector<std::vector<State>>(a.num_states));
    for (const Transition& t : a.transitions) {
        auto pos = std::lower_bound(letters.begin(), letters.end(), t.letter);
        delta[pos - letters.begin()][t.from].push_back(t.to);
    }

    auto accepting = [&](const std::vector<State>& subset) {
        return std::any_of(subset.begin(), subset.end(),
                           [&](State s) { return is_final[s]; });
    };

    std::map<std::vector<State>, int> id;
    std::vector<std::pair<int, int>> parent;  // (parent rank, letter index)
    std::deque<std::vector<State>> queue;

    std::vector<State> start = a.initial;
    if (start.empty()) return std::nullopt;
    if (accepting(start)) return Word{};
    id.emplace(start, 0);
    parent.push_back({-1, -1});
    queue.push_back(std::move(start));

    while (!queue.empty()) {
        std::vector<State> subset = std::move(queue.front());
        queue.pop_front();
        const int from = id.at(subset);
        for (std::size_t li = 0; li < letters.size(); ++li) {
            std::vector<char> mark(a.num_states, 0);
            for (State s : subset)
                for (State t : delta[li][s]) mark[t] = 1;
            std::vector<State> next;
            for (State s = 0; s < a.num_states; ++s)
                if (mark[s]) next.push_back(s);
            if (next.empty()) continue;
            auto [it, fresh] = id.try_emplace(next, static_cast<int>(id.size()));
            if (!fresh) continue;
            parent.push_back({from, static_cast<int>(li)});
            if (accepting(next)) {
                Word word;
                for (int at = it->second; at != 0; at = parent[at].first)
                    word.push_back(letters[parent[at].second]);
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

bool is_jump_letter(const Letter& l) { return l.token()[0] == '@'; }

/// Shortest path word from `from` to `to` using only letters of B.
Word path_word_restricted(const Automaton& a, State from, State to,
                          const AlphabetSet& B) {
    std::vector<std::vector<std::pair<Letter, State>>> adj(a.num_states);
    for (const Transition& t : a.transitions)
        if (B.contains(t.letter)) adj[t.from].push_back({t.letter, t.to});
    for (auto& row : adj) std::sort(row.begin(), row.end());

    std::vector<int> prev_state(a.num_states, -1);
    std::vector<std::optional<Letter>> prev_letter(a.num_states);
    std::vector<char> seen(a.num_states, 0);
    seen[from] = 1;
    std::deque<State> queue{from};
    while (!queue.empty() && !seen[to]) {
        const State u = queue.front();
        queue.pop_front();
        for (const auto& [letter, v] : adj[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            prev_state[v] = u;
            prev_letter[v] = letter;
            queue.push_back(v);
        }
    }
    if (!seen[to])
        throw std::logic_error("restricted path expected but not found");
    Word word;
    for (State at = to; at != from; at = prev_state[at])
        word.push_back(*prev_letter[at]);
    std::reverse(word.begin(), word.end());
    return word;
}

/// A closed walk at q inside its B-restricted component that uses every
/// letter of B; exists exactly when the loop alphabet at q is all of B.
Word loop_word_covering(const Automaton& a, State q, const AlphabetSet& B) {
    const Automaton restricted = restrict_alphabet(a, B);
    const auto scc = tarjan_scc(restricted);
    const int comp = scc.component_of[q];

    std::vector<Transition> inner;
    for (const Transition& t : restricted.transitions)
        if (scc.component_of[t.from] == comp && scc.component_of[t.to] == comp)
            inner.push_back(t);
    Automaton walkable;  // only used for restricted path searches
    walkable.num_states = a.num_states;
    walkable.alphabet = a.alphabet;
    walkable.transitions = inner;

    Word word;
    State cur = q;
    for (const Letter& b : B) {
        auto edge = std::find_if(inner.begin(), inner.end(), [&](const Transition& t) {
            return t.letter == b;
        });
        if (edge == inner.end())
            throw std::logic_error("loop letter missing from component");
        Word hop = path_word_restricted(walkable, cur, edge->from, B);
        word.insert(word.end(), hop.begin(), hop.end());
        word.push_back(b);
        cur = edge->to;
    }
    Word back = path_word_restricted(walkable, cur, q, B);
    word.insert(word.end(), back.begin(), back.end());
    return word;
}

/// Extends one side with a fresh jump letter per tuple; the letters "@i"
/// are shared across both calls because i indexes the common tuple list.
ExtendedAutomaton build_extended_side(const Automaton& a,
                                      const std::vector<PatternTuple>& tuples,
                                      int side) {
    for (const Letter& l : a.alphabet)
        if (is_jump_letter(l))
            throw std::invalid_argument(
                "input alphabet already uses the reserved '@' prefix");

    ExtendedAutomaton ext;
    ext.base = a;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const PatternTuple& t = tuples[i];
        const State from = side == 1 ? t.p1 : t.p2;
        const State to = side == 1 ? t.r1 : t.r2;
        if (from < 0 || from >= a.num_states || to < 0 || to >= a.num_states)
            throw std::invalid_argument("tuple endpoint out of range");
        const Letter fresh("@" + std::to_string(i));
        ext.base.alphabet.insert(fresh);
        ext.base.transitions.push_back({from, fresh, to});
        ext.pattern_letters.emplace(fresh, t);
    }
    std::sort(ext.base.transitions.begin(), ext.base.transitions.end());
    return ext;
}

struct ExtractionParts {
    /// jump-free segments; segments.size() == jumps.size() + 1
    std::vector<Word> segments;
    std::vector<PatternTuple> jumps;
};

std::optional<ExtractionParts> extract_parts(const ExtendedAutomaton& e1,
                                             const ExtendedAutomaton& e2) {
    const auto word = shortest_accepted(product(e1.base, e2.base));
    if (!word) return std::nullopt;

    ExtractionParts parts;
    parts.segments.emplace_back();
    for (const Letter& l : *word) {
        if (is_jump_letter(l)) {
            const auto hit = e1.pattern_letters.find(l);
            if (hit == e1.pattern_letters.end() ||
                !e2.pattern_letters.contains(l))
                throw std::logic_error(
                    "jump letter missing from extension metadata");
            parts.jumps.push_back(hit->second);
            parts.segments.emplace_back();
        } else {
            parts.segments.back().push_back(l);
        }
    }
    return parts;
}

}  // namespace

std::optional<AlphabetSet> max_common_loop_alphabet(const Automaton& a1,
                                                    State q1,
                                                    const Automaton& a2,
                                                    State q2) {
    if (q1 < 0 || q1 >= a1.num_states || q2 < 0 || q2 >= a2.num_states)
        throw std::invalid_argument("loop query state out of range");
    PairContext ctx = make_context(a1, a2);
    auto mask = max_common_loop(ctx, q1, q2, nullptr);
    if (!mask) return std::nullopt;
    return ctx.from_mask(*mask);
}

std::vector<PatternTuple> enumerate_pattern_tuples(const Automaton& a1,
                                                   const Automaton& a2) {
    PairContext ctx = make_context(a1, a2);
    std::vector<PatternTuple> out;
    std::set<std::tuple<State, State, State, State>> seen;
    for (State q1 = 0; q1 < ctx.side[0].n; ++q1) {
        for (State q2 = 0; q2 < ctx.side[1].n; ++q2) {
            auto mask = max_common_loop(ctx, q1, q2, nullptr);
            if (!mask) continue;
            const AlphabetSet B = ctx.from_mask(*mask);
            const auto pre1 = mask_to_states(
                reach_states(ctx.side[0], q1, *mask, false), ctx.side[0].n);
            const auto post1 = mask_to_states(
                reach_states(ctx.side[0], q1, *mask, true), ctx.side[0].n);
            const auto pre2 = mask_to_states(
                reach_states(ctx.side[1], q2, *mask, false), ctx.side[1].n);
            const auto post2 = mask_to_states(
                reach_states(ctx.side[1], q2, *mask, true), ctx.side[1].n);
            for (State p1 : pre1)
                for (State r1 : post1)
                    for (State p2 : pre2)
                        for (State r2 : post2)
                            if (seen.insert({p1, r1, p2, r2}).second)
                                out.push_back({p1, r1, p2, r2, q1, q2, B});
        }
    }
    return out;
}

std::pair<ExtendedAutomaton, ExtendedAutomaton> build_extended(
    const Automaton& a1, const Automaton& a2) {
    const auto tuples = enumerate_pattern_tuples(a1, a2);
    return {build_extended_side(a1, tuples, 1),
            build_extended_side(a2, tuples, 2)};
}

bool pt_separable(const Automaton& a1_in, const Automaton& a2_in,
                  SeparationStats* stats) {
    const Automaton a1 = trim(a1_in);
    const Automaton a2 = trim(a2_in);
    PairContext ctx = make_context(a1, a2);
    SeparationStats local;

    std::vector<JumpGroup> groups;
    std::vector<std::vector<int>> groups_by_pre1(ctx.side[0].n);
    std::set<std::tuple<Mask, int, int>> group_keys;
    for (State q1 = 0; q1 < ctx.side[0].n; ++q1) {
        for (State q2 = 0; q2 < ctx.side[1].n; ++q2) {
            ++local.fixpoint_runs;
            auto mask =
                max_common_loop(ctx, q1, q2, &local.max_fixpoint_refinements);
            if (!mask) continue;
            const int c1 = ctx.restricted(0, *mask).comp[q1];
            const int c2 = ctx.restricted(1, *mask).comp[q2];
            if (!group_keys.insert({*mask, c1, c2}).second) continue;

            const Mask pre1 = reach_states(ctx.side[0], q1, *mask, false);
            const Mask post1 = reach_states(ctx.side[0], q1, *mask, true);
            const Mask pre2 = reach_states(ctx.side[1], q2, *mask, false);
            const Mask post2 = reach_states(ctx.side[1], q2, *mask, true);
            JumpGroup group;
            group.pre2 = pre2;
            group.post1 = mask_to_states(post1, ctx.side[0].n);
            group.post2 = mask_to_states(post2, ctx.side[1].n);
            group.edge_count = mask_count(pre1) * mask_count(pre2) *
                               mask_count(post1) * mask_count(post2);
            const int gi = static_cast<int>(groups.size());
            for (State s : mask_to_states(pre1, ctx.side[0].n))
                groups_by_pre1[s].push_back(gi);
            groups.push_back(std::move(group));
            local.tuple_count += groups.back().edge_count;
        }
    }

    const int n2 = ctx.side[1].n;
    std::vector<char> visited(
        static_cast<std::size_t>(ctx.side[0].n) * std::max(n2, 1), 0);
    std::deque<std::pair<State, State>> queue;
    auto visit = [&](State s1, State s2) {
        const std::size_t key = static_cast<std::size_t>(s1) * n2 + s2;
        if (visited[key]) return;
        visited[key] = 1;
        queue.push_back({s1, s2});
    };
    for (State i1 : ctx.side[0].initial)
        for (State i2 : ctx.side[1].initial) visit(i1, i2);

    std::vector<char> fired(groups.size(), 0);
    bool separable = true;
    while (!queue.empty() && separable) {
        auto [s1, s2] = queue.front();
        queue.pop_front();
        ++local.explored_pairs;
        if (ctx.side[0].final_flag[s1] && ctx.side[1].final_flag[s2]) {
            separable = false;
            break;
        }

        const auto& e1 = ctx.side[0].adj[s1];
        const auto& e2 = ctx.side[1].adj[s2];
        std::size_t i = 0, j = 0;
        while (i < e1.size() && j < e2.size()) {
            if (e1[i].first < e2[j].first) {
                ++i;
            } else if (e2[j].first < e1[i].first) {
                ++j;
            } else {
                const int letter = e1[i].first;
                std::size_t i_end = i, j_end = j;
                while (i_end < e1.size() && e1[i_end].first == letter) ++i_end;
                while (j_end < e2.size() && e2[j_end].first == letter) ++j_end;
                for (std::size_t ii = i; ii < i_end; ++ii)
                    for (std::size_t jj = j; jj < j_end; ++jj)
                        visit(e1[ii].second, e2[jj].second);
                i = i_end;
                j = j_end;
            }
        }

        for (int gi : groups_by_pre1[s1]) {
            if (fired[gi] || !test_bit(groups[gi].pre2, s2)) continue;
            fired[gi] = 1;
            for (State t1 : groups[gi].post1)
                for (State t2 : groups[gi].post2) visit(t1, t2);
        }
    }

    if (stats) *stats = local;
    return separable;
}

std::optional<FactorizationPattern> extract_pattern(
    const ExtendedAutomaton& e1, const ExtendedAutomaton& e2) {
    auto parts = extract_parts(e1, e2);
    if (!parts) return std::nullopt;
    std::vector<AlphabetSet> blocks;
    for (const PatternTuple& t : parts->jumps) blocks.push_back(t.witness_B);
    return make_pattern(std::move(parts->segments), std::move(blocks));
}

std::optional<WitnessPair> separation_witnesses(const Automaton& a1,
                                                const Automaton& a2, int n) {
    if (n < 1) throw std::invalid_argument("witness level must be positive");
    const auto [e1, e2] = build_extended(a1, a2);
    const auto parts = extract_parts(e1, e2);
    if (!parts) return std::nullopt;

    std::vector<AlphabetSet> blocks;
    for (const PatternTuple& t : parts->jumps) blocks.push_back(t.witness_B);
    WitnessPair out;
    out.pattern = make_pattern(parts->segments, std::move(blocks));
    out.canonical = pattern_witness(out.pattern, n);

    auto instantiate = [&](const Automaton& a, int side) {
        Word word = parts->segments[0];
        for (std::size_t i = 0; i < parts->jumps.size(); ++i) {
            const PatternTuple& t = parts->jumps[i];
            const State p = side == 1 ? t.p1 : t.p2;
            const State q = side == 1 ? t.witness_q1 : t.witness_q2;
            const State r = side == 1 ? t.r1 : t.r2;
            const Word entry = path_word_restricted(a, p, q, t.witness_B);
            const Word loop = loop_word_covering(a, q, t.witness_B);
            const Word exit = path_word_restricted(a, q, r, t.witness_B);
            word.insert(word.end(), entry.begin(), entry.end());
            for (int k = 0; k < n; ++k)
                word.insert(word.end(), loop.begin(), loop.end());
            word.insert(word.end(), exit.begin(), exit.end());
            word.insert(word.end(), parts->segments[i + 1].begin(),
                        parts->segments[i + 1].end());
        }
        return word;
    };
    out.in_first = instantiate(a1, 1);
    out.in_second = instantiate(a2, 2);
    return out;
}

bool is_piecewise_testable(const Automaton& a) {
    if (!is_deterministic(a))
        throw std::invalid_argument(
            "is_piecewise_testable requires a deterministic automaton");
    return pt_separable(a, complement(a));
}

}  // namespace pt
}  // namespace ptsep
