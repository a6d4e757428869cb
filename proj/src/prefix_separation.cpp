#include "ptsep/prefix_separation.hpp"

#include <stdexcept>

namespace ptsep {
namespace prefix {

BuchiAutomaton closure_buchi(const Automaton& a) {
    Automaton closed = trim(a);
    closed.final.clear();
    for (State s = 0; s < closed.num_states; ++s) closed.final.push_back(s);
    return BuchiAutomaton{std::move(closed)};
}

bool buchi_product_nonempty(const BuchiAutomaton& b1,
                            const BuchiAutomaton& b2) {
    auto all_accepting = [](const Automaton& a) {
        return static_cast<int>(a.final.size()) == a.num_states;
    };
    if (!all_accepting(b1.a) || !all_accepting(b2.a))
        throw std::invalid_argument(
            "emptiness test is only valid for all-accepting automata");

    // Every product state is reachable, so any cycle yields an accepted
    // infinite run.
    const Automaton p = product(b1.a, b2.a);
    for (const Transition& t : p.transitions)
        if (t.from == t.to) return true;
    const auto scc = tarjan_scc(p);
    for (const auto& component : scc.components)
        if (component.size() >= 2) return true;
    return false;
}

bool prefix_separable(const Automaton& a1, const Automaton& a2) {
    if (!is_empty(product(a1, a2))) return false;
    return !buchi_product_nonempty(closure_buchi(a1), closure_buchi(a2));
}

}  // namespace prefix
}  // namespace ptsep
