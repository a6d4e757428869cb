#include "ptsep/aut_format.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace ptsep {

namespace {

std::vector<std::string> split_fields(const std::string& text) {
    std::vector<std::string> fields;
    std::istringstream in(text);
    std::string field;
    while (in >> field) fields.push_back(std::move(field));
    return fields;
}

std::optional<int> parse_number(const std::string& token) {
    if (token.empty() || token.size() > 9) return std::nullopt;
    int value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return value;
}

Letter parse_letter(int line, const std::string& token) {
    if (token[0] == '@')
        throw ParseError(line, "token '" + token +
                                   "' uses the reserved '@' prefix");
    try {
        return Letter(token);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

int parse_state(int line, const std::string& token) {
    auto value = parse_number(token);
    if (!value) throw ParseError(line, "malformed state number '" + token + "'");
    return *value;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

Automaton parse_automaton(std::istream& in) {
    std::optional<int> num_states;
    std::optional<std::vector<Letter>> alphabet_tokens;
    std::optional<std::pair<int, std::vector<std::string>>> initial_section;
    std::optional<std::pair<int, std::vector<std::string>>> final_section;
    struct RawTransition {
        int line;
        std::string from, letter, to;
    };
    std::vector<RawTransition> raw_transitions;

    std::string line_text;
    int line = 0;
    while (std::getline(in, line_text)) {
        ++line;
        if (auto hash = line_text.find('#'); hash != std::string::npos)
            line_text.erase(hash);
        auto fields = split_fields(line_text);
        if (fields.empty()) continue;

        const std::string& head = fields.front();
        if (head.back() != ':')
            throw ParseError(line, "expected a 'section:' keyword, got '" +
                                       head + "'");
        const std::string section = head.substr(0, head.size() - 1);
        const std::vector<std::string> rest(fields.begin() + 1, fields.end());

        if (section == "alphabet") {
            if (alphabet_tokens)
                throw ParseError(line, "duplicate alphabet section");
            std::vector<Letter> letters;
            for (const std::string& token : rest)
                letters.push_back(parse_letter(line, token));
            alphabet_tokens = std::move(letters);
        } else if (section == "states") {
            if (num_states) throw ParseError(line, "duplicate states section");
            if (rest.size() != 1)
                throw ParseError(line, "states section takes one count");
            num_states = parse_state(line, rest[0]);
        } else if (section == "initial") {
            if (initial_section)
                throw ParseError(line, "duplicate initial section");
            initial_section = {line, rest};
        } else if (section == "final") {
            if (final_section) throw ParseError(line, "duplicate final section");
            final_section = {line, rest};
        } else if (section == "trans") {
            if (rest.size() != 3)
                throw ParseError(line,
                                 "trans section takes '<from> <letter> <to>'");
            raw_transitions.push_back({line, rest[0], rest[1], rest[2]});
        } else {
            throw ParseError(line, "unknown section '" + section + "'");
        }
    }

    if (!alphabet_tokens) throw ParseError(0, "missing alphabet section");
    if (!num_states) throw ParseError(0, "missing states section");

    AlphabetSet alphabet(std::move(*alphabet_tokens));
    auto check_range = [&](int line_no, int state) {
        if (state >= *num_states)
            throw ParseError(line_no, "state " + std::to_string(state) +
                                          " out of range (states: " +
                                          std::to_string(*num_states) + ")");
        return state;
    };
    auto parse_states = [&](const std::pair<int, std::vector<std::string>>& s) {
        std::vector<State> states;
        for (const std::string& token : s.second)
            states.push_back(check_range(s.first, parse_state(s.first, token)));
        return states;
    };

    std::vector<State> initial, final;
    if (initial_section) initial = parse_states(*initial_section);
    if (final_section) final = parse_states(*final_section);

    std::vector<Transition> transitions;
    for (const RawTransition& raw : raw_transitions) {
        Letter letter = parse_letter(raw.line, raw.letter);
        if (!alphabet.contains(letter))
            throw ParseError(raw.line,
                             "undeclared letter '" + raw.letter + "'");
        transitions.push_back({check_range(raw.line, parse_state(raw.line, raw.from)),
                               std::move(letter),
                               check_range(raw.line, parse_state(raw.line, raw.to))});
    }

    return make_automaton(*num_states, std::move(alphabet), std::move(initial),
                          std::move(final), std::move(transitions));
}

Automaton parse_automaton(const std::string& text) {
    std::istringstream in(text);
    return parse_automaton(in);
}

Automaton load_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_automaton(in);
}

std::string serialize_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "alphabet:";
    for (const Letter& l : a.alphabet) out << ' ' << l.token();
    out << '\n';
    out << "states: " << a.num_states << '\n';

    auto sorted_unique = [](std::vector<State> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    if (auto initial = sorted_unique(a.initial); !initial.empty()) {
        out << "initial:";
        for (State s : initial) out << ' ' << s;
        out << '\n';
    }
    if (auto final = sorted_unique(a.final); !final.empty()) {
        out << "final:";
        for (State s : final) out << ' ' << s;
        out << '\n';
    }
    auto transitions = a.transitions;
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()),
                      transitions.end());
    for (const Transition& t : transitions)
        out << "trans: " << t.from << ' ' << t.letter.token() << ' ' << t.to
            << '\n';
    return out.str();
}

void save_automaton(const Automaton& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << serialize_automaton(a);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace ptsep
