#include "cli.hpp"

#include <exception>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptsep/aut_format.hpp"
#include "ptsep/hardness.hpp"
#include "ptsep/pattern.hpp"
#include "ptsep/prefix_separation.hpp"
#include "ptsep/pt_separation.hpp"
#include "ptsep/subword_oracle.hpp"
#include "ptsep/word.hpp"

namespace ptsep {
namespace cli {

namespace {

std::string letters_to_string(const AlphabetSet& set) {
    std::string out;
    for (const Letter& l : set) {
        if (!out.empty()) out += ' ';
        out += l.token();
    }
    return out;
}

/// Evidence format: one `u:`/`B:` line per pattern component, interleaved.
void print_pattern(std::ostream& out, const FactorizationPattern& pattern) {
    out << "u: " << word_to_string(pattern.u[0]) << "\n";
    for (std::size_t i = 0; i < pattern.B.size(); ++i) {
        out << "B: " << letters_to_string(pattern.B[i]) << "\n";
        out << "u: " << word_to_string(pattern.u[i + 1]) << "\n";
    }
}

int cmd_separate(const std::string& first, const std::string& second,
                 const std::string& method, bool evidence, std::ostream& out) {
    const Automaton a1 = load_automaton(first);
    const Automaton a2 = load_automaton(second);
    bool separable;
    if (method == "pt") {
        separable = pt::pt_separable(a1, a2);
    } else {
        separable = prefix::prefix_separable(a1, a2);
    }
    out << (separable ? "SEPARABLE" : "NOT_SEPARABLE") << "\n";
    if (!separable && evidence && method == "pt") {
        const auto [e1, e2] = pt::build_extended(a1, a2);
        const auto pattern = pt::extract_pattern(e1, e2);
        if (pattern) print_pattern(out, *pattern);
    }
    return separable ? 0 : 1;
}

int cmd_is_pt(const std::string& file, std::ostream& out) {
    Automaton a = load_automaton(file);
    if (!is_deterministic(a)) a = determinize(a);
    const bool testable = pt::is_piecewise_testable(a);
    out << (testable ? "PIECEWISE_TESTABLE" : "NOT_PIECEWISE_TESTABLE")
        << "\n";
    return testable ? 0 : 1;
}

int cmd_oracle(const std::string& first, const std::string& second, int max_n,
               std::ostream& out) {
    const Automaton a1 = load_automaton(first);
    const Automaton a2 = load_automaton(second);
    oracle::OracleLimits limits;
    limits.max_n = max_n;
    const auto verdict = oracle::oracle_pt_separable(a1, a2, limits);
    if (verdict.separable) {
        out << "SEPARABLE_AT n=" << verdict.level << "\n";
        return 0;
    }
    out << "COMMON_CLASS up to n=" << verdict.level << "\n";
    return 1;
}

int cmd_witness(const std::string& first, const std::string& second, int n,
                std::ostream& out) {
    const Automaton a1 = load_automaton(first);
    const Automaton a2 = load_automaton(second);
    const auto witnesses = pt::separation_witnesses(a1, a2, n);
    if (!witnesses) {
        out << "SEPARABLE" << "\n";
        return 1;
    }
    print_pattern(out, witnesses->pattern);
    out << "canonical: " << word_to_string(witnesses->canonical) << "\n";
    out << "in-first: " << word_to_string(witnesses->in_first) << "\n";
    out << "in-second: " << word_to_string(witnesses->in_second) << "\n";
    return 0;
}

int cmd_gen_sat(const std::string& cnf_path, const std::string& prefix,
                std::ostream& out) {
    std::ifstream in(cnf_path);
    if (!in) throw std::runtime_error("cannot open " + cnf_path);
    const hardness::Cnf3 cnf = hardness::parse_dimacs(in);
    const hardness::SatReduction reduction = hardness::sat_reduction(cnf);
    const std::string first = prefix + ".A1.aut";
    const std::string second = prefix + ".A2.aut";
    save_automaton(reduction.valuations, first);
    save_automaton(reduction.clause_chain, second);
    out << "wrote " << first << "\n";
    out << "wrote " << second << "\n";
    return 0;
}

int cmd_forest(const std::vector<std::string>& tokens, std::ostream& out) {
    const Word word = make_word(tokens);
    const auto tree = oracle::ramsey_factorization(word);
    oracle::validate_forest(tree);
    out << "height: " << oracle::tree_height(tree) << "\n";

    struct Printer {
        std::ostream& out;
        void walk(const oracle::FactorizationTree& node, int depth) {
            for (int i = 0; i < depth; ++i) out << "  ";
            out << (node.children.empty() ? "- " : "+ ")
                << word_to_string(node.label) << "\n";
            for (const auto& child : node.children) walk(child, depth + 1);
        }
    } printer{out};
    printer.walk(tree, 0);
    return 0;
}

int cmd_same_content(const std::string& first, const std::string& second,
                     int bound, std::ostream& out, std::ostream& err) {
    const Automaton a1 = load_automaton(first);
    const Automaton a2 = load_automaton(second);
    const auto result = hardness::same_content_witness(a1, a2, bound);
    if (result.found) {
        out << "common-content: {" << letters_to_string(result.content)
            << "}\n";
        out << "in-first: " << word_to_string(result.in_first) << "\n";
        out << "in-second: " << word_to_string(result.in_second) << "\n";
        return 0;
    }
    if (!result.conclusive) {
        err << "length bound exceeded; result is inconclusive\n";
        return 2;
    }
    out << "no-common-content" << "\n";
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"piecewise testable separability of NFA languages"};
    app.require_subcommand(1);

    std::string first, second, method = "pt", cnf_path, prefix;
    bool evidence = false;
    int max_n = 6, level = 2, bound = 64;
    std::vector<std::string> tokens;

    auto* separate = app.add_subcommand(
        "separate", "decide separability of two automaton languages");
    separate->add_option("first", first, "automaton file")->required();
    separate->add_option("second", second, "automaton file")->required();
    separate
        ->add_option("--method", method,
                     "pt (piecewise testable) or prefix (prefix testable)")
        ->check(CLI::IsMember({"pt", "prefix"}));
    separate->add_flag("--evidence", evidence,
                       "print the witness pattern when not separable");

    auto* is_pt = app.add_subcommand(
        "is-pt", "is the language itself piecewise testable");
    is_pt->add_option("automaton", first, "automaton file")->required();

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "brute-force profile comparison up to a level");
    oracle_cmd->add_option("first", first, "automaton file")->required();
    oracle_cmd->add_option("second", second, "automaton file")->required();
    oracle_cmd->add_option("--max-n", max_n, "largest level checked")
        ->check(CLI::NonNegativeNumber);

    auto* witness = app.add_subcommand(
        "witness", "common-profile witness words at one level");
    witness->add_option("first", first, "automaton file")->required();
    witness->add_option("second", second, "automaton file")->required();
    witness->add_option("--n", level, "profile level, at least 1")
        ->check(CLI::PositiveNumber);

    auto* gen_sat = app.add_subcommand(
        "gen-sat", "reduce a DIMACS formula to a same-content instance");
    gen_sat->add_option("cnf", cnf_path, "DIMACS cnf file")->required();
    gen_sat->add_option("prefix", prefix, "output path prefix")->required();

    auto* forest = app.add_subcommand(
        "forest", "factorization tree of a word, one token per letter");
    forest->add_option("letters", tokens, "letters of the word")->required();

    auto* same_content = app.add_subcommand(
        "same-content", "search for accepted words with equal content");
    same_content->add_option("first", first, "automaton file")->required();
    same_content->add_option("second", second, "automaton file")->required();
    same_content
        ->add_option("--bound", bound, "largest word length explored")
        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("ptsep-tool");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (separate->parsed())
            return cmd_separate(first, second, method, evidence, out);
        if (is_pt->parsed()) return cmd_is_pt(first, out);
        if (oracle_cmd->parsed()) return cmd_oracle(first, second, max_n, out);
        if (witness->parsed()) return cmd_witness(first, second, level, out);
        if (gen_sat->parsed()) return cmd_gen_sat(cnf_path, prefix, out);
        if (forest->parsed()) return cmd_forest(tokens, out);
        if (same_content->parsed())
            return cmd_same_content(first, second, bound, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace cli
}  // namespace ptsep
