// tightlp command line tool. Talks to the library only through the C API.

#include "tightlp/tightlp.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitLimit = 2;

int exit_code(tlp_status status) {
    return status == TLP_ERR_LIMIT ? kExitLimit : kExitUsage;
}

int report_failure(tlp_status status) {
    std::cerr << "tightlp: " << tlp_status_name(status) << ": " << tlp_last_error() << '\n';
    return exit_code(status);
}

// Owns a string returned by the C API.
struct CString {
    char* ptr = nullptr;
    ~CString() { tlp_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct ProgramHandle {
    tlp_program* ptr = nullptr;
    ~ProgramHandle() { tlp_program_free(ptr); }
};

struct AnswerSetsHandle {
    tlp_answer_sets* ptr = nullptr;
    ~AnswerSetsHandle() { tlp_answer_sets_free(ptr); }
};

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Settings {
    std::string input = "-";
    std::optional<std::string> on;
    std::size_t max_models = 0;
    std::size_t brute_bound = 0;
    bool trace = false;
    bool search = false;
    bool dot = false;
    int n = 0;
    int horizon = 0;
    std::string p_name = "p";
    std::string tc_name = "tc";
};

int load(const Settings& s, ProgramHandle& program) {
    auto text = read_input(s.input);
    if (!text) {
        std::cerr << "tightlp: cannot read '" << s.input << "'\n";
        return kExitUsage;
    }
    tlp_status st = tlp_program_parse(text->c_str(), &program.ptr);
    if (st != TLP_OK) {
        return report_failure(st);
    }
    CString warnings;
    if (tlp_program_warnings(program.ptr, &warnings.ptr) == TLP_OK && !warnings.str().empty()) {
        std::cerr << "tightlp: warning: " << warnings.str();
    }
    return kExitOk;
}

int print_program(tlp_status st, tlp_program* program) {
    ProgramHandle owner{program};
    if (st != TLP_OK) {
        return report_failure(st);
    }
    CString text;
    if ((st = tlp_program_render(program, &text.ptr)) != TLP_OK) {
        return report_failure(st);
    }
    std::cout << text.str();
    return kExitOk;
}

tlp_solve_options solve_options(const Settings& s) {
    tlp_solve_options o;
    tlp_solve_options_init(&o);
    if (s.max_models) {
        o.max_models = s.max_models;
    }
    if (s.brute_bound) {
        o.brute_bound = s.brute_bound;
    }
    o.trace = s.trace ? 1 : 0;
    o.search = s.search ? 1 : 0;
    return o;
}

int run(const std::string& command, const Settings& s) {
    if (command == "gen-queens") {
        tlp_program* p = nullptr;
        const tlp_status st = tlp_gen_queens(s.n, &p);
        return print_program(st, p);
    }
    if (command == "gen-blocks") {
        tlp_program* p = nullptr;
        const tlp_status st = tlp_gen_blocks(s.n, s.horizon, &p);
        return print_program(st, p);
    }
    if (command == "gen-tc") {
        tlp_program* p = nullptr;
        const tlp_status st = tlp_gen_tc(s.n, s.p_name.c_str(), s.tc_name.c_str(), &p);
        return print_program(st, p);
    }

    ProgramHandle program;
    if (int rc = load(s, program); rc != kExitOk) {
        return rc;
    }
    tlp_status st = TLP_OK;
    if (command == "parse") {
        CString text;
        if ((st = tlp_program_render(program.ptr, &text.ptr)) != TLP_OK) {
            return report_failure(st);
        }
        std::cout << text.str();
    } else if (command == "complete") {
        CString text;
        if ((st = tlp_completion_render(program.ptr, &text.ptr)) != TLP_OK) {
            return report_failure(st);
        }
        std::cout << text.str();
    } else if (command == "dimacs") {
        CString text;
        if ((st = tlp_dimacs(program.ptr, &text.ptr)) != TLP_OK) {
            return report_failure(st);
        }
        std::cout << text.str();
    } else if (command == "tight") {
        const char* on = s.on ? s.on->c_str() : nullptr;
        CString text;
        if (s.dot) {
            st = tlp_graph_dot(program.ptr, on, &text.ptr);
        } else {
            int tight = 0;
            st = tlp_tightness(program.ptr, on, &tight, &text.ptr);
        }
        if (st != TLP_OK) {
            return report_failure(st);
        }
        std::cout << text.str();
    } else if (command == "solve" || command == "enumerate") {
        const tlp_solve_options o = solve_options(s);
        AnswerSetsHandle sets;
        st = command == "solve" ? tlp_solve(program.ptr, &o, &sets.ptr) : tlp_enumerate(program.ptr, &o, &sets.ptr);
        if (st != TLP_OK) {
            return report_failure(st);
        }
        std::cerr << tlp_answer_sets_trace(sets.ptr);
        for (std::size_t i = 0; i < tlp_answer_sets_count(sets.ptr); ++i) {
            std::cout << tlp_answer_sets_get(sets.ptr, i);
            if (command == "solve") {
                std::cout << " % " << tlp_answer_sets_method(sets.ptr, i);
            }
            std::cout << '\n';
        }
        if (s.trace && command == "solve") {
            tlp_solve_stats stats{};
            tlp_answer_sets_stats(sets.ptr, &stats);
            std::cerr << "stats: completion models " << stats.completion_models << ", decisions " << stats.decisions
                      << ", propagations " << stats.propagations << ", conflicts " << stats.conflicts << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tightness checks, completion and answer sets for logic programs with nested expressions"};
    app.require_subcommand(1);
    Settings s;

    auto add_input = [&](CLI::App* sub) { sub->add_option("input", s.input, "program file, '-' for stdin")->capture_default_str(); };

    add_input(app.add_subcommand("parse", "print the program in canonical form"));
    add_input(app.add_subcommand("complete", "print the completion"));
    add_input(app.add_subcommand("dimacs", "print the clausified completion in DIMACS format"));

    auto* tight = app.add_subcommand("tight", "absolute tightness, or tightness on a set of literals");
    add_input(tight);
    tight->add_option("--on", s.on, "comma separated literal list, e.g. \"p, -q\"");
    tight->add_flag("--dot", s.dot, "print the dependency or parent graph in DOT format");

    for (const char* name : {"solve", "enumerate"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "solve"
                                                 ? "answer sets from models of the completion"
                                                 : "answer sets by exhaustive enumeration");
        add_input(sub);
        sub->add_option("--max-models", s.max_models, "model cap (exit 2 when exceeded)");
        sub->add_option("--brute-bound", s.brute_bound, "largest universe accepted by brute force");
        sub->add_flag("--trace", s.trace, "log per-model decisions and reducts to stderr");
        if (std::string(name) == "enumerate") {
            sub->add_flag("--search", s.search, "pruned backtracking search instead of subset enumeration");
        }
    }

    app.add_subcommand("gen-queens", "n-queens program")->add_option("n", s.n, "board size")->required();
    auto* blocks = app.add_subcommand("gen-blocks", "blocks-world history program");
    blocks->add_option("blocks", s.n, "number of blocks")->required();
    blocks->add_option("horizon", s.horizon, "last time step T")->required();
    auto* tc = app.add_subcommand("gen-tc", "ground transitive closure definition over constants 1..n");
    tc->add_option("n", s.n, "number of constants")->required();
    tc->add_option("--p", s.p_name, "base predicate")->capture_default_str();
    tc->add_option("--tc", s.tc_name, "closure predicate")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    return run(app.get_subcommands().front()->get_name(), s);
}
