#include "tightlp/tightlp.h"

#include "tightlp/classical_negation.hpp"
#include "tightlp/completion.hpp"
#include "tightlp/error.hpp"
#include "tightlp/generators.hpp"
#include "tightlp/sat.hpp"
#include "tightlp/semantics.hpp"
#include "tightlp/solve.hpp"
#include "tightlp/tightness.hpp"
#include "tightlp/transitive_closure.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

struct tlp_program {
    tightlp::Program program;
    std::vector<std::string> warnings;
};

struct tlp_answer_sets {
    std::vector<std::string> sets;
    std::vector<std::string> methods;
    std::string trace;
    tlp_solve_stats stats{};
};

namespace {
thread_local std::string g_last_error;

tlp_status fail(tlp_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `body`, translating library exceptions into status codes.
template <class F>
tlp_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return TLP_OK;
    } catch (const tightlp::ParseError& e) {
        return fail(TLP_ERR_PARSE, e.what());
    } catch (const tightlp::LimitExceeded& e) {
        return fail(TLP_ERR_LIMIT, e.what());
    } catch (const tightlp::PreconditionError& e) {
        return fail(TLP_ERR_PRECONDITION, e.what());
    } catch (const tightlp::Error& e) {
        return fail(TLP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TLP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TLP_ERR_INTERNAL, e.what());
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tlp_solve_options resolve(const tlp_solve_options* options) {
    tlp_solve_options o;
    tlp_solve_options_init(&o);
    return options ? *options : o;
}

tightlp::LiteralSet parse_set(const char* on) {
    tightlp::LiteralSet x(tightlp::parse_literal_list(on));
    if (!x.is_consistent()) {
        throw tightlp::Error("literal set " + x.to_string() + " is inconsistent");
    }
    return x;
}

std::string render_witness(const tightlp::LambdaWitness& lambda) {
    std::string out = "lambda: {";
    bool first = true;
    for (const auto& [l, level] : lambda) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += l.to_string() + "=" + std::to_string(level);
    }
    return out + "}";
}

std::string render_cycle(const std::vector<tightlp::Literal>& cycle) {
    std::string out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) {
            out += " -> ";
        }
        out += cycle[i].to_string();
    }
    return out;
}

std::string mapping_comments(const tightlp::NegationElimination& e) {
    std::string out;
    for (const auto& [fresh, original] : e.mapping) {
        out += "% " + fresh.to_string() + " stands for " + original.to_string() + "\n";
    }
    return out;
}

tlp_status wrap_program(tightlp::Program p, tlp_program** out) {
    *out = new tlp_program{std::move(p), {}};
    return TLP_OK;
}
} // namespace

extern "C" {

const char* tlp_version(void) { return "1.0.0"; }

const char* tlp_last_error(void) { return g_last_error.c_str(); }

const char* tlp_status_name(tlp_status status) {
    switch (status) {
        case TLP_OK: return "ok";
        case TLP_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TLP_ERR_PARSE: return "parse error";
        case TLP_ERR_LIMIT: return "limit exceeded";
        case TLP_ERR_PRECONDITION: return "precondition violated";
        case TLP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void tlp_string_free(char* s) { std::free(s); }

tlp_status tlp_program_parse(const char* text, tlp_program** out) {
    if (!text || !out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    return guarded([&] {
        tightlp::ParseOutput parsed = tightlp::parse_program_with_warnings(text);
        *out = new tlp_program{std::move(parsed.program), std::move(parsed.warnings)};
    });
}

tlp_status tlp_gen_queens(int n, tlp_program** out) {
    if (!out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    return guarded([&] { wrap_program(tightlp::queens_program({n}), out); });
}

tlp_status tlp_gen_blocks(int blocks, int horizon, tlp_program** out) {
    if (!out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    return guarded([&] { wrap_program(tightlp::blocksworld_program(tightlp::BlocksSpec::numbered(blocks, horizon)), out); });
}

tlp_status tlp_gen_tc(int constants, const char* p_name, const char* tc_name, tlp_program** out) {
    if (!out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    return guarded([&] {
        wrap_program(tightlp::def_rules(tightlp::make_def_spec(constants, p_name ? p_name : "p", tc_name ? tc_name : "tc")),
                     out);
    });
}

void tlp_program_free(tlp_program* program) { delete program; }

size_t tlp_program_rule_count(const tlp_program* program) { return program ? program->program.rules().size() : 0; }

int tlp_program_is_normal(const tlp_program* program) { return program && tightlp::is_normal(program->program) ? 1 : 0; }

tlp_status tlp_program_warnings(const tlp_program* program, char** out) {
    if (!program || !out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::string text;
        for (const std::string& w : program->warnings) {
            text += w + "\n";
        }
        *out = duplicate(text);
    });
}

tlp_status tlp_program_render(const tlp_program* program, char** out) {
    if (!program || !out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::string text = tightlp::render(program->program);
        if (!text.empty()) {
            text += '\n';
        }
        *out = duplicate(text);
    });
}

tlp_status tlp_completion_render(const tlp_program* program, char** out) {
    if (!program || !out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        const tightlp::NegationElimination normal = tightlp::eliminate_classical_negation(program->program);
        *out = duplicate(mapping_comments(normal) + tightlp::render_completion(tightlp::completion(normal.program)));
    });
}

tlp_status tlp_dimacs(const tlp_program* program, char** out) {
    if (!program || !out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::ostringstream os;
        tightlp::write_dimacs(os, tightlp::program_cnf(program->program));
        *out = duplicate(os.str());
    });
}

tlp_status tlp_tightness(const tlp_program* program, const char* on, int* tight, char** report) {
    if (!program || !tight || !report) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        const tightlp::Program& p = program->program;
        std::string text;
        if (!on) {
            auto lambda = tightlp::absolute_lambda_witness(p);
            *tight = lambda ? 1 : 0;
            if (lambda) {
                text = "absolutely tight\n" + render_witness(*lambda) + "\n";
            } else {
                text = "not absolutely tight; cycle: " + render_cycle(*tightlp::positive_dependency_graph(p).find_cycle()) +
                       "\n";
            }
        } else {
            const tightlp::LiteralSet x = parse_set(on);
            auto lambda = tightlp::lambda_witness(p, x);
            *tight = lambda ? 1 : 0;
            if (lambda) {
                text = "tight on " + x.to_string() + "\n" + render_witness(*lambda) + "\n";
            } else {
                text = "not tight on " + x.to_string() +
                       "; cycle: " + render_cycle(*tightlp::parent_graph(p, x).find_cycle()) + "\n";
            }
        }
        *report = duplicate(text);
    });
}

tlp_status tlp_graph_dot(const tlp_program* program, const char* on, char** out) {
    if (!program || !out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        if (!on) {
            *out = duplicate(tightlp::positive_dependency_graph(program->program).to_dot("positive_dependency"));
        } else {
            *out = duplicate(tightlp::parent_graph(program->program, parse_set(on)).to_dot("parents"));
        }
    });
}

void tlp_solve_options_init(tlp_solve_options* options) {
    if (!options) {
        return;
    }
    options->max_models = tightlp::SolveOptions{}.max_models;
    options->brute_bound = tightlp::BruteForceOptions{}.max_universe;
    options->trace = 0;
    options->search = 0;
}

tlp_status tlp_solve(const tlp_program* program, const tlp_solve_options* options, tlp_answer_sets** out) {
    if (!program || !out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    const tlp_solve_options o = resolve(options);
    return guarded([&] {
        tightlp::PipelineOptions po;
        po.sat.max_models = o.max_models;
        po.trace = o.trace != 0;
        tightlp::PipelineResult r = tightlp::answer_sets_via_completion(program->program, po);
        auto sets = std::make_unique<tlp_answer_sets>();
        for (const tightlp::AnswerSet& a : r.answer_sets) {
            sets->sets.push_back(a.literals.to_string());
            sets->methods.emplace_back(tightlp::method_tag(a.method));
        }
        for (const std::string& line : r.trace) {
            sets->trace += line + "\n";
        }
        sets->stats = {r.stats.decisions, r.stats.propagations, r.stats.conflicts, r.completion_models.size()};
        *out = sets.release();
    });
}

tlp_status tlp_enumerate(const tlp_program* program, const tlp_solve_options* options, tlp_answer_sets** out) {
    if (!program || !out) {
        return fail(TLP_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    const tlp_solve_options o = resolve(options);
    return guarded([&] {
        std::vector<tightlp::LiteralSet> found =
            o.search ? tightlp::enumerate_answer_sets_search(program->program)
                     : tightlp::enumerate_answer_sets_bruteforce(program->program, {o.brute_bound});
        if (found.size() > o.max_models) {
            throw tightlp::LimitExceeded("model limit of " + std::to_string(o.max_models) + " exceeded");
        }
        auto sets = std::make_unique<tlp_answer_sets>();
        for (const tightlp::LiteralSet& x : found) {
            sets->sets.push_back(x.to_string());
            sets->methods.emplace_back(o.search ? "search" : "brute");
        }
        *out = sets.release();
    });
}

size_t tlp_answer_sets_count(const tlp_answer_sets* sets) { return sets ? sets->sets.size() : 0; }

const char* tlp_answer_sets_get(const tlp_answer_sets* sets, size_t index) {
    return sets && index < sets->sets.size() ? sets->sets[index].c_str() : nullptr;
}

const char* tlp_answer_sets_method(const tlp_answer_sets* sets, size_t index) {
    return sets && index < sets->methods.size() ? sets->methods[index].c_str() : nullptr;
}

const char* tlp_answer_sets_trace(const tlp_answer_sets* sets) { return sets ? sets->trace.c_str() : ""; }

void tlp_answer_sets_stats(const tlp_answer_sets* sets, tlp_solve_stats* stats) {
    if (sets && stats) {
        *stats = sets->stats;
    }
}

void tlp_answer_sets_free(tlp_answer_sets* sets) { delete sets; }

} // extern "C"
