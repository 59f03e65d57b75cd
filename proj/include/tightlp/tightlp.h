/*
 * C interface to the tightlp library.
 *
 * Objects are opaque handles created by tlp_*_parse / tlp_gen_* / tlp_solve
 * and released with the matching *_free function. Every fallible call returns
 * a tlp_status; on failure tlp_last_error() describes the problem (the message
 * is thread-local and valid until the next call on the same thread). Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with tlp_string_free.
 */
#ifndef TIGHTLP_TIGHTLP_H
#define TIGHTLP_TIGHTLP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define TLP_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define TLP_API __attribute__((visibility("default")))
#else
#  define TLP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tlp_status {
    TLP_OK = 0,
    TLP_ERR_INVALID_ARGUMENT = 1, /* null handle, bad parameter */
    TLP_ERR_PARSE = 2,            /* syntax error in program or literal text */
    TLP_ERR_LIMIT = 3,            /* model cap or brute-force bound exceeded */
    TLP_ERR_PRECONDITION = 4,     /* operation outside its domain */
    TLP_ERR_INTERNAL = 5
} tlp_status;

typedef struct tlp_program tlp_program;
typedef struct tlp_answer_sets tlp_answer_sets;

typedef struct tlp_solve_options {
    size_t max_models;  /* cap on completion models; default 1000000 */
    size_t brute_bound; /* largest universe for brute-force enumeration; default 24 */
    int trace;          /* nonzero: record per-model decisions */
    int search;         /* tlp_enumerate: nonzero selects the pruned backtracking search */
} tlp_solve_options;

typedef struct tlp_solve_stats {
    uint64_t decisions;
    uint64_t propagations;
    uint64_t conflicts;
    size_t completion_models;
} tlp_solve_stats;

TLP_API const char* tlp_version(void);
TLP_API const char* tlp_last_error(void);
TLP_API const char* tlp_status_name(tlp_status status);
TLP_API void tlp_string_free(char* s);

/* Programs */
TLP_API tlp_status tlp_program_parse(const char* text, tlp_program** out);
TLP_API tlp_status tlp_gen_queens(int n, tlp_program** out);
/* Blocks b1..b<blocks>, times 0..horizon. */
TLP_API tlp_status tlp_gen_blocks(int blocks, int horizon, tlp_program** out);
/* Ground transitive closure definition over constants 1..constants. */
TLP_API tlp_status tlp_gen_tc(int constants, const char* p_name, const char* tc_name, tlp_program** out);
TLP_API void tlp_program_free(tlp_program* program);

TLP_API size_t tlp_program_rule_count(const tlp_program* program);
TLP_API int tlp_program_is_normal(const tlp_program* program);
/* Warnings collected while parsing, one per line (empty string if none). */
TLP_API tlp_status tlp_program_warnings(const tlp_program* program, char** out);
/* Canonical text, one rule per line, newline terminated when nonempty. */
TLP_API tlp_status tlp_program_render(const tlp_program* program, char** out);

/* Completion, one formula per line. Programs with classical negation are
 * translated first; the mapping is listed in leading `%` comment lines. */
TLP_API tlp_status tlp_completion_render(const tlp_program* program, char** out);
/* DIMACS CNF of the clausified completion. */
TLP_API tlp_status tlp_dimacs(const tlp_program* program, char** out);

/* Tightness report. With on == NULL reports absolute tightness, otherwise
 * tightness on the comma-separated literal list `on`. *tight receives the
 * verdict; *report a human-readable verdict plus witness or cycle. */
TLP_API tlp_status tlp_tightness(const tlp_program* program, const char* on, int* tight, char** report);
/* DOT rendering of the positive dependency graph (on == NULL) or parent graph. */
TLP_API tlp_status tlp_graph_dot(const tlp_program* program, const char* on, char** out);

/* Answer sets */
TLP_API void tlp_solve_options_init(tlp_solve_options* options);
/* Completion based pipeline. options may be NULL. */
TLP_API tlp_status tlp_solve(const tlp_program* program, const tlp_solve_options* options, tlp_answer_sets** out);
/* Enumeration without the completion (brute force or pruned search). */
TLP_API tlp_status tlp_enumerate(const tlp_program* program, const tlp_solve_options* options,
                                 tlp_answer_sets** out);
TLP_API size_t tlp_answer_sets_count(const tlp_answer_sets* sets);
/* "{p, -q}"; NULL if index is out of range. Valid while `sets` lives. */
TLP_API const char* tlp_answer_sets_get(const tlp_answer_sets* sets, size_t index);
/* "cor7", "thm1", "verified" for tlp_solve, "brute" or "search" for tlp_enumerate. */
TLP_API const char* tlp_answer_sets_method(const tlp_answer_sets* sets, size_t index);
/* Trace lines joined by '\n' (empty unless options.trace was set). */
TLP_API const char* tlp_answer_sets_trace(const tlp_answer_sets* sets);
TLP_API void tlp_answer_sets_stats(const tlp_answer_sets* sets, tlp_solve_stats* stats);
TLP_API void tlp_answer_sets_free(tlp_answer_sets* sets);

#ifdef __cplusplus
}
#endif

#endif /* TIGHTLP_TIGHTLP_H */
