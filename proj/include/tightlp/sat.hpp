#pragma once

// Clausification of completions and an all-models DPLL solver.

#include "tightlp/completion.hpp"
#include "tightlp/literal_set.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace tightlp {

// DIMACS-style literal: +v or -v for variable v >= 1.
using SatLit = std::int32_t;
using Clause = std::vector<SatLit>;

struct Cnf {
    std::uint32_t num_vars = 0;
    std::vector<Clause> clauses;
    // Variable i + 1 stands for atoms[i]; variables above atoms.size() are auxiliary.
    std::vector<Atom> atoms;

    std::uint32_t num_projected() const noexcept { return static_cast<std::uint32_t>(atoms.size()); }
};

struct ClausifyOptions {
    // Fold away negation nodes instead of giving each its own auxiliary variable.
    bool simplify = false;
};

// Structure-preserving (Tseitin) translation. Clauses are never empty and
// never contain complementary literals; duplicate literals and duplicate
// clauses are dropped.
Cnf clausify(const Completion& c, const ClausifyOptions& options = {});

// `c var <i> = <atom>` comment lines, then `p cnf` and zero-terminated clauses.
void write_dimacs(std::ostream& os, const Cnf& cnf);

struct SolverStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
};

struct SolveReport {
    std::vector<AtomSet> models; // projected onto cnf.atoms, canonical order
    SolverStats stats;
};

struct SolveOptions {
    std::size_t max_models = 1'000'000;
};

// Enumerates every projected model: DPLL with unit propagation, branching on
// the lowest unassigned variable (false first), and a blocking clause over the
// projected variables after each model. Throws LimitExceeded when more than
// options.max_models models exist.
SolveReport solve_all(const Cnf& cnf, const SolveOptions& options = {});

} // namespace tightlp
