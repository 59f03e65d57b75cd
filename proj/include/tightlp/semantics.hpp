#pragma once

// Satisfaction, reduct and answer sets for programs with nested expressions.
// All functions taking a LiteralSet expect it to be consistent; behaviour on an
// inconsistent set is unspecified.

#include "tightlp/literal_set.hpp"
#include "tightlp/syntax.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tightlp {

bool satisfies(const LiteralSet& x, const Formula& f);

// Head in x whenever x satisfies the body; a satisfied constraint body fails.
bool is_closed(const LiteralSet& x, const Program& p);

// Every maximal `not F` becomes false if x |= F and true otherwise.
Formula reduct(const Formula& f, const LiteralSet& x);
Program reduct(const Program& p, const LiteralSet& x);

// Least fixpoint of the one-step consequence operator of a program without
// negation as failure. nullopt when the fixpoint is inconsistent or fires a
// constraint, i.e. when no consistent closed set exists.
// Throws PreconditionError if `p` contains `not`.
std::optional<LiteralSet> minimal_closed_set(const Program& p);

bool is_answer_set(const LiteralSet& x, const Program& p);

struct BruteForceOptions {
    std::size_t max_universe = 24;
};

// All answer sets among the consistent subsets of the universe, in canonical
// order. Throws LimitExceeded if the universe is larger than the bound.
std::vector<LiteralSet> enumerate_answer_sets_bruteforce(const Program& p, const BruteForceOptions& options = {});

// Exhaustive backtracking over the universe with three-valued pruning (a
// rule whose body is already true forces its head; a literal whose every
// defining body is already false is excluded). Each leaf is confirmed with
// is_answer_set. Intended for instances too large for plain subset
// enumeration.
std::vector<LiteralSet> enumerate_answer_sets_search(const Program& p);

} // namespace tightlp
