#pragma once

#include "tightlp/literal_set.hpp"
#include "tightlp/syntax.hpp"

#include <map>

namespace tightlp {

// A normal program obtained by renaming every negative literal -a(..) to a
// fresh atom a_neg(..) and adding the constraint  :- a(..), a_neg(..).
struct NegationElimination {
    Program program;
    std::map<Atom, Literal> mapping; // fresh atom -> the literal it replaces

    // Maps a set of atoms of `program` back to literals of the source program.
    LiteralSet restore(const LiteralSet& x) const;
    // Inverse direction: replaces negative literals by their fresh atoms.
    LiteralSet translate(const LiteralSet& x) const;
};

inline constexpr std::string_view kNegationSuffix = "_neg";

// Throws Error if a fresh predicate name already occurs in `p`.
NegationElimination eliminate_classical_negation(const Program& p);

} // namespace tightlp
