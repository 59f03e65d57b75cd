#pragma once

// The two-rule definition of the transitive closure tc of a binary predicate p,
// grounded over a finite set of constants, and the checks that go with it.

#include "tightlp/literal_set.hpp"
#include "tightlp/syntax.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tightlp {

// p(x,y) is p_name(x, y, suffix...) and tc(x,y) is tc_name(x, y, suffix...).
// The suffix lets a ternary predicate be sliced on its trailing arguments.
struct DefSpec {
    std::vector<Term> constants;
    std::string p_name = "p";
    std::string tc_name = "tc";
    std::vector<Term> suffix;

    Atom p(const Term& x, const Term& y) const;
    Atom tc(const Term& x, const Term& y) const;

    bool is_p_atom(const Atom& a) const;
    bool is_tc_atom(const Atom& a) const;

    // Throws Error if constants are empty or duplicated, or p and tc coincide.
    void validate() const;
};

// Constants 1..n.
DefSpec make_def_spec(int n, std::string p_name = "p", std::string tc_name = "tc");

using BinRel = std::set<std::pair<Term, Term>>;

// tc(x,y) :- p(x,y).  and  tc(x,y) :- p(x,v), tc(v,y).  for all constants.
Program def_rules(const DefSpec& spec);

BinRel warshall(const BinRel& r);

// Acyclicity of the digraph of r; a self-loop is a cycle.
bool is_wellfounded(const BinRel& r);

BinRel p_extent(const LiteralSet& x, const DefSpec& spec);
BinRel tc_extent(const LiteralSet& x, const DefSpec& spec);
// {<a,b> : p(b,a) in x}
BinRel reversed_p_extent(const LiteralSet& x, const DefSpec& spec);

// The tc-extent of x equals the transitive closure of its p-extent.
bool check_tc_extent(const LiteralSet& x, const DefSpec& spec);

struct Theorem3Report {
    bool cond_i = false;   // p is tight on x
    bool cond_ii = false;  // reversed p-extent is well-founded
    bool cond_iii = false; // no tc-atom is an ancestor of a p-atom
    bool conclusion_applicable = false;
    bool union_tight = false; // p ∪ Def is tight on x (always computed)
};

// Throws PreconditionError if a tc-atom heads a rule of p, and Error if the
// conclusion is applicable but p ∪ Def is not tight on x.
Theorem3Report check_theorem3(const Program& p, const LiteralSet& x, const DefSpec& spec);

// Requires every constraint :- tc(c,c) in p and x closed under p ∪ Def
// (PreconditionError otherwise). Returns the well-foundedness of the reversed
// p-extent; throws Error if that fails.
bool check_prop5(const Program& p, const DefSpec& spec, const LiteralSet& x);

} // namespace tightlp
