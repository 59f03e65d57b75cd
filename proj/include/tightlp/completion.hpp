#pragma once

// Supported sets and the completion of finite normal programs.

#include "tightlp/literal_set.hpp"
#include "tightlp/syntax.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tightlp {

// Immutable classical propositional formula over atoms. `and` / `or` are
// n-ary; equivalence only appears at the root of a completion entry.
class PropFormula {
public:
    enum class Kind { kTrue, kFalse, kVar, kNot, kAnd, kOr, kEquiv };

    static PropFormula constant(bool value);
    static PropFormula var(Atom a);
    static PropFormula negation(PropFormula f);
    static PropFormula conj(std::vector<PropFormula> parts);
    static PropFormula disj(std::vector<PropFormula> parts);
    static PropFormula equiv(PropFormula lhs, PropFormula rhs);

    Kind kind() const noexcept;
    const Atom& atom() const;
    const std::vector<PropFormula>& children() const;

    bool evaluate(const AtomSet& x) const;

    // `-`, `&`, `|`, `<->`; e.g. "p <-> -(-p) | (p & q)".
    std::string to_string() const;

    friend bool operator==(const PropFormula& a, const PropFormula& b);

    struct Node;

private:
    explicit PropFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Comma -> and, semicolon -> or, not -> negation. Throws PreconditionError on
// a negative literal.
PropFormula to_prop_formula(const Formula& normal_formula);

bool is_supported(const LiteralSet& x, const Program& p);

struct CompletionEntry {
    Atom target;
    PropFormula definition; // target <-> definition; false when `target` heads no rule
};

struct Completion {
    std::vector<CompletionEntry> entries; // one per atom of the universe, in atom order
    std::vector<PropFormula> constraint_bodies;

    // The entry for the pseudo-target false: -(B1 | ... | Bk), or true without constraints.
    PropFormula constraint_formula() const;
    // All formulas of the completion (entries as equivalences, then the constraint formula).
    std::vector<PropFormula> formulas() const;
};

// Throws PreconditionError if `p` is not normal; eliminate classical negation first.
Completion completion(const Program& p);

bool satisfies_completion(const AtomSet& x, const Completion& c);

// One formula per line; the constraint line is omitted when it is trivial.
std::string render_completion(const Completion& c);

} // namespace tightlp
