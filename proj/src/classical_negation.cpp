#include "tightlp/classical_negation.hpp"

#include "tightlp/error.hpp"

namespace tightlp {

namespace {
Atom fresh_atom(const Atom& a) {
    return Atom(a.predicate() + std::string(kNegationSuffix), a.args());
}

class Renamer {
public:
    explicit Renamer(std::map<Atom, Literal>& mapping) : mapping_(mapping) {}

    Literal rename(const Literal& l) {
        if (!l.negated) {
            return l;
        }
        Atom fresh = fresh_atom(l.atom);
        mapping_.emplace(fresh, l);
        return Literal::pos(std::move(fresh));
    }

    Formula rename(const Formula& f) {
        switch (f.kind()) {
            case Formula::Kind::kLiteral: return Formula::literal(rename(f.lit()));
            case Formula::Kind::kNot: return Formula::negation(rename(f.lhs()));
            case Formula::Kind::kAnd: return Formula::conj(rename(f.lhs()), rename(f.rhs()));
            case Formula::Kind::kOr: return Formula::disj(rename(f.lhs()), rename(f.rhs()));
            default: return f;
        }
    }

private:
    std::map<Atom, Literal>& mapping_;
};
} // namespace

NegationElimination eliminate_classical_negation(const Program& p) {
    NegationElimination out;
    if (is_normal(p)) {
        out.program = p;
        return out;
    }
    std::set<std::string> predicates;
    for (const Literal& l : p.universe()) {
        predicates.insert(l.atom.predicate());
    }
    for (const Literal& l : p.universe()) {
        if (l.negated && predicates.count(l.atom.predicate() + std::string(kNegationSuffix))) {
            throw Error("cannot eliminate classical negation: predicate '" + l.atom.predicate() +
                        std::string(kNegationSuffix) + "' already occurs in the program");
        }
    }

    Renamer renamer(out.mapping);
    for (const Rule& r : p.rules()) {
        Rule renamed{std::nullopt, renamer.rename(r.body)};
        if (r.head) {
            renamed.head = renamer.rename(*r.head);
        }
        out.program.add(std::move(renamed));
    }
    for (const Literal& l : p.declared()) {
        out.program.declare(renamer.rename(l));
    }
    for (const auto& [fresh, original] : out.mapping) {
        out.program.add(Rule{std::nullopt, Formula::conj(Formula::literal(Literal::pos(original.atom)),
                                                        Formula::literal(Literal::pos(fresh)))});
    }
    return out;
}

LiteralSet NegationElimination::restore(const LiteralSet& x) const {
    std::vector<Literal> lits;
    lits.reserve(x.size());
    for (const Literal& l : x) {
        auto it = l.negated ? mapping.end() : mapping.find(l.atom);
        lits.push_back(it == mapping.end() ? l : it->second);
    }
    return LiteralSet(std::move(lits));
}

LiteralSet NegationElimination::translate(const LiteralSet& x) const {
    std::vector<Literal> lits;
    lits.reserve(x.size());
    for (const Literal& l : x) {
        lits.push_back(l.negated ? Literal::pos(fresh_atom(l.atom)) : l);
    }
    return LiteralSet(std::move(lits));
}

} // namespace tightlp
