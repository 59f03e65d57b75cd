#include "tightlp/completion.hpp"

#include "tightlp/error.hpp"
#include "tightlp/semantics.hpp"

#include <map>
#include <optional>

namespace tightlp {

struct PropFormula::Node {
    Kind kind;
    std::optional<Atom> atom;
    std::vector<PropFormula> children;
};

PropFormula PropFormula::constant(bool value) {
    static const PropFormula t(std::make_shared<const Node>(Node{Kind::kTrue, {}, {}}));
    static const PropFormula f(std::make_shared<const Node>(Node{Kind::kFalse, {}, {}}));
    return value ? t : f;
}

PropFormula PropFormula::var(Atom a) {
    return PropFormula(std::make_shared<const Node>(Node{Kind::kVar, std::move(a), {}}));
}

PropFormula PropFormula::negation(PropFormula f) {
    return PropFormula(std::make_shared<const Node>(Node{Kind::kNot, {}, {std::move(f)}}));
}

PropFormula PropFormula::conj(std::vector<PropFormula> parts) {
    if (parts.empty()) {
        return constant(true);
    }
    if (parts.size() == 1) {
        return parts.front();
    }
    return PropFormula(std::make_shared<const Node>(Node{Kind::kAnd, {}, std::move(parts)}));
}

PropFormula PropFormula::disj(std::vector<PropFormula> parts) {
    if (parts.empty()) {
        return constant(false);
    }
    if (parts.size() == 1) {
        return parts.front();
    }
    return PropFormula(std::make_shared<const Node>(Node{Kind::kOr, {}, std::move(parts)}));
}

PropFormula PropFormula::equiv(PropFormula lhs, PropFormula rhs) {
    return PropFormula(std::make_shared<const Node>(Node{Kind::kEquiv, {}, {std::move(lhs), std::move(rhs)}}));
}

PropFormula::Kind PropFormula::kind() const noexcept { return node_->kind; }

const Atom& PropFormula::atom() const {
    if (!node_->atom) {
        throw Error("propositional formula is not a variable");
    }
    return *node_->atom;
}

const std::vector<PropFormula>& PropFormula::children() const { return node_->children; }

bool PropFormula::evaluate(const AtomSet& x) const {
    switch (kind()) {
        case Kind::kTrue: return true;
        case Kind::kFalse: return false;
        case Kind::kVar: return x.count(atom()) != 0;
        case Kind::kNot: return !children()[0].evaluate(x);
        case Kind::kAnd:
            for (const PropFormula& c : children()) {
                if (!c.evaluate(x)) {
                    return false;
                }
            }
            return true;
        case Kind::kOr:
            for (const PropFormula& c : children()) {
                if (c.evaluate(x)) {
                    return true;
                }
            }
            return false;
        case Kind::kEquiv: return children()[0].evaluate(x) == children()[1].evaluate(x);
    }
    return false;
}

bool operator==(const PropFormula& a, const PropFormula& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind()) {
        return false;
    }
    if (a.kind() == PropFormula::Kind::kVar) {
        return a.atom() == b.atom();
    }
    return a.children() == b.children();
}

namespace {
bool is_compound(const PropFormula& f) {
    auto k = f.kind();
    return k == PropFormula::Kind::kAnd || k == PropFormula::Kind::kOr || k == PropFormula::Kind::kEquiv;
}

void render_into(const PropFormula& f, std::string& out) {
    using K = PropFormula::Kind;
    switch (f.kind()) {
        case K::kTrue: out += "true"; break;
        case K::kFalse: out += "false"; break;
        case K::kVar: out += f.atom().to_string(); break;
        case K::kNot: {
            const PropFormula& c = f.children()[0];
            out += '-';
            if (c.kind() == K::kVar || c.kind() == K::kTrue || c.kind() == K::kFalse) {
                render_into(c, out);
            } else {
                out += '(';
                render_into(c, out);
                out += ')';
            }
            break;
        }
        case K::kAnd:
        case K::kOr:
        case K::kEquiv: {
            const char* sep = f.kind() == K::kAnd ? " & " : f.kind() == K::kOr ? " | " : " <-> ";
            for (std::size_t i = 0; i < f.children().size(); ++i) {
                if (i) {
                    out += sep;
                }
                const PropFormula& c = f.children()[i];
                // Only the sides of the root equivalence go unparenthesized.
                bool parens = is_compound(c) && f.kind() != K::kEquiv;
                if (parens) {
                    out += '(';
                }
                render_into(c, out);
                if (parens) {
                    out += ')';
                }
            }
            break;
        }
    }
}
} // namespace

std::string PropFormula::to_string() const {
    std::string out;
    render_into(*this, out);
    return out;
}

PropFormula to_prop_formula(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::kTop: return PropFormula::constant(true);
        case Formula::Kind::kBottom: return PropFormula::constant(false);
        case Formula::Kind::kLiteral:
            if (f.lit().negated) {
                throw PreconditionError("formula contains classical negation: " + f.lit().to_string());
            }
            return PropFormula::var(f.lit().atom);
        case Formula::Kind::kNot: return PropFormula::negation(to_prop_formula(f.lhs()));
        case Formula::Kind::kAnd: return PropFormula::conj({to_prop_formula(f.lhs()), to_prop_formula(f.rhs())});
        case Formula::Kind::kOr: return PropFormula::disj({to_prop_formula(f.lhs()), to_prop_formula(f.rhs())});
    }
    return PropFormula::constant(false);
}

bool is_supported(const LiteralSet& x, const Program& p) {
    for (const Literal& l : x) {
        bool supported = false;
        for (const Rule& r : p.rules()) {
            if (r.head && *r.head == l && satisfies(x, r.body)) {
                supported = true;
                break;
            }
        }
        if (!supported) {
            return false;
        }
    }
    return true;
}

PropFormula Completion::constraint_formula() const {
    if (constraint_bodies.empty()) {
        return PropFormula::constant(true);
    }
    return PropFormula::negation(PropFormula::disj(constraint_bodies));
}

std::vector<PropFormula> Completion::formulas() const {
    std::vector<PropFormula> out;
    for (const CompletionEntry& e : entries) {
        out.push_back(PropFormula::equiv(PropFormula::var(e.target), e.definition));
    }
    out.push_back(constraint_formula());
    return out;
}

Completion completion(const Program& p) {
    if (!is_normal(p)) {
        throw PreconditionError("completion requires a normal program; eliminate classical negation first");
    }
    std::map<Atom, std::vector<PropFormula>> bodies;
    for (const Atom& a : p.atoms()) {
        bodies[a];
    }
    Completion c;
    for (const Rule& r : p.rules()) {
        PropFormula body = to_prop_formula(r.body);
        if (r.head) {
            bodies[r.head->atom].push_back(std::move(body));
        } else {
            c.constraint_bodies.push_back(std::move(body));
        }
    }
    for (auto& [atom, defs] : bodies) {
        c.entries.push_back({atom, PropFormula::disj(std::move(defs))});
    }
    return c;
}

bool satisfies_completion(const AtomSet& x, const Completion& c) {
    for (const CompletionEntry& e : c.entries) {
        if ((x.count(e.target) != 0) != e.definition.evaluate(x)) {
            return false;
        }
    }
    for (const PropFormula& b : c.constraint_bodies) {
        if (b.evaluate(x)) {
            return false;
        }
    }
    return true;
}

std::string render_completion(const Completion& c) {
    std::string out;
    for (const CompletionEntry& e : c.entries) {
        out += PropFormula::equiv(PropFormula::var(e.target), e.definition).to_string();
        out += '\n';
    }
    if (!c.constraint_bodies.empty()) {
        out += c.constraint_formula().to_string();
        out += '\n';
    }
    return out;
}

} // namespace tightlp
