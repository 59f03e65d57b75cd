#include "tightlp/transitive_closure.hpp"

#include "tightlp/error.hpp"
#include "tightlp/graph.hpp"
#include "tightlp/semantics.hpp"
#include "tightlp/tightness.hpp"

#include <algorithm>
#include <map>

namespace tightlp {

namespace {
std::vector<Term> with_suffix(const Term& x, const Term& y, const std::vector<Term>& suffix) {
    std::vector<Term> args{x, y};
    args.insert(args.end(), suffix.begin(), suffix.end());
    return args;
}

bool matches(const Atom& a, const std::string& name, const DefSpec& spec) {
    if (a.predicate() != name || a.arity() != 2 + spec.suffix.size()) {
        return false;
    }
    if (!std::equal(spec.suffix.begin(), spec.suffix.end(), a.args().begin() + 2)) {
        return false;
    }
    auto known = [&](const Term& t) {
        return std::find(spec.constants.begin(), spec.constants.end(), t) != spec.constants.end();
    };
    return known(a.args()[0]) && known(a.args()[1]);
}

BinRel extent(const LiteralSet& x, const DefSpec& spec, const std::string& name) {
    BinRel out;
    for (const Literal& l : x) {
        if (!l.negated && matches(l.atom, name, spec)) {
            out.emplace(l.atom.args()[0], l.atom.args()[1]);
        }
    }
    return out;
}
} // namespace

Atom DefSpec::p(const Term& x, const Term& y) const { return Atom(p_name, with_suffix(x, y, suffix)); }
Atom DefSpec::tc(const Term& x, const Term& y) const { return Atom(tc_name, with_suffix(x, y, suffix)); }
bool DefSpec::is_p_atom(const Atom& a) const { return matches(a, p_name, *this); }
bool DefSpec::is_tc_atom(const Atom& a) const { return matches(a, tc_name, *this); }

void DefSpec::validate() const {
    if (constants.empty()) {
        throw Error("transitive closure needs a nonempty set of constants");
    }
    std::set<Term> unique(constants.begin(), constants.end());
    if (unique.size() != constants.size()) {
        throw Error("duplicate constants in transitive closure specification");
    }
    if (p_name == tc_name) {
        throw Error("p and tc must be different predicates");
    }
}

DefSpec make_def_spec(int n, std::string p_name, std::string tc_name) {
    DefSpec spec;
    for (int i = 1; i <= n; ++i) {
        spec.constants.emplace_back(static_cast<std::int64_t>(i));
    }
    spec.p_name = std::move(p_name);
    spec.tc_name = std::move(tc_name);
    spec.validate();
    return spec;
}

Program def_rules(const DefSpec& spec) {
    spec.validate();
    Program out;
    for (const Term& x : spec.constants) {
        for (const Term& y : spec.constants) {
            out.add(Rule{Literal::pos(spec.tc(x, y)), Formula::literal(Literal::pos(spec.p(x, y)))});
        }
    }
    for (const Term& x : spec.constants) {
        for (const Term& v : spec.constants) {
            for (const Term& y : spec.constants) {
                out.add(Rule{Literal::pos(spec.tc(x, y)),
                             Formula::conj(Formula::literal(Literal::pos(spec.p(x, v))),
                                           Formula::literal(Literal::pos(spec.tc(v, y))))});
            }
        }
    }
    return out;
}

BinRel warshall(const BinRel& r) {
    std::set<Term> domain;
    for (const auto& [a, b] : r) {
        domain.insert(a);
        domain.insert(b);
    }
    std::vector<Term> elems(domain.begin(), domain.end());
    const std::size_t n = elems.size();
    std::map<Term, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
        idx.emplace(elems[i], i);
    }
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : r) {
        m[idx[a]][idx[b]] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (m[k][j]) {
                    m[i][j] = true;
                }
            }
        }
    }
    BinRel out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j]) {
                out.emplace(elems[i], elems[j]);
            }
        }
    }
    return out;
}

bool is_wellfounded(const BinRel& r) {
    std::set<Term> domain;
    for (const auto& [a, b] : r) {
        domain.insert(a);
        domain.insert(b);
    }
    std::vector<Term> elems(domain.begin(), domain.end());
    std::map<Term, std::size_t> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        idx.emplace(elems[i], i);
    }
    Digraph g(elems.size());
    for (const auto& [a, b] : r) {
        g.add_edge(idx[a], idx[b]);
    }
    return g.is_acyclic();
}

BinRel p_extent(const LiteralSet& x, const DefSpec& spec) { return extent(x, spec, spec.p_name); }
BinRel tc_extent(const LiteralSet& x, const DefSpec& spec) { return extent(x, spec, spec.tc_name); }

BinRel reversed_p_extent(const LiteralSet& x, const DefSpec& spec) {
    BinRel out;
    for (const auto& [a, b] : p_extent(x, spec)) {
        out.emplace(b, a);
    }
    return out;
}

bool check_tc_extent(const LiteralSet& x, const DefSpec& spec) {
    return tc_extent(x, spec) == warshall(p_extent(x, spec));
}

Theorem3Report check_theorem3(const Program& p, const LiteralSet& x, const DefSpec& spec) {
    for (const Rule& r : p.rules()) {
        if (r.head && !r.head->negated && spec.is_tc_atom(r.head->atom)) {
            throw PreconditionError("tc-atom in the head of a rule: " + render(r));
        }
    }
    Theorem3Report report;
    report.cond_i = is_tight_on(p, x);
    report.cond_ii = is_wellfounded(reversed_p_extent(x, spec));
    report.cond_iii = true;
    for (const Literal& l : x) {
        if (l.negated || !spec.is_p_atom(l.atom)) {
            continue;
        }
        for (const Literal& a : ancestors(l, p, x)) {
            if (!a.negated && spec.is_tc_atom(a.atom)) {
                report.cond_iii = false;
            }
        }
    }
    report.conclusion_applicable = report.cond_i && report.cond_ii && report.cond_iii;
    Program with_def = p;
    with_def.append(def_rules(spec));
    report.union_tight = is_tight_on(with_def, x);
    if (report.conclusion_applicable && !report.union_tight) {
        throw Error("tightness preservation violated: all three conditions hold but p ∪ Def is not tight");
    }
    return report;
}

bool check_prop5(const Program& p, const DefSpec& spec, const LiteralSet& x) {
    for (const Term& c : spec.constants) {
        const Rule irreflexive{std::nullopt, Formula::literal(Literal::pos(spec.tc(c, c)))};
        if (std::find(p.rules().begin(), p.rules().end(), irreflexive) == p.rules().end()) {
            throw PreconditionError("missing constraint " + render(irreflexive));
        }
    }
    Program with_def = p;
    with_def.append(def_rules(spec));
    if (!is_closed(x, with_def)) {
        throw PreconditionError("set " + x.to_string() + " is not closed under p ∪ Def");
    }
    if (!is_wellfounded(reversed_p_extent(x, spec))) {
        throw Error("p-relation has a cycle although every tc(c,c) is forbidden");
    }
    return true;
}

} // namespace tightlp
