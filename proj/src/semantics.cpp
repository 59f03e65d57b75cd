#include "tightlp/semantics.hpp"

#include "tightlp/error.hpp"

#include <map>

namespace tightlp {

bool satisfies(const LiteralSet& x, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::kTop: return true;
        case Formula::Kind::kBottom: return false;
        case Formula::Kind::kLiteral: return x.contains(f.lit());
        case Formula::Kind::kNot: return !satisfies(x, f.lhs());
        case Formula::Kind::kAnd: return satisfies(x, f.lhs()) && satisfies(x, f.rhs());
        case Formula::Kind::kOr: return satisfies(x, f.lhs()) || satisfies(x, f.rhs());
    }
    return false;
}

bool is_closed(const LiteralSet& x, const Program& p) {
    for (const Rule& r : p.rules()) {
        if (satisfies(x, r.body) && (!r.head || !x.contains(*r.head))) {
            return false;
        }
    }
    return true;
}

Formula reduct(const Formula& f, const LiteralSet& x) {
    switch (f.kind()) {
        case Formula::Kind::kNot: return satisfies(x, f.lhs()) ? Formula::bottom() : Formula::top();
        case Formula::Kind::kAnd: return Formula::conj(reduct(f.lhs(), x), reduct(f.rhs(), x));
        case Formula::Kind::kOr: return Formula::disj(reduct(f.lhs(), x), reduct(f.rhs(), x));
        default: return f;
    }
}

Program reduct(const Program& p, const LiteralSet& x) {
    Program out({}, p.declared());
    for (const Rule& r : p.rules()) {
        out.add(Rule{r.head, contains_negation_as_failure(r.body) ? reduct(r.body, x) : r.body});
    }
    return out;
}

std::optional<LiteralSet> minimal_closed_set(const Program& p) {
    for (const Rule& r : p.rules()) {
        if (contains_negation_as_failure(r.body)) {
            throw PreconditionError("minimal_closed_set: program contains negation as failure: " + render(r));
        }
    }
    LiteralSet x;
    std::vector<bool> fired(p.rules().size(), false);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < p.rules().size(); ++i) {
            const Rule& r = p.rules()[i];
            // Bodies are monotone, so a fired rule stays fired.
            if (fired[i] || !satisfies(x, r.body)) {
                continue;
            }
            fired[i] = true;
            if (!r.head || x.contains(complement(*r.head))) {
                return std::nullopt;
            }
            if (!x.contains(*r.head)) {
                x.insert(*r.head);
                changed = true;
            }
        }
    }
    return x;
}

bool is_answer_set(const LiteralSet& x, const Program& p) {
    if (!x.is_consistent()) {
        return false;
    }
    auto least = minimal_closed_set(reduct(p, x));
    return least && *least == x;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Brute force
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
// Universe literals grouped by atom: each atom is absent, positive or negative.
struct AtomChoices {
    std::vector<Literal> options;
};

std::vector<AtomChoices> group_by_atom(const std::set<Literal>& universe) {
    std::map<Atom, AtomChoices> grouped;
    for (const Literal& l : universe) {
        grouped[l.atom].options.push_back(l);
    }
    std::vector<AtomChoices> out;
    for (auto& [atom, choices] : grouped) {
        out.push_back(std::move(choices));
    }
    return out;
}
} // namespace

std::vector<LiteralSet> enumerate_answer_sets_bruteforce(const Program& p, const BruteForceOptions& options) {
    const std::set<Literal> universe = p.universe();
    if (universe.size() > options.max_universe) {
        throw LimitExceeded("brute-force enumeration refused: universe has " + std::to_string(universe.size()) +
                            " literals, bound is " + std::to_string(options.max_universe));
    }
    const std::vector<AtomChoices> atoms = group_by_atom(universe);
    // digit[i] == 0: atom i absent; otherwise options[digit[i] - 1] is present.
    std::vector<std::size_t> digit(atoms.size(), 0);
    std::vector<LiteralSet> found;
    for (;;) {
        std::vector<Literal> lits;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (digit[i]) {
                lits.push_back(atoms[i].options[digit[i] - 1]);
            }
        }
        LiteralSet x(std::move(lits));
        if (is_answer_set(x, p)) {
            found.push_back(std::move(x));
        }
        std::size_t i = 0;
        while (i < atoms.size() && digit[i] == atoms[i].options.size()) {
            digit[i++] = 0;
        }
        if (i == atoms.size()) {
            break;
        }
        ++digit[i];
    }
    sort_canonical(found);
    return found;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Backtracking search
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
enum class Truth : std::int8_t { kFalse, kTrue, kUnknown };

class SearchEnumerator {
public:
    explicit SearchEnumerator(const Program& p) : program_(p) {
        const std::set<Literal> universe = p.universe();
        lits_.assign(universe.begin(), universe.end());
        for (std::size_t i = 0; i < lits_.size(); ++i) {
            index_.emplace(lits_[i], static_cast<int>(i));
        }
        complement_.assign(lits_.size(), -1);
        for (std::size_t i = 0; i < lits_.size(); ++i) {
            auto it = index_.find(complement(lits_[i]));
            if (it != index_.end()) {
                complement_[i] = it->second;
            }
        }
        defining_.resize(lits_.size());
        for (const Rule& r : p.rules()) {
            CompiledRule cr{r.head ? index_.at(*r.head) : -1, compile(r.body)};
            if (cr.head >= 0) {
                defining_[cr.head].push_back(rules_.size());
            }
            rules_.push_back(cr);
        }
    }

    std::vector<LiteralSet> run() {
        std::vector<Truth> values(lits_.size(), Truth::kUnknown);
        search(values);
        sort_canonical(found_);
        return std::move(found_);
    }

private:
    struct Node {
        Formula::Kind kind;
        int lit = -1;
        int lhs = -1;
        int rhs = -1;
    };
    struct CompiledRule {
        int head; // -1 for constraints
        int body; // root node index
    };

    int compile(const Formula& f) {
        Node n{f.kind()};
        switch (f.kind()) {
            case Formula::Kind::kLiteral: n.lit = index_.at(f.lit()); break;
            case Formula::Kind::kNot: n.lhs = compile(f.lhs()); break;
            case Formula::Kind::kAnd:
            case Formula::Kind::kOr:
                n.lhs = compile(f.lhs());
                n.rhs = compile(f.rhs());
                break;
            default: break;
        }
        nodes_.push_back(n);
        return static_cast<int>(nodes_.size() - 1);
    }

    Truth eval(int node, const std::vector<Truth>& v) const {
        const Node& n = nodes_[node];
        switch (n.kind) {
            case Formula::Kind::kTop: return Truth::kTrue;
            case Formula::Kind::kBottom: return Truth::kFalse;
            case Formula::Kind::kLiteral: return v[n.lit];
            case Formula::Kind::kNot: {
                Truth t = eval(n.lhs, v);
                return t == Truth::kUnknown ? t : (t == Truth::kTrue ? Truth::kFalse : Truth::kTrue);
            }
            case Formula::Kind::kAnd: {
                Truth a = eval(n.lhs, v);
                if (a == Truth::kFalse) {
                    return a;
                }
                Truth b = eval(n.rhs, v);
                if (b == Truth::kFalse) {
                    return b;
                }
                return a == Truth::kTrue && b == Truth::kTrue ? Truth::kTrue : Truth::kUnknown;
            }
            case Formula::Kind::kOr: {
                Truth a = eval(n.lhs, v);
                if (a == Truth::kTrue) {
                    return a;
                }
                Truth b = eval(n.rhs, v);
                if (b == Truth::kTrue) {
                    return b;
                }
                return a == Truth::kFalse && b == Truth::kFalse ? Truth::kFalse : Truth::kUnknown;
            }
        }
        return Truth::kUnknown;
    }

    bool assign(std::vector<Truth>& v, int lit, Truth t) const {
        if (v[lit] != Truth::kUnknown) {
            return v[lit] == t;
        }
        v[lit] = t;
        if (t == Truth::kTrue && complement_[lit] >= 0) {
            return assign(v, complement_[lit], Truth::kFalse);
        }
        return true;
    }

    bool propagate(std::vector<Truth>& v) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (const CompiledRule& r : rules_) {
                if (eval(r.body, v) != Truth::kTrue) {
                    continue;
                }
                if (r.head < 0 || v[r.head] == Truth::kFalse) {
                    return false;
                }
                if (v[r.head] == Truth::kUnknown) {
                    if (!assign(v, r.head, Truth::kTrue)) {
                        return false;
                    }
                    changed = true;
                }
            }
            for (std::size_t l = 0; l < lits_.size(); ++l) {
                if (v[l] == Truth::kFalse) {
                    continue;
                }
                bool supportable = false;
                for (std::size_t ri : defining_[l]) {
                    if (eval(rules_[ri].body, v) != Truth::kFalse) {
                        supportable = true;
                        break;
                    }
                }
                if (!supportable) {
                    if (v[l] == Truth::kTrue) {
                        return false;
                    }
                    v[l] = Truth::kFalse;
                    changed = true;
                }
            }
        }
        return true;
    }

    void search(std::vector<Truth> v) {
        if (!propagate(v)) {
            return;
        }
        std::size_t next = 0;
        while (next < v.size() && v[next] != Truth::kUnknown) {
            ++next;
        }
        if (next == v.size()) {
            std::vector<Literal> members;
            for (std::size_t l = 0; l < v.size(); ++l) {
                if (v[l] == Truth::kTrue) {
                    members.push_back(lits_[l]);
                }
            }
            LiteralSet x(std::move(members));
            if (is_answer_set(x, program_)) {
                found_.push_back(std::move(x));
            }
            return;
        }
        for (Truth t : {Truth::kTrue, Truth::kFalse}) {
            std::vector<Truth> branch = v;
            if (assign(branch, static_cast<int>(next), t)) {
                search(std::move(branch));
            }
        }
    }

    const Program& program_;
    std::vector<Literal> lits_;
    std::map<Literal, int> index_;
    std::vector<int> complement_;
    std::vector<Node> nodes_;
    std::vector<CompiledRule> rules_;
    std::vector<std::vector<std::size_t>> defining_;
    std::vector<LiteralSet> found_;
};
} // namespace

std::vector<LiteralSet> enumerate_answer_sets_search(const Program& p) {
    return SearchEnumerator(p).run();
}

} // namespace tightlp
