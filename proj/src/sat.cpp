#include "tightlp/sat.hpp"

#include "tightlp/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <variant>

namespace tightlp {

/////////////////////////////////////////////////////////////////////////////////////////
// Clausification
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
class Tseitin {
public:
    Tseitin(Cnf& cnf, const ClausifyOptions& options) : cnf_(cnf), options_(options) {}

    // A subformula encodes to a constant or to a literal equivalent to it.
    using Encoded = std::variant<bool, SatLit>;

    SatLit var_of(const Atom& a) {
        auto it = vars_.find(a);
        if (it == vars_.end()) {
            throw Error("completion mentions atom without an entry: " + a.to_string());
        }
        return it->second;
    }

    void add_projected(const Atom& a) {
        cnf_.atoms.push_back(a);
        vars_.emplace(a, static_cast<SatLit>(++cnf_.num_vars));
    }

    Encoded encode(const PropFormula& f) {
        using K = PropFormula::Kind;
        switch (f.kind()) {
            case K::kTrue: return true;
            case K::kFalse: return false;
            case K::kVar: return var_of(f.atom());
            case K::kNot: {
                Encoded e = encode(f.children()[0]);
                if (auto* b = std::get_if<bool>(&e)) {
                    return !*b;
                }
                SatLit inner = std::get<SatLit>(e);
                if (options_.simplify) {
                    return -inner;
                }
                SatLit n = fresh();
                add({-n, -inner});
                add({n, inner});
                return n;
            }
            case K::kAnd:
            case K::kOr: {
                const bool is_and = f.kind() == K::kAnd;
                std::vector<SatLit> parts;
                for (const PropFormula& c : f.children()) {
                    Encoded e = encode(c);
                    if (auto* b = std::get_if<bool>(&e)) {
                        // and: false absorbs, true is neutral; dually for or.
                        if (*b != is_and) {
                            return !is_and;
                        }
                        continue;
                    }
                    parts.push_back(std::get<SatLit>(e));
                }
                if (parts.empty()) {
                    return is_and;
                }
                if (parts.size() == 1) {
                    return parts.front();
                }
                SatLit g = fresh();
                // and: g -> each part, all parts -> g.  or: dual.
                Clause big{is_and ? g : -g};
                for (SatLit l : parts) {
                    add(is_and ? Clause{-g, l} : Clause{g, -l});
                    big.push_back(is_and ? -l : l);
                }
                add(std::move(big));
                return g;
            }
            case K::kEquiv: {
                Encoded a = encode(f.children()[0]);
                Encoded b = encode(f.children()[1]);
                if (std::holds_alternative<bool>(a) && std::holds_alternative<bool>(b)) {
                    return std::get<bool>(a) == std::get<bool>(b);
                }
                if (auto* k = std::get_if<bool>(&a)) {
                    return *k ? b : Encoded(-std::get<SatLit>(b));
                }
                if (auto* k = std::get_if<bool>(&b)) {
                    return *k ? a : Encoded(-std::get<SatLit>(a));
                }
                SatLit x = std::get<SatLit>(a);
                SatLit y = std::get<SatLit>(b);
                SatLit e = fresh();
                add({-e, -x, y});
                add({-e, x, -y});
                add({e, x, y});
                add({e, -x, -y});
                return e;
            }
        }
        return false;
    }

    // Adds `f` as a top-level requirement.
    void require(const PropFormula& f) {
        Encoded e = encode(f);
        if (auto* b = std::get_if<bool>(&e)) {
            if (!*b) {
                require_false();
            }
            return;
        }
        add({std::get<SatLit>(e)});
    }

    void require_equiv(SatLit target, const PropFormula& definition) {
        Encoded d = encode(definition);
        if (auto* b = std::get_if<bool>(&d)) {
            add({*b ? target : -target});
            return;
        }
        SatLit l = std::get<SatLit>(d);
        add({-target, l});
        add({target, -l});
    }

    // An unsatisfiable pair of unit clauses on a fresh variable stands in for
    // the empty clause.
    void require_false() {
        SatLit z = fresh();
        add({z});
        add({-z});
    }

private:
    SatLit fresh() { return static_cast<SatLit>(++cnf_.num_vars); }

    void add(Clause c) {
        std::sort(c.begin(), c.end(), [](SatLit a, SatLit b) {
            return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
        });
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (c[i] == -c[i - 1]) {
                return;
            }
        }
        if (seen_.insert(c).second) {
            cnf_.clauses.push_back(std::move(c));
        }
    }

    Cnf& cnf_;
    ClausifyOptions options_;
    std::map<Atom, SatLit> vars_;
    std::set<Clause> seen_;
};
} // namespace

Cnf clausify(const Completion& c, const ClausifyOptions& options) {
    Cnf cnf;
    Tseitin t(cnf, options);
    for (const CompletionEntry& e : c.entries) {
        t.add_projected(e.target);
    }
    for (const CompletionEntry& e : c.entries) {
        t.require_equiv(t.var_of(e.target), e.definition);
    }
    for (const PropFormula& body : c.constraint_bodies) {
        t.require(PropFormula::negation(body));
    }
    return cnf;
}

void write_dimacs(std::ostream& os, const Cnf& cnf) {
    for (std::size_t i = 0; i < cnf.atoms.size(); ++i) {
        os << "c var " << i + 1 << " = " << cnf.atoms[i].to_string() << '\n';
    }
    os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const Clause& c : cnf.clauses) {
        for (SatLit l : c) {
            os << l << ' ';
        }
        os << "0\n";
    }
}

/////////////////////////////////////////////////////////////////////////////////////////
// DPLL
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
class Dpll {
public:
    explicit Dpll(const Cnf& cnf) : num_vars_(cnf.num_vars), num_projected_(cnf.num_projected()) {
        value_.assign(num_vars_ + 1, 0);
        watches_.resize(2 * (num_vars_ + 1));
        for (const Clause& c : cnf.clauses) {
            if (c.empty()) {
                throw Error("empty clause in CNF");
            }
            if (!attach(c)) {
                unsat_ = true;
            }
        }
    }

    SolveReport run(const SolveOptions& options) {
        SolveReport report;
        while (!unsat_) {
            if (!propagate()) {
                ++stats_.conflicts;
                if (!backtrack()) {
                    break;
                }
                continue;
            }
            SatLit v = next_unassigned();
            if (v == 0) {
                if (report.models.size() == options.max_models) {
                    throw LimitExceeded("model limit of " + std::to_string(options.max_models) + " exceeded");
                }
                report.models.push_back(projected_model());
                block_and_restart();
                continue;
            }
            ++stats_.decisions;
            decide(-v, false);
        }
        report.stats = stats_;
        std::sort(report.models.begin(), report.models.end(), [](const AtomSet& a, const AtomSet& b) {
            return a.size() != b.size() ? a.size() < b.size()
                                        : std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
        return report;
    }

    void set_atoms(const std::vector<Atom>& atoms) { atoms_ = &atoms; }

private:
    static std::size_t code(SatLit l) { return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0 ? 1 : 0); }

    // 1 true, -1 false, 0 unassigned
    int value(SatLit l) const {
        int v = value_[std::abs(l)];
        return l < 0 ? -v : v;
    }

    void enqueue(SatLit l) {
        value_[std::abs(l)] = l < 0 ? -1 : 1;
        trail_.push_back(l);
    }

    // Stores a clause and establishes its watches under the current (level 0)
    // assignment. Returns false if the clause is already falsified.
    bool attach(Clause c) {
        std::stable_partition(c.begin(), c.end(), [&](SatLit l) { return value(l) >= 0; });
        if (value(c[0]) < 0) {
            return false;
        }
        if (c.size() == 1 || value(c[1]) < 0) {
            if (value(c[0]) == 0) {
                enqueue(c[0]);
            }
            clauses_.push_back(std::move(c));
            return true;
        }
        const std::size_t idx = clauses_.size();
        watches_[code(c[0])].push_back(idx);
        watches_[code(c[1])].push_back(idx);
        clauses_.push_back(std::move(c));
        return true;
    }

    bool propagate() {
        while (head_ < trail_.size()) {
            const SatLit falsified = -trail_[head_++];
            auto& ws = watches_[code(falsified)];
            std::size_t keep = 0;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                const std::size_t ci = ws[i];
                Clause& c = clauses_[ci];
                if (c[0] == falsified) {
                    std::swap(c[0], c[1]);
                }
                if (value(c[0]) > 0) {
                    ws[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k) {
                    if (value(c[k]) >= 0) {
                        std::swap(c[1], c[k]);
                        watches_[code(c[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) {
                    continue;
                }
                ws[keep++] = ci;
                if (value(c[0]) < 0) {
                    for (++i; i < ws.size(); ++i) {
                        ws[keep++] = ws[i];
                    }
                    ws.resize(keep);
                    head_ = trail_.size();
                    return false;
                }
                ++stats_.propagations;
                enqueue(c[0]);
            }
            ws.resize(keep);
        }
        return true;
    }

    SatLit next_unassigned() const {
        for (std::uint32_t v = 1; v <= num_vars_; ++v) {
            if (value_[v] == 0) {
                return static_cast<SatLit>(v);
            }
        }
        return 0;
    }

    void decide(SatLit l, bool flipped) {
        levels_.push_back({trail_.size(), l, flipped});
        enqueue(l);
    }

    void undo_to(std::size_t level) {
        if (levels_.size() <= level) {
            return;
        }
        const std::size_t pos = levels_[level].trail_pos;
        for (std::size_t i = pos; i < trail_.size(); ++i) {
            value_[std::abs(trail_[i])] = 0;
        }
        trail_.resize(pos);
        head_ = pos;
        levels_.resize(level);
    }

    // Chronological backtracking: flip the most recent decision whose second
    // branch is still open.
    bool backtrack() {
        while (!levels_.empty() && levels_.back().flipped) {
            undo_to(levels_.size() - 1);
        }
        if (levels_.empty()) {
            return false;
        }
        const SatLit d = levels_.back().decision;
        undo_to(levels_.size() - 1);
        decide(-d, true);
        return true;
    }

    AtomSet projected_model() const {
        AtomSet m;
        for (std::uint32_t v = 1; v <= num_projected_; ++v) {
            if (value_[v] > 0) {
                m.insert((*atoms_)[v - 1]);
            }
        }
        return m;
    }

    // Rules out the current projected assignment and restarts from level 0.
    void block_and_restart() {
        Clause blocking;
        for (std::uint32_t v = 1; v <= num_projected_; ++v) {
            blocking.push_back(value_[v] > 0 ? -static_cast<SatLit>(v) : static_cast<SatLit>(v));
        }
        undo_to(0);
        if (blocking.empty() || !attach(std::move(blocking))) {
            unsat_ = true;
        }
    }

    struct Level {
        std::size_t trail_pos;
        SatLit decision;
        bool flipped;
    };

    std::uint32_t num_vars_;
    std::uint32_t num_projected_;
    const std::vector<Atom>* atoms_ = nullptr;
    std::vector<Clause> clauses_;
    std::vector<std::vector<std::size_t>> watches_;
    std::vector<int> value_;
    std::vector<SatLit> trail_;
    std::vector<Level> levels_;
    std::size_t head_ = 0;
    bool unsat_ = false;
    SolverStats stats_;
};
} // namespace

SolveReport solve_all(const Cnf& cnf, const SolveOptions& options) {
    Dpll solver(cnf);
    solver.set_atoms(cnf.atoms);
    return solver.run(options);
}

} // namespace tightlp
