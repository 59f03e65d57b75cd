#include "support/random_program.hpp"

#include "tightlp/classical_negation.hpp"
#include "tightlp/completion.hpp"
#include "tightlp/error.hpp"
#include "tightlp/generators.hpp"
#include "tightlp/sat.hpp"
#include "tightlp/semantics.hpp"
#include "tightlp/solve.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace tightlp;

namespace {
Literal P(const char* name) { return Literal::pos(Atom(name)); }
Literal N(const char* name) { return Literal::neg(Atom(name)); }

Cnf raw_cnf(std::uint32_t vars, std::vector<Clause> clauses) {
    Cnf cnf;
    cnf.num_vars = vars;
    cnf.clauses = std::move(clauses);
    for (std::uint32_t v = 1; v <= vars; ++v) {
        cnf.atoms.emplace_back("x" + std::to_string(v));
    }
    return cnf;
}

// Truth-table models of a CNF, projected and deduplicated.
std::set<AtomSet> truth_table_models(const Cnf& cnf) {
    std::set<AtomSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cnf.num_vars); ++mask) {
        bool ok = true;
        for (const Clause& c : cnf.clauses) {
            bool sat = false;
            for (SatLit l : c) {
                const bool value = mask >> (std::abs(l) - 1) & 1;
                sat = sat || (l > 0) == value;
            }
            ok = ok && sat;
        }
        if (ok) {
            AtomSet m;
            for (std::uint32_t v = 0; v < cnf.num_projected(); ++v) {
                if (mask >> v & 1) {
                    m.insert(cnf.atoms[v]);
                }
            }
            out.insert(m);
        }
    }
    return out;
}

std::set<AtomSet> completion_models_oracle(const Program& normal) {
    const Completion c = completion(normal);
    std::set<AtomSet> out;
    const AtomSet atom_set = normal.atoms();
    const std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
        AtomSet x;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (mask >> i & 1) {
                x.insert(atoms[i]);
            }
        }
        if (satisfies_completion(x, c)) {
            out.insert(x);
        }
    }
    return out;
}
} // namespace

TEST_CASE("solver on tiny clause sets") {
    const SolveReport one = solve_all(raw_cnf(1, {{1}}));
    CHECK(one.models == std::vector<AtomSet>{{Atom("x1")}});
    const SolveReport xor2 = solve_all(raw_cnf(2, {{1, 2}, {-1, -2}}));
    CHECK(xor2.models == std::vector<AtomSet>{{Atom("x1")}, {Atom("x2")}});
    CHECK(solve_all(raw_cnf(1, {{1}, {-1}})).models.empty());
    CHECK(solve_all(raw_cnf(2, {})).models.size() == 4);
    CHECK_THROWS_AS(solve_all(raw_cnf(3, {}), {.max_models = 7}), LimitExceeded);
    CHECK(solve_all(raw_cnf(3, {}), {.max_models = 8}).models.size() == 8);
}

TEST_CASE("solver agrees with truth tables on random CNFs") {
    std::mt19937 rng(37);
    for (int i = 0; i < 400; ++i) {
        const std::uint32_t vars = std::uniform_int_distribution<std::uint32_t>(1, 8)(rng);
        std::vector<Clause> clauses(std::uniform_int_distribution<int>(0, 14)(rng));
        for (Clause& c : clauses) {
            const int len = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int k = 0; k < len; ++k) {
                const SatLit v = std::uniform_int_distribution<SatLit>(1, static_cast<SatLit>(vars))(rng);
                c.push_back(rng() % 2 ? v : -v);
            }
        }
        Cnf cnf = raw_cnf(vars, clauses);
        // project onto a prefix to exercise blocking over a subset
        cnf.atoms.erase(cnf.atoms.begin() + std::uniform_int_distribution<std::uint32_t>(0, vars)(rng), cnf.atoms.end());
        const std::set<AtomSet> expected = truth_table_models(cnf);
        const SolveReport report = solve_all(cnf);
        CHECK(std::set<AtomSet>(report.models.begin(), report.models.end()) == expected);
        CHECK(report.models.size() == expected.size());
    }
}

TEST_CASE("clausified completions") {
    const Cnf c2 = program_cnf(parse_program("p :- not not p. p :- p,q."));
    CHECK(solve_all(c2).models == std::vector<AtomSet>{{}, {Atom("p")}});
    const Cnf cfalse = clausify(completion(parse_program("#universe p.")));
    CHECK(solve_all(cfalse).models == std::vector<AtomSet>{{}});
    const Cnf cloop = clausify(completion(parse_program("p :- p.")));
    CHECK(solve_all(cloop).models == std::vector<AtomSet>{{}, {Atom("p")}});
    CHECK(solve_all(program_cnf(parse_program(":- true."))).models.empty());
    CHECK(solve_all(program_cnf(queens_program({4}))).models.size() == 2);
}

TEST_CASE("clauses are well formed and projected models match the completion") {
    testing::RandomPrograms gen(41, {.atoms = 5, .classical = false});
    for (int i = 0; i < 500; ++i) {
        const Program p = gen.program();
        for (bool simplify : {false, true}) {
            const Cnf cnf = clausify(completion(p), {.simplify = simplify});
            INFO(render(p) << "\nsimplify " << simplify);
            CHECK(std::set<Clause>(cnf.clauses.begin(), cnf.clauses.end()).size() == cnf.clauses.size());
            for (const Clause& c : cnf.clauses) {
                REQUIRE_FALSE(c.empty());
                for (SatLit l : c) {
                    CHECK(std::find(c.begin(), c.end(), -l) == c.end());
                    CHECK(std::count(c.begin(), c.end(), l) == 1);
                    CHECK(static_cast<std::uint32_t>(std::abs(l)) <= cnf.num_vars);
                }
            }
            const SolveReport report = solve_all(cnf);
            CHECK(std::set<AtomSet>(report.models.begin(), report.models.end()) == completion_models_oracle(p));
        }
    }
}

TEST_CASE("dimacs output") {
    std::ostringstream os;
    write_dimacs(os, raw_cnf(2, {{1, -2}, {2}}));
    CHECK(os.str() == "c var 1 = x1\nc var 2 = x2\np cnf 2 2\n1 -2 0\n2 0\n");
    std::ostringstream q;
    write_dimacs(q, program_cnf(queens_program({2})));
    CHECK(q.str().find("c var 2 = queen(1,2)\n") != std::string::npos);
}

TEST_CASE("pipeline on the golden programs") {
    const PipelineResult r_double_neg = answer_sets_via_completion(parse_program("p :- not not p. p :- p,q."));
    REQUIRE(r_double_neg.answer_sets.size() == 2);
    CHECK(r_double_neg.answer_sets[0].literals == LiteralSet{});
    CHECK(r_double_neg.answer_sets[1].literals == LiteralSet{P("p")});
    CHECK(r_double_neg.answer_sets[0].method == Method::kTightOnModel);
    CHECK(r_double_neg.answer_sets[1].method == Method::kTightOnModel);
    CHECK_FALSE(r_double_neg.absolutely_tight);

    const PipelineResult loop = answer_sets_via_completion(parse_program("p :- p."), {.trace = true});
    CHECK(loop.completion_models.size() == 2);
    REQUIRE(loop.answer_sets.size() == 1);
    CHECK(loop.answer_sets[0].literals == LiteralSet{});
    CHECK(loop.dropped == std::vector<LiteralSet>{{P("p")}});
    CHECK(std::find(loop.trace.begin(), loop.trace.end(), "dropped {p}: not an answer set") != loop.trace.end());

    const PipelineResult r_choice = answer_sets_via_completion(parse_program("p :- not -q. -q :- not p."));
    REQUIRE(r_choice.answer_sets.size() == 2);
    CHECK(r_choice.answer_sets[0].literals == LiteralSet{P("p")});
    CHECK(r_choice.answer_sets[1].literals == LiteralSet{N("q")});
    CHECK(r_choice.answer_sets[0].method == Method::kAbsolutelyTight);
}

TEST_CASE("pipeline agrees with brute force") {
    testing::RandomPrograms gen(43);
    for (int i = 0; i < 1000; ++i) {
        const Program p = gen.program();
        const PipelineResult r = answer_sets_via_completion(p);
        std::vector<LiteralSet> sets;
        for (const AnswerSet& a : r.answer_sets) {
            CHECK(is_answer_set(a.literals, p));
            sets.push_back(a.literals);
        }
        INFO(render(p));
        CHECK(sets == enumerate_answer_sets_bruteforce(p));
        // every answer set is a completion model
        for (const LiteralSet& x : sets) {
            CHECK(std::find(r.completion_models.begin(), r.completion_models.end(), x) != r.completion_models.end());
        }
    }
}

TEST_CASE("pipeline is deterministic") {
    const Program q = queens_program({5});
    const PipelineResult a = answer_sets_via_completion(q);
    const PipelineResult b = answer_sets_via_completion(parse_program(render(q)));
    REQUIRE(a.answer_sets.size() == b.answer_sets.size());
    for (std::size_t i = 0; i < a.answer_sets.size(); ++i) {
        CHECK(a.answer_sets[i].literals == b.answer_sets[i].literals);
    }
    CHECK(a.stats.decisions == b.stats.decisions);
}
