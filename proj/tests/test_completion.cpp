#include "support/random_program.hpp"

#include "tightlp/completion.hpp"
#include "tightlp/error.hpp"
#include "tightlp/semantics.hpp"

#include <catch_amalgamated.hpp>

using namespace tightlp;

namespace {
Literal P(const char* name) { return Literal::pos(Atom(name)); }
Literal N(const char* name) { return Literal::neg(Atom(name)); }

AtomSet atoms_of(const LiteralSet& x) {
    AtomSet out;
    for (const Literal& l : x) {
        out.insert(l.atom);
    }
    return out;
}

// Independent reading of the completion: each atom is true iff some body
// holds, and no constraint body holds.
bool completion_oracle(const LiteralSet& x, const Program& p) {
    for (const Atom& a : p.atoms()) {
        bool some_body = false;
        for (const Rule& r : p.rules()) {
            some_body = some_body || (r.head && r.head->atom == a && satisfies(x, r.body));
        }
        if (some_body != x.contains(Literal::pos(a))) {
            return false;
        }
    }
    for (const Rule& r : p.rules()) {
        if (!r.head && satisfies(x, r.body)) {
            return false;
        }
    }
    return true;
}
} // namespace

TEST_CASE("supported sets") {
    const Program choice = parse_program("p :- not -q. -q :- not p.");
    CHECK(is_supported(LiteralSet{P("p")}, choice));
    CHECK(is_supported(LiteralSet{N("q")}, choice));
    CHECK_FALSE(is_supported(LiteralSet{P("p"), N("q")}, choice));
    const Program p2 = parse_program("p :- not not p. p :- p,q.");
    CHECK(is_supported(LiteralSet{P("p")}, p2));
    CHECK_FALSE(is_supported(LiteralSet{P("q")}, p2));
    CHECK(is_supported(LiteralSet{}, p2));
}

TEST_CASE("completion of the double negation program") {
    const Completion c = completion(parse_program("p :- not not p. p :- p,q."));
    REQUIRE(c.entries.size() == 2);
    CHECK(c.entries[0].target == Atom("p"));
    CHECK(c.entries[1].target == Atom("q"));
    CHECK(c.entries[1].definition == PropFormula::constant(false));
    CHECK(c.constraint_bodies.empty());
    CHECK(render_completion(c) == "p <-> -(-p) | (p & q)\nq <-> false\n");
    CHECK(satisfies_completion({}, c));
    CHECK(satisfies_completion({Atom("p")}, c));
    CHECK_FALSE(satisfies_completion({Atom("q")}, c));
}

TEST_CASE("completion edge cases") {
    const Completion loop = completion(parse_program("p :- p."));
    CHECK(render_completion(loop) == "p <-> p\n");
    CHECK(satisfies_completion({Atom("p")}, loop));
    CHECK(satisfies_completion({}, loop));

    const Completion declared = completion(parse_program("#universe p."));
    CHECK(render_completion(declared) == "p <-> false\n");

    const Completion constrained = completion(parse_program("{a}. {b}. :- a, b. :- not a."));
    CHECK(constrained.constraint_bodies.size() == 2);
    CHECK(render_completion(constrained) == "a <-> -(-a)\nb <-> -(-b)\n-((a & b) | -a)\n");
    CHECK(satisfies_completion({Atom("a")}, constrained));
    CHECK_FALSE(satisfies_completion({Atom("a"), Atom("b")}, constrained));
    CHECK_FALSE(satisfies_completion({}, constrained));

    CHECK_THROWS_AS(completion(parse_program("-p.")), PreconditionError);
    CHECK(render_completion(completion(Program{})) == "");
}

TEST_CASE("completion models are exactly the closed and supported sets") {
    testing::RandomPrograms gen(23, {.atoms = 6, .classical = false});
    for (int i = 0; i < 400; ++i) {
        const Program p = gen.program();
        const Completion c = completion(p);
        INFO(render(p));
        REQUIRE(c.entries.size() == p.atoms().size());
        for (const LiteralSet& x : testing::consistent_subsets(p.universe())) {
            const bool comp = satisfies_completion(atoms_of(x), c);
            CHECK(comp == (is_closed(x, p) && is_supported(x, p)));
            CHECK(comp == completion_oracle(x, p));
        }
    }
}

TEST_CASE("answer sets are supported and satisfy the completion") {
    testing::RandomPrograms gen(29);
    for (int i = 0; i < 500; ++i) {
        const Program p = gen.program();
        const bool normal = is_normal(p);
        for (const LiteralSet& x : enumerate_answer_sets_bruteforce(p)) {
            INFO(render(p) << "\n" << x.to_string());
            CHECK(is_supported(x, p));
            if (normal) {
                CHECK(satisfies_completion(atoms_of(x), completion(p)));
            }
        }
    }
}
