#include "support/random_program.hpp"

#include "tightlp/generators.hpp"
#include "tightlp/semantics.hpp"
#include "tightlp/tightness.hpp"

#include <catch_amalgamated.hpp>

using namespace tightlp;

namespace {
Literal P(const char* name) { return Literal::pos(Atom(name)); }

const char* kDoubleNegation = "p :- not not p. p :- p,q.";
const char* kParentExample = "p :- not q. q :- not p. p :- p, r.";

// Cycle detection by repeated relational composition: some literal reaches
// itself through the parent relation.
bool has_parent_cycle_oracle(const Program& p, const LiteralSet& x) {
    std::set<std::pair<Literal, Literal>> reach;
    for (const Rule& r : p.rules()) {
        if (r.head && x.contains(*r.head) && satisfies(x, r.body)) {
            for (const Literal& l : poslit(r.body)) {
                if (x.contains(l)) {
                    reach.emplace(l, *r.head);
                }
            }
        }
    }
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& [a, b] : std::set(reach)) {
            for (const auto& [c, d] : std::set(reach)) {
                if (b == c && reach.emplace(a, d).second) {
                    grew = true;
                }
            }
        }
    }
    for (const auto& [a, b] : reach) {
        if (a == b) {
            return true;
        }
    }
    return false;
}
} // namespace

TEST_CASE("pos") {
    CHECK(pos(parse_program(kDoubleNegation)) == std::set<Literal>{P("p"), P("q")});
    CHECK(pos(parse_program("p. q.")).empty());
    CHECK(pos(parse_program("p :- not -q. -q :- not p.")).empty());
    CHECK(pos(parse_program(":- p.")).empty());
}

TEST_CASE("parents and ancestors") {
    const Program parents = parse_program(kParentExample);
    CHECK(parent_graph(parents, LiteralSet{P("p"), P("q"), P("r")}).predecessors(P("p")) ==
          std::set<Literal>{P("p"), P("r")});
    CHECK(parent_graph(parents, LiteralSet{P("p"), P("q")}).predecessors(P("p")).empty());
    CHECK(parent_graph(parents, LiteralSet{}).vertices().empty());
    CHECK(ancestors(P("p"), parents, LiteralSet{P("p"), P("q"), P("r")}) == std::set<Literal>{P("p"), P("r")});
    CHECK(ancestors(P("q"), parents, LiteralSet{P("p"), P("q")}).empty());
    CHECK(ancestors(P("a"), parse_program("a :- b. b :- c."), LiteralSet{P("a"), P("b"), P("c")}) ==
          std::set<Literal>{P("b"), P("c")});
}

TEST_CASE("tightness on a set") {
    const Program double_neg = parse_program(kDoubleNegation);
    CHECK(is_tight_on(double_neg, LiteralSet{P("p")}));
    CHECK_FALSE(is_tight_on(double_neg, LiteralSet{P("p"), P("q")}));
    // body satisfaction matters, not just the static graph
    const Program restricted = parse_program("p. q. p :- p, not q.");
    CHECK(is_tight_on(restricted, LiteralSet{P("p"), P("q")}));
    CHECK_FALSE(positive_dependency_graph(restricted).is_acyclic());
}

TEST_CASE("absolute tightness") {
    CHECK_FALSE(is_absolutely_tight(parse_program("p :- p.")));
    CHECK(positive_dependency_graph(parse_program("p :- p.")).find_cycle() == std::vector<Literal>{P("p"), P("p")});
    CHECK(is_absolutely_tight(parse_program("p :- not not p. q :- p.")));
    CHECK(is_absolutely_tight(queens_program({4})));
    CHECK_FALSE(is_absolutely_tight(blocksworld_program(BlocksSpec::numbered(2, 0))));
    CHECK(absolute_lambda_witness(parse_program("a :- b. b :- c.")) ==
          LambdaWitness{{P("a"), 2}, {P("b"), 1}, {P("c"), 0}});
}

TEST_CASE("lambda witnesses") {
    const auto w = lambda_witness(parse_program("p :- q; not r."), LiteralSet{P("p"), P("q"), P("r")});
    REQUIRE(w.has_value());
    CHECK(w->at(P("q")) < w->at(P("p")));
    CHECK(*w == LambdaWitness{{P("p"), 1}, {P("q"), 0}, {P("r"), 0}});

    const Program double_neg = parse_program(kDoubleNegation);
    CHECK(lambda_witness(double_neg, LiteralSet{P("p")}) == LambdaWitness{{P("p"), 0}});
    CHECK_FALSE(lambda_witness(double_neg, LiteralSet{P("p"), P("q")}).has_value());

    CHECK_FALSE(satisfies_level_condition(parse_program("p :- q."), LiteralSet{P("p"), P("q")},
                                          {{P("p"), 0}, {P("q"), 0}}));
}

TEST_CASE("random programs: tightness properties") {
    testing::RandomPrograms gen(31);
    for (int i = 0; i < 600; ++i) {
        const Program p = gen.program();
        const bool absolute = is_absolutely_tight(p);
        const std::set<Literal> positive = pos(p);
        for (int j = 0; j < 6; ++j) {
            const LiteralSet x = gen.consistent_subset(p.universe());
            const bool tight = is_tight_on(p, x);
            INFO(render(p) << "\n" << x.to_string());
            CHECK(tight == !has_parent_cycle_oracle(p, x));

            const auto w = lambda_witness(p, x);
            CHECK(w.has_value() == tight);
            if (w) {
                CHECK(satisfies_level_condition(p, x, *w));
            }
            if (absolute) {
                CHECK(tight);
            }
            bool disjoint = true;
            for (const Literal& l : x) {
                disjoint = disjoint && !positive.count(l);
            }
            if (disjoint) {
                CHECK(tight);
            }
            if (tight) {
                CHECK(is_tight_on(reduct(p, x), x));
            }
        }
    }
}
