#include "tightlp/completion.hpp"
#include "tightlp/error.hpp"
#include "tightlp/semantics.hpp"
#include "tightlp/tightness.hpp"
#include "tightlp/transitive_closure.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace tightlp;

namespace {
BinRel rel(std::initializer_list<std::pair<int, int>> pairs) {
    BinRel out;
    for (auto [a, b] : pairs) {
        out.emplace(Term(std::int64_t{a}), Term(std::int64_t{b}));
    }
    return out;
}

Literal pl(const DefSpec& s, int a, int b) { return Literal::pos(s.p(std::int64_t{a}, std::int64_t{b})); }
Literal tl(const DefSpec& s, int a, int b) { return Literal::pos(s.tc(std::int64_t{a}, std::int64_t{b})); }

Program with_def(Program p, const DefSpec& s) {
    p.append(def_rules(s));
    return p;
}

// Reachability by depth-first search from every node.
BinRel closure_by_search(const BinRel& r) {
    BinRel out;
    std::set<Term> nodes;
    for (const auto& [a, b] : r) {
        nodes.insert(a);
        nodes.insert(b);
    }
    for (const Term& start : nodes) {
        std::vector<Term> stack{start};
        std::set<Term> seen;
        while (!stack.empty()) {
            const Term v = stack.back();
            stack.pop_back();
            for (const auto& [a, b] : r) {
                if (a == v && seen.insert(b).second) {
                    out.emplace(start, b);
                    stack.push_back(b);
                }
            }
        }
    }
    return out;
}
} // namespace

TEST_CASE("def rule counts") {
    CHECK(def_rules(make_def_spec(1)).rules().size() == 2);
    CHECK(def_rules(make_def_spec(2)).rules().size() == 12);
    CHECK(def_rules(make_def_spec(3)).rules().size() == 36);
    CHECK(render(def_rules(make_def_spec(1))) == "tc(1,1) :- p(1,1).\ntc(1,1) :- p(1,1), tc(1,1).");
    CHECK_THROWS_AS(make_def_spec(2, "p", "p").validate(), Error);
    CHECK_THROWS_AS(make_def_spec(0).validate(), Error);
}

TEST_CASE("warshall") {
    CHECK(warshall(rel({{1, 2}, {2, 3}})) == rel({{1, 2}, {2, 3}, {1, 3}}));
    CHECK(warshall({}).empty());
    CHECK(warshall(rel({{1, 1}})) == rel({{1, 1}}));
    std::mt19937 rng(47);
    for (int i = 0; i < 300; ++i) {
        BinRel r;
        const int edges = std::uniform_int_distribution<int>(0, 10)(rng);
        for (int e = 0; e < edges; ++e) {
            r.emplace(Term(std::int64_t(rng() % 5)), Term(std::int64_t(rng() % 5)));
        }
        CHECK(warshall(r) == closure_by_search(r));
        bool cyclic = false;
        for (const auto& [a, b] : closure_by_search(r)) {
            cyclic = cyclic || a == b;
        }
        CHECK(is_wellfounded(r) == !cyclic);
    }
}

TEST_CASE("well-foundedness") {
    CHECK_FALSE(is_wellfounded(rel({{1, 1}})));
    CHECK(is_wellfounded(rel({{1, 2}, {2, 3}})));
    CHECK(is_wellfounded({}));
    CHECK_FALSE(is_wellfounded(rel({{1, 2}, {2, 1}})));
}

TEST_CASE("extent checks") {
    const DefSpec s = make_def_spec(2);
    CHECK_FALSE(check_tc_extent(LiteralSet{pl(s, 1, 1), tl(s, 1, 1), tl(s, 1, 2)}, s));
    CHECK(check_tc_extent(LiteralSet{pl(s, 2, 1), tl(s, 2, 1)}, s));
    CHECK(check_tc_extent(LiteralSet{}, s));
    CHECK(reversed_p_extent(LiteralSet{pl(s, 2, 1)}, s) == rel({{1, 2}}));
}

TEST_CASE("first counterexample: condition (ii)") {
    const DefSpec s = make_def_spec(2);
    const Program facts = parse_program("p(1,1).");
    const LiteralSet x{pl(s, 1, 1), tl(s, 1, 1), tl(s, 1, 2)};
    const Program u = with_def(facts, s);
    CHECK(is_closed(x, u));
    CHECK(is_supported(x, u));
    CHECK_FALSE(is_answer_set(x, u));
    const Theorem3Report r = check_theorem3(facts, x, s);
    CHECK(r.cond_i);
    CHECK_FALSE(r.cond_ii);
    CHECK(r.cond_iii);
    CHECK_FALSE(r.conclusion_applicable);
    CHECK_FALSE(r.union_tight);
    CHECK_FALSE(is_tight_on(u, x));
}

TEST_CASE("second counterexample: condition (iii)") {
    const DefSpec s = make_def_spec(2);
    Program copy;
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
            copy.add(Rule{pl(s, a, b), Formula::literal(tl(s, a, b))});
        }
    }
    const LiteralSet x{pl(s, 2, 1), tl(s, 2, 1)};
    const Program u = with_def(copy, s);
    CHECK(is_closed(x, u));
    CHECK(is_supported(x, u));
    CHECK_FALSE(is_answer_set(x, u));
    const Theorem3Report r = check_theorem3(copy, x, s);
    CHECK(r.cond_i);
    CHECK(r.cond_ii);
    CHECK_FALSE(r.cond_iii);
    CHECK_FALSE(r.union_tight);
}

TEST_CASE("closure conditions on trivial input") {
    const DefSpec s = make_def_spec(2);
    const Theorem3Report r = check_theorem3(Program{}, LiteralSet{}, s);
    CHECK(r.cond_i);
    CHECK(r.cond_ii);
    CHECK(r.cond_iii);
    CHECK(r.conclusion_applicable);
    CHECK(r.union_tight);
    CHECK_THROWS_AS(check_theorem3(parse_program("tc(1,2)."), LiteralSet{}, s), PreconditionError);
}

TEST_CASE("acyclicity from tc(c,c) constraints") {
    const DefSpec s = make_def_spec(2);
    const Program p = parse_program(":- tc(1,1). :- tc(2,2). p(1,2).");
    const auto least = minimal_closed_set(with_def(p, s));
    REQUIRE(least.has_value());
    CHECK(*least == LiteralSet{pl(s, 1, 2), tl(s, 1, 2)});
    CHECK(check_prop5(p, s, *least));
    CHECK(check_prop5(parse_program(":- tc(1,1). :- tc(2,2)."), s, LiteralSet{}));
    CHECK_THROWS_AS(check_prop5(parse_program(":- tc(1,1)."), s, LiteralSet{}), PreconditionError);
    CHECK_THROWS_AS(check_prop5(p, s, LiteralSet{pl(s, 1, 2)}), PreconditionError);
}
