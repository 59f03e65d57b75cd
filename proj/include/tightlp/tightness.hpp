#pragma once

// Parent relation, tightness on a set of literals, absolute tightness and
// level-mapping witnesses.

#include "tightlp/graph.hpp"
#include "tightlp/literal_set.hpp"
#include "tightlp/syntax.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tightlp {

// A digraph whose vertices are literals. Edges run from a body literal to the
// head it helps derive: for the parent graph L -> L' means L is a parent of L'.
class LiteralGraph {
public:
    explicit LiteralGraph(std::vector<Literal> vertices);

    const std::vector<Literal>& vertices() const noexcept { return vertices_; }
    const Digraph& graph() const noexcept { return graph_; }
    std::optional<std::size_t> index_of(const Literal& l) const;

    void add_edge(const Literal& from, const Literal& to);
    bool has_edge(const Literal& from, const Literal& to) const;
    std::set<Literal> predecessors(const Literal& l) const;

    bool is_acyclic() const { return graph_.is_acyclic(); }
    // L1 -> L2 -> ... -> L1
    std::optional<std::vector<Literal>> find_cycle() const;

    std::string to_dot(const std::string& name) const;

private:
    std::vector<Literal> vertices_;
    std::map<Literal, std::size_t> index_;
    Digraph graph_;
};

// Union of poslit(body) over the rules whose head is not false.
std::set<Literal> pos(const Program& p);

// Vertices: literals of x. Edge L -> L' iff some rule with head L' has a body
// satisfied by x and L in x ∩ poslit(body).
LiteralGraph parent_graph(const Program& p, const LiteralSet& x);

// Vertices: literals occurring regularly in the rules. Edge L -> L' iff some
// rule has head L' and L in poslit(body).
LiteralGraph positive_dependency_graph(const Program& p);

bool is_tight_on(const Program& p, const LiteralSet& x);
bool is_absolutely_tight(const Program& p);

using LambdaWitness = std::map<Literal, std::size_t>;

// For every rule with head in x and body satisfied by x, and every L in
// x ∩ poslit(body): lambda(L) < lambda(head).
bool satisfies_level_condition(const Program& p, const LiteralSet& x, const LambdaWitness& lambda);

// Longest-path depth in the parent graph when it is acyclic, nullopt otherwise.
// The result is validated against satisfies_level_condition before it is returned.
std::optional<LambdaWitness> lambda_witness(const Program& p, const LiteralSet& x);

// Same construction over the positive dependency graph: a level mapping that
// proves absolute tightness.
std::optional<LambdaWitness> absolute_lambda_witness(const Program& p);

// Literals reachable from l by one or more parent steps, i.e. the ancestors of l.
std::set<Literal> ancestors(const Literal& l, const Program& p, const LiteralSet& x);

} // namespace tightlp
