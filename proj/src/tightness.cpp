#include "tightlp/tightness.hpp"

#include "tightlp/error.hpp"
#include "tightlp/semantics.hpp"

namespace tightlp {

LiteralGraph::LiteralGraph(std::vector<Literal> vertices) : vertices_(std::move(vertices)), graph_(vertices_.size()) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        index_.emplace(vertices_[i], i);
    }
}

std::optional<std::size_t> LiteralGraph::index_of(const Literal& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void LiteralGraph::add_edge(const Literal& from, const Literal& to) {
    graph_.add_edge(index_.at(from), index_.at(to));
}

bool LiteralGraph::has_edge(const Literal& from, const Literal& to) const {
    auto a = index_of(from);
    auto b = index_of(to);
    return a && b && graph_.has_edge(*a, *b);
}

std::set<Literal> LiteralGraph::predecessors(const Literal& l) const {
    std::set<Literal> out;
    auto target = index_of(l);
    if (!target) {
        return out;
    }
    for (std::size_t v = 0; v < graph_.size(); ++v) {
        if (graph_.has_edge(v, *target)) {
            out.insert(vertices_[v]);
        }
    }
    return out;
}

std::optional<std::vector<Literal>> LiteralGraph::find_cycle() const {
    auto cycle = graph_.find_cycle();
    if (!cycle) {
        return std::nullopt;
    }
    std::vector<Literal> out;
    for (std::size_t v : *cycle) {
        out.push_back(vertices_[v]);
    }
    return out;
}

std::string LiteralGraph::to_dot(const std::string& name) const {
    std::string out = "digraph " + name + " {\n";
    for (const Literal& l : vertices_) {
        out += "  \"" + l.to_string() + "\";\n";
    }
    for (std::size_t v = 0; v < graph_.size(); ++v) {
        for (std::size_t w : graph_.successors(v)) {
            out += "  \"" + vertices_[v].to_string() + "\" -> \"" + vertices_[w].to_string() + "\";\n";
        }
    }
    out += "}\n";
    return out;
}

std::set<Literal> pos(const Program& p) {
    std::set<Literal> out;
    for (const Rule& r : p.rules()) {
        if (r.head) {
            auto body = poslit(r.body);
            out.insert(body.begin(), body.end());
        }
    }
    return out;
}

LiteralGraph parent_graph(const Program& p, const LiteralSet& x) {
    LiteralGraph g(x.literals());
    for (const Rule& r : p.rules()) {
        if (!r.head || !x.contains(*r.head) || !satisfies(x, r.body)) {
            continue;
        }
        for (const Literal& l : poslit(r.body)) {
            if (x.contains(l)) {
                g.add_edge(l, *r.head);
            }
        }
    }
    return g;
}

LiteralGraph positive_dependency_graph(const Program& p) {
    std::set<Literal> regular;
    for (const Rule& r : p.rules()) {
        if (r.head) {
            regular.insert(*r.head);
        }
        auto body = lit(r.body);
        regular.insert(body.begin(), body.end());
    }
    LiteralGraph g(std::vector<Literal>(regular.begin(), regular.end()));
    for (const Rule& r : p.rules()) {
        if (!r.head) {
            continue;
        }
        for (const Literal& l : poslit(r.body)) {
            g.add_edge(l, *r.head);
        }
    }
    return g;
}

bool is_tight_on(const Program& p, const LiteralSet& x) {
    return parent_graph(p, x).is_acyclic();
}

bool is_absolutely_tight(const Program& p) {
    return positive_dependency_graph(p).is_acyclic();
}

bool satisfies_level_condition(const Program& p, const LiteralSet& x, const LambdaWitness& lambda) {
    for (const Rule& r : p.rules()) {
        if (!r.head || !x.contains(*r.head) || !satisfies(x, r.body)) {
            continue;
        }
        auto head_level = lambda.find(*r.head);
        if (head_level == lambda.end()) {
            return false;
        }
        for (const Literal& l : poslit(r.body)) {
            if (!x.contains(l)) {
                continue;
            }
            auto level = lambda.find(l);
            if (level == lambda.end() || level->second >= head_level->second) {
                return false;
            }
        }
    }
    return true;
}

namespace {
std::optional<LambdaWitness> depth_witness(const LiteralGraph& g) {
    auto depths = g.graph().longest_path_depths();
    if (!depths) {
        return std::nullopt;
    }
    LambdaWitness lambda;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        lambda.emplace(g.vertices()[v], (*depths)[v]);
    }
    return lambda;
}
} // namespace

std::optional<LambdaWitness> lambda_witness(const Program& p, const LiteralSet& x) {
    auto lambda = depth_witness(parent_graph(p, x));
    if (lambda && !satisfies_level_condition(p, x, *lambda)) {
        throw Error("internal error: level mapping violates the witness condition");
    }
    return lambda;
}

std::optional<LambdaWitness> absolute_lambda_witness(const Program& p) {
    return depth_witness(positive_dependency_graph(p));
}

std::set<Literal> ancestors(const Literal& l, const Program& p, const LiteralSet& x) {
    // Reverse the parent graph so that reachability follows parent steps.
    LiteralGraph g = parent_graph(p, x);
    std::set<Literal> out;
    auto start = g.index_of(l);
    if (!start) {
        return out;
    }
    Digraph reversed(g.vertices().size());
    for (std::size_t v = 0; v < g.graph().size(); ++v) {
        for (std::size_t w : g.graph().successors(v)) {
            reversed.add_edge(w, v);
        }
    }
    for (std::size_t v : reversed.reachable_from(*start)) {
        out.insert(g.vertices()[v]);
    }
    return out;
}

} // namespace tightlp
