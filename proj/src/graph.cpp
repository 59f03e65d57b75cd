#include "tightlp/graph.hpp"

#include <algorithm>

namespace tightlp {

void Digraph::add_edge(std::size_t from, std::size_t to) {
    auto& s = succ_[from];
    auto it = std::lower_bound(s.begin(), s.end(), to);
    if (it == s.end() || *it != to) {
        s.insert(it, to);
    }
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
    return std::binary_search(succ_[from].begin(), succ_[from].end(), to);
}

std::size_t Digraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& s : succ_) {
        n += s.size();
    }
    return n;
}

std::optional<std::vector<std::size_t>> Digraph::find_cycle() const {
    enum class Color : unsigned char { kWhite, kGrey, kBlack };
    std::vector<Color> color(size(), Color::kWhite);
    std::vector<std::size_t> parent(size(), 0);
    // Iterative DFS; frame = (vertex, next successor position).
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < size(); ++root) {
        if (color[root] != Color::kWhite) {
            continue;
        }
        color[root] = Color::kGrey;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, pos] = stack.back();
            if (pos == succ_[v].size()) {
                color[v] = Color::kBlack;
                stack.pop_back();
                continue;
            }
            std::size_t w = succ_[v][pos++];
            if (color[w] == Color::kGrey) {
                std::vector<std::size_t> cycle{w};
                for (std::size_t u = v; u != w; u = parent[u]) {
                    cycle.push_back(u);
                }
                std::reverse(cycle.begin() + 1, cycle.end());
                cycle.push_back(w);
                return cycle;
            }
            if (color[w] == Color::kWhite) {
                color[w] = Color::kGrey;
                parent[w] = v;
                stack.emplace_back(w, 0);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> Digraph::longest_path_depths() const {
    // Kahn's algorithm; depths relax along the topological order.
    std::vector<std::size_t> in_degree(size(), 0);
    for (const auto& s : succ_) {
        for (std::size_t w : s) {
            ++in_degree[w];
        }
    }
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < size(); ++v) {
        if (in_degree[v] == 0) {
            queue.push_back(v);
        }
    }
    std::vector<std::size_t> depth(size(), 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t v = queue[head];
        for (std::size_t w : succ_[v]) {
            depth[w] = std::max(depth[w], depth[v] + 1);
            if (--in_degree[w] == 0) {
                queue.push_back(w);
            }
        }
    }
    if (queue.size() != size()) {
        return std::nullopt;
    }
    return depth;
}

std::vector<std::size_t> Digraph::reachable_from(std::size_t v) const {
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack(succ_[v].begin(), succ_[v].end());
    std::vector<std::size_t> out;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        if (seen[u]) {
            continue;
        }
        seen[u] = true;
        out.push_back(u);
        stack.insert(stack.end(), succ_[u].begin(), succ_[u].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tightlp
