#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace tightlp {

// Directed graph over vertices 0..n-1 with sorted, duplicate-free successor lists.
class Digraph {
public:
    explicit Digraph(std::size_t n = 0) : succ_(n) {}

    std::size_t size() const noexcept { return succ_.size(); }
    void add_edge(std::size_t from, std::size_t to);
    bool has_edge(std::size_t from, std::size_t to) const;
    const std::vector<std::size_t>& successors(std::size_t v) const { return succ_[v]; }
    std::size_t edge_count() const;

    // A self-loop is a cycle.
    bool is_acyclic() const { return !find_cycle().has_value(); }

    // Vertices v0, v1, ..., vk = v0 along edges; the lowest-numbered cycle found by a
    // DFS started from vertices in increasing order.
    std::optional<std::vector<std::size_t>> find_cycle() const;

    // For acyclic graphs: length of the longest path ending at each vertex.
    // nullopt if there is a cycle.
    std::optional<std::vector<std::size_t>> longest_path_depths() const;

    // Vertices reachable from `v` by one or more edges.
    std::vector<std::size_t> reachable_from(std::size_t v) const;

private:
    std::vector<std::vector<std::size_t>> succ_;
};

} // namespace tightlp
