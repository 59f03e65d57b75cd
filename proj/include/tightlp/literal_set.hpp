#pragma once

#include "tightlp/syntax.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace tightlp {

// Finite set of literals kept as a sorted, duplicate-free vector.
class LiteralSet {
public:
    using const_iterator = std::vector<Literal>::const_iterator;

    LiteralSet() = default;
    LiteralSet(std::initializer_list<Literal> lits) : LiteralSet(std::vector<Literal>(lits)) {}
    explicit LiteralSet(std::vector<Literal> lits);
    explicit LiteralSet(const std::set<Literal>& lits) : lits_(lits.begin(), lits.end()) {}

    bool contains(const Literal& l) const;
    void insert(const Literal& l);
    bool erase(const Literal& l);

    // No literal together with its complement.
    bool is_consistent() const;

    std::size_t size() const noexcept { return lits_.size(); }
    bool empty() const noexcept { return lits_.empty(); }
    const_iterator begin() const noexcept { return lits_.begin(); }
    const_iterator end() const noexcept { return lits_.end(); }
    const std::vector<Literal>& literals() const noexcept { return lits_; }

    bool is_subset_of(const LiteralSet& other) const;

    // "{p, -q(1)}"
    std::string to_string() const;

    friend bool operator==(const LiteralSet&, const LiteralSet&) = default;

private:
    std::vector<Literal> lits_;
};

// Enumeration order used for all reported sets: by size, then lexicographically.
bool canonical_less(const LiteralSet& a, const LiteralSet& b);
void sort_canonical(std::vector<LiteralSet>& sets);

using AtomSet = std::set<Atom>;

LiteralSet to_literal_set(const AtomSet& atoms);

} // namespace tightlp
