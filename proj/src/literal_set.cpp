#include "tightlp/literal_set.hpp"

#include <algorithm>

namespace tightlp {

LiteralSet::LiteralSet(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool LiteralSet::contains(const Literal& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

void LiteralSet::insert(const Literal& l) {
    auto it = std::lower_bound(lits_.begin(), lits_.end(), l);
    if (it == lits_.end() || *it != l) {
        lits_.insert(it, l);
    }
}

bool LiteralSet::erase(const Literal& l) {
    auto it = std::lower_bound(lits_.begin(), lits_.end(), l);
    if (it == lits_.end() || *it != l) {
        return false;
    }
    lits_.erase(it);
    return true;
}

bool LiteralSet::is_consistent() const {
    // Complementary literals share the atom and are therefore adjacent.
    for (std::size_t i = 1; i < lits_.size(); ++i) {
        if (lits_[i - 1].atom == lits_[i].atom) {
            return false;
        }
    }
    return true;
}

bool LiteralSet::is_subset_of(const LiteralSet& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

std::string LiteralSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < lits_.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += lits_[i].to_string();
    }
    out += '}';
    return out;
}

bool canonical_less(const LiteralSet& a, const LiteralSet& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_canonical(std::vector<LiteralSet>& sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
}

LiteralSet to_literal_set(const AtomSet& atoms) {
    std::vector<Literal> lits;
    lits.reserve(atoms.size());
    for (const Atom& a : atoms) {
        lits.push_back(Literal::pos(a));
    }
    return LiteralSet(std::move(lits));
}

} // namespace tightlp
