#include "tightlp/generators.hpp"

#include "tightlp/error.hpp"

#include <cstdlib>
#include <functional>

namespace tightlp {

namespace {
Formula pos_lit(Atom a) { return Formula::literal(Literal::pos(std::move(a))); }
Formula neg_lit(Atom a) { return Formula::literal(Literal::neg(std::move(a))); }
Formula naf(Formula f) { return Formula::negation(std::move(f)); }

Rule constraint(std::vector<Formula> body) { return Rule{std::nullopt, Formula::conj(body)}; }

Term num(int v) { return Term(static_cast<std::int64_t>(v)); }
} // namespace

/////////////////////////////////////////////////////////////////////////////////////////
// Queens
/////////////////////////////////////////////////////////////////////////////////////////
Program queens_program(const QueensSpec& spec) {
    if (spec.n < 1) {
        throw Error("queens: board size must be at least 1");
    }
    const int n = spec.n;
    auto queen = [](int r, int c) { return Atom("queen", {num(r), num(c)}); };
    Program p;
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            p.add(Rule{Literal::pos(queen(r, c)), naf(naf(pos_lit(queen(r, c))))});
        }
    }
    for (int c = 1; c <= n; ++c) {
        std::vector<Formula> body;
        for (int r = 1; r <= n; ++r) {
            body.push_back(naf(pos_lit(queen(r, c))));
        }
        p.add(constraint(std::move(body)));
    }
    for (int c = 1; c <= n; ++c) {
        for (int r = 1; r <= n; ++r) {
            for (int r1 = r + 1; r1 <= n; ++r1) {
                p.add(constraint({pos_lit(queen(r, c)), pos_lit(queen(r1, c))}));
            }
        }
    }
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            for (int c1 = c + 1; c1 <= n; ++c1) {
                p.add(constraint({pos_lit(queen(r, c)), pos_lit(queen(r, c1))}));
            }
        }
    }
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            for (int r1 = 1; r1 <= n; ++r1) {
                for (int c1 = c + 1; c1 <= n; ++c1) {
                    if (std::abs(r - r1) == std::abs(c - c1)) {
                        p.add(constraint({pos_lit(queen(r, c)), pos_lit(queen(r1, c1))}));
                    }
                }
            }
        }
    }
    return p;
}

std::uint64_t queens_count_oracle(int n) {
    if (n < 1) {
        throw Error("queens: board size must be at least 1");
    }
    if (n > 10) {
        throw LimitExceeded("queens oracle is limited to n <= 10");
    }
    std::vector<int> column(n, 0);
    std::function<std::uint64_t(int)> place = [&](int row) -> std::uint64_t {
        if (row == n) {
            return 1;
        }
        std::uint64_t count = 0;
        for (int c = 0; c < n; ++c) {
            bool free = true;
            for (int r = 0; r < row && free; ++r) {
                free = column[r] != c && std::abs(column[r] - c) != row - r;
            }
            if (free) {
                column[row] = c;
                count += place(row + 1);
            }
        }
        return count;
    };
    return place(0);
}

/////////////////////////////////////////////////////////////////////////////////////////
// Blocks world
/////////////////////////////////////////////////////////////////////////////////////////
BlocksSpec BlocksSpec::numbered(int n, int horizon) {
    BlocksSpec spec;
    for (int i = 1; i <= n; ++i) {
        spec.blocks.push_back("b" + std::to_string(i));
    }
    spec.horizon = horizon;
    return spec;
}

void BlocksSpec::validate() const {
    if (blocks.empty()) {
        throw Error("blocks world: at least one block is required");
    }
    for (const std::string& b : blocks) {
        if (b == "table") {
            throw Error("blocks world: 'table' cannot be a block name");
        }
        if (!is_identifier(b)) {
            throw Error("blocks world: invalid block name '" + b + "'");
        }
    }
    if (horizon < 0) {
        throw Error("blocks world: horizon must be nonnegative");
    }
}

namespace {
struct BlocksVocabulary {
    std::vector<Term> blocks;
    std::vector<Term> locations;

    explicit BlocksVocabulary(const BlocksSpec& spec) {
        for (const std::string& b : spec.blocks) {
            blocks.emplace_back(b);
        }
        locations = blocks;
        locations.emplace_back("table");
    }
};

Atom on(const Term& b, const Term& l, int t) { return Atom("on", {b, l, num(t)}); }
Atom move(const Term& b, const Term& l, int t) { return Atom("move", {b, l, num(t)}); }
Atom above(const Term& b, const Term& l, int t) { return Atom("above", {b, l, num(t)}); }

void add_choice(Program& p, const Atom& a) {
    p.add(Rule{Literal::pos(a), naf(neg_lit(a))});
    p.add(Rule{Literal::neg(a), naf(pos_lit(a))});
}
} // namespace

Program blocksworld_program(const BlocksSpec& spec) {
    spec.validate();
    const BlocksVocabulary v(spec);
    const int horizon = spec.horizon;
    Program p;

    for (const Term& b : v.blocks) {
        for (const Term& l : v.locations) {
            add_choice(p, on(b, l, 0));
        }
    }
    for (int t = 0; t < horizon; ++t) {
        for (const Term& b : v.blocks) {
            for (const Term& l : v.locations) {
                add_choice(p, move(b, l, t));
            }
        }
    }
    // effects and inertia
    for (int t = 0; t < horizon; ++t) {
        for (const Term& b : v.blocks) {
            for (const Term& l : v.locations) {
                p.add(Rule{Literal::pos(on(b, l, t + 1)), pos_lit(move(b, l, t))});
                p.add(Rule{Literal::pos(on(b, l, t + 1)),
                           Formula::conj(pos_lit(on(b, l, t)), naf(neg_lit(on(b, l, t + 1))))});
            }
        }
    }
    for (int t = 0; t <= horizon; ++t) {
        for (const Term& b : v.blocks) {
            for (const Term& l : v.locations) {
                for (const Term& l2 : v.locations) {
                    if (l != l2) {
                        p.add(Rule{Literal::neg(on(b, l, t)), pos_lit(on(b, l2, t))});
                    }
                }
            }
        }
    }
    for (int t = 0; t <= horizon; ++t) {
        for (const Term& b : v.blocks) {
            for (const Term& b2 : v.blocks) {
                if (b == b2) {
                    continue;
                }
                for (const Term& under : v.blocks) {
                    p.add(constraint({pos_lit(on(b, under, t)), pos_lit(on(b2, under, t))}));
                }
            }
        }
    }
    for (int t = 0; t < horizon; ++t) {
        for (const Term& b : v.blocks) {
            for (const Term& l : v.locations) {
                for (const Term& b2 : v.blocks) {
                    p.add(constraint({pos_lit(move(b, l, t)), pos_lit(on(b2, b, t))}));
                }
            }
        }
    }
    for (int t = 0; t < horizon; ++t) {
        for (const Term& b : v.blocks) {
            for (const Term& l : v.locations) {
                for (const Term& b2 : v.blocks) {
                    for (const Term& l2 : v.locations) {
                        if (b != b2 || l != l2) {
                            p.add(constraint({pos_lit(move(b, l, t)), pos_lit(move(b2, l2, t))}));
                        }
                    }
                }
            }
        }
    }
    for (int t = 0; t <= horizon; ++t) {
        for (const Term& b : v.blocks) {
            for (const Term& l : v.locations) {
                p.add(Rule{Literal::pos(above(b, l, t)), pos_lit(on(b, l, t))});
            }
        }
        for (const Term& b : v.blocks) {
            for (const Term& b2 : v.blocks) {
                for (const Term& l : v.locations) {
                    p.add(Rule{Literal::pos(above(b, l, t)),
                               Formula::conj(pos_lit(on(b, b2, t)), pos_lit(above(b2, l, t)))});
                }
            }
        }
    }
    for (int t = 0; t <= horizon; ++t) {
        for (const Term& b : v.blocks) {
            p.add(constraint({pos_lit(above(b, b, t))}));
        }
    }
    for (int t = 0; t <= horizon; ++t) {
        for (const Term& b : v.blocks) {
            p.add(constraint({naf(pos_lit(above(b, Term("table"), t)))}));
        }
    }
    return p;
}

std::vector<AboveSlice> blocksworld_above_slices(const BlocksSpec& spec) {
    spec.validate();
    const BlocksVocabulary v(spec);
    std::vector<AboveSlice> out;
    for (int t = 0; t <= spec.horizon; ++t) {
        DefSpec def;
        def.constants = v.locations;
        def.p_name = "on";
        def.tc_name = "above";
        def.suffix = {num(t)};
        out.push_back({t, std::move(def)});
    }
    return out;
}

Program blocksworld_without_slice(const BlocksSpec& spec, int time) {
    const Program full = blocksworld_program(spec);
    const Term t = num(time);
    Program out;
    for (const Rule& r : full.rules()) {
        const bool defines_slice = r.head && !r.head->negated && r.head->atom.predicate() == "above" &&
                                   r.head->atom.args().back() == t;
        if (!defines_slice) {
            out.add(r);
        }
    }
    return out;
}

} // namespace tightlp
