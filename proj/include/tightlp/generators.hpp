#pragma once

// Ground programs for n-queens, the blocks-world history program and the
// transitive closure definition.

#include "tightlp/syntax.hpp"
#include "tightlp/transitive_closure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tightlp {

struct QueensSpec {
    int n = 8;
};

// queen(R,C) :- not not queen(R,C).            for all R, C
// :- not queen(1,C), ..., not queen(n,C).       for all C
// :- queen(R,C), queen(R1,C).                   R < R1
// :- queen(R,C), queen(R,C1).                   C < C1
// :- queen(R,C), queen(R1,C1).                  C < C1, |R-R1| = |C-C1|
Program queens_program(const QueensSpec& spec);

// Number of solutions by row-wise backtracking. Throws LimitExceeded for n > 10.
std::uint64_t queens_count_oracle(int n);

struct BlocksSpec {
    std::vector<std::string> blocks;
    int horizon = 0; // T

    // Blocks b1..bn.
    static BlocksSpec numbered(int n, int horizon);
    // Throws Error on an empty block list, a block named table, or T < 0.
    void validate() const;
};

// Blocks-world history program: choice of initial state and moves, effects
// and inertia, uniqueness of location, at most one block on a block, only
// clear blocks move, no concurrent moves, the above relation, and the
// constraints that nothing is above itself and every block is above the table.
Program blocksworld_program(const BlocksSpec& spec);

// For each time t: p = on(.,.,t), tc = above(.,.,t) over blocks plus table.
struct AboveSlice {
    int time;
    DefSpec def;
};
std::vector<AboveSlice> blocksworld_above_slices(const BlocksSpec& spec);

// The history program without the rules defining above(.,.,t) for the slice's t.
Program blocksworld_without_slice(const BlocksSpec& spec, int time);

} // namespace tightlp
