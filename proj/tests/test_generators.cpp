#include "tightlp/error.hpp"
#include "tightlp/generators.hpp"
#include "tightlp/semantics.hpp"
#include "tightlp/solve.hpp"
#include "tightlp/tightness.hpp"

#include <catch_amalgamated.hpp>

using namespace tightlp;

namespace {
// Counts by brute force over all placements of one queen per row.
std::uint64_t queens_by_permutations(int n) {
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) {
        cols[i] = i;
    }
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            for (int b = a + 1; b < n && ok; ++b) {
                ok = std::abs(cols[a] - cols[b]) != b - a;
            }
        }
        count += ok;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return count;
}
} // namespace

TEST_CASE("queens rule counts") {
    CHECK(queens_program({1}).rules().size() == 2);
    const Program q2 = queens_program({2});
    // 4 choice rules, 2 column rules, 2 + 2 same column / same row, 2 diagonal
    CHECK(q2.rules().size() == 12);
    CHECK(render(q2.rules()[4]) == ":- not queen(1,1), not queen(2,1).");
    CHECK(render(q2.rules().back()) == ":- queen(2,1), queen(1,2).");
    CHECK_THROWS_AS(queens_program({0}), Error);
}

TEST_CASE("queens oracle") {
    CHECK(queens_count_oracle(1) == 1);
    CHECK(queens_count_oracle(4) == 2);
    CHECK(queens_count_oracle(5) == 10);
    CHECK(queens_count_oracle(6) == 4);
    for (int n = 1; n <= 8; ++n) {
        CHECK(queens_count_oracle(n) == queens_by_permutations(n));
    }
    CHECK_THROWS_AS(queens_count_oracle(11), LimitExceeded);
}

TEST_CASE("queens programs are absolutely tight and count correctly") {
    for (int n = 1; n <= 6; ++n) {
        const Program q = queens_program({n});
        CHECK(is_absolutely_tight(q));
        const PipelineResult r = answer_sets_via_completion(q);
        CHECK(r.answer_sets.size() == queens_count_oracle(n));
    }
    CHECK(enumerate_answer_sets_bruteforce(queens_program({4}), {.max_universe = 16}).size() == 2);
}

TEST_CASE("blocks world") {
    CHECK_THROWS_AS((BlocksSpec{{}, 0}.validate()), Error);
    CHECK_THROWS_AS(BlocksSpec({{"table"}, 0}).validate(), Error);
    CHECK_THROWS_AS(BlocksSpec::numbered(2, -1).validate(), Error);

    const BlocksSpec spec = BlocksSpec::numbered(2, 0);
    const Program p = blocksworld_program(spec);
    CHECK_FALSE(is_absolutely_tight(p));
    const auto brute = enumerate_answer_sets_bruteforce(p);
    CHECK(brute.size() == 3);
    CHECK(enumerate_answer_sets_search(p) == brute);

    const auto slices = blocksworld_above_slices(BlocksSpec::numbered(2, 1));
    REQUIRE(slices.size() == 2);
    CHECK(slices[0].def.constants.size() == 3);
    CHECK(slices[1].def.tc(Term("b1"), Term("table")) == Atom("above", {"b1", "table", 1}));

    // every rule defining above(.,.,0) is gone, nothing else
    const Program without = blocksworld_without_slice(spec, 0);
    std::size_t defining = 0;
    for (const Rule& r : p.rules()) {
        defining += r.head && r.head->atom.predicate() == "above";
    }
    CHECK(defining == 6 + 12);
    CHECK(without.rules().size() == p.rules().size() - defining);
}

TEST_CASE("one block, one step") {
    const Program p = blocksworld_program(BlocksSpec::numbered(1, 1));
    // b1 starts on the table and either stays or moves to the table
    const auto sets = enumerate_answer_sets_search(p);
    CHECK(sets.size() == 2);
    CHECK(sets == enumerate_answer_sets_bruteforce(p, {.max_universe = 24}));
}
