#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schub/flag.hpp"
#include "schub/pipedream.hpp"

using namespace schub;

TEST_CASE("strand tracing") {
    // The worked 4x4 example: crosses (1,3),(2,1),(2,2),(3,1) trace to 1342.
    PipeDream sample(4, {{1, 3}, {2, 1}, {2, 2}, {3, 1}});
    CHECK(trace_permutation(sample) == Permutation({1, 3, 4, 2}));
    // Strands 3 and 4 intersect twice, so the dream is not reduced.
    CHECK(!is_reduced(sample));

    CHECK(trace_permutation(PipeDream(3, {})) == Permutation::identity(3));
    CHECK(is_reduced(PipeDream(3, {})));

    CHECK(trace_permutation(PipeDream(2, {{1, 1}})) == Permutation({2, 1}));

    CHECK_THROWS_AS(PipeDream(3, {{2, 2}}), std::invalid_argument);
}

TEST_CASE("enumeration of reduced pipe dreams") {
    auto dreams132 = enumerate_reduced(Permutation({1, 3, 2}));
    REQUIRE(dreams132.size() == 2);
    CHECK(dreams132[0].crosses == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(dreams132[1].crosses == std::vector<std::pair<int, int>>{{2, 1}});
    for (const PipeDream& p : dreams132) CHECK(is_reduced(p));

    CHECK(enumerate_reduced(Permutation({1, 4, 3, 2})).size() == 5);

    auto dreams_id = enumerate_reduced(Permutation::identity(4));
    REQUIRE(dreams_id.size() == 1);
    CHECK(dreams_id[0].crosses.empty());

    // Each enumerated dream is reduced, traces to w, and has l(w) crosses.
    for (const Permutation& w : all_permutations(4))
        for (const PipeDream& p : enumerate_reduced(w)) {
            CHECK(is_reduced(p));
            CHECK(trace_permutation(p) == w);
            CHECK(static_cast<int>(p.crosses.size()) == w.length());
        }
}

TEST_CASE("Fomin-Kirillov sums") {
    // S_{(1432)} again, now from pipe dreams.
    MultiPoly expected(3);
    expected.add_term({2, 1, 0}, Rat(1));
    expected.add_term({1, 2, 0}, Rat(1));
    expected.add_term({2, 0, 1}, Rat(1));
    expected.add_term({1, 1, 1}, Rat(1));
    expected.add_term({0, 2, 1}, Rat(1));
    CHECK(fk_polynomial(Permutation({1, 4, 3, 2})) == expected);

    CHECK(fk_polynomial(Permutation::identity(3)) == MultiPoly::constant(Rat(1), 2));

    // s_2 in S_3: the two dreams contribute x1 and x2.
    CHECK(fk_polynomial(Permutation({1, 3, 2})) ==
          MultiPoly::variable(1, 2) + MultiPoly::variable(2, 2));

    // Cross-validation against divided differences on all of S_4.
    for (const Permutation& w : all_permutations(4))
        CHECK(fk_polynomial(w) == schubert_polynomial(w).poly);
}
