#include <doctest.h>

#include "scrollcalc/p1.hpp"

using namespace scrollcalc;
using p1::SplittingType;

TEST_CASE("splitting cohomology of standard types") {
    const SplittingType five_ones({1, 1, 1, 1, 1});
    CHECK(p1::splitting_cohomology(five_ones, 0).h0 == 10);
    CHECK(p1::splitting_cohomology(five_ones, 0).h1 == 0);

    const SplittingType negative_two({-2});
    CHECK(p1::splitting_cohomology(negative_two, 0).h0 == 0);
    CHECK(p1::splitting_cohomology(negative_two, 0).h1 == 1);

    const SplittingType mixed({0, 0, 1, 1, 1});
    CHECK(p1::splitting_cohomology(mixed, 0).h0 == 8);
    CHECK(p1::splitting_cohomology(mixed, 0).h1 == 0);
}

TEST_CASE("balanced partitions") {
    CHECK(p1::balanced_partition(5, 5) == SplittingType({1, 1, 1, 1, 1}));
    CHECK(p1::balanced_partition(3, 5) == SplittingType({0, 0, 1, 1, 1}));
    CHECK(p1::balanced_partition(-7, 5) == SplittingType({-2, -2, -1, -1, -1}));
    CHECK_THROWS_AS(p1::balanced_partition(3, 0), std::invalid_argument);
}

TEST_CASE("balanced partition properties") {
    for (Integer degree = -30; degree <= 30; ++degree) {
        for (Integer rank = 1; rank <= 6; ++rank) {
            const auto type = p1::balanced_partition(degree, rank);
            CHECK(type.degree() == degree);
            CHECK(Integer(type.rank()) == rank);
            CHECK(type.alphas().back() - type.alphas().front() <= 1);
            // Re-balancing a balanced type is the identity.
            CHECK(p1::balanced_partition(type.degree(), Integer(type.rank())) == type);
        }
    }
}

TEST_CASE("direct images of the family bundle") {
    const auto at_5_11 = p1::pushforward_scroll_bundle(5, 11);
    CHECK(at_5_11.sub == SplittingType({-5, -4, -3}));
    CHECK(at_5_11.quot == SplittingType({7, 8}));

    const auto at_5_5 = p1::pushforward_scroll_bundle(5, 5);
    CHECK(at_5_5.sub == SplittingType({1, 2, 3}));
    CHECK(at_5_5.quot == SplittingType({1, 2}));

    const auto at_4_8 = p1::pushforward_scroll_bundle(4, 8);
    CHECK(at_4_8.sub == SplittingType({-4, -3, -2}));
    CHECK(at_4_8.quot == SplittingType({5, 6}));

    for (Integer b = 4; b <= 12; ++b)
        for (Integer k = b; k <= 4 * b; ++k) {
            const auto image = p1::pushforward_scroll_bundle(b, k);
            CHECK(image.sub.degree() + image.quot.degree() == 4 * b - k - 6);
        }
}

TEST_CASE("line duality through the closed forms") {
    const SplittingType type({-3, -1, 0, 2, 5});
    for (Integer t = -4; t <= 4; ++t) {
        std::vector<Integer> dual;
        for (const auto& alpha : type.alphas()) dual.push_back(-alpha - 2 - t);
        CHECK(p1::splitting_cohomology(type, t).h1 ==
              p1::splitting_cohomology(SplittingType(dual), 0).h0);
    }
}
