#include <doctest.h>

#include "scrollcalc/divisors.hpp"

using namespace scrollcalc;
using divisors::CohomologyTriple;
using divisors::DivisorClass;
using divisors::Surface;

namespace {
const DivisorClass C0{1, 0};
const DivisorClass f{0, 1};
}  // namespace

TEST_CASE("intersection pairing") {
    const Surface f1(1);
    CHECK(divisors::intersect(C0, C0, f1) == -1);
    CHECK(divisors::intersect(f, f, f1) == 0);
    CHECK(divisors::intersect(f, f, Surface(3)) == 0);
    CHECK(divisors::intersect(C0, f, f1) == 1);
    CHECK(divisors::intersect({3, 5}, {1, 2}, f1) == 8);

    // Symmetric bilinear.
    for (int e = 0; e <= 2; ++e) {
        const Surface s(e);
        for (Integer a1 = -3; a1 <= 3; ++a1)
            for (Integer b1 = -3; b1 <= 3; ++b1)
                for (Integer a2 = -3; a2 <= 3; ++a2)
                    for (Integer b2 = -3; b2 <= 3; ++b2) {
                        const DivisorClass d1{a1, b1};
                        const DivisorClass d2{a2, b2};
                        CHECK(divisors::intersect(d1, d2, s) ==
                              divisors::intersect(d2, d1, s));
                        CHECK(divisors::intersect(d1 + d2, d1, s) ==
                              divisors::intersect(d1, d1, s) +
                                  divisors::intersect(d2, d1, s));
                    }
    }
}

TEST_CASE("canonical class") {
    CHECK(divisors::canonical_class(Surface(1)) == DivisorClass{-2, -3});
    CHECK(divisors::canonical_class(Surface(0)) == DivisorClass{-2, -2});
    CHECK(divisors::canonical_class(Surface(2)) == DivisorClass{-2, -4});
    CHECK_THROWS_AS(Surface(-1), std::invalid_argument);
}

TEST_CASE("Euler characteristic by Riemann-Roch") {
    const Surface f1(1);
    CHECK(divisors::chi_divisor({0, 0}, f1) == 1);
    CHECK(divisors::chi_divisor({2, -3}, f1) == -9);   // A at (b,k)=(5,11)
    CHECK(divisors::chi_divisor({1, 8}, f1) == 17);    // B at (b,k)=(5,11)
}

TEST_CASE("direct image on the line") {
    const Surface f1(1);
    CHECK(*divisors::pushforward_line_bundle({1, 8}, f1) == p1::SplittingType({8, 7}));
    CHECK(*divisors::pushforward_line_bundle({2, 0}, f1) == p1::SplittingType({0, -1, -2}));
    CHECK(*divisors::pushforward_line_bundle({3, 5}, f1) == p1::SplittingType({5, 4, 3, 2}));
    CHECK(!divisors::pushforward_line_bundle({-1, 4}, f1).has_value());
}

TEST_CASE("exact cohomology") {
    const Surface f1(1);
    CHECK(divisors::cohomology_divisor({0, 0}, f1) == CohomologyTriple{1, 0, 0});
    CHECK(divisors::cohomology_divisor({2, 0}, f1) == CohomologyTriple{1, 1, 0});
    CHECK(divisors::cohomology_divisor({1, -11}, f1) == CohomologyTriple{0, 21, 0});
    CHECK(divisors::cohomology_divisor(divisors::canonical_class(f1), f1) ==
          CohomologyTriple{0, 0, 1});
}

TEST_CASE("positivity classification") {
    const Surface f1(1);
    const auto hyperplane = divisors::classify_divisor({1, 2}, f1);
    CHECK(hyperplane.very_ample);
    CHECK(hyperplane.ample);
    CHECK(hyperplane.nef);
    CHECK(hyperplane.effective);

    const auto fiber = divisors::classify_divisor(f, f1);
    CHECK(fiber.effective);
    CHECK(fiber.nef);
    CHECK(!fiber.ample);

    // K - A classes of the family: -4C0 - (2b-k+1)f.
    CHECK(!divisors::classify_divisor({-4, 0}, f1).effective);
    CHECK(!divisors::classify_divisor({-4, -2}, f1).effective);
}

TEST_CASE("duality, Riemann-Roch and cone properties on a grid") {
    for (int e = 0; e <= 3; ++e) {
        const Surface s(e);
        const auto canonical = divisors::canonical_class(s);
        for (Integer a = -12; a <= 12; ++a) {
            for (Integer b = -12; b <= 12; ++b) {
                const DivisorClass d{a, b};
                const auto coh = divisors::cohomology_divisor(d, s);
                const auto dual = divisors::cohomology_divisor(canonical - d, s);
                CHECK(coh.h0 == dual.h2);
                CHECK(coh.h1 == dual.h1);
                CHECK(coh.h2 == dual.h0);
                CHECK(coh.chi() == divisors::chi_divisor(d, s));

                const auto flags = divisors::classify_divisor(d, s);
                CHECK(flags.effective == (coh.h0 > 0));
                CHECK(flags.effective == divisors::effective_cone_test(d, s));
                if (flags.ample) CHECK(flags.nef);
                if (flags.nef) CHECK(divisors::intersect(d, d, s) >= 0);
            }
        }
    }
}

TEST_CASE("vanishing of the family classes") {
    const Surface f1(1);
    for (Integer b = 4; b <= 9; ++b) {
        for (Integer k = b; k <= 4 * b; ++k) {
            const DivisorClass a{2, 2 * b - k - 2};
            const DivisorClass bb{1, k - b + 2};
            CHECK(divisors::cohomology_divisor(a, f1).h2 == 0);
            const auto cohB = divisors::cohomology_divisor(bb, f1);
            CHECK(cohB.h1 == 0);
            CHECK(cohB.h2 == 0);
        }
    }
}

TEST_CASE("divisor rendering") {
    CHECK(divisors::to_string({3, 5}) == "3C0+5f");
    CHECK(divisors::to_string({-2, -3}) == "-2C0-3f");
    CHECK(divisors::to_string({1, 0}) == "C0");
    CHECK(divisors::to_string({0, -1}) == "-f");
    CHECK(divisors::to_string({0, 0}) == "0");
}
