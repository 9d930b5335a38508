#include <doctest.h>

#include "scrollcalc/cech.hpp"
#include "scrollcalc/divisors.hpp"
#include "scrollcalc/scroll.hpp"

using namespace scrollcalc;
using scroll::ScrollFamily;
using scroll::VanishingCase;

TEST_CASE("family classes and regimes") {
    const ScrollFamily family(5, 11);
    CHECK(family.A() == divisors::DivisorClass{2, -3});
    CHECK(family.B() == divisors::DivisorClass{1, 8});
    CHECK(family.c1() == divisors::DivisorClass{3, 5});

    const auto r_5_11 = scroll::validate_family(5, 11);
    CHECK(r_5_11.bundle_range);
    CHECK(r_5_11.scroll_range);
    CHECK(!r_5_11.split_regime);
    CHECK(r_5_11.vanishing_case == VanishingCase::generic_range);

    const auto r_4_4 = scroll::validate_family(4, 4);
    CHECK(r_4_4.bundle_range);
    CHECK(!r_4_4.scroll_range);

    const auto r_5_13 = scroll::validate_family(5, 13);
    CHECK(!r_5_13.scroll_range);  // k > 4b-8

    CHECK(scroll::validate_family(5, 5).split_regime);
    CHECK(scroll::validate_family(5, 6).vanishing_case == VanishingCase::low_range);
    CHECK(scroll::validate_family(5, 21).vanishing_case == VanishingCase::out_of_range);
}

TEST_CASE("extension space dimension") {
    CHECK(scroll::dim_ext1(5, 11) == 21);
    CHECK(scroll::dim_ext1(5, 5) == 0);
    CHECK(scroll::dim_ext1(5, 8) == 9);
}

TEST_CASE("h1 of A") {
    CHECK(scroll::h1_A(5, 7) == 0);
    CHECK(scroll::h1_A(5, 8) == 1);
    CHECK(scroll::h1_A(5, 11) == 9);
    CHECK_THROWS_AS(scroll::h1_A(3, 5), std::domain_error);
    CHECK_THROWS_AS(scroll::h1_A(5, 4), std::domain_error);
}

TEST_CASE("cohomology table") {
    const auto t_5_11 = scroll::cohomology_table(5, 11);
    CHECK(t_5_11.h0A == 0);
    CHECK(t_5_11.h1A == 9);
    CHECK(t_5_11.h0B == 17);
    CHECK(*t_5_11.h0E_generic == 8);
    CHECK(*t_5_11.h1E_generic == 0);

    const auto t_5_5 = scroll::cohomology_table(5, 5);
    CHECK(t_5_5.h0A == 9);
    CHECK(t_5_5.h1A == 0);
    CHECK(t_5_5.h0B == 5);
    CHECK(*t_5_5.h0E_generic == 14);
    CHECK(*t_5_5.h1E_generic == 0);

    const auto t_5_8 = scroll::cohomology_table(5, 8);
    CHECK(t_5_8.h0A == 1);
    CHECK(t_5_8.h1A == 1);
    CHECK(t_5_8.h0B == 11);
    CHECK(*t_5_8.h0E_generic == 11);

    // Above k = 4b-1 no genericity statement applies.
    const auto top = scroll::cohomology_table(5, 20);
    CHECK(!top.h0E_generic.has_value());
    CHECK(!top.h1E_generic.has_value());

    CHECK_THROWS_AS(scroll::cohomology_table(4, 3), std::domain_error);
}

TEST_CASE("endomorphism dimension") {
    CHECK(scroll::end_dim(5, 5) == 5);
    CHECK(scroll::end_dim(5, 11) == 1);
    CHECK(scroll::end_dim(6, 7) == 3);
}

TEST_CASE("split-regime endomorphisms match O^2 + (A-B) + (B-A)") {
    const divisors::Surface f1(1);
    for (Integer b = 4; b <= 12; ++b) {
        for (Integer k = b; 2 * k < 3 * b - 3; ++k) {
            const ScrollFamily family(b, k);
            const Integer direct =
                2 + divisors::cohomology_divisor(family.A() - family.B(), f1).h0 +
                divisors::cohomology_divisor(family.B() - family.A(), f1).h0;
            CHECK(scroll::end_dim(b, k) == direct);
        }
    }
}

TEST_CASE("section bound versus h1") {
    CHECK(scroll::check_h0B_ge_h1A(5, 19));
    CHECK(!scroll::check_h0B_ge_h1A(5, 20));
    CHECK(scroll::check_h0B_ge_h1A(5, 5));
    for (Integer b = 4; b <= 10; ++b)
        for (Integer k = b; k <= 5 * b; ++k)
            CHECK(scroll::check_h0B_ge_h1A(b, k) == (k <= 4 * b - 1));
}

TEST_CASE("generic table entries agree with the sampled oracle") {
    for (const auto& [b, k] : std::vector<std::pair<int, int>>{{5, 8}, {5, 11}, {6, 13}, {7, 9}}) {
        const auto table = scroll::cohomology_table(b, k);
        const auto oracle = cech::generic_extension_cohomology(b, k, 5, 0);
        CHECK(*table.h0E_generic == oracle.h0);
        CHECK(*table.h1E_generic == oracle.h1);
    }
}

TEST_CASE("closed forms agree with exact cohomology on the grid") {
    const divisors::Surface f1(1);
    for (Integer b = 4; b <= 10; ++b) {
        for (Integer k = b; k <= 4 * b; ++k) {
            const ScrollFamily family(b, k);
            const auto table = scroll::cohomology_table(b, k);  // asserts internally
            CHECK(divisors::cohomology_divisor(family.A() - family.B(), f1).h1 ==
                  scroll::dim_ext1(b, k));
            CHECK(table.h0B == 2 * k - 2 * b + 5);
        }
    }
}
