#include <doctest.h>

#include "scrollcalc/hilbert.hpp"

using namespace scrollcalc;

TEST_CASE("expected dimension") {
    CHECK(hilbert::expected_dim(5, 11) == 77);
    CHECK(hilbert::expected_dim(5, 10) == 90);
    CHECK(hilbert::expected_dim(5, 12) == 66);  // boundary k = 4b-8
    CHECK_THROWS_AS(hilbert::expected_dim(4, 4), std::domain_error);
    CHECK_THROWS_AS(hilbert::expected_dim(5, 13), std::domain_error);
}

TEST_CASE("parameter-count lower bound") {
    CHECK(hilbert::dim_Y_lower_bound(5, 11) == 77);   // 20 + 63 - 1 - 5
    CHECK(hilbert::dim_Y_lower_bound(5, 5) == 185);   // 0 + 195 - 5 - 5
    CHECK(hilbert::dim_Y_lower_bound(5, 8) == 122);   // 8 + 120 - 1 - 5

    for (Integer b = 5; b <= 10; ++b)
        for (Integer k = b; k <= 4 * b - 8; ++k)
            CHECK(hilbert::dim_Y_lower_bound(b, k) == hilbert::expected_dim(b, k));
}

TEST_CASE("full report") {
    const auto report = hilbert::make_report(5, 11);
    CHECK(report.n == 7);
    CHECK(report.d == 10);
    CHECK(report.g == 5);
    CHECK(report.dim_component == 77);
    CHECK(report.tau == 20);
    CHECK(report.aut_dim == 6);
    CHECK(report.dim_Y_lower == 77);
    CHECK(report.consistent);

    const auto split = hilbert::make_report(5, 5);
    CHECK(split.tau == 0);
    CHECK(split.aut_dim == 10);  // h0(End) + 5 = 5 + 5
    CHECK(split.consistent);
}

TEST_CASE("quadric-base invariants") {
    const auto k7 = hilbert::f0_invariants(7);
    CHECK(k7.d == 11);
    CHECK(k7.n == 9);
    CHECK(k7.dim_component == 100);
    CHECK(k7.dim_proj_ext == 7);
    CHECK(k7.identity_holds);
    CHECK(!k7.n_outside_advertised_range);

    const auto k10 = hilbert::f0_invariants(10);
    CHECK(k10.d == 8);
    CHECK(k10.n == 6);
    CHECK(k10.dim_component == 61);
    CHECK(k10.identity_holds);
    CHECK(k10.n_outside_advertised_range);  // n = 6 while 7..10 is advertised

    for (Integer k = 7; k <= 10; ++k) {
        const auto inv = hilbert::f0_invariants(k);
        CHECK(inv.n + k == 16);
        CHECK(inv.identity_holds);
    }

    CHECK_THROWS_AS(hilbert::f0_invariants(6), std::domain_error);
    CHECK_THROWS_AS(hilbert::f0_invariants(11), std::domain_error);
}

TEST_CASE("table rows") {
    const auto row1 = hilbert::table_row(5, 11);
    CHECK(row1.d == 10);
    CHECK(row1.g == 5);
    CHECK(row1.n == 7);
    CHECK(row1.c1 == divisors::DivisorClass{3, 5});
    CHECK(row1.c2 == 11);
    CHECK(row1.dim == 77);

    const auto row2 = hilbert::table_row(5, 10);
    CHECK(row2.d == 11);
    CHECK(row2.g == 5);
    CHECK(row2.n == 8);
    CHECK(row2.dim == 90);

    // Derived row, frozen after confirming it against both dimension
    // identities (expected_dim checks the Riemann-Roch route internally).
    const auto row3 = hilbert::table_row(6, 10);
    CHECK(row3.d == 17);
    CHECK(row3.g == 7);
    CHECK(row3.n == 12);
    CHECK(row3.c1 == divisors::DivisorClass{3, 6});
    CHECK(row3.dim == 172);
    CHECK(row3.dim == (-2 * 6 + 8 + 17) * 12 - 29 + 16 * 6 - 3 * 17);
}
