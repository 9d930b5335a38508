#include "scrollcalc/scroll.hpp"

#include <stdexcept>
#include <string>

namespace scrollcalc::scroll {

namespace {

void require_bundle_range(const Integer& b, const Integer& k, const char* who) {
    if (!(k >= b && b >= 4))
        throw std::domain_error(std::string(who) + ": requires k >= b >= 4");
}

// k < (3b-3)/2 as an integer comparison.
bool below_split_threshold(const Integer& b, const Integer& k) { return 2 * k < 3 * b - 3; }

}  // namespace

ScrollFamily::ScrollFamily(Integer b_, Integer k_) : b(std::move(b_)), k(std::move(k_)) {
    const auto s = surface();
    if (A() + B() != c1()) throw std::logic_error("ScrollFamily: c1 != A + B");
    if (divisors::intersect(A(), B(), s) != c2())
        throw std::logic_error("ScrollFamily: A.B != c2");
}

RegimeReport validate_family(const Integer& b, const Integer& k) {
    RegimeReport report{};
    report.bundle_range = k >= b && b >= 4;
    report.scroll_range = 5 <= b && b <= k && k <= 4 * b - 8;
    report.split_regime = below_split_threshold(b, k);
    if (b <= k && k <= 2 * b - 3)
        report.vanishing_case = VanishingCase::low_range;
    else if (2 * b - 2 <= k && k <= 4 * b - 1)
        report.vanishing_case = VanishingCase::generic_range;
    else
        report.vanishing_case = VanishingCase::out_of_range;
    return report;
}

Integer dim_ext1(const Integer& b, const Integer& k) {
    if (below_split_threshold(b, k)) return 0;
    return 4 * k - 6 * b + 7;
}

Integer h1_A(const Integer& b, const Integer& k) {
    require_bundle_range(b, k, "h1_A");
    if (k <= 2 * b - 3) return 0;
    if (k == 2 * b - 2) return 1;
    return 3 * k - 6 * b + 6;
}

CohomologyTable cohomology_table(const Integer& b, const Integer& k) {
    require_bundle_range(b, k, "cohomology_table");

    CohomologyTable table{};
    table.h1A = h1_A(b, k);
    table.h0A = 6 * b - 3 * k - 6 + table.h1A;
    table.h0B = 2 * k - 2 * b + 5;
    if (k <= 4 * b - 1) {
        table.h1E_generic = 0;
        table.h0E_generic = 4 * b - k - 1;
    }

    // The closed forms must agree with the exact pushforward computation.
    const ScrollFamily family(b, k);
    const auto s = family.surface();
    const auto cohA = divisors::cohomology_divisor(family.A(), s);
    const auto cohB = divisors::cohomology_divisor(family.B(), s);
    if (cohA.h0 != table.h0A || cohA.h1 != table.h1A || cohB.h0 != table.h0B || cohB.h1 != 0)
        throw std::logic_error("cohomology_table: closed form disagrees with exact cohomology");
    return table;
}

Integer end_dim(const Integer& b, const Integer& k) {
    require_bundle_range(b, k, "end_dim");
    if (below_split_threshold(b, k)) return 6 * b - 4 * k - 5;
    return 1;
}

bool check_h0B_ge_h1A(const Integer& b, const Integer& k) {
    require_bundle_range(b, k, "check_h0B_ge_h1A");
    return 2 * k - 2 * b + 5 >= h1_A(b, k);
}

}  // namespace scrollcalc::scroll
