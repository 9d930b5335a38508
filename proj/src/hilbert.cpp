#include "scrollcalc/hilbert.hpp"

#include <stdexcept>
#include <string>

#include "scrollcalc/chow.hpp"
#include "scrollcalc/scroll.hpp"

namespace scrollcalc::hilbert {

namespace {

void require_scroll_range(const Integer& b, const Integer& k, const char* who) {
    if (!(5 <= b && b <= k && k <= 4 * b - 8))
        throw std::domain_error(std::string(who) + ": requires 5 <= b <= k <= 4b-8");
}

}  // namespace

Integer expected_dim(const Integer& b, const Integer& k) {
    require_scroll_range(b, k, "expected_dim");
    const Integer n = 4 * b - k - 2;
    const Integer value = n * (n + 1) + 3 * k - 2 * b - 2;
    if (value != chow::chi_normal(scroll::ScrollFamily(b, k)))
        throw std::logic_error("expected_dim: disagrees with the Riemann-Roch evaluation");
    return value;
}

Integer tau(const Integer& b, const Integer& k) {
    if (2 * k < 3 * b - 3) return 0;
    return 4 * k - 6 * b + 6;
}

Integer dim_Y_lower_bound(const Integer& b, const Integer& k) {
    require_scroll_range(b, k, "dim_Y_lower_bound");
    const Integer n = 4 * b - k - 2;
    const Integer bound = tau(b, k) + n * (n + 2) - scroll::end_dim(b, k) - 5;
    if (bound != expected_dim(b, k))
        throw std::logic_error("dim_Y_lower_bound: bound does not meet the expected dimension");
    return bound;
}

HilbertReport make_report(const Integer& b, const Integer& k) {
    require_scroll_range(b, k, "make_report");
    const auto invariants = chow::numerical_invariants(scroll::ScrollFamily(b, k));

    HilbertReport report;
    report.b = b;
    report.k = k;
    report.n = invariants.n;
    report.d = invariants.d;
    report.g = invariants.g;
    report.dim_component = expected_dim(b, k);
    report.tau = tau(b, k);
    report.aut_dim = scroll::end_dim(b, k) + 5;
    report.dim_Y_lower = dim_Y_lower_bound(b, k);
    report.consistent = report.dim_Y_lower == report.dim_component;
    return report;
}

F0Invariants f0_invariants(const Integer& k) {
    if (!(7 <= k && k <= 10)) throw std::domain_error("f0_invariants: requires 7 <= k <= 10");

    F0Invariants inv;
    inv.k = k;
    inv.d = 18 - k;
    inv.n = 16 - k;
    inv.dim_component = (20 - k) * (inv.n - 3) - 3 * inv.n + 49;
    inv.dim_proj_ext = 4 * k - 21;
    inv.identity_holds = inv.n * (inv.n + 2) - 27 + 4 * k == inv.dim_component;
    inv.n_outside_advertised_range = inv.n < 7 || inv.n > 10;

    // Exact cross-check on the quadric: A = 2C0+(6-k)f, B = C0+(k-3)f.
    const divisors::Surface f0(0);
    const divisors::DivisorClass a{2, 6 - k};
    const divisors::DivisorClass bb{1, k - 3};
    const Integer h1 = divisors::cohomology_divisor(a - bb, f0).h1;
    if (inv.dim_proj_ext != h1 - 1)
        throw std::logic_error("f0_invariants: 4k-21 does not match h^1(F_0, A-B) - 1");
    return inv;
}

TableRow table_row(const Integer& b, const Integer& k) {
    require_scroll_range(b, k, "table_row");
    const scroll::ScrollFamily family(b, k);
    const auto invariants = chow::numerical_invariants(family);
    return TableRow{invariants.d,  invariants.g, invariants.n,
                    family.c1(),   family.c2(),  expected_dim(b, k)};
}

}  // namespace scrollcalc::hilbert
