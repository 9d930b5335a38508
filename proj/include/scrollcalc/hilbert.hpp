#pragma once

#include <string>

#include "scrollcalc/divisors.hpp"
#include "scrollcalc/integer.hpp"

namespace scrollcalc::hilbert {

// Expected dimension n(n+1) + 3k - 2b - 2 of the component through the
// embedded scroll, with n = 4b-k-2. Requires 5 <= b <= k <= 4b-8, and the
// value is cross-checked against the Riemann-Roch evaluation.
Integer expected_dim(const Integer& b, const Integer& k);

// Parameter-count lower bound tau + n(n+2) - h^0(E⊗E^v) - 5 for the locus
// of scrolls; equals expected_dim in both regimes (asserted).
Integer dim_Y_lower_bound(const Integer& b, const Integer& k);

// tau: projective-bundle moduli count, 0 in the split regime and
// 4k-6b+6 = dim P(Ext^1(B,A)) + ... in the indecomposable one.
Integer tau(const Integer& b, const Integer& k);

struct HilbertReport {
    Integer b;
    Integer k;
    Integer n;
    Integer d;
    Integer g;
    Integer dim_component;
    Integer tau;
    Integer aut_dim;      // h^0(E⊗E^v) + 5
    Integer dim_Y_lower;
    bool consistent;      // dim_Y_lower == dim_component
};

HilbertReport make_report(const Integer& b, const Integer& k);

// The quadric-base variant: scrolls over F_0 with c1 = 3C0 + 3f and
// c2 = k in 7..10, following the published component-dimension formula.
struct F0Invariants {
    Integer k;
    Integer d;              // 18 - k
    Integer n;              // 16 - k
    Integer dim_component;  // (20-k)(n-3) - 3n + 49
    Integer dim_proj_ext;   // 4k - 21, cross-checked as h^1(F_0, A-B) - 1
    bool identity_holds;    // n(n+2) - 27 + 4k equals dim_component
    // n = 16-k lands in 6..9 here while the source table advertises
    // embeddings in P^7..P^10; reported, not reconciled.
    bool n_outside_advertised_range;
};

F0Invariants f0_invariants(const Integer& k);

struct TableRow {
    Integer d;
    Integer g;
    Integer n;
    divisors::DivisorClass c1;
    Integer c2;
    Integer dim;
};

TableRow table_row(const Integer& b, const Integer& k);

}  // namespace scrollcalc::hilbert
