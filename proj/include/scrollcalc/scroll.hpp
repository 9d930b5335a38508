#pragma once

#include <optional>

#include "scrollcalc/divisors.hpp"
#include "scrollcalc/integer.hpp"

namespace scrollcalc::scroll {

// The rank-2 family E(b, k) on F_1: c1 = 3C0 + bf, c2 = k, presented as an
// extension of B = C0 + (k-b+2)f by A = 2C0 + (2b-k-2)f.
struct ScrollFamily {
    Integer b;
    Integer k;

    ScrollFamily(Integer b, Integer k);

    divisors::Surface surface() const { return divisors::Surface(1); }
    divisors::DivisorClass A() const { return {2, 2 * b - k - 2}; }
    divisors::DivisorClass B() const { return {1, k - b + 2}; }
    divisors::DivisorClass c1() const { return {3, b}; }
    Integer c2() const { return k; }
};

// Which of the two nonspeciality arguments covers (b, k): the low range
// b <= k <= 2b-3 works for every class, the generic range 2b-2 <= k <= 4b-1
// for the general one.
enum class VanishingCase { low_range, generic_range, out_of_range };

struct RegimeReport {
    bool bundle_range;  // k >= b >= 4
    bool scroll_range;  // 5 <= b <= k <= 4b-8
    bool split_regime;  // k < (3b-3)/2: the only class is the split one
    VanishingCase vanishing_case;
};

RegimeReport validate_family(const Integer& b, const Integer& k);

// dim Ext^1(B, A): 0 below the split threshold, else 4k-6b+7.
Integer dim_ext1(const Integer& b, const Integer& k);

// h^1(A) in the three ranges: 0 / 1 / 3k-6b+6. Requires k >= b >= 4.
Integer h1_A(const Integer& b, const Integer& k);

struct CohomologyTable {
    Integer h0A;
    Integer h1A;
    Integer h0B;
    // Empty above k = 4b-1, where no genericity statement applies.
    std::optional<Integer> h0E_generic;
    std::optional<Integer> h1E_generic;
};

// Closed-form table, cross-checked entry by entry against exact divisor
// cohomology. Requires k >= b >= 4.
CohomologyTable cohomology_table(const Integer& b, const Integer& k);

// h^0(E ⊗ E^v): 6b-4k-5 in the split regime, 1 for the generic
// indecomposable bundle.
Integer end_dim(const Integer& b, const Integer& k);

// h^0(B) >= h^1(A) holds exactly for k <= 4b-1.
bool check_h0B_ge_h1A(const Integer& b, const Integer& k);

}  // namespace scrollcalc::scroll
