#pragma once

#include <optional>
#include <string>

#include "scrollcalc/integer.hpp"
#include "scrollcalc/p1.hpp"

namespace scrollcalc::divisors {

// The rational ruled surface P(O ⊕ O(-e)) over the projective line, e >= 0.
struct Surface {
    int e = 1;

    explicit Surface(int invariant) : e(invariant) {
        if (e < 0) throw std::invalid_argument("Surface: invariant e must be >= 0");
    }
};

// Numerical class a*C0 + b*f, with C0 the section of self-intersection -e
// and f the fiber. Any integer pair is a valid class.
struct DivisorClass {
    Integer a;  // coefficient of C0
    Integer b;  // coefficient of f

    bool operator==(const DivisorClass& other) const = default;

    DivisorClass operator+(const DivisorClass& o) const { return {a + o.a, b + o.b}; }
    DivisorClass operator-(const DivisorClass& o) const { return {a - o.a, b - o.b}; }
    DivisorClass operator-() const { return {-a, -b}; }
    friend DivisorClass operator*(const Integer& n, const DivisorClass& d) {
        return {n * d.a, n * d.b};
    }
};

// Renders e.g. "3C0+5f", "-2C0-3f", "C0", "0".
std::string to_string(const DivisorClass& d);

struct CohomologyTriple {
    Integer h0;
    Integer h1;
    Integer h2;

    Integer chi() const { return h0 - h1 + h2; }
    bool operator==(const CohomologyTriple& other) const = default;
};

// Intersection pairing: a1*a2*(-e) + a1*b2 + a2*b1.
Integer intersect(const DivisorClass& d1, const DivisorClass& d2, const Surface& s);

// -2C0 - (e+2)f.
DivisorClass canonical_class(const Surface& s);

// Riemann-Roch: D.(D-K)/2 + 1. The product is always even.
Integer chi_divisor(const DivisorClass& d, const Surface& s);

// Direct image on the line of O(D): the degree multiset {b - j*e : j=0..a}
// for a >= 0; nothing for a < 0 (the direct image vanishes).
std::optional<p1::SplittingType> pushforward_line_bundle(const DivisorClass& d,
                                                         const Surface& s);

// Exact cohomology of O(D): direct-image sums for a >= 0, vanishing at
// a = -1, Serre duality for a <= -2.
CohomologyTriple cohomology_divisor(const DivisorClass& d, const Surface& s);

struct PositivityReport {
    bool effective;
    bool nef;
    bool ample;
    bool very_ample;
};

// Effectivity is decided by h^0 > 0; the nef/ample cone tests are the
// closed-form criteria on F_e.
PositivityReport classify_divisor(const DivisorClass& d, const Surface& s);

// Closed-form effectivity: strip the C0-fixed part, then test coefficients.
// Kept as a cross-check against the h^0 test.
bool effective_cone_test(DivisorClass d, const Surface& s);

}  // namespace scrollcalc::divisors
