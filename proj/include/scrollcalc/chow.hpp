#pragma once

#include <array>
#include <optional>
#include <string>

#include "scrollcalc/divisors.hpp"
#include "scrollcalc/integer.hpp"
#include "scrollcalc/scroll.hpp"

namespace scrollcalc::chow {

// The data driving the ring of the 3-fold P(E) -> F_e: base invariant,
// c1(E) as a divisor class on the base, and c2(E).
struct BundleOnSurface {
    divisors::Surface base;
    divisors::DivisorClass c1;
    Integer c2;

    static BundleOnSurface of(const scroll::ScrollFamily& family) {
        return {family.surface(), family.c1(), family.c2()};
    }
};

// Integer combination of the monomial basis
//   degree 0: 1
//   degree 1: L, φ*C0, φ*f
//   degree 2: L·φ*C0, L·φ*f, φ*pt
//   degree 3: pt
// where L is the fiberwise-degree-1 class and φ* pulls back from the base.
class ChowElement {
public:
    enum Index { one = 0, taut, c0p, fp, taut_c0p, taut_fp, ptp, pt, basis_size };

    ChowElement() { coeff_.fill(Integer(0)); }

    static ChowElement unit();
    static ChowElement tautological();
    static ChowElement pullback(const divisors::DivisorClass& d);  // degree 1
    static ChowElement pullback_point();
    static ChowElement point();

    const Integer& coeff(Index i) const { return coeff_[i]; }
    Integer& coeff(Index i) { return coeff_[i]; }

    // Largest nonzero grade, or empty for the zero element.
    std::optional<int> grade_if_homogeneous() const;
    ChowElement graded_part(int grade) const;

    ChowElement operator+(const ChowElement& o) const;
    ChowElement operator-(const ChowElement& o) const;
    ChowElement operator-() const;
    friend ChowElement operator*(const Integer& n, const ChowElement& x);
    bool operator==(const ChowElement& o) const { return coeff_ == o.coeff_; }

private:
    std::array<Integer, basis_size> coeff_;
};

std::string to_string(const ChowElement& x);

// Product in the canonical basis, using the fiber relation
// L² = L·φ*c1 - c2·φ*pt and the base intersection rules. Throws if two
// nonzero homogeneous parts multiply past degree 3.
ChowElement reduce_product(const ChowElement& x, const ChowElement& y,
                           const BundleOnSurface& bundle);

// Same product but degree > 3 contributions are dropped (they vanish on a
// 3-fold); used for total-class arithmetic.
ChowElement product_truncated(const ChowElement& x, const ChowElement& y,
                              const BundleOnSurface& bundle);

// Coefficient of pt (the evaluation of a degree-3 class).
Integer point_degree(const ChowElement& x);

// K_X = -2L + φ*(K_base + c1).
ChowElement canonical_class_X(const BundleOnSurface& bundle);

struct ChernClasses {
    ChowElement c1;
    ChowElement c2;
    ChowElement c3;
};

// Chern classes of the 3-fold from the relative tangent sequence; the
// degree-1 class is checked against -K_X.
ChernClasses chern_classes_X(const BundleOnSurface& bundle);

struct InvariantReport {
    Integer d;    // L^3
    Integer g;    // sectional genus, 2g-2 = (K+2L)L^2
    Integer n;    // h^0(E) - 1 for the generic bundle
    Integer KL2;
    Integer K2L;
    Integer c2L;
    Integer K3;
    Integer Kc2;
    Integer c3;
};

// Every entry computed through the ring and re-derived from the closed
// forms in (b, k, d); throws if the two routes disagree.
InvariantReport numerical_invariants(const scroll::ScrollFamily& family);

// Degree-3 evaluations of the normal-bundle Chern classes
// n1 = K + (n+1)L, n2, n3 and their products with c_i(X).
struct NormalChernNumbers {
    Integer n1_cubed;
    Integer n1_n2;
    Integer n3;
    Integer c1_n1sq;
    Integer c1_n2;
    Integer c1sq_n1;
    Integer c2_n1;
};

NormalChernNumbers normal_chern_numbers(const scroll::ScrollFamily& family);

// χ of the normal bundle of the embedded scroll, by Riemann-Roch on the
// 3-fold. The rational combination must clear denominators, and the result
// must agree with both closed forms (-2b+8+d)n - 29 + 16b - 3d and
// n(n+1) + 3k - 2b - 2; throws otherwise.
Integer chi_normal(const scroll::ScrollFamily& family);

}  // namespace scrollcalc::chow
