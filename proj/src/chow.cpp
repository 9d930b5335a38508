#include "scrollcalc/chow.hpp"

#include <stdexcept>
#include <utility>

namespace scrollcalc::chow {

namespace {

constexpr int kGrade[ChowElement::basis_size] = {0, 1, 1, 1, 2, 2, 2, 3};

const char* kName[ChowElement::basis_size] = {"1",    "L",    "C0p", "fp",
                                              "L.C0p", "L.fp", "ptp", "pt"};

// Product of two basis monomials with grades summing to <= 3.
ChowElement monomial_product(int i, int j, const BundleOnSurface& bundle) {
    using E = ChowElement;
    if (i > j) std::swap(i, j);

    ChowElement out;
    const auto set = [&out](E::Index idx, Integer value) {
        out.coeff(idx) = std::move(value);
    };

    const Integer e(bundle.base.e);
    const Integer& c1a = bundle.c1.a;
    const Integer& c1b = bundle.c1.b;
    const Integer& c2 = bundle.c2;

    if (i == E::one) {
        set(static_cast<E::Index>(j), 1);
        return out;
    }

    if (i == E::taut) {
        switch (j) {
            case E::taut:  // the fiber relation
                set(E::taut_c0p, c1a);
                set(E::taut_fp, c1b);
                set(E::ptp, -c2);
                return out;
            case E::c0p: set(E::taut_c0p, 1); return out;
            case E::fp: set(E::taut_fp, 1); return out;
            case E::taut_c0p: set(E::pt, c1b - e * c1a); return out;
            case E::taut_fp: set(E::pt, c1a); return out;
            case E::ptp: set(E::pt, 1); return out;
            default: break;
        }
    }
    if (i == E::c0p) {
        switch (j) {
            case E::c0p: set(E::ptp, -e); return out;
            case E::fp: set(E::ptp, 1); return out;
            case E::taut_c0p: set(E::pt, -e); return out;
            case E::taut_fp: set(E::pt, 1); return out;
            case E::ptp: return out;  // base classes above degree 2 vanish
            default: break;
        }
    }
    if (i == E::fp) {
        switch (j) {
            case E::fp: return out;
            case E::taut_c0p: set(E::pt, 1); return out;
            case E::taut_fp: return out;
            case E::ptp: return out;
            default: break;
        }
    }
    throw std::domain_error("monomial_product: grade overflow");
}

ChowElement product_impl(const ChowElement& x, const ChowElement& y,
                         const BundleOnSurface& bundle, bool truncate) {
    ChowElement out;
    for (int i = 0; i < ChowElement::basis_size; ++i) {
        const Integer& xi = x.coeff(static_cast<ChowElement::Index>(i));
        if (xi == 0) continue;
        for (int j = 0; j < ChowElement::basis_size; ++j) {
            const Integer& yj = y.coeff(static_cast<ChowElement::Index>(j));
            if (yj == 0) continue;
            if (kGrade[i] + kGrade[j] > 3) {
                if (truncate) continue;
                throw std::domain_error("reduce_product: grade overflow");
            }
            out = out + (xi * yj) * monomial_product(i, j, bundle);
        }
    }
    return out;
}

}  // namespace

ChowElement ChowElement::unit() {
    ChowElement x;
    x.coeff_[one] = 1;
    return x;
}

ChowElement ChowElement::tautological() {
    ChowElement x;
    x.coeff_[taut] = 1;
    return x;
}

ChowElement ChowElement::pullback(const divisors::DivisorClass& d) {
    ChowElement x;
    x.coeff_[c0p] = d.a;
    x.coeff_[fp] = d.b;
    return x;
}

ChowElement ChowElement::pullback_point() {
    ChowElement x;
    x.coeff_[ptp] = 1;
    return x;
}

ChowElement ChowElement::point() {
    ChowElement x;
    x.coeff_[pt] = 1;
    return x;
}

std::optional<int> ChowElement::grade_if_homogeneous() const {
    std::optional<int> grade;
    for (int i = 0; i < basis_size; ++i) {
        if (coeff_[i] == 0) continue;
        if (grade && *grade != kGrade[i]) return std::nullopt;
        grade = kGrade[i];
    }
    return grade;
}

ChowElement ChowElement::graded_part(int grade) const {
    ChowElement out;
    for (int i = 0; i < basis_size; ++i)
        if (kGrade[i] == grade) out.coeff_[i] = coeff_[i];
    return out;
}

ChowElement ChowElement::operator+(const ChowElement& o) const {
    ChowElement out;
    for (int i = 0; i < basis_size; ++i) out.coeff_[i] = coeff_[i] + o.coeff_[i];
    return out;
}

ChowElement ChowElement::operator-(const ChowElement& o) const {
    ChowElement out;
    for (int i = 0; i < basis_size; ++i) out.coeff_[i] = coeff_[i] - o.coeff_[i];
    return out;
}

ChowElement ChowElement::operator-() const {
    ChowElement out;
    for (int i = 0; i < basis_size; ++i) out.coeff_[i] = -coeff_[i];
    return out;
}

ChowElement operator*(const Integer& n, const ChowElement& x) {
    ChowElement out;
    for (int i = 0; i < ChowElement::basis_size; ++i)
        out.coeff(static_cast<ChowElement::Index>(i)) =
            n * x.coeff(static_cast<ChowElement::Index>(i));
    return out;
}

std::string to_string(const ChowElement& x) {
    std::string out;
    for (int i = 0; i < ChowElement::basis_size; ++i) {
        const Integer& c = x.coeff(static_cast<ChowElement::Index>(i));
        if (c == 0) continue;
        if (!out.empty() && c > 0) out += "+";
        if (c == -1) out += "-";
        else if (c != 1) out += c.str() + "*";
        out += kName[i];
    }
    return out.empty() ? "0" : out;
}

ChowElement reduce_product(const ChowElement& x, const ChowElement& y,
                           const BundleOnSurface& bundle) {
    return product_impl(x, y, bundle, false);
}

ChowElement product_truncated(const ChowElement& x, const ChowElement& y,
                              const BundleOnSurface& bundle) {
    return product_impl(x, y, bundle, true);
}

Integer point_degree(const ChowElement& x) { return x.coeff(ChowElement::pt); }

ChowElement canonical_class_X(const BundleOnSurface& bundle) {
    const auto base_part = divisors::canonical_class(bundle.base) + bundle.c1;
    return Integer(-2) * ChowElement::tautological() + ChowElement::pullback(base_part);
}

ChernClasses chern_classes_X(const BundleOnSurface& bundle) {
    const ChowElement L = ChowElement::tautological();
    const ChowElement c1p = ChowElement::pullback(bundle.c1);

    // Total class of the base tangent bundle, pulled back: c1 = -K, c2 = 4.
    const ChowElement base_total =
        ChowElement::unit() + ChowElement::pullback(-divisors::canonical_class(bundle.base)) +
        Integer(4) * ChowElement::pullback_point();

    // Relative tangent class; its degree-2 term is the fiber relation and
    // reduces to zero.
    const ChowElement rel_deg2 = reduce_product(L, L, bundle) - reduce_product(L, c1p, bundle) +
                                 bundle.c2 * ChowElement::pullback_point();
    const ChowElement rel_total =
        ChowElement::unit() + (Integer(2) * L - c1p) + rel_deg2;

    const ChowElement total = product_truncated(rel_total, base_total, bundle);
    ChernClasses cc{total.graded_part(1), total.graded_part(2), total.graded_part(3)};
    if (!(cc.c1 == -canonical_class_X(bundle)))
        throw std::logic_error("chern_classes_X: c1 does not match -K_X");
    return cc;
}

InvariantReport numerical_invariants(const scroll::ScrollFamily& family) {
    if (!(family.k >= family.b && family.b >= 4))
        throw std::domain_error("numerical_invariants: requires k >= b >= 4");

    const auto bundle = BundleOnSurface::of(family);
    const ChowElement L = ChowElement::tautological();
    const ChowElement K = canonical_class_X(bundle);
    const auto prod = [&bundle](const ChowElement& x, const ChowElement& y) {
        return reduce_product(x, y, bundle);
    };

    const ChowElement L2 = prod(L, L);
    const ChowElement K2 = prod(K, K);
    const auto cc = chern_classes_X(bundle);

    InvariantReport r;
    r.d = point_degree(prod(L2, L));
    r.KL2 = point_degree(prod(K, L2));
    r.K2L = point_degree(prod(K2, L));
    r.K3 = point_degree(prod(K2, K));
    r.c2L = point_degree(prod(cc.c2, L));
    r.Kc2 = point_degree(prod(K, cc.c2));
    r.c3 = point_degree(cc.c3);

    const Integer two_g_minus_2 = r.KL2 + 2 * r.d;
    if (two_g_minus_2 % 2 != 0) throw std::logic_error("numerical_invariants: odd (K+2L)L^2");
    r.g = two_g_minus_2 / 2 + 1;
    r.n = 4 * family.b - family.k - 2;

    // The same quantities from the closed forms in (b, k, d).
    const Integer& b = family.b;
    const Integer& k = family.k;
    const Integer d = 6 * b - 9 - k;
    const bool consistent = r.d == d && r.KL2 == -2 * d + 4 * b - 12 &&
                            r.K2L == 4 * d - 14 * b + 41 && r.c2L == 2 * b + 7 &&
                            r.K3 == -8 * d + 36 * b - 102 && r.Kc2 == -24 && r.c3 == 8 &&
                            r.g == 2 * b - 5;
    if (!consistent)
        throw std::logic_error("numerical_invariants: ring evaluation disagrees with closed forms");
    return r;
}

NormalChernNumbers normal_chern_numbers(const scroll::ScrollFamily& family) {
    const auto regime = scroll::validate_family(family.b, family.k);
    if (!regime.bundle_range || regime.vanishing_case == scroll::VanishingCase::out_of_range)
        throw std::domain_error("normal_chern_numbers: (b, k) outside the nonspeciality ranges");

    const auto bundle = BundleOnSurface::of(family);
    const auto prod = [&bundle](const ChowElement& x, const ChowElement& y) {
        return reduce_product(x, y, bundle);
    };

    const Integer n = 4 * family.b - family.k - 2;
    const ChowElement L = ChowElement::tautological();
    const ChowElement K = canonical_class_X(bundle);
    const auto cc = chern_classes_X(bundle);

    const ChowElement L2 = prod(L, L);
    const ChowElement K2 = prod(K, K);
    const ChowElement KL = prod(K, L);

    const ChowElement n1 = K + (n + 1) * L;
    const ChowElement n2 =
        (n * (n + 1) / 2) * L2 + (n + 1) * KL + K2 - cc.c2;
    const ChowElement n3 = ((n - 1) * n * (n + 1) / 6) * prod(L2, L) +
                           (n * (n + 1) / 2) * prod(K, L2) + (n + 1) * prod(K2, L) -
                           (n + 1) * prod(cc.c2, L) - Integer(2) * prod(cc.c2, K) +
                           prod(K2, K) - cc.c3;

    const ChowElement n1sq = prod(n1, n1);

    NormalChernNumbers out;
    out.n1_cubed = point_degree(prod(n1sq, n1));
    out.n1_n2 = point_degree(prod(n1, n2));
    out.n3 = point_degree(n3);
    out.c1_n1sq = point_degree(prod(cc.c1, n1sq));
    out.c1_n2 = point_degree(prod(cc.c1, n2));
    out.c1sq_n1 = point_degree(prod(prod(cc.c1, cc.c1), n1));
    out.c2_n1 = point_degree(prod(cc.c2, n1));
    return out;
}

Integer chi_normal(const scroll::ScrollFamily& family) {
    const auto nums = normal_chern_numbers(family);
    const Integer n = 4 * family.b - family.k - 2;

    // Riemann-Roch for a rank-(n-3) bundle on the 3-fold, with chi(O_X) = 1.
    const Rational chi = Rational(nums.n1_cubed - 3 * nums.n1_n2 + 3 * nums.n3, 6) +
                         Rational(nums.c1_n1sq - 2 * nums.c1_n2, 4) +
                         Rational(nums.c1sq_n1 + nums.c2_n1, 12) + Rational(n - 3);
    if (boost::multiprecision::denominator(chi) != 1)
        throw std::logic_error("chi_normal: non-integral Riemann-Roch value");
    const Integer symbolic(boost::multiprecision::numerator(chi));

    const Integer& b = family.b;
    const Integer& k = family.k;
    const Integer d = 6 * b - 9 - k;
    const Integer collapsed = (-2 * b + 8 + d) * n - 29 + 16 * b - 3 * d;
    const Integer expected = n * (n + 1) + 3 * k - 2 * b - 2;
    if (symbolic != collapsed || symbolic != expected)
        throw std::logic_error("chi_normal: the three evaluations disagree");
    return symbolic;
}

}  // namespace scrollcalc::chow
