#include "scrollcalc/divisors.hpp"

#include <stdexcept>
#include <vector>

namespace scrollcalc::divisors {

std::string to_string(const DivisorClass& d) {
    if (d.a == 0 && d.b == 0) return "0";
    std::string out;
    if (d.a != 0) {
        if (d.a == -1) out += "-";
        else if (d.a != 1) out += d.a.str();
        out += "C0";
    }
    if (d.b != 0) {
        if (!out.empty() && d.b > 0) out += "+";
        if (d.b == -1) out += "-";
        else if (d.b != 1) out += d.b.str();
        out += "f";
    }
    return out;
}

Integer intersect(const DivisorClass& d1, const DivisorClass& d2, const Surface& s) {
    return d1.a * d2.a * Integer(-s.e) + d1.a * d2.b + d2.a * d1.b;
}

DivisorClass canonical_class(const Surface& s) {
    return DivisorClass{-2, -Integer(s.e) - 2};
}

Integer chi_divisor(const DivisorClass& d, const Surface& s) {
    const Integer product = intersect(d, d - canonical_class(s), s);
    if (product % 2 != 0) throw std::logic_error("chi_divisor: D.(D-K) is odd");
    return product / 2 + 1;
}

std::optional<p1::SplittingType> pushforward_line_bundle(const DivisorClass& d,
                                                         const Surface& s) {
    if (d.a < 0) return std::nullopt;
    std::vector<Integer> degrees;
    degrees.reserve(to_size(d.a) + 1);
    for (Integer j = 0; j <= d.a; ++j) degrees.push_back(d.b - j * s.e);
    return p1::SplittingType(std::move(degrees));
}

CohomologyTriple cohomology_divisor(const DivisorClass& d, const Surface& s) {
    if (d.a >= 0) {
        // Higher direct images vanish (degree a >= 0 on every fiber), so the
        // cohomology is that of the direct image on the line.
        const auto image = *pushforward_line_bundle(d, s);
        const auto line = p1::splitting_cohomology(image, 0);
        return {line.h0, line.h1, 0};
    }
    if (d.a == -1) return {0, 0, 0};
    // a <= -2: Serre duality, and K-D has C0-coefficient -2-a >= 0.
    const auto dual = cohomology_divisor(canonical_class(s) - d, s);
    return {dual.h2, dual.h1, dual.h0};
}

bool effective_cone_test(DivisorClass d, const Surface& s) {
    const DivisorClass c0{1, 0};
    while (d.a > 0 && intersect(d, c0, s) < 0) d = d - c0;
    return d.a >= 0 && d.b >= 0;
}

PositivityReport classify_divisor(const DivisorClass& d, const Surface& s) {
    PositivityReport report{};
    report.effective = cohomology_divisor(d, s).h0 > 0;
    report.nef = d.a >= 0 && d.b >= d.a * s.e;
    report.ample = d.a > 0 && d.b > d.a * s.e;
    // On F_e ample and very ample coincide.
    report.very_ample = report.ample;
    return report;
}

}  // namespace scrollcalc::divisors
