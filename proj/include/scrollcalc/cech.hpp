#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scrollcalc/integer.hpp"
#include "scrollcalc/p1.hpp"
#include "scrollcalc/rational_matrix.hpp"

namespace scrollcalc::cech {

// s^p t^q with p, q <= -1: the standard basis of H^1 on the line for the
// two-chart cover, in degree p+q.
struct LaurentMonomial {
    Integer s_exp;
    Integer t_exp;

    bool operator==(const LaurentMonomial& other) const = default;
    bool operator<(const LaurentMonomial& other) const {
        if (s_exp != other.s_exp) return s_exp < other.s_exp;
        return t_exp < other.t_exp;
    }
};

std::string to_string(const LaurentMonomial& m);

// Basis of H^1(O(m)): {s^p t^q : p,q <= -1, p+q = m}, ordered by descending
// s-exponent. Empty for m >= -1.
std::vector<LaurentMonomial> h1_basis(const Integer& m);

// A class in H^1(O(degree)) as a rational combination of basis monomials.
class Cocycle {
public:
    explicit Cocycle(Integer degree) : degree_(std::move(degree)) {}

    const Integer& degree() const { return degree_; }
    const std::map<LaurentMonomial, Rational>& coefficients() const { return coeffs_; }

    // Adds c * s^p t^q; rejects monomials outside the degree or the basis.
    void add(const LaurentMonomial& m, const Rational& c);
    Rational coefficient(const LaurentMonomial& m) const;
    bool is_zero() const { return coeffs_.empty(); }

    Cocycle scaled(const Rational& factor) const;

private:
    Integer degree_;
    std::map<LaurentMonomial, Rational> coeffs_;
};

// A homogeneous polynomial in (s, t): coeff[i] multiplies s^i t^(degree-i).
// Negative degree means the zero space.
struct Section {
    Integer degree;
    std::vector<Rational> coeff;

    explicit Section(Integer deg);
    bool is_zero() const;
};

// H^0(O(p)) x H^1(O(q)) -> H^1(O(p+q)): monomial products whose s- or
// t-exponent reaches 0 are coboundaries and are discarded.
Cocycle cup_product(const Section& section, const Cocycle& c);

// An extension class of B by A for the family with parameters (b, k),
// decomposed along the direct images on the line: e0 in degree 3b-2k-4 and
// e1 in degree 3b-2k-5. Jointly the pair represents one class of
// H^1 of A-B on the surface, i.e. one element of Ext^1(B, A).
struct StructuredExtension {
    Integer b;
    Integer k;
    Cocycle e0;
    Cocycle e1;

    StructuredExtension(Integer b, Integer k, Cocycle e0, Cocycle e1);

    static StructuredExtension zero(const Integer& b, const Integer& k);
    bool is_zero() const { return e0.is_zero() && e1.is_zero(); }
    StructuredExtension scaled(const Rational& factor) const;
};

// A general extension class of the rank-2 quotient image by the rank-3 sub
// image on the line, not necessarily induced from the surface. Block (l, j)
// lives in degree (2b-k-2-l) - (k-b+2-j).
struct UnstructuredExtension {
    Integer b;
    Integer k;
    std::vector<Cocycle> blocks;  // row-major, 3 x 2

    UnstructuredExtension(Integer b, Integer k, std::vector<Cocycle> blocks);

    const Cocycle& block(int l, int j) const { return blocks[static_cast<std::size_t>(2 * l + j)]; }
};

// Matrix of the coboundary map H^0(B⊗O(t)) -> H^1(A⊗O(t)) in the monomial
// bases: piece j of B lands in piece i+j of A by cup with e_i.
RationalMatrix coboundary_matrix(const StructuredExtension& x, const Integer& twist = 0);
RationalMatrix coboundary_matrix(const UnstructuredExtension& x, const Integer& twist = 0);

struct CohomologyPair {
    Integer h0;
    Integer h1;
};

// h^0(E) = h^0(A) + nullity of the coboundary, h^1(E) = h^1(A) - its rank.
CohomologyPair extension_cohomology(const StructuredExtension& x);
CohomologyPair extension_cohomology(const UnstructuredExtension& x);

// Deterministic sample: every coefficient slot drawn uniformly from
// [-coeff_bound, coeff_bound]. Same inputs, same class.
StructuredExtension sample_extension(const Integer& b, const Integer& k, std::uint64_t seed,
                                     const Integer& coeff_bound);
UnstructuredExtension sample_extension_unstructured(const Integer& b, const Integer& k,
                                                    std::uint64_t seed,
                                                    const Integer& coeff_bound);

enum class SampleMode { structured, unstructured };

struct GenericCertificate {
    Integer achieved_rank;
    Integer theoretical_max;  // min(h^0(B), h^1(A))
    int trials_used = 0;
    bool certified = false;  // achieved == theoretical max
};

struct GenericCohomology {
    Integer h0;
    Integer h1;
    GenericCertificate certificate;
};

// Best (maximal-rank) cohomology over sampled classes. By semicontinuity the
// achieved rank bounds the generic rank from below; hitting
// min(h^0(B), h^1(A)) certifies it.
GenericCohomology generic_extension_cohomology(const Integer& b, const Integer& k, int trials,
                                               std::uint64_t seed,
                                               const Integer& coeff_bound = 100,
                                               SampleMode mode = SampleMode::structured);

// A section of the direct image of B: a pair of polynomials of degrees
// k-b+2 and k-b+1.
struct SectionPair {
    Section p0;
    Section p1;

    bool is_zero() const { return p0.is_zero() && p1.is_zero(); }
};

SectionPair sample_section(const Integer& b, const Integer& k, std::uint64_t seed,
                           const Integer& coeff_bound);

// Matrix of cup with a fixed section: H^1(A-B) -> H^1(A), assembled
// blockwise over the extension basis. Throws if sigma is zero.
RationalMatrix cup_with_section(const Integer& b, const Integer& k, const SectionPair& sigma);

// Splitting type of the direct image of E, recovered from the function
// t -> h^0(E ⊗ O(t)) computed through twisted coboundary matrices.
p1::SplittingType splitting_type_of_extension(const StructuredExtension& x);

}  // namespace scrollcalc::cech
