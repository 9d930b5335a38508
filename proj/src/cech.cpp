#include "scrollcalc/cech.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "scrollcalc/rng.hpp"

namespace scrollcalc::cech {

namespace {

// Graded pieces of the direct images on the line: the rank-3 sub piece of A,
// the rank-2 quotient piece of B, and the extension space A-B.
Integer sub_degree(const Integer& b, const Integer& k, int l) { return 2 * b - k - 2 - l; }
Integer quot_degree(const Integer& b, const Integer& k, int j) { return k - b + 2 - j; }
Integer ext_degree(const Integer& b, const Integer& k, int i) { return 3 * b - 2 * k - 4 - i; }

Integer line_h0(const Integer& m) { return clamp0(m + 1); }
Integer line_h1(const Integer& m) { return clamp0(-m - 1); }

Integer sub_h0(const Integer& b, const Integer& k, const Integer& t) {
    Integer total = 0;
    for (int l = 0; l < 3; ++l) total += line_h0(sub_degree(b, k, l) + t);
    return total;
}

Integer sub_h1(const Integer& b, const Integer& k, const Integer& t) {
    Integer total = 0;
    for (int l = 0; l < 3; ++l) total += line_h1(sub_degree(b, k, l) + t);
    return total;
}

Integer quot_h0(const Integer& b, const Integer& k, const Integer& t) {
    Integer total = 0;
    for (int j = 0; j < 2; ++j) total += line_h0(quot_degree(b, k, j) + t);
    return total;
}

std::string monomial_label(const Integer& s_exp, const Integer& t_exp) {
    return "s^" + s_exp.str() + " t^" + t_exp.str();
}

// Shared builder for the coboundary matrix of a blockwise extension class:
// piece j of the twisted quotient maps into piece l = i+j of the twisted sub
// by cup with block (l, j).
RationalMatrix build_coboundary(const Integer& b, const Integer& k, const Integer& twist,
                                const std::function<const Cocycle*(int l, int j)>& block) {
    struct Row {
        int piece;
        LaurentMonomial mono;
    };
    struct Col {
        int piece;
        Integer s_exp;  // of the section monomial s^alpha t^(deg-alpha)
    };

    std::vector<Row> rows;
    for (int l = 0; l < 3; ++l)
        for (const auto& mono : h1_basis(sub_degree(b, k, l) + twist))
            rows.push_back({l, mono});

    std::vector<Col> cols;
    for (int j = 0; j < 2; ++j) {
        const Integer deg = quot_degree(b, k, j) + twist;
        for (Integer alpha = deg; alpha >= 0; --alpha) cols.push_back({j, alpha});
    }

    RationalMatrix m(rows.size(), cols.size());
    for (const auto& row : rows)
        m.row_labels.push_back("A" + std::to_string(row.piece) + ":" +
                               monomial_label(row.mono.s_exp, row.mono.t_exp));
    for (const auto& col : cols) {
        const Integer deg = quot_degree(b, k, col.piece) + twist;
        m.col_labels.push_back("B" + std::to_string(col.piece) + ":" +
                               monomial_label(col.s_exp, deg - col.s_exp));
    }

    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const int l = rows[r].piece;
            const int j = cols[c].piece;
            const Cocycle* e = block(l, j);
            if (e == nullptr) continue;
            // Section monomial s^alpha t^beta times Laurent s^u t^v hits the
            // row monomial exactly when (u, v) = (p - alpha, q - beta).
            const Integer beta = quot_degree(b, k, j) + twist - cols[c].s_exp;
            m.at(r, c) = e->coefficient(
                {rows[r].mono.s_exp - cols[c].s_exp, rows[r].mono.t_exp - beta});
        }
    }
    return m;
}

CohomologyPair cohomology_from_rank(const Integer& b, const Integer& k, const Integer& rank) {
    return CohomologyPair{sub_h0(b, k, 0) + quot_h0(b, k, 0) - rank, sub_h1(b, k, 0) - rank};
}

Cocycle sample_cocycle(const Integer& degree, Rng& rng, const Integer& coeff_bound) {
    Cocycle c(degree);
    for (const auto& mono : h1_basis(degree)) c.add(mono, Rational(rng.coefficient(coeff_bound)));
    return c;
}

}  // namespace

std::string to_string(const LaurentMonomial& m) { return monomial_label(m.s_exp, m.t_exp); }

std::vector<LaurentMonomial> h1_basis(const Integer& m) {
    std::vector<LaurentMonomial> basis;
    for (Integer p = -1; p >= m + 1; --p) basis.push_back({p, m - p});
    return basis;
}

void Cocycle::add(const LaurentMonomial& m, const Rational& c) {
    if (m.s_exp + m.t_exp != degree_)
        throw std::invalid_argument("Cocycle::add: monomial degree mismatch");
    if (m.s_exp > -1 || m.t_exp > -1)
        throw std::invalid_argument("Cocycle::add: exponents must be <= -1");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational Cocycle::coefficient(const LaurentMonomial& m) const {
    const auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Cocycle Cocycle::scaled(const Rational& factor) const {
    Cocycle out(degree_);
    if (factor == 0) return out;
    for (const auto& [mono, c] : coeffs_) out.add(mono, c * factor);
    return out;
}

Section::Section(Integer deg) : degree(std::move(deg)) {
    if (degree >= 0) coeff.assign(to_size(degree) + 1, Rational(0));
}

bool Section::is_zero() const {
    for (const auto& c : coeff)
        if (c != 0) return false;
    return true;
}

Cocycle cup_product(const Section& section, const Cocycle& c) {
    if (section.degree < 0) throw std::invalid_argument("cup_product: section degree < 0");
    Cocycle out(section.degree + c.degree());
    for (std::size_t i = 0; i < section.coeff.size(); ++i) {
        if (section.coeff[i] == 0) continue;
        const Integer alpha = Integer(i);
        const Integer beta = section.degree - alpha;
        for (const auto& [mono, r] : c.coefficients()) {
            const Integer p = alpha + mono.s_exp;
            const Integer q = beta + mono.t_exp;
            if (p <= -1 && q <= -1) out.add({p, q}, section.coeff[i] * r);
        }
    }
    return out;
}

StructuredExtension::StructuredExtension(Integer b_, Integer k_, Cocycle e0_, Cocycle e1_)
    : b(std::move(b_)), k(std::move(k_)), e0(std::move(e0_)), e1(std::move(e1_)) {
    if (e0.degree() != ext_degree(b, k, 0) || e1.degree() != ext_degree(b, k, 1))
        throw std::invalid_argument("StructuredExtension: component degrees do not match (b, k)");
}

StructuredExtension StructuredExtension::zero(const Integer& b, const Integer& k) {
    return StructuredExtension(b, k, Cocycle(ext_degree(b, k, 0)), Cocycle(ext_degree(b, k, 1)));
}

StructuredExtension StructuredExtension::scaled(const Rational& factor) const {
    return StructuredExtension(b, k, e0.scaled(factor), e1.scaled(factor));
}

UnstructuredExtension::UnstructuredExtension(Integer b_, Integer k_, std::vector<Cocycle> blocks_)
    : b(std::move(b_)), k(std::move(k_)), blocks(std::move(blocks_)) {
    if (blocks.size() != 6)
        throw std::invalid_argument("UnstructuredExtension: expected 3x2 blocks");
    for (int l = 0; l < 3; ++l)
        for (int j = 0; j < 2; ++j)
            if (block(l, j).degree() != sub_degree(b, k, l) - quot_degree(b, k, j))
                throw std::invalid_argument("UnstructuredExtension: block degree mismatch");
}

RationalMatrix coboundary_matrix(const StructuredExtension& x, const Integer& twist) {
    return build_coboundary(x.b, x.k, twist, [&x](int l, int j) -> const Cocycle* {
        const int i = l - j;
        if (i == 0) return &x.e0;
        if (i == 1) return &x.e1;
        return nullptr;
    });
}

RationalMatrix coboundary_matrix(const UnstructuredExtension& x, const Integer& twist) {
    return build_coboundary(x.b, x.k, twist,
                            [&x](int l, int j) -> const Cocycle* { return &x.block(l, j); });
}

CohomologyPair extension_cohomology(const StructuredExtension& x) {
    return cohomology_from_rank(x.b, x.k, Integer(exact_rank(coboundary_matrix(x))));
}

CohomologyPair extension_cohomology(const UnstructuredExtension& x) {
    return cohomology_from_rank(x.b, x.k, Integer(exact_rank(coboundary_matrix(x))));
}

StructuredExtension sample_extension(const Integer& b, const Integer& k, std::uint64_t seed,
                                     const Integer& coeff_bound) {
    if (coeff_bound < 1) throw std::invalid_argument("sample_extension: coeff_bound must be >= 1");
    Rng rng(seed);
    Cocycle e0 = sample_cocycle(ext_degree(b, k, 0), rng, coeff_bound);
    Cocycle e1 = sample_cocycle(ext_degree(b, k, 1), rng, coeff_bound);
    return StructuredExtension(b, k, std::move(e0), std::move(e1));
}

UnstructuredExtension sample_extension_unstructured(const Integer& b, const Integer& k,
                                                    std::uint64_t seed,
                                                    const Integer& coeff_bound) {
    if (coeff_bound < 1) throw std::invalid_argument("sample_extension: coeff_bound must be >= 1");
    Rng rng(seed);
    std::vector<Cocycle> blocks;
    for (int l = 0; l < 3; ++l)
        for (int j = 0; j < 2; ++j)
            blocks.push_back(
                sample_cocycle(sub_degree(b, k, l) - quot_degree(b, k, j), rng, coeff_bound));
    return UnstructuredExtension(b, k, std::move(blocks));
}

GenericCohomology generic_extension_cohomology(const Integer& b, const Integer& k, int trials,
                                               std::uint64_t seed, const Integer& coeff_bound,
                                               SampleMode mode) {
    if (trials < 1)
        throw std::invalid_argument("generic_extension_cohomology: trials must be >= 1");

    GenericCertificate cert;
    cert.theoretical_max = std::min(quot_h0(b, k, 0), sub_h1(b, k, 0));
    cert.achieved_rank = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(trial));
        Integer rank;
        if (mode == SampleMode::structured)
            rank = exact_rank(coboundary_matrix(sample_extension(b, k, trial_seed, coeff_bound)));
        else
            rank = exact_rank(
                coboundary_matrix(sample_extension_unstructured(b, k, trial_seed, coeff_bound)));
        if (rank > cert.achieved_rank) cert.achieved_rank = rank;
        cert.trials_used = trial + 1;
        if (cert.achieved_rank == cert.theoretical_max) break;
    }
    cert.certified = cert.achieved_rank == cert.theoretical_max;

    const auto best = cohomology_from_rank(b, k, cert.achieved_rank);
    return GenericCohomology{best.h0, best.h1, cert};
}

SectionPair sample_section(const Integer& b, const Integer& k, std::uint64_t seed,
                           const Integer& coeff_bound) {
    Rng rng(seed);
    SectionPair sigma{Section(quot_degree(b, k, 0)), Section(quot_degree(b, k, 1))};
    const bool sampleable = !sigma.p0.coeff.empty() || !sigma.p1.coeff.empty();
    do {
        for (auto& c : sigma.p0.coeff) c = Rational(rng.coefficient(coeff_bound));
        for (auto& c : sigma.p1.coeff) c = Rational(rng.coefficient(coeff_bound));
    } while (sampleable && sigma.is_zero());
    return sigma;
}

RationalMatrix cup_with_section(const Integer& b, const Integer& k, const SectionPair& sigma) {
    if (sigma.is_zero()) throw std::invalid_argument("cup_with_section: sigma is zero");

    struct Row {
        int piece;
        LaurentMonomial mono;
    };
    struct Col {
        int piece;
        LaurentMonomial mono;
    };

    std::vector<Row> rows;
    for (int l = 0; l < 3; ++l)
        for (const auto& mono : h1_basis(sub_degree(b, k, l))) rows.push_back({l, mono});
    std::vector<Col> cols;
    for (int i = 0; i < 2; ++i)
        for (const auto& mono : h1_basis(ext_degree(b, k, i))) cols.push_back({i, mono});

    RationalMatrix m(rows.size(), cols.size());
    for (const auto& row : rows)
        m.row_labels.push_back("A" + std::to_string(row.piece) + ":" + to_string(row.mono));
    for (const auto& col : cols)
        m.col_labels.push_back("E" + std::to_string(col.piece) + ":" + to_string(col.mono));

    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const int j = rows[r].piece - cols[c].piece;
            if (j < 0 || j > 1) continue;
            const Section& piece = j == 0 ? sigma.p0 : sigma.p1;
            const Integer alpha = rows[r].mono.s_exp - cols[c].mono.s_exp;
            if (alpha < 0 || alpha > piece.degree) continue;
            m.at(r, c) = piece.coeff[to_size(alpha)];
        }
    }
    return m;
}

p1::SplittingType splitting_type_of_extension(const StructuredExtension& x) {
    const Integer& b = x.b;
    const Integer& k = x.k;
    Integer lo = sub_degree(b, k, 2);
    Integer hi = sub_degree(b, k, 0);
    for (int j = 0; j < 2; ++j) {
        lo = std::min(lo, quot_degree(b, k, j));
        hi = std::max(hi, quot_degree(b, k, j));
    }

    const auto h0_at = [&](const Integer& t) {
        const Integer rank(exact_rank(coboundary_matrix(x, t)));
        return sub_h0(b, k, t) + quot_h0(b, k, t) - rank;
    };

    // h0(t) - h0(t-1) counts the summands with alpha >= -t, so the multiset
    // falls out of second differences over the degree window.
    const Integer t_lo = -hi - 1;
    const Integer t_hi = -lo;
    std::vector<Integer> counts;  // counts[t - t_lo] = #{alpha >= -t}
    Integer prev = h0_at(t_lo - 1);
    for (Integer t = t_lo; t <= t_hi; ++t) {
        const Integer current = h0_at(t);
        counts.push_back(current - prev);
        prev = current;
    }

    std::vector<Integer> alphas;
    for (Integer v = lo; v <= hi; ++v) {
        const Integer multiplicity =
            counts[to_size(-v - t_lo)] - counts[to_size(-v - 1 - t_lo)];
        for (Integer i = 0; i < multiplicity; ++i) alphas.push_back(v);
    }

    p1::SplittingType type(std::move(alphas));
    if (type.rank() != 5 || type.degree() != 4 * b - k - 6)
        throw std::logic_error("splitting_type_of_extension: inconsistent recovery");
    return type;
}

}  // namespace scrollcalc::cech
