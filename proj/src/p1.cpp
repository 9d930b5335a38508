#include "scrollcalc/p1.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scrollcalc::p1 {

SplittingType::SplittingType(std::vector<Integer> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty()) throw std::invalid_argument("SplittingType: rank must be >= 1");
    std::sort(alphas_.begin(), alphas_.end());
}

Integer SplittingType::degree() const {
    return std::accumulate(alphas_.begin(), alphas_.end(), Integer(0));
}

SplittingType SplittingType::merged_with(const SplittingType& other) const {
    std::vector<Integer> all = alphas_;
    all.insert(all.end(), other.alphas_.begin(), other.alphas_.end());
    return SplittingType(std::move(all));
}

std::string to_string(const SplittingType& type) {
    std::string out = "(";
    for (std::size_t i = 0; i < type.alphas().size(); ++i) {
        if (i) out += ",";
        out += type.alphas()[i].str();
    }
    return out + ")";
}

LinePair splitting_cohomology(const SplittingType& type, const Integer& twist) {
    LinePair result{0, 0};
    for (const Integer& alpha : type.alphas()) {
        const Integer m = alpha + twist;
        result.h0 += clamp0(m + 1);
        result.h1 += clamp0(-m - 1);
    }
    return result;
}

SplittingType balanced_partition(const Integer& degree, const Integer& rank) {
    if (rank < 1) throw std::invalid_argument("balanced_partition: rank must be >= 1");
    const Integer low = floor_div(degree, rank);
    const Integer eps = degree - low * rank;  // parts equal to low+1; 0 <= eps < rank
    std::vector<Integer> parts;
    parts.reserve(to_size(rank));
    for (Integer i = 0; i < rank - eps; ++i) parts.push_back(low);
    for (Integer i = 0; i < eps; ++i) parts.push_back(low + 1);
    return SplittingType(std::move(parts));
}

ScrollPushforward pushforward_scroll_bundle(const Integer& b, const Integer& k) {
    return ScrollPushforward{
        SplittingType({2 * b - k - 2, 2 * b - k - 3, 2 * b - k - 4}),
        SplittingType({k - b + 2, k - b + 1}),
    };
}

}  // namespace scrollcalc::p1
