#pragma once

#include <string>
#include <vector>

#include "scrollcalc/integer.hpp"

namespace scrollcalc::p1 {

// A direct sum of line bundles on the projective line, recorded by the
// multiset of its summand degrees. Stored sorted ascending, so equality of
// values is equality of multisets.
class SplittingType {
public:
    explicit SplittingType(std::vector<Integer> alphas);

    const std::vector<Integer>& alphas() const { return alphas_; }
    std::size_t rank() const { return alphas_.size(); }
    Integer degree() const;

    // Merge of the two multisets (splitting type of the direct sum).
    SplittingType merged_with(const SplittingType& other) const;

    bool operator==(const SplittingType& other) const = default;

private:
    std::vector<Integer> alphas_;
};

std::string to_string(const SplittingType& type);

struct LinePair {
    Integer h0;
    Integer h1;
};

// Cohomology of type ⊗ O(t), summand by summand.
LinePair splitting_cohomology(const SplittingType& type, const Integer& twist);

// The unique multiset with `rank` parts summing to `degree` whose parts
// differ by at most one.
SplittingType balanced_partition(const Integer& degree, const Integer& rank);

struct ScrollPushforward {
    SplittingType sub;   // rank 3, degrees 2b-k-2, 2b-k-3, 2b-k-4
    SplittingType quot;  // rank 2, degrees k-b+2, k-b+1
};

// Direct images on the line of the two pieces of the family extension
// 0 -> A -> E -> B -> 0 with parameters (b, k).
ScrollPushforward pushforward_scroll_bundle(const Integer& b, const Integer& k);

}  // namespace scrollcalc::p1
