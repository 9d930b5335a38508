#pragma once

#include <string>
#include <vector>

#include "scrollcalc/integer.hpp"

namespace scrollcalc::cech {

// Dense matrix of exact rationals. Row and column labels name the basis
// elements (Laurent monomials / section monomials) the entries refer to.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    RationalMatrix scaled(const Rational& factor) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

// Exact rank by fraction-free (Bareiss) elimination: rows are cleared to a
// common integer denominator, then eliminated over arbitrary-precision
// integers with exact divisions only. No thresholds anywhere.
std::size_t exact_rank(const RationalMatrix& m);

}  // namespace scrollcalc::cech
