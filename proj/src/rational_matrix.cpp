#include "scrollcalc/rational_matrix.hpp"

#include <utility>

namespace scrollcalc::cech {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
    RationalMatrix out(rows_, cols_);
    out.row_labels = row_labels;
    out.col_labels = col_labels;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * factor;
    return out;
}

std::size_t exact_rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer common(1);
        for (std::size_t j = 0; j < cols; ++j)
            common = boost::multiprecision::lcm(
                common, Integer(boost::multiprecision::denominator(m.at(i, j))));
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational scaled = m.at(i, j) * common;
            a[i][j] = Integer(boost::multiprecision::numerator(scaled));
        }
    }

    std::size_t rank = 0;
    Integer prev_pivot(1);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && a[pivot_row][c] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(a[rank], a[pivot_row]);

        const Integer pivot = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // Entries stay minors of the input, so this division is exact.
                a[i][j] = (pivot * a[i][j] - a[i][c] * a[rank][j]) / prev_pivot;
            }
            a[i][c] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace scrollcalc::cech
