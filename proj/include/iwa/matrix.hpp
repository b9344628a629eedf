#ifndef IWA_MATRIX_HPP
#define IWA_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "iwa/errors.hpp"

namespace iwa {

// Dense row-major matrix.  Zero rows or columns are legal (empty maps).
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat from_rows(const std::vector<std::vector<T>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.front().size();
        for (const auto& row : rows) {
            if (row.size() != c) throw format_error("ragged matrix: rows of unequal length");
        }
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }

    void swap_cols(std::size_t j, std::size_t l) {
        if (j == l) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, j), at(i, l));
    }

    bool operator==(const Mat& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

} // namespace iwa

#endif // IWA_MATRIX_HPP
