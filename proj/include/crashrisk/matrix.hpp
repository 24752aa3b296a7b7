// matrix.hpp
// Flat row-major double matrix. Deliberately minimal: the numerical modules
// hand-roll their loops, so all that is needed is storage, indexing and a few
// column/row helpers.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace crashrisk {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    std::vector<double> column(std::size_t c) const {
        std::vector<double> out(rows);
        for (std::size_t r = 0; r < rows; ++r) out[r] = (*this)(r, c);
        return out;
    }

    void set_column(std::size_t c, const std::vector<double>& v) {
        for (std::size_t r = 0; r < rows; ++r) (*this)(r, c) = v[r];
    }

    Matrix take_rows(const std::vector<std::size_t>& idx) const {
        Matrix out(idx.size(), cols);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            for (std::size_t c = 0; c < cols; ++c) out(i, c) = (*this)(idx[i], c);
        }
        return out;
    }

    Matrix slice_rows(std::size_t begin, std::size_t end) const {
        Matrix out(end - begin, cols);
        for (std::size_t r = begin; r < end; ++r) {
            for (std::size_t c = 0; c < cols; ++c) out(r - begin, c) = (*this)(r, c);
        }
        return out;
    }

    Matrix take_columns(const std::vector<std::size_t>& idx) const {
        Matrix out(rows, idx.size());
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t i = 0; i < idx.size(); ++i) out(r, i) = (*this)(r, idx[i]);
        }
        return out;
    }

    static Matrix from_rows(const std::vector<std::vector<double>>& rows_in) {
        if (rows_in.empty()) return {};
        Matrix out(rows_in.size(), rows_in.front().size());
        for (std::size_t r = 0; r < rows_in.size(); ++r) {
            for (std::size_t c = 0; c < out.cols; ++c) out(r, c) = rows_in[r][c];
        }
        return out;
    }
};

}  // namespace crashrisk
