#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace thermopath {

// Dense row-major rows x cols storage. Row index first, both 0-based.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), cells_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("grid dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int r, int c) { return cells_[static_cast<size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return cells_[static_cast<size_t>(r) * cols_ + c]; }

    bool in_range(int r, int c) const {
        return r >= 0 && r < rows_ && c >= 0 && c < cols_;
    }

    bool same_shape(const Grid& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    const std::vector<T>& data() const { return cells_; }
    std::vector<T>& data() { return cells_; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> cells_;
};

using TemperatureField = Grid<double>;
using PrintPattern = Grid<std::uint8_t>;

struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell& a, const Cell& b) {
        return a.row == b.row && a.col == b.col;
    }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
};

}  // namespace thermopath
