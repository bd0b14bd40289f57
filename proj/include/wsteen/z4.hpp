#pragma once

#include <cstdint>
#include <vector>

namespace wsteen {

/* Column-style elimination over Z/4 (chain ring), enough to compute a
 * generating set of the null space { x : M·x = 0 }.  Columns are the images
 * of domain basis vectors, as in F2Matrix. */
class Z4Matrix {
public:
    Z4Matrix() = default;
    Z4Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    uint8_t get(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, uint8_t v) { a_[r * cols_ + c] = v & 3; }

    std::vector<uint8_t> apply(const std::vector<uint8_t>& x) const;
    /* generating set for the null space, vectors over Z/4 of length cols */
    std::vector<std::vector<uint8_t>> kernel() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<uint8_t> a_;
};

}  // namespace wsteen
