#include "wsteen/z4.hpp"

#include <cassert>

namespace wsteen {

namespace {
inline uint8_t mul4(uint8_t a, uint8_t b) { return static_cast<uint8_t>((a * b) & 3); }
inline uint8_t sub4(uint8_t a, uint8_t b) { return static_cast<uint8_t>((a - b) & 3); }
inline bool is_unit(uint8_t a) { return a == 1 || a == 3; }
}  // namespace

std::vector<uint8_t> Z4Matrix::apply(const std::vector<uint8_t>& x) const {
    assert(x.size() == cols_);
    std::vector<uint8_t> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        unsigned acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc += a_[r * cols_ + c] * x[c];
        y[r] = static_cast<uint8_t>(acc & 3);
    }
    return y;
}

std::vector<std::vector<uint8_t>> Z4Matrix::kernel() const {
    // Work on a copy A, track column operations in U (starts as identity).
    std::vector<std::vector<uint8_t>> A(cols_, std::vector<uint8_t>(rows_, 0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) A[c][r] = get(r, c);
    std::vector<std::vector<uint8_t>> U(cols_, std::vector<uint8_t>(cols_, 0));
    for (std::size_t c = 0; c < cols_; ++c) U[c][c] = 1;

    auto axpy = [&](std::size_t dst, std::size_t src, uint8_t k) {
        // col dst -= k * col src
        for (std::size_t r = 0; r < rows_; ++r) A[dst][r] = sub4(A[dst][r], mul4(k, A[src][r]));
        for (std::size_t i = 0; i < cols_; ++i) U[dst][i] = sub4(U[dst][i], mul4(k, U[src][i]));
    };
    auto scale = [&](std::size_t c, uint8_t k) {
        for (std::size_t r = 0; r < rows_; ++r) A[c][r] = mul4(A[c][r], k);
        for (std::size_t i = 0; i < cols_; ++i) U[c][i] = mul4(U[c][i], k);
    };

    std::size_t piv = 0;
    for (std::size_t r = 0; r < rows_ && piv < cols_; ++r) {
        // prefer a unit pivot in row r
        std::size_t j = piv;
        while (j < cols_ && !is_unit(A[j][r])) ++j;
        if (j < cols_) {
            std::swap(A[piv], A[j]);
            std::swap(U[piv], U[j]);
            if (A[piv][r] == 3) scale(piv, 3);
            for (std::size_t k = 0; k < cols_; ++k)
                if (k != piv && A[k][r] != 0) axpy(k, piv, A[k][r]);
            ++piv;
            continue;
        }
        // otherwise a 2-pivot; remaining entries in this row are 0 or 2
        j = piv;
        while (j < cols_ && A[j][r] == 0) ++j;
        if (j < cols_) {
            std::swap(A[piv], A[j]);
            std::swap(U[piv], U[j]);
            for (std::size_t k = 0; k < cols_; ++k)
                if (k != piv && A[k][r] == 2) axpy(k, piv, 1);
            ++piv;
        }
    }

    std::vector<std::vector<uint8_t>> gens;
    for (std::size_t c = 0; c < cols_; ++c) {
        bool zero = true, two_kills = true;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (A[c][r] != 0) zero = false;
            if (mul4(2, A[c][r]) != 0) two_kills = false;
        }
        if (zero) {
            gens.push_back(U[c]);
        } else if (two_kills) {
            std::vector<uint8_t> g(cols_);
            for (std::size_t i = 0; i < cols_; ++i) g[i] = mul4(2, U[c][i]);
            bool nz = false;
            for (uint8_t v : g) nz |= (v != 0);
            if (nz) gens.push_back(std::move(g));
        }
    }
    return gens;
}

}  // namespace wsteen
