#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace wsteen {

/* Dense bit vector over F2. */
class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    F2Vec& operator^=(const F2Vec& o);
    friend F2Vec operator^(F2Vec a, const F2Vec& b) { a ^= b; return a; }
    bool operator==(const F2Vec&) const = default;

    bool is_zero() const;
    /* index of the lowest set bit, or -1 */
    int lowest_set() const;
    int popcount() const;
    std::vector<std::size_t> support() const;

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/* Dense matrix over F2, viewed as the linear map F2^cols -> F2^rows whose
 * j-th column is the image of the j-th domain basis vector. */
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), col_(cols, F2Vec(rows)) {}

    static F2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return col_[c].get(r); }
    void set(std::size_t r, std::size_t c, bool v = true) { col_[c].set(r, v); }
    const F2Vec& column(std::size_t c) const { return col_[c]; }
    void set_column(std::size_t c, F2Vec v) { col_[c] = std::move(v); }

    F2Matrix mul(const F2Matrix& o) const;  // this ∘ o
    F2Vec apply(const F2Vec& x) const;      // image of x in F2^cols
    friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b);

    int rank() const;
    bool is_zero() const;
    bool invertible() const { return rows_ == cols_ && rank() == static_cast<int>(cols_); }
    /* x with (this)·x = b, if the system is consistent */
    std::optional<F2Vec> solve(const F2Vec& b) const;
    /* basis of { x : (this)·x = 0 } */
    std::vector<F2Vec> kernel() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vec> col_;
};

/* One-time factorization of a column map for repeated solves. */
class F2Solver {
public:
    F2Solver() = default;
    explicit F2Solver(const F2Matrix& m);
    std::optional<F2Vec> solve(const F2Vec& b) const;
    int rank() const { return static_cast<int>(ech_.size()); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vec> ech_, combo_;
    std::vector<int> piv_;
};

/* Echelonized subspace of F2^n; supports reduction to a canonical coset
 * representative (pivot coordinates eliminated in ascending order). */
class F2Span {
public:
    explicit F2Span(std::size_t n = 0) : n_(n) {}

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    /* returns true if v enlarged the span */
    bool add(F2Vec v);
    F2Vec reduce(F2Vec v) const;
    bool contains(const F2Vec& v) const { return reduce(v).is_zero(); }
    const std::vector<int>& pivots() const { return pivot_; }

private:
    std::size_t n_ = 0;
    std::vector<F2Vec> rows_;  // echelon vectors, pivot strictly increasing
    std::vector<int> pivot_;
};

}  // namespace wsteen
