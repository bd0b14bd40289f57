#include "wsteen/f2.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace wsteen {

F2Vec& F2Vec::operator^=(const F2Vec& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool F2Vec::is_zero() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

int F2Vec::lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

int F2Vec::popcount() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

std::vector<std::size_t> F2Vec::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s.push_back(i);
    return s;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::mul(const F2Matrix& o) const {
    assert(cols_ == o.rows_);
    F2Matrix r(rows_, o.cols_);
    for (std::size_t j = 0; j < o.cols_; ++j) r.col_[j] = apply(o.col_[j]);
    return r;
}

F2Vec F2Matrix::apply(const F2Vec& x) const {
    assert(x.size() == cols_);
    F2Vec y(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        if (x.get(j)) y ^= col_[j];
    return y;
}

F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    F2Matrix r = a;
    for (std::size_t j = 0; j < r.cols_; ++j) r.col_[j] ^= b.col_[j];
    return r;
}

int F2Matrix::rank() const {
    F2Span span(rows_);
    for (const auto& c : col_) span.add(c);
    return static_cast<int>(span.dim());
}

bool F2Matrix::is_zero() const {
    for (const auto& c : col_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<F2Vec> F2Matrix::solve(const F2Vec& b) const {
    assert(b.size() == rows_);
    // Echelonize columns, tracking the combination of original columns.
    std::vector<F2Vec> ech;       // echelon vectors in F2^rows
    std::vector<F2Vec> combo;     // matching combinations in F2^cols
    std::vector<int> piv;
    auto reduce = [&](F2Vec v, F2Vec c) -> std::pair<F2Vec, F2Vec> {
        for (std::size_t k = 0; k < ech.size(); ++k) {
            int pv = piv[k];
            if (v.get(static_cast<std::size_t>(pv))) {
                v ^= ech[k];
                c ^= combo[k];
            }
        }
        return {std::move(v), std::move(c)};
    };
    for (std::size_t j = 0; j < cols_; ++j) {
        F2Vec c(cols_);
        c.set(j);
        auto [v, cc] = reduce(col_[j], std::move(c));
        int pv = v.lowest_set();
        if (pv >= 0) {
            // insert keeping pivots sorted
            std::size_t pos = 0;
            while (pos < piv.size() && piv[pos] < pv) ++pos;
            ech.insert(ech.begin() + pos, std::move(v));
            combo.insert(combo.begin() + pos, std::move(cc));
            piv.insert(piv.begin() + pos, pv);
        }
    }
    auto [v, cc] = reduce(b, F2Vec(cols_));
    if (!v.is_zero()) return std::nullopt;
    return cc;
}

std::vector<F2Vec> F2Matrix::kernel() const {
    std::vector<F2Vec> ech, combo, out;
    std::vector<int> piv;
    for (std::size_t j = 0; j < cols_; ++j) {
        F2Vec v = col_[j];
        F2Vec c(cols_);
        c.set(j);
        for (std::size_t k = 0; k < ech.size(); ++k)
            if (piv[k] >= 0 && v.get(static_cast<std::size_t>(piv[k]))) {
                v ^= ech[k];
                c ^= combo[k];
            }
        int pv = v.lowest_set();
        if (pv < 0) {
            out.push_back(std::move(c));
        } else {
            std::size_t pos = 0;
            while (pos < piv.size() && piv[pos] < pv) ++pos;
            ech.insert(ech.begin() + pos, std::move(v));
            combo.insert(combo.begin() + pos, std::move(c));
            piv.insert(piv.begin() + pos, pv);
        }
    }
    return out;
}

F2Solver::F2Solver(const F2Matrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (std::size_t j = 0; j < cols_; ++j) {
        F2Vec v = m.column(j);
        F2Vec c(cols_);
        c.set(j);
        for (std::size_t k = 0; k < ech_.size(); ++k)
            if (v.get(static_cast<std::size_t>(piv_[k]))) {
                v ^= ech_[k];
                c ^= combo_[k];
            }
        int pv = v.lowest_set();
        if (pv < 0) continue;
        std::size_t pos = 0;
        while (pos < piv_.size() && piv_[pos] < pv) ++pos;
        ech_.insert(ech_.begin() + pos, std::move(v));
        combo_.insert(combo_.begin() + pos, std::move(c));
        piv_.insert(piv_.begin() + pos, pv);
    }
}

std::optional<F2Vec> F2Solver::solve(const F2Vec& b) const {
    F2Vec v = b;
    F2Vec c(cols_);
    for (std::size_t k = 0; k < ech_.size(); ++k)
        if (v.get(static_cast<std::size_t>(piv_[k]))) {
            v ^= ech_[k];
            c ^= combo_[k];
        }
    if (!v.is_zero()) return std::nullopt;
    return c;
}

bool F2Span::add(F2Vec v) {
    if (n_ == 0) n_ = v.size();
    assert(v.size() == n_);
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (v.get(static_cast<std::size_t>(pivot_[k]))) v ^= rows_[k];
    int pv = v.lowest_set();
    if (pv < 0) return false;
    // back-substitute so stored rows stay fully reduced
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (rows_[k].get(static_cast<std::size_t>(pv))) rows_[k] ^= v;
    std::size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < pv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivot_.insert(pivot_.begin() + pos, pv);
    return true;
}

F2Vec F2Span::reduce(F2Vec v) const {
    assert(v.size() == n_);
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (v.get(static_cast<std::size_t>(pivot_[k]))) v ^= rows_[k];
    return v;
}

}  // namespace wsteen
