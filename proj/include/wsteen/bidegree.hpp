#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace wsteen {

/* Motivic bidegree (p,q): p = topological degree, q = weight. */
struct Bidegree {
    int p = 0;
    int q = 0;

    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.p + b.p, a.q + b.q}; }
    friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.p - b.p, a.q - b.q}; }
    Bidegree operator*(int n) const { return {p * n, q * n}; }
    auto operator<=>(const Bidegree&) const = default;

    std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

struct BidegreeHash {
    std::size_t operator()(const Bidegree& b) const {
        return std::hash<long long>{}((static_cast<long long>(b.p) << 32) ^ static_cast<unsigned>(b.q));
    }
};

}  // namespace wsteen
