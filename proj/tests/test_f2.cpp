#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wsteen/f2.hpp"
#include "wsteen/z4.hpp"

using namespace wsteen;

TEST_CASE("f2 matrix rank, kernel, solve") {
    F2Matrix id3 = F2Matrix::identity(3);
    CHECK(id3.rank() == 3);
    CHECK(id3.kernel().empty());
    CHECK(id3.invertible());

    F2Matrix z(2, 5);
    CHECK(z.rank() == 0);
    CHECK(z.kernel().size() == 5);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        F2Matrix m(rows, cols);
        std::vector<std::vector<uint8_t>> plain(rows, std::vector<uint8_t>(cols, 0));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 2) {
                    m.set(r, c);
                    plain[r][c] = 1;
                }
        CHECK(m.rank() == oracles::plain_rank(plain));
        for (const F2Vec& k : m.kernel()) CHECK(m.apply(k).is_zero());
        // solve against a known-consistent rhs
        F2Vec x(cols);
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 2) x.set(c);
        F2Vec b = m.apply(x);
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
        F2Solver solver(m);
        auto sol2 = solver.solve(b);
        REQUIRE(sol2.has_value());
        CHECK(m.apply(*sol2) == b);
    }
}

TEST_CASE("f2 span reduction is idempotent and canonical") {
    std::mt19937_64 rng(11);
    F2Span span(10);
    for (int i = 0; i < 6; ++i) {
        F2Vec v(10);
        for (int k = 0; k < 10; ++k)
            if (rng() % 2) v.set(k);
        span.add(v);
    }
    for (int trial = 0; trial < 30; ++trial) {
        F2Vec v(10);
        for (int k = 0; k < 10; ++k)
            if (rng() % 2) v.set(k);
        F2Vec r = span.reduce(v);
        CHECK(span.reduce(r) == r);
        CHECK(span.contains(v ^ r));
    }
}

TEST_CASE("z4 kernel generators are sound and complete on small matrices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        Z4Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<uint8_t>(rng() % 4));
        auto gens = m.kernel();
        for (const auto& g : gens) {
            auto img = m.apply(g);
            for (uint8_t v : img) CHECK(v == 0);
        }
        // brute-force membership: every kernel vector is a Z/4 combination of gens
        std::vector<std::vector<uint8_t>> all;
        std::vector<uint8_t> x(cols, 0);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == cols) {
                auto img = m.apply(x);
                for (uint8_t v : img)
                    if (v) return;
                all.push_back(x);
                return;
            }
            for (uint8_t v = 0; v < 4; ++v) {
                x[i] = v;
                self(self, i + 1);
            }
            x[i] = 0;
        };
        rec(rec, 0);
        // span of gens over Z/4
        std::vector<std::vector<uint8_t>> span{std::vector<uint8_t>(cols, 0)};
        for (const auto& g : gens) {
            std::vector<std::vector<uint8_t>> grown = span;
            for (const auto& s : span)
                for (int k = 1; k < 4; ++k) {
                    std::vector<uint8_t> t(cols);
                    for (std::size_t i = 0; i < cols; ++i)
                        t[i] = static_cast<uint8_t>((s[i] + k * g[i]) & 3);
                    if (std::find(grown.begin(), grown.end(), t) == grown.end()) grown.push_back(t);
                }
            span = std::move(grown);
        }
        CHECK(span.size() == all.size());
    }
}
