#include "support/oracles.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace wsteen::oracles {

bool Fq::is_square(int a) const {
    for (int x = 0; x < q; ++x)
        if (mul(x, x) == a % q) return true;
    return false;
}

namespace {

/* square-class representative: 0 -> squares (rep 1), 1 -> nonsquares */
int sq_class(const Fq& f, int a) { return f.is_square(a) ? 0 : 1; }

int smallest_nonsquare(const Fq& f) {
    for (int a = 2; a < f.q; ++a)
        if (!f.is_square(a)) return a;
    return 1;  // quadratically closed situation
}

}  // namespace

int km_dim_fq(int q, int n) {
    if (n == 0) return 1;
    Fq f{q};
    if (n == 1) {
        // |F_q^x / squares| = 2 for odd q
        int classes = 1;
        for (int a = 1; a < q; ++a)
            if (!f.is_square(a)) { classes = 2; break; }
        return classes == 2 ? 1 : 0;
    }
    if (n != 2) return 0;
    // variables x_{(i,j)} over square classes; relations from bilinearity,
    // symmetry mod 2, {a,-a} = 0 and Steinberg {a, 1-a} = 0
    auto var = [](int i, int j) { return i * 2 + j; };
    std::vector<std::vector<uint8_t>> rel;
    auto push = [&](std::vector<int> vars) {
        std::vector<uint8_t> row(4, 0);
        for (int v : vars) row[v] ^= 1;
        rel.push_back(row);
    };
    for (int j = 0; j < 2; ++j) {
        push({var(0, j)});  // {square, b} = 0 mod 2
        push({var(j, 0)});
        push({var(0, j), var(j, 0)});  // symmetry closure
        push({var(1, j), var(j, 1)});
    }
    for (int a = 1; a < q; ++a) {
        push({var(sq_class(f, a), sq_class(f, f.neg(a)))});  // {a,-a}
        if (a != 1) push({var(sq_class(f, a), sq_class(f, f.add(1, f.neg(a))))});  // {a,1-a}
    }
    return 4 - plain_rank(std::move(rel));
}

bool rho_nonzero_fq(int q) {
    Fq f{q};
    return !f.is_square(q - 1);
}

namespace {

/* tiny explicit field: 0..n-1 with tables (F_q or F_{q^2}) */
struct SmallField {
    int n;
    std::vector<int> add, mul;
    int plus(int a, int b) const { return add[a * n + b]; }
    int times(int a, int b) const { return mul[a * n + b]; }
};

SmallField make_fq(int q) {
    SmallField f;
    f.n = q;
    f.add.resize(q * q);
    f.mul.resize(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            f.add[a * q + b] = (a + b) % q;
            f.mul[a * q + b] = (a * b) % q;
        }
    return f;
}

/* F_{q^2} = F_q[x]/(x^2 - u), elements a + b x encoded as a + q b */
SmallField make_fq2(int q, int u) {
    SmallField f;
    int n = q * q;
    f.n = n;
    f.add.resize(n * n);
    f.mul.resize(n * n);
    for (int e = 0; e < n; ++e)
        for (int g = 0; g < n; ++g) {
            int a = e % q, b = e / q, c = g % q, d = g / q;
            f.add[e * n + g] = (a + c) % q + q * ((b + d) % q);
            int re = (a * c + u * ((b * d) % q)) % q;
            int im = (a * d + b * c) % q;
            f.mul[e * n + g] = re + q * im;
        }
    return f;
}

/* brute-force congruence of 2x2 diagonal forms: exists P in GL_2 with
 * P^T diag(a,b) P = diag(c,d) */
bool binary_congruent(const SmallField& f, int a, int b, int c, int d) {
    auto neg_of = [&](int x) {
        for (int y = 0; y < f.n; ++y)
            if (f.plus(x, y) == 0) return y;
        return 0;
    };
    for (int p11 = 0; p11 < f.n; ++p11)
        for (int p12 = 0; p12 < f.n; ++p12)
            for (int p21 = 0; p21 < f.n; ++p21)
                for (int p22 = 0; p22 < f.n; ++p22) {
                    int det = f.plus(f.times(p11, p22), neg_of(f.times(p12, p21)));
                    if (det == 0) continue;
                    int e11 = f.plus(f.times(a, f.times(p11, p11)), f.times(b, f.times(p21, p21)));
                    int e22 = f.plus(f.times(a, f.times(p12, p12)), f.times(b, f.times(p22, p22)));
                    int e12 = f.plus(f.times(a, f.times(p11, p12)), f.times(b, f.times(p21, p22)));
                    if (e12 == 0 && e11 == c && e22 == d) return true;
                }
    return false;
}

/* Z^2 modulo an integer relation lattice, via Hermite reduction; canonical
 * representatives (a,b) with 0 <= a < h11, 0 <= b < h22 */
struct Lattice2 {
    long long h11 = 0, h12 = 0, h22 = 0;

    static long long floordiv(long long a, long long b) {
        long long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }
    static Lattice2 from_relations(std::vector<std::array<int, 2>> rels) {
        std::vector<std::array<long long, 2>> rows;
        for (auto& r : rels) rows.push_back({r[0], r[1]});
        // clear column 0 down to one pivot by gcd combinations
        for (;;) {
            int m = -1;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][0] != 0 && (m < 0 || std::abs(rows[i][0]) < std::abs(rows[m][0])))
                    m = static_cast<int>(i);
            if (m < 0) break;
            bool again = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (static_cast<int>(i) == m || rows[i][0] == 0) continue;
                long long k = rows[i][0] / rows[m][0];
                rows[i][0] -= k * rows[m][0];
                rows[i][1] -= k * rows[m][1];
                if (rows[i][0] != 0) again = true;
            }
            if (!again) {
                std::swap(rows[0], rows[static_cast<std::size_t>(m)]);
                break;
            }
        }
        Lattice2 L;
        if (!rows.empty() && rows[0][0] != 0) {
            L.h11 = std::abs(rows[0][0]);
            L.h12 = rows[0][0] < 0 ? -rows[0][1] : rows[0][1];
        }
        long long g = 0;
        for (std::size_t i = (rows.empty() || rows[0][0] == 0) ? 0 : 1; i < rows.size(); ++i)
            g = std::gcd(g, std::abs(rows[i][1]));
        L.h22 = g;
        if (L.h22) L.h12 = ((L.h12 % L.h22) + L.h22) % L.h22;
        return L;
    }
    bool finite() const { return h11 > 0 && h22 > 0; }
    std::pair<long long, long long> canon(long long a, long long b) const {
        long long k = floordiv(a, h11);
        a -= k * h11;
        b -= k * h12;
        b = ((b % h22) + h22) % h22;
        return {a, b};
    }
};

}  // namespace

WittOracle witt_oracle_fq(int q, bool every_unit_square) {
    Fq fq{q};
    int u = smallest_nonsquare(fq);
    SmallField f = every_unit_square ? make_fq2(q, u) : make_fq(q);
    std::vector<int> reps = every_unit_square ? std::vector<int>{1} : std::vector<int>{1, u};
    int gens = static_cast<int>(reps.size());

    // relations among <reps> from binary congruences and hyperbolic planes
    std::vector<std::array<int, 2>> rels;
    auto coeff = [&](int rep) { return rep == 1 ? 0 : 1; };
    // hyperbolic: <a> + <-a> = 0
    for (int r : reps) {
        int neg = 0;
        for (int x = 0; x < f.n; ++x)
            if (f.plus(r, x) == 0) neg = x;
        // class of -r among reps: -r = r * (-1); -1 is a square iff q = 1 mod 4
        int cls;
        if (every_unit_square)
            cls = 1;
        else {
            bool sq = fq.is_square((q - 1) % q);
            cls = sq ? r : (r == 1 ? u : 1);
        }
        (void)neg;
        std::array<int, 2> rel{0, 0};
        rel[coeff(r)] += 1;
        rel[coeff(cls)] += 1;
        rels.push_back(rel);
    }
    // binary congruences diag(a,b) ~ diag(c,d)
    for (int a : reps)
        for (int b : reps)
            for (int c : reps)
                for (int d : reps) {
                    if (std::make_pair(a, b) <= std::make_pair(c, d)) continue;
                    if (binary_congruent(f, a, b, c, d)) {
                        std::array<int, 2> rel{0, 0};
                        rel[coeff(a)] += 1;
                        rel[coeff(b)] += 1;
                        rel[coeff(c)] -= 1;
                        rel[coeff(d)] -= 1;
                        if (rel[0] || rel[1]) rels.push_back(rel);
                    }
                }
    if (gens == 1)
        for (auto& r : rels) r[1] = 0;
    Lattice2 L = Lattice2::from_relations(rels);
    if (gens == 1) L.h22 = 1;
    if (!L.finite()) throw std::runtime_error("witt oracle: group not finite");

    WittOracle o;
    long long d1 = L.h11, d2 = L.h22;
    o.order = static_cast<int>(d1 * d2);
    auto idx = [&](long long a, long long b) {
        auto [aa, bb] = L.canon(a, b);
        return static_cast<int>(bb * d1 + aa);
    };
    std::vector<std::pair<long long, long long>> coords(o.order);
    for (long long b = 0; b < d2; ++b)
        for (long long a = 0; a < d1; ++a) coords[static_cast<std::size_t>(b * d1 + a)] = {a, b};
    for (auto [a, b] : coords) {
        std::string name;
        if (a) name += std::to_string(a) + "<1>";
        if (b) name += (name.empty() ? "" : "+") + std::to_string(b) + "<u>";
        if (name.empty()) name = "0";
        o.elems.push_back(name);
    }
    o.one = idx(1, 0);
    for (int i = 0; i < o.order; ++i)
        for (int j = 0; j < o.order; ++j) {
            auto [a, b] = coords[static_cast<std::size_t>(i)];
            auto [c, dd] = coords[static_cast<std::size_t>(j)];
            o.add[{i, j}] = idx(a + c, b + dd);
            o.mul[{i, j}] = idx(a * c + b * dd, a * dd + b * c);  // <u>^2 = <1>
        }
    // I = even-rank classes: rank of a<1> + b<u> is a + b mod 2; well-defined
    // because every relation has even total coefficient sum
    for (int i = 0; i < o.order; ++i) {
        auto [a, b] = coords[static_cast<std::size_t>(i)];
        if ((a + b) % 2 == 0) o.ideal.push_back(i);
    }
    {
        std::vector<int> span{0};
        for (int x : o.ideal)
            for (int y : o.ideal) {
                int p = o.mul[{x, y}];
                std::vector<int> grown = span;
                for (int s : span) {
                    int acc = s;
                    for (int k = 0; k < o.order; ++k) {
                        acc = o.add[{acc, p}];
                        if (std::find(grown.begin(), grown.end(), acc) == grown.end())
                            grown.push_back(acc);
                    }
                }
                span = std::move(grown);
            }
        std::sort(span.begin(), span.end());
        o.ideal_sq = span;
    }
    return o;
}

bool witt_tables_agree(const WittOracle& o, const WittRing& w) {
    if (o.order != w.order) return false;
    // candidate bijections fixing 0 and matching <1>
    std::vector<int> rest;
    for (int i = 0; i < o.order; ++i)
        if (i != 0 && i != o.one) rest.push_back(i);
    std::vector<int> targets;
    for (int i = 0; i < w.order; ++i)
        if (i != 0 && i != w.one) targets.push_back(i);
    std::sort(targets.begin(), targets.end());
    do {
        std::vector<int> phi(o.order, -1);
        phi[0] = 0;
        phi[o.one] = w.one;
        for (std::size_t k = 0; k < rest.size(); ++k) phi[rest[k]] = targets[k];
        bool ok = true;
        for (int a = 0; a < o.order && ok; ++a)
            for (int b = 0; b < o.order && ok; ++b) {
                if (phi[o.add.at({a, b})] != w.add(phi[a], phi[b])) ok = false;
                if (phi[o.mul.at({a, b})] != w.mul(phi[a], phi[b])) ok = false;
            }
        if (ok) {
            // ideal filtration sizes must agree too
            std::size_t wI = w.ideal_pow.size() > 1 ? w.ideal_pow[1].size() : 1;
            std::size_t wI2 = w.ideal_pow.size() > 2 ? w.ideal_pow[2].size() : 1;
            if (o.ideal.size() == wI && o.ideal_sq.size() == wI2) return true;
        }
    } while (std::next_permutation(targets.begin(), targets.end()));
    return false;
}

std::vector<AMonomial> enumerate_basis(const Algebra& alg, Bidegree b, int exp_bound) {
    std::vector<AMonomial> out;
    int cap = alg.gen_cap();
    // independent degree bookkeeping
    auto tau_p = [](int i) { return (1 << (i + 1)) - 1; };
    auto tau_q = [](int i) { return (1 << i) - 1; };
    auto xi_p = [](int i) { return (1 << (i + 1)) - 2; };
    auto xi_q = [](int i) { return (1 << i) - 1; };
    std::vector<std::vector<KM2Mono>> km(exp_bound + 1);
    for (int d = 0; d <= exp_bound; ++d) km[d] = alg.preset().km_basis(d);
    const int pmax = b.p + exp_bound;  // coefficient degrees are <= exp_bound
    for (uint16_t mask = 0; mask < (1 << (cap + 1)); ++mask) {
        int p0 = 0, q0 = 0;
        for (int i = 0; i <= cap; ++i)
            if (mask & (1 << i)) {
                p0 += tau_p(i);
                q0 += tau_q(i);
            }
        if (p0 > pmax) continue;
        std::array<uint8_t, kMaxGenStorage> xi{};
        auto rec = [&](auto&& self, int j, int p1, int q1) -> void {
            if (j < 1) {
                for (int d = 0; d <= exp_bound; ++d) {
                    for (const KM2Mono& c : km[d]) {
                        if (p1 - d != b.p) continue;
                        int tpow = q1 - d - b.q;
                        if (tpow < 0 || tpow > 8 * exp_bound) continue;
                        AMonomial m;
                        m.c = c;
                        m.tpow = tpow;
                        m.m.tau = mask;
                        m.m.xi = xi;
                        out.push_back(m);
                    }
                }
                return;
            }
            for (int e = 0; e <= exp_bound && p1 + e * xi_p(j) <= pmax; ++e) {
                xi[j] = static_cast<uint8_t>(e);
                self(self, j - 1, p1 + e * xi_p(j), q1 + e * xi_q(j));
            }
            xi[j] = 0;
        };
        rec(rec, cap, p0, q0);
    }
    std::sort(out.begin(), out.end(), amono_less);
    return out;
}

int plain_rank(std::vector<std::vector<uint8_t>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv][c]) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c])
                for (std::size_t k = 0; k < cols; ++k) rows[i][k] ^= rows[r][k];
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace wsteen::oracles
