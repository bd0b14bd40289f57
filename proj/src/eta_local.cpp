#include "wsteen/eta_local.hpp"

#include <algorithm>

namespace wsteen {

Bidegree LocalMono::bidegree() const {
    Bidegree d = Bidegree{1, 1} * m + Bidegree{5, 0} * y;
    for (int j = 2; j < kMaxGenStorage; ++j)
        if (x & (1 << j)) d = d + Bidegree{1 << j, 0};
    return d;
}

LocalElement EtaLocal::one() const { return from_mono(LocalMono{}, static_cast<uint8_t>(witt().one)); }

LocalElement EtaLocal::from_mono(const LocalMono& m, uint8_t coeff) const {
    LocalElement v = zero();
    if (coeff != 0) v.t.push_back({m, coeff});
    return v;
}

LocalElement EtaLocal::eta(int power) const {
    LocalMono m;
    m.m = power;
    return from_mono(m, static_cast<uint8_t>(witt().one));
}

LocalElement EtaLocal::y() const {
    LocalMono m;
    m.y = 1;
    return from_mono(m, static_cast<uint8_t>(witt().one));
}

LocalElement EtaLocal::x(int j) const {
    LocalMono m;
    m.x = static_cast<uint16_t>(1 << j);
    return from_mono(m, static_cast<uint8_t>(witt().one));
}

LocalElement EtaLocal::add(const LocalElement& a, const LocalElement& b) const {
    LocalElement r = zero();
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size() || (i < a.t.size() && a.t[i].first < b.t[j].first)) {
            r.t.push_back(a.t[i++]);
        } else if (i == a.t.size() || b.t[j].first < a.t[i].first) {
            r.t.push_back(b.t[j++]);
        } else {
            uint8_t s = witt().add(a.t[i].second, b.t[j].second);
            if (s != 0) r.t.push_back({a.t[i].first, s});
            ++i;
            ++j;
        }
    }
    return r;
}

LocalElement EtaLocal::scale(const LocalElement& a, uint8_t w) const {
    LocalElement r = zero();
    for (const auto& [m, c] : a.t) {
        uint8_t s = witt().mul(c, w);
        if (s != 0) r.t.push_back({m, s});
    }
    return r;
}

LocalElement EtaLocal::local_mul(const LocalElement& a, const LocalElement& b) const {
    LocalElement out = zero();
    const uint8_t two = witt().add(static_cast<uint8_t>(witt().one), static_cast<uint8_t>(witt().one));
    struct Work {
        uint8_t coef;
        int m;
        int yexp;
        std::array<int, kMaxGenStorage> xexp;
    };
    for (const auto& [m1, c1] : a.t)
        for (const auto& [m2, c2] : b.t) {
            std::vector<Work> stack;
            Work w0{witt().mul(c1, c2), m1.m + m2.m, m1.y + m2.y, {}};
            for (int j = 2; j < kMaxGenStorage; ++j)
                w0.xexp[j] = ((m1.x >> j) & 1) + ((m2.x >> j) & 1);
            stack.push_back(w0);
            while (!stack.empty()) {
                Work w = stack.back();
                stack.pop_back();
                if (w.coef == 0) continue;
                if (w.yexp >= 2) continue;  // y^2 = 0
                int hi = -1;
                for (int j = kMaxGenStorage - 1; j >= 2; --j)
                    if (w.xexp[j] >= 2) { hi = j; break; }
                if (hi < 0) {
                    LocalMono m;
                    m.m = w.m;
                    m.y = static_cast<uint8_t>(w.yexp);
                    for (int j = 2; j < kMaxGenStorage; ++j)
                        if (w.xexp[j]) m.x |= static_cast<uint16_t>(1 << j);
                    out = add(out, from_mono(m, w.coef));
                    continue;
                }
                if (hi + 1 >= kMaxGenStorage) throw CapExceeded("x_j^2 rewrite beyond storage");
                Work n = w;  // x_hi^2 -> 2·x_{hi+1}
                n.xexp[hi] -= 2;
                n.xexp[hi + 1] += 1;
                n.coef = witt().mul(w.coef, two);
                stack.push_back(n);
            }
        }
    return out;
}

LocalElement EtaLocal::pow(const LocalElement& a, int n) const {
    LocalElement r = one();
    for (int i = 0; i < n; ++i) r = local_mul(r, a);
    return r;
}

LocalElement EtaLocal::localize(const KWHWElement& v) const {
    LocalElement out = zero();
    for (const auto& [m, c] : v.free) {
        LocalMono lm;
        lm.y = m.s;
        lm.x = m.t;
        lm.m = -c.deg + m.s;  // K^W_n sits at eta^{-n}; y = eta^{-1} s
        for (int j = 2; j < kMaxGenStorage; ++j)
            if (m.t & (1 << j)) lm.m += (1 << j) - 1;  // x_j = eta^{1-2^j} t_j
        out = add(out, from_mono(lm, c.val));
    }
    return out;  // the torsion part is eta-torsion and dies
}

std::string EtaLocal::str(const LocalElement& v) const {
    if (v.t.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : v.t) {
        if (!out.empty()) out += " + ";
        std::string s = witt().names[c];
        if (m.m) s += "*eta^" + std::to_string(m.m);
        if (m.y) s += "*y";
        for (int j = 2; j < kMaxGenStorage; ++j)
            if (m.x & (1 << j)) s += "*x" + std::to_string(j);
        out += s;
    }
    return out;
}

}  // namespace wsteen
