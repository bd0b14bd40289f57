#include "wsteen/shadow.hpp"

#include <algorithm>
#include <cassert>

namespace wsteen {

namespace {

Bidegree tau_deg(int i) { return {(1 << (i + 1)) - 1, (1 << i) - 1}; }
Bidegree xi_deg(int i) { return {(1 << (i + 1)) - 2, (1 << i) - 1}; }

template <typename T>
void parity_canon(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    std::vector<T> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2) out.push_back(v[i]);
        i = j;
    }
    v.swap(out);
}

}  // namespace

Bidegree HWMono::bidegree() const {
    Bidegree d{0, 0};
    for (int i = 0; i < kMaxGenStorage; ++i) {
        if (tau & (1 << i)) d = d + tau_deg(i);
        if (xib[i]) d = d + xi_deg(i) * xib[i];
    }
    if (eps) d = d + Bidegree{2, 0};            // |xibar_1 tau| = (2,1)+(0,-1)
    d = d + Bidegree{4, 2} * r1;                // |xibar_1^2|
    return d;
}

bool HWMono::is_one() const {
    if (tau || eps || r1) return false;
    for (uint8_t e : xib)
        if (e) return false;
    return true;
}

Bidegree KMHWMono::bidegree() const {
    Bidegree d = tau_deg(0) * e0;
    for (int i = 1; i < kMaxGenStorage; ++i) {
        if (tau & (1 << i)) d = d + tau_deg(i);
        if (xib[i]) d = d + xi_deg(i) * xib[i];
    }
    return d;
}

bool KMHWMono::is_one() const {
    if (e0 || tau) return false;
    for (uint8_t e : xib)
        if (e) return false;
    return true;
}

Bidegree HKWMono::bidegree() const {
    Bidegree d{0, 0};
    for (int i = 0; i < kMaxGenStorage; ++i) {
        if (tau & (1 << i)) d = d + tau_deg(i);
        if (xib[i]) d = d + xi_deg(i) * xib[i];
    }
    d = d + Bidegree{4, 2} * r1;
    return d;
}

std::vector<Bidegree> KMHWElement::bidegrees() const {
    std::vector<Bidegree> out;
    for (const auto& term : t) {
        Bidegree b = term.bidegree();
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

KMHWElement KMHWElement::homogeneous_part(Bidegree b) const {
    KMHWElement r{ctx, {}};
    for (const auto& term : t)
        if (term.bidegree() == b) r.t.push_back(term);
    return r;
}

Context::Context(PresetPtr preset, int gen_cap) : alg_(std::move(preset), gen_cap) {}

const Context::Lab& Context::lab(Bidegree b) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = labs_.find(b);
        if (it != labs_.end()) return *it->second;
    }
    auto L = std::make_unique<Lab>();
    L->b = b;
    build_lab(*L);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = labs_.try_emplace(b, std::move(L));
    return *it->second;
}

const std::vector<AMonomial>& Context::abasis(Bidegree b) const { return lab(b).abasis; }

F2Vec Context::encode(const AElement& x, Bidegree b) const {
    const Lab& L = lab(b);
    F2Vec v(L.abasis.size());
    for (const auto& m : x.t) {
        auto it = L.aindex.find(m);
        if (it == L.aindex.end())
            throw AlgebraError("encode: monomial not in basis of " + b.str() +
                               " (inhomogeneous element?)");
        v.flip(it->second);
    }
    return v;
}

AElement Context::decode(const F2Vec& v, Bidegree b) const {
    const Lab& L = lab(b);
    AElement x = alg_.zero();
    for (std::size_t i = 0; i < L.abasis.size(); ++i)
        if (v.get(i)) x.t.push_back(L.abasis[i]);
    std::sort(x.t.begin(), x.t.end(), amono_less);
    return x;
}

AElement Context::hw_mono_element(const HWMono& m) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = hw_mono_cache_.find(m);
        if (it != hw_mono_cache_.end()) return it->second;
    }
    AElement e = alg_.one();
    for (int i = 0; i < kMaxGenStorage; ++i)
        if (m.tau & (1 << i)) e = alg_.mul(e, alg_.tau_i(i));
    if (m.eps) {
        AElement xb1t = alg_.right_scale(alg_.xibar_i(1), CoefMono{alg_.preset().one_mono(), 1});
        e = alg_.mul(e, xb1t);
    }
    for (int k = 0; k < m.r1; ++k) e = alg_.mul(e, alg_.pow(alg_.xibar_i(1), 2));
    for (int j = 2; j < kMaxGenStorage; ++j)
        for (int k = 0; k < m.xib[j]; ++k) e = alg_.mul(e, alg_.xibar_i(j));
    std::lock_guard<std::mutex> lock(mu_);
    hw_mono_cache_.emplace(m, e);
    return e;
}

AElement Context::hw_item_element(const HWBasisItem& it) const {
    return alg_.left_scale(hw_mono_element(it.m), it.s);
}

void Context::enumerate_hw(Bidegree b, std::vector<HWBasisItem>& out) const {
    if (b.p - 2 * b.q < 0) return;
    int dmax = b.p - 2 * b.q;
    int budget = b.p + dmax;
    int cap = alg_.gen_cap();
    if ((1 << (cap + 2)) - 2 <= budget)
        throw CapExceeded("H**H_W basis at " + b.str() + " may need generators beyond the cap");

    HWMono mono;
    auto emit = [&](Bidegree mdeg) {
        int d = mdeg.p - b.p;
        if (d < 0) return;
        int t = mdeg.q - d - b.q;
        if (t < 0) return;
        for (const auto& c : alg_.preset().km_basis(d)) out.push_back({{c, t}, mono});
    };
    auto rec = [&](auto&& self, int j, Bidegree sofar) -> void {
        if (j < 2) {
            for (int r1 = 0; sofar.p + 4 * r1 <= budget; ++r1) {
                mono.r1 = static_cast<uint8_t>(r1);
                Bidegree d1 = sofar + Bidegree{4, 2} * r1;
                for (int eps = 0; eps < 2 && d1.p + 2 * eps <= budget; ++eps) {
                    mono.eps = static_cast<uint8_t>(eps);
                    Bidegree d2 = d1 + Bidegree{2, 0} * eps;
                    for (uint16_t mask = 0; mask < (1 << (cap + 1)); ++mask) {
                        Bidegree d3 = d2;
                        bool ok = true;
                        for (int i = 0; i <= cap; ++i)
                            if (mask & (1 << i)) {
                                d3 = d3 + tau_deg(i);
                                if (d3.p > budget) { ok = false; break; }
                            }
                        if (!ok) continue;
                        mono.tau = mask;
                        emit(d3);
                    }
                    mono.tau = 0;
                }
                mono.eps = 0;
            }
            mono.r1 = 0;
            return;
        }
        Bidegree gd = xi_deg(j);
        for (int e = 0; sofar.p + e * gd.p <= budget; ++e) {
            mono.xib[j] = static_cast<uint8_t>(e);
            self(self, j - 1, sofar + gd * e);
        }
        mono.xib[j] = 0;
    };
    rec(rec, cap, Bidegree{0, 0});
    std::sort(out.begin(), out.end());
}

void Context::enumerate_kmhw(Bidegree b, std::vector<KMHWTerm>& out) const {
    if (b.p - 2 * b.q < 0) return;
    int dmax = b.p - 2 * b.q;
    int budget = b.p + dmax;
    int cap = alg_.gen_cap();
    if ((1 << (cap + 2)) - 2 <= budget)
        throw CapExceeded("k^M**H_W basis at " + b.str() + " may need generators beyond the cap");

    KMHWMono mono;
    auto emit = [&](Bidegree mdeg) {
        int d = mdeg.p - b.p;
        if (d < 0 || mdeg.q - d != b.q) return;  // no tau power available here
        for (const auto& c : alg_.preset().km_basis(d)) out.push_back({c, mono});
    };
    auto rec = [&](auto&& self, int j, Bidegree sofar) -> void {
        if (j < 1) {
            for (int e0 = 0; e0 <= 3 && sofar.p + e0 <= budget; ++e0) {
                mono.e0 = static_cast<uint8_t>(e0);
                Bidegree d1 = sofar + tau_deg(0) * e0;
                for (uint16_t mask = 0; mask < (1 << (cap + 1)); mask += 2) {
                    Bidegree d2 = d1;
                    bool ok = true;
                    for (int i = 1; i <= cap; ++i)
                        if (mask & (1 << i)) {
                            d2 = d2 + tau_deg(i);
                            if (d2.p > budget) { ok = false; break; }
                        }
                    if (!ok) continue;
                    mono.tau = mask;
                    emit(d2);
                }
                mono.tau = 0;
            }
            mono.e0 = 0;
            return;
        }
        Bidegree gd = xi_deg(j);
        int step = (j == 1) ? 2 : 1;  // xibar_1 appears only in even powers
        for (int e = 0; sofar.p + e * gd.p <= budget; e += step) {
            mono.xib[j] = static_cast<uint8_t>(e);
            self(self, j - 1, sofar + gd * e);
        }
        mono.xib[j] = 0;
    };
    rec(rec, cap, Bidegree{0, 0});
    std::sort(out.begin(), out.end());
}

void Context::enumerate_hkw(Bidegree b, std::vector<HKWBasisItem>& out) const {
    if (b.p - 2 * b.q < 0) return;
    int dmax = b.p - 2 * b.q;
    int budget = b.p + dmax;
    int cap = alg_.gen_cap();
    if ((1 << (cap + 2)) - 2 <= budget)
        throw CapExceeded("H**K^W basis at " + b.str() + " may need generators beyond the cap");

    HKWMono mono;
    auto emit = [&](Bidegree mdeg) {
        int d = mdeg.p - b.p;
        if (d < 0 || mdeg.q - d != b.q) return;
        for (const auto& c : alg_.preset().km_basis(d)) out.push_back({c, mono});
    };
    auto rec = [&](auto&& self, int j, Bidegree sofar) -> void {
        if (j < 2) {
            for (int r1 = 0; sofar.p + 4 * r1 <= budget; ++r1) {
                mono.r1 = static_cast<uint8_t>(r1);
                Bidegree d1 = sofar + Bidegree{4, 2} * r1;
                for (uint16_t mask = 0; mask < (1 << (cap + 1)); ++mask) {
                    Bidegree d2 = d1;
                    bool ok = true;
                    for (int i = 0; i <= cap; ++i)
                        if (mask & (1 << i)) {
                            d2 = d2 + tau_deg(i);
                            if (d2.p > budget) { ok = false; break; }
                        }
                    if (!ok) continue;
                    mono.tau = mask;
                    emit(d2);
                }
                mono.tau = 0;
            }
            mono.r1 = 0;
            return;
        }
        Bidegree gd = xi_deg(j);
        for (int e = 0; sofar.p + e * gd.p <= budget; ++e) {
            mono.xib[j] = static_cast<uint8_t>(e);
            self(self, j - 1, sofar + gd * e);
        }
        mono.xib[j] = 0;
    };
    rec(rec, cap, Bidegree{0, 0});
    std::sort(out.begin(), out.end());
}

void Context::build_lab(Lab& L) const {
    L.abasis = alg_.basis(L.b);
    for (std::size_t i = 0; i < L.abasis.size(); ++i) L.aindex.emplace(L.abasis[i], i);

    enumerate_hw(L.b, L.hw_items);
    F2Matrix hw_cols(L.abasis.size(), L.hw_items.size());
    for (std::size_t j = 0; j < L.hw_items.size(); ++j) {
        AElement e = alg_.left_scale(hw_mono_element(L.hw_items[j].m), L.hw_items[j].s);
        F2Vec v(L.abasis.size());
        for (const auto& m : e.t) {
            auto it = L.aindex.find(m);
            if (it == L.aindex.end()) throw AlgebraError("H**H_W expansion left the bidegree");
            v.flip(it->second);
        }
        hw_cols.set_column(j, std::move(v));
    }
    L.hw_solver = std::make_unique<F2Solver>(hw_cols);
    if (L.hw_solver->rank() != static_cast<int>(L.hw_items.size()))
        throw AlgebraError("H**H_W monomials dependent at " + L.b.str());

    // eta_R(tau)·A spans the right-tau submodule in this bidegree
    L.etaR_span = F2Span(L.abasis.size());
    for (const auto& m : alg_.basis(L.b + Bidegree{0, 1})) {
        AElement e = alg_.right_scale(alg_.from_monomial(m), CoefMono{alg_.preset().one_mono(), 1});
        F2Vec v(L.abasis.size());
        for (const auto& mm : e.t) v.flip(L.aindex.at(mm));
        L.etaR_span.add(std::move(v));
    }
    {
        std::vector<bool> is_pivot(L.abasis.size(), false);
        for (int p : L.etaR_span.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
        for (std::size_t i = 0; i < L.abasis.size(); ++i)
            if (!is_pivot[i]) L.transversal.push_back(L.abasis[i]);
    }

    enumerate_kmhw(L.b, L.kmhw_items);
    for (std::size_t j = 0; j < L.hw_items.size(); ++j)
        if (L.hw_items[j].s.tpow == 0) L.mu_items.push_back(j);
    if (L.kmhw_items.size() != L.mu_items.size())
        throw AlgebraError("k^M**H_W basis count mismatch at " + L.b.str());
    F2Matrix remark_cols(L.mu_items.size(), L.kmhw_items.size());
    for (std::size_t j = 0; j < L.kmhw_items.size(); ++j) {
        AElement e = alg_.left_scale(kmhw_mono_lift(L.kmhw_items[j].m),
                                     CoefMono{L.kmhw_items[j].c, 0});
        F2Vec av(L.abasis.size());
        for (const auto& m : e.t) av.flip(L.aindex.at(m));
        auto cert = L.hw_solver->solve(av);
        if (!cert) throw AlgebraError("k^M**H_W basis monomial not in H**H_W at " + L.b.str());
        F2Vec mu(L.mu_items.size());
        for (std::size_t k = 0; k < L.mu_items.size(); ++k)
            if (cert->get(L.mu_items[k])) mu.set(k);
        remark_cols.set_column(j, std::move(mu));
    }
    L.remark_solver = std::make_unique<F2Solver>(remark_cols);
    if (L.remark_solver->rank() != static_cast<int>(L.kmhw_items.size()))
        throw AlgebraError("k^M**H_W change of basis not invertible at " + L.b.str());

    enumerate_hkw(L.b, L.hkw_items);
}

const std::vector<HWBasisItem>& Context::hw_basis(Bidegree b) const { return lab(b).hw_items; }

std::optional<HWElement> Context::hw_try_expand(const AElement& x) const {
    HWElement out{this, x, {}};
    for (Bidegree b : x.bidegrees()) {
        const Lab& L = lab(b);
        F2Vec v = encode(x.homogeneous_part(b), b);
        auto sol = L.hw_solver->solve(v);
        if (!sol) return std::nullopt;
        for (std::size_t j = 0; j < L.hw_items.size(); ++j)
            if (sol->get(j)) out.cert.push_back(L.hw_items[j]);
    }
    std::sort(out.cert.begin(), out.cert.end());
    return out;
}

HWElement Context::hw_expand(const AElement& x) const {
    auto r = hw_try_expand(x);
    if (!r) throw NotInSubalgebra("element is not in H**H_W: " + alg_.str(x));
    return *r;
}

HWElement Context::hw_from_cert(std::vector<HWBasisItem> cert) const {
    AElement x = alg_.zero();
    for (const auto& it : cert) x = alg_.add(x, hw_item_element(it));
    parity_canon(cert);
    return {this, std::move(x), std::move(cert)};
}

const std::vector<AMonomial>& Context::hkm_transversal(Bidegree b) const { return lab(b).transversal; }

HKMElement Context::to_hkm(const AElement& x) const {
    AElement rep = alg_.zero();
    for (Bidegree b : x.bidegrees()) {
        const Lab& L = lab(b);
        F2Vec v = L.etaR_span.reduce(encode(x.homogeneous_part(b), b));
        rep = alg_.add(rep, decode(v, b));
    }
    return {this, std::move(rep)};
}

F2Vec Context::hkm_encode(const HKMElement& x, Bidegree b) const {
    const Lab& L = lab(b);
    F2Vec v(L.transversal.size());
    for (const auto& m : x.rep.t) {
        auto it = std::lower_bound(L.transversal.begin(), L.transversal.end(), m,
                                   [](const AMonomial& a, const AMonomial& b2) { return amono_less(a, b2); });
        if (it == L.transversal.end() || !(*it == m))
            throw AlgebraError("HKM representative is not reduced at " + b.str());
        v.flip(static_cast<std::size_t>(it - L.transversal.begin()));
    }
    return v;
}

HKMElement Context::d_right(const HKMElement& x) const {
    bool check = false;
    {
        std::lock_guard<std::mutex> lock(mu_);
#ifndef NDEBUG
        check = true;
#else
        check = (lift_check_counter_++ % 32) == 0;
#endif
    }
    if (check) {
        for (Bidegree b : x.rep.bidegrees()) {
            const auto& upper = alg_.basis(b + Bidegree{0, 1});
            if (upper.empty()) continue;
            AElement amb = alg_.right_scale(alg_.from_monomial(upper.front()),
                                            CoefMono{alg_.preset().one_mono(), 1});
            HKMElement z = to_hkm(alg_.act(Sq::Sq2, Side::Right, amb));
            if (!z.is_zero()) throw AlgebraError("d_right is not lift-independent");
        }
    }
    return to_hkm(alg_.act(Sq::Sq2, Side::Right, x.rep));
}

const std::vector<KMHWTerm>& Context::kmhw_basis(Bidegree b) const { return lab(b).kmhw_items; }

AElement Context::kmhw_mono_lift(const KMHWMono& m) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = kmhw_lift_cache_.find(m);
        if (it != kmhw_lift_cache_.end()) return it->second;
    }
    AElement e = alg_.one();
    for (int k = 0; k < m.e0; ++k) e = alg_.mul(e, alg_.tau_i(0));
    for (int i = 1; i < kMaxGenStorage; ++i)
        if (m.tau & (1 << i)) e = alg_.mul(e, alg_.tau_i(i));
    for (int j = 1; j < kMaxGenStorage; ++j)
        for (int k = 0; k < m.xib[j]; ++k) e = alg_.mul(e, alg_.xibar_i(j));
    std::lock_guard<std::mutex> lock(mu_);
    kmhw_lift_cache_.emplace(m, e);
    return e;
}

AElement Context::kmhw_lift(const KMHWElement& x) const {
    AElement e = alg_.zero();
    for (const auto& term : x.t)
        e = alg_.add(e, alg_.left_scale(kmhw_mono_lift(term.m), CoefMono{term.c, 0}));
    return e;
}

KMHWElement Context::to_kmhw(const HWElement& x) const {
    KMHWElement out{this, {}};
    // group certificate rows by bidegree; drop left-tau multiples
    std::map<Bidegree, std::vector<const HWBasisItem*>> parts;
    for (const auto& it : x.cert)
        if (it.s.tpow == 0) parts[it.bidegree()].push_back(&it);
    for (auto& [b, items] : parts) {
        const Lab& L = lab(b);
        F2Vec mu(L.mu_items.size());
        for (const HWBasisItem* it : items) {
            auto pos = std::lower_bound(L.hw_items.begin(), L.hw_items.end(), *it);
            if (pos == L.hw_items.end() || !(*pos == *it))
                throw AlgebraError("certificate row missing from basis at " + b.str());
            std::size_t idx = static_cast<std::size_t>(pos - L.hw_items.begin());
            auto mp = std::lower_bound(L.mu_items.begin(), L.mu_items.end(), idx);
            if (mp == L.mu_items.end() || *mp != idx)
                throw AlgebraError("certificate row is not tau-free at " + b.str());
            mu.flip(static_cast<std::size_t>(mp - L.mu_items.begin()));
        }
        auto sol = L.remark_solver->solve(mu);
        if (!sol) throw AlgebraError("k^M**H_W expansion failed at " + b.str());
        for (std::size_t j = 0; j < L.kmhw_items.size(); ++j)
            if (sol->get(j)) out.t.push_back(L.kmhw_items[j]);
    }
    parity_canon(out.t);
    return out;
}

KMHWElement Context::to_kmhw(const AElement& x) const { return to_kmhw(hw_expand(x)); }

KMHWElement Context::kmhw_add(const KMHWElement& a, const KMHWElement& b) const {
    KMHWElement r{this, a.t};
    r.t.insert(r.t.end(), b.t.begin(), b.t.end());
    parity_canon(r.t);
    return r;
}

KMHWElement Context::kmhw_mul(const KMHWElement& a, const KMHWElement& b) const {
    return to_kmhw(alg_.mul(kmhw_lift(a), kmhw_lift(b)));
}

KMHWElement Context::kmhw_scale(const KMHWElement& x, const KM2Mono& c) const {
    KMHWElement r{this, {}};
    for (const auto& term : x.t) {
        auto cc = alg_.preset().mono_mul(term.c, c);
        if (cc) r.t.push_back({*cc, term.m});
    }
    parity_canon(r.t);
    return r;
}

KMHWElement Context::kmhw_right_tau(const KMHWElement& x) const {
    return to_kmhw(alg_.right_scale(kmhw_lift(x), CoefMono{alg_.preset().one_mono(), 1}));
}

KMHWElement Context::kmhw_from_mono(const KMHWMono& m) const {
    return {this, {{alg_.preset().one_mono(), m}}};
}

KMHWElement Context::d_left(const KMHWElement& x) const {
    bool check = false;
    {
        std::lock_guard<std::mutex> lock(mu_);
#ifndef NDEBUG
        check = true;
#else
        check = (lift_check_counter_++ % 32) == 0;
#endif
    }
    if (check) {
        for (Bidegree b : x.bidegrees()) {
            const auto& items = hw_basis(b + Bidegree{0, 1});
            if (items.empty()) continue;
            AElement amb = alg_.left_scale(hw_item_element(items.front()),
                                           CoefMono{alg_.preset().one_mono(), 1});
            KMHWElement z = to_kmhw(alg_.act(Sq::Sq2, Side::Left, amb));
            if (!z.is_zero()) throw AlgebraError("d_left is not lift-independent");
        }
    }
    return to_kmhw(alg_.act(Sq::Sq2, Side::Left, kmhw_lift(x)));
}

F2Vec Context::kmhw_encode(const KMHWElement& x, Bidegree b) const {
    const Lab& L = lab(b);
    F2Vec v(L.kmhw_items.size());
    for (const auto& term : x.t) {
        auto it = std::lower_bound(L.kmhw_items.begin(), L.kmhw_items.end(), term);
        if (it == L.kmhw_items.end() || !(*it == term))
            throw AlgebraError("k^M**H_W term not in bidegree " + b.str());
        v.flip(static_cast<std::size_t>(it - L.kmhw_items.begin()));
    }
    return v;
}

KMHWElement Context::kmhw_decode(const F2Vec& v, Bidegree b) const {
    const Lab& L = lab(b);
    KMHWElement x{this, {}};
    for (std::size_t i = 0; i < L.kmhw_items.size(); ++i)
        if (v.get(i)) x.t.push_back(L.kmhw_items[i]);
    parity_canon(x.t);
    return x;
}

AElement Context::xibar_set(uint16_t iset) const {
    AElement e = alg_.one();
    for (int i = 1; i < kMaxGenStorage; ++i)
        if (iset & (1 << i)) e = alg_.mul(e, alg_.xibar_i(i));
    return e;
}

AElement Context::c_of(uint16_t iset) const {
    AElement e = alg_.zero();
    for (int i = 2; i < kMaxGenStorage; ++i)
        if (iset & (1 << i)) {
            AElement term = alg_.pow(alg_.xibar_i(i - 1), 2);
            term = alg_.mul(term, xibar_set(static_cast<uint16_t>(iset & ~(1 << i))));
            e = alg_.add(e, term);
        }
    return e;
}

AElement Context::c1_of(uint16_t iset) const {
    AElement e = alg_.mul(alg_.tau_i(0), xibar_set(iset));
    return alg_.add(e, alg_.mul(alg_.tau_i(1), c_of(iset)));
}

KMHWElement Context::c_class(uint16_t iset) const { return iset ? to_kmhw(c_of(iset)) : kmhw_zero(); }

KMHWElement Context::c1_class(uint16_t iset) const { return to_kmhw(c1_of(iset)); }

KMHWElement Context::b_class() const {
    KMHWMono m;
    m.e0 = 3;
    m.tau = 1 << 1;
    return kmhw_from_mono(m);
}

const std::vector<HKWBasisItem>& Context::hkw_presentation_basis(Bidegree b) const {
    return lab(b).hkw_items;
}

HKMElement Context::hkw_item_class(const HKWBasisItem& it) const {
    AElement e = alg_.one();
    for (int i = 0; i < kMaxGenStorage; ++i)
        if (it.m.tau & (1 << i)) e = alg_.mul(e, alg_.tau_i(i));
    for (int k = 0; k < it.m.r1; ++k) e = alg_.mul(e, alg_.pow(alg_.xibar_i(1), 2));
    for (int j = 2; j < kMaxGenStorage; ++j)
        for (int k = 0; k < it.m.xib[j]; ++k) e = alg_.mul(e, alg_.xibar_i(j));
    return to_hkm(alg_.left_scale(e, CoefMono{it.c, 0}));
}

std::string Context::str(const HWBasisItem& it) const {
    std::string out;
    std::string coef = alg_.str(it.s);
    if (coef != "1") out = coef;
    auto app = [&out](const std::string& s) {
        if (!out.empty()) out += "*";
        out += s;
    };
    for (int i = 0; i < kMaxGenStorage; ++i)
        if (it.m.tau & (1 << i)) app("t" + std::to_string(i));
    if (it.m.eps) app("xb1t");
    if (it.m.r1) app("xb1^" + std::to_string(2 * it.m.r1));
    for (int j = 2; j < kMaxGenStorage; ++j)
        if (it.m.xib[j]) {
            std::string s = "xb" + std::to_string(j);
            if (it.m.xib[j] > 1) s += "^" + std::to_string(static_cast<int>(it.m.xib[j]));
            app(s);
        }
    return out.empty() ? "1" : out;
}

std::string Context::str(const KMHWTerm& t) const {
    std::string out;
    std::string coef = alg_.preset().mono_str(t.c);
    if (coef != "1") out = coef;
    auto app = [&out](const std::string& s) {
        if (!out.empty()) out += "*";
        out += s;
    };
    if (t.m.e0) {
        std::string s = "t0";
        if (t.m.e0 > 1) s += "^" + std::to_string(static_cast<int>(t.m.e0));
        app(s);
    }
    for (int i = 1; i < kMaxGenStorage; ++i)
        if (t.m.tau & (1 << i)) app("t" + std::to_string(i));
    for (int j = 1; j < kMaxGenStorage; ++j)
        if (t.m.xib[j]) {
            std::string s = "xb" + std::to_string(j);
            if (t.m.xib[j] > 1) s += "^" + std::to_string(static_cast<int>(t.m.xib[j]));
            app(s);
        }
    return out.empty() ? "1" : out;
}

std::string Context::str(const KMHWElement& x) const {
    if (x.t.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < x.t.size(); ++i) {
        if (i) out += " + ";
        out += str(x.t[i]);
    }
    return out;
}

std::string Context::str(const HKWBasisItem& it) const {
    std::string out;
    std::string coef = alg_.preset().mono_str(it.c);
    if (coef != "1") out = coef;
    auto app = [&out](const std::string& s) {
        if (!out.empty()) out += "*";
        out += s;
    };
    for (int i = 0; i < kMaxGenStorage; ++i)
        if (it.m.tau & (1 << i)) app("t" + std::to_string(i));
    if (it.m.r1) app("xb1^" + std::to_string(2 * it.m.r1));
    for (int j = 2; j < kMaxGenStorage; ++j)
        if (it.m.xib[j]) {
            std::string s = "xb" + std::to_string(j);
            if (it.m.xib[j] > 1) s += "^" + std::to_string(static_cast<int>(it.m.xib[j]));
            app(s);
        }
    return out.empty() ? "1" : out;
}

}  // namespace wsteen
