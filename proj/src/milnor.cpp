#include "wsteen/milnor.hpp"

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

void amono_canon(std::vector<AMonomial>& v) {
    std::sort(v.begin(), v.end(), amono_less);
    std::vector<AMonomial> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2) out.push_back(v[i]);
        i = j;
    }
    v.swap(out);
}

std::optional<CoefMono> coef_mul(const FieldPreset& pre, const CoefMono& a, const CoefMono& b) {
    auto c = pre.mono_mul(a.c, b.c);
    if (!c) return std::nullopt;
    return CoefMono{*c, a.tpow + b.tpow};
}

}  // namespace

bool Pure::is_one() const {
    if (tau) return false;
    for (uint8_t e : xi)
        if (e) return false;
    return true;
}

Bidegree Pure::bidegree() const {
    Bidegree d{0, 0};
    for (int i = 0; i < kMaxGenStorage; ++i) {
        if (tau & (1 << i)) d = d + tau_deg(i);
        if (xi[i]) d = d + xi_deg(i) * xi[i];
    }
    return d;
}

bool amono_less(const AMonomial& a, const AMonomial& b) {
    Bidegree da = a.bidegree(), db = b.bidegree();
    if (da != db) return da < db;
    if (a.c != b.c) return a.c < b.c;
    if (a.tpow != b.tpow) return a.tpow < b.tpow;
    if (a.m.tau != b.m.tau) return a.m.tau < b.m.tau;
    return a.m.xi < b.m.xi;
}

bool AElement::is_homogeneous() const {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i].bidegree() != t[0].bidegree()) return false;
    return true;
}

std::optional<Bidegree> AElement::bidegree() const {
    if (t.empty() || !is_homogeneous()) return std::nullopt;
    return t[0].bidegree();
}

AElement AElement::homogeneous_part(Bidegree b) const {
    AElement r{alg, {}};
    for (const auto& m : t)
        if (m.bidegree() == b) r.t.push_back(m);
    return r;
}

std::vector<Bidegree> AElement::bidegrees() const {
    std::vector<Bidegree> out;
    for (const auto& m : t) {
        Bidegree b = m.bidegree();
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AElement operator+(const AElement& a, const AElement& b) { return a.alg ? a.alg->add(a, b) : b; }
AElement operator*(const AElement& a, const AElement& b) { return a.alg->mul(a, b); }
TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    TensorElement r{a.alg ? a.alg : b.alg, a.t};
    r.t.insert(r.t.end(), b.t.begin(), b.t.end());
    parity_canon(r.t);
    return r;
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r.insert(r.end(), b.begin(), b.end());
    parity_canon(r);
    return r;
}

Algebra::Algebra(PresetPtr preset, int gen_cap) : preset_(std::move(preset)), gen_cap_(gen_cap) {
    if (gen_cap_ < 2 || gen_cap_ > kMaxGenStorage - 2)
        throw AlgebraError("generator cap out of supported range");
    // startup check: the defining relation is homogeneous under the chosen grading
    for (int i = 0; i + 1 <= gen_cap_; ++i) {
        Bidegree lhs = tau_deg(i) * 2;
        Bidegree rho{-1, -1}, tau{0, -1};
        if (lhs != rho + tau_deg(i + 1)) throw AlgebraError("grading: rho*tau_{i+1} inhomogeneous");
        if (lhs != tau + xi_deg(i + 1)) throw AlgebraError("grading: tau*xi_{i+1} inhomogeneous");
        if (lhs != rho + tau_deg(0) + xi_deg(i + 1))
            throw AlgebraError("grading: rho*tau_0*xi_{i+1} inhomogeneous");
    }
}

void Algebra::check_same(const AElement& x, const AElement& y) const {
    if ((x.alg && x.alg != this) || (y.alg && y.alg != this))
        throw AlgebraError("elements belong to a different preset/algebra");
}

AElement Algebra::one() const { return from_monomial({preset_->one_mono(), 0, Pure{}}); }

AElement Algebra::tau_left() const { return from_monomial({preset_->one_mono(), 1, Pure{}}); }

AElement Algebra::rho() const {
    auto r = preset_->rho_mono();
    if (!r) return zero();
    return from_monomial({*r, 0, Pure{}});
}

AElement Algebra::km_class(const std::string& name) const {
    auto m = preset_->mono_by_name(name);
    if (!m) return zero();
    return from_monomial({*m, 0, Pure{}});
}

AElement Algebra::tau_i(int i) const {
    if (i < 0 || i > gen_cap_) throw CapExceeded("tau_" + std::to_string(i) + " beyond generator cap");
    Pure p;
    p.tau = static_cast<uint16_t>(1 << i);
    return from_monomial({preset_->one_mono(), 0, p});
}

AElement Algebra::xi_i(int i) const {
    if (i < 1 || i > gen_cap_) throw CapExceeded("xi_" + std::to_string(i) + " beyond generator cap");
    Pure p;
    p.xi[i] = 1;
    return from_monomial({preset_->one_mono(), 0, p});
}

AElement Algebra::xibar_i(int i) const { return iota_xi(i); }

AElement Algebra::from_monomial(const AMonomial& m) const { return {this, {m}}; }

AElement Algebra::from_coef(const CoefMono& s) const {
    return from_monomial({s.c, s.tpow, Pure{}});
}

AElement Algebra::from_scalar(const Scalar& s) const {
    AElement r = zero();
    for (const auto& cm : s) r.t.push_back({cm.c, cm.tpow, Pure{}});
    amono_canon(r.t);
    return r;
}

AElement Algebra::normal_form(const std::vector<RawMono>& raw) const {
    std::vector<AMonomial> acc;
    std::vector<RawMono> work(raw.begin(), raw.end());
    while (!work.empty()) {
        RawMono cur = std::move(work.back());
        work.pop_back();
        if (static_cast<int>(cur.km.size()) != preset_->num_classes())
            cur.km.resize(preset_->num_classes(), 0);
        if (cur.km[0] >= preset_->rho_nilpotence()) continue;  // rho-nilpotent branch died
        int hi = -1;
        for (int i = kMaxGenStorage - 1; i >= 0; --i)
            if (cur.tau[i] >= 2) { hi = i; break; }
        if (hi < 0) {
            auto c = preset_->normalize_mono(cur.km);
            if (!c) continue;
            AMonomial m;
            m.c = *c;
            m.tpow = cur.tpow;
            for (int i = 0; i < kMaxGenStorage; ++i) {
                if (cur.tau[i]) {
                    if (i > gen_cap_) throw CapExceeded("tau index beyond generator cap");
                    m.m.tau |= static_cast<uint16_t>(1 << i);
                }
                if (cur.xi[i]) {
                    if (i > gen_cap_) throw CapExceeded("xi index beyond generator cap");
                    if (cur.xi[i] > 255) throw AlgebraError("xi exponent overflow");
                    m.m.xi[i] = static_cast<uint8_t>(cur.xi[i]);
                }
            }
            acc.push_back(std::move(m));
            continue;
        }
        // tau_hi^2 -> rho tau_{hi+1} + tau xi_{hi+1} + rho tau_0 xi_{hi+1}
        if (hi + 1 > gen_cap_) throw CapExceeded("tau square rewrite beyond generator cap");
        RawMono base = cur;
        base.tau[hi] -= 2;
        {
            RawMono b1 = base;
            b1.km[0] += 1;
            b1.tau[hi + 1] += 1;
            work.push_back(std::move(b1));
        }
        {
            RawMono b2 = base;
            b2.tpow += 1;
            b2.xi[hi + 1] += 1;
            work.push_back(std::move(b2));
        }
        {
            RawMono b3 = base;
            b3.km[0] += 1;
            b3.tau[0] += 1;
            b3.xi[hi + 1] += 1;
            work.push_back(std::move(b3));
        }
    }
    amono_canon(acc);
    return {this, std::move(acc)};
}

AElement Algebra::mul_monomials(const AMonomial& a, const AMonomial& b) const {
    RawMono r;
    r.km.resize(preset_->num_classes(), 0);
    for (int i = 0; i < preset_->num_classes(); ++i) r.km[i] = a.c.e[i] + b.c.e[i];
    r.tpow = a.tpow + b.tpow;
    for (int i = 0; i < kMaxGenStorage; ++i) {
        r.tau[i] = ((a.m.tau >> i) & 1) + ((b.m.tau >> i) & 1);
        r.xi[i] = a.m.xi[i] + b.m.xi[i];
    }
    return normal_form({r});
}

AElement Algebra::mul(const AElement& x, const AElement& y) const {
    check_same(x, y);
    std::vector<AMonomial> acc;
    for (const auto& a : x.t)
        for (const auto& b : y.t) {
            AElement p = mul_monomials(a, b);
            acc.insert(acc.end(), p.t.begin(), p.t.end());
        }
    amono_canon(acc);
    return {this, std::move(acc)};
}

AElement Algebra::add(const AElement& x, const AElement& y) const {
    check_same(x, y);
    std::vector<AMonomial> acc = x.t;
    acc.insert(acc.end(), y.t.begin(), y.t.end());
    amono_canon(acc);
    return {this, std::move(acc)};
}

AElement Algebra::left_scale(const AElement& x, const CoefMono& s) const {
    std::vector<AMonomial> acc;
    for (const auto& m : x.t) {
        auto c = preset_->mono_mul(m.c, s.c);
        if (!c) continue;
        acc.push_back({*c, m.tpow + s.tpow, m.m});
    }
    amono_canon(acc);
    return {this, std::move(acc)};
}

AElement Algebra::left_scale(const AElement& x, const Scalar& s) const {
    AElement r = zero();
    for (const auto& cm : s) r = add(r, left_scale(x, cm));
    return r;
}

const AElement& Algebra::eta_r_tau_pow(int k) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (eta_r_tau_pow_.empty()) {
        eta_r_tau_pow_.push_back(one());
        // tau + rho tau_0
        RawMono t;
        t.km.resize(preset_->num_classes(), 0);
        t.tpow = 1;
        RawMono rt0;
        rt0.km.resize(preset_->num_classes(), 0);
        rt0.km[0] = 1;
        rt0.tau[0] = 1;
        eta_r_tau_pow_.push_back(normal_form({t, rt0}));
    }
    while (static_cast<int>(eta_r_tau_pow_.size()) <= k)
        eta_r_tau_pow_.push_back(mul(eta_r_tau_pow_.back(), eta_r_tau_pow_[1]));
    return eta_r_tau_pow_[k];
}

AElement Algebra::eta_r(const CoefMono& s) const {
    return left_scale(eta_r_tau_pow(s.tpow), CoefMono{s.c, 0});
}

AElement Algebra::right_scale(const AElement& x, const CoefMono& s) const {
    return mul(x, eta_r(s));
}

AElement Algebra::right_scale(const AElement& x, const Scalar& s) const {
    AElement r = zero();
    for (const auto& cm : s) r = add(r, right_scale(x, cm));
    return r;
}

AElement Algebra::pow(const AElement& x, int n) const {
    AElement r = one();
    for (int i = 0; i < n; ++i) r = mul(r, x);
    return r;
}

const TensorElement& Algebra::delta_tau_gen(int i) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (static_cast<int>(delta_tau_.size()) > i && delta_tau_[i].alg) return delta_tau_[i];
    }
    TensorElement d{this, {}};
    KM2Mono one_c = preset_->one_mono();
    Pure tau_p;
    tau_p.tau = static_cast<uint16_t>(1 << i);
    d.t.push_back({tau_p, {one_c, 0, Pure{}}});       // tau_i ⊗ 1
    d.t.push_back({Pure{}, {one_c, 0, tau_p}});       // 1 ⊗ tau_i
    for (int k = 0; k <= i - 1; ++k) {
        Pure xipow;
        xipow.xi[i -k] = static_cast<uint8_t>(1 << k);
        Pure tk;
        tk.tau = static_cast<uint16_t>(1 << k);
        d.t.push_back({xipow, {one_c, 0, tk}});       // xi_{i-k}^{2^k} ⊗ tau_k
    }
    parity_canon(d.t);
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(delta_tau_.size()) <= i) delta_tau_.resize(i + 1);
    delta_tau_[i] = d;
    return delta_tau_[i];
}

const TensorElement& Algebra::delta_xi_gen(int i) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (static_cast<int>(delta_xi_.size()) > i && delta_xi_[i].alg) return delta_xi_[i];
    }
    TensorElement d{this, {}};
    KM2Mono one_c = preset_->one_mono();
    Pure xi_p;
    xi_p.xi[i] = 1;
    d.t.push_back({xi_p, {one_c, 0, Pure{}}});
    d.t.push_back({Pure{}, {one_c, 0, xi_p}});
    for (int k = 1; k <= i - 1; ++k) {
        Pure xipow;
        xipow.xi[i - k] = static_cast<uint8_t>(1 << k);
        Pure xk;
        xk.xi[k] = 1;
        d.t.push_back({xipow, {one_c, 0, xk}});
    }
    parity_canon(d.t);
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(delta_xi_.size()) <= i) delta_xi_.resize(i + 1);
    delta_xi_[i] = d;
    return delta_xi_[i];
}

std::vector<std::pair<Pure, CoefMono>> Algebra::right_basis_expand(const AElement& x) const {
    std::vector<std::pair<Pure, CoefMono>> out;
    AElement rest = x;
    while (!rest.is_zero()) {
        const AMonomial* best = &rest.t[0];
        for (const auto& m : rest.t)
            if (m.tpow > best->tpow) best = &m;
        CoefMono s{best->c, best->tpow};
        Pure p = best->m;
        out.push_back({p, s});
        // subtract p·eta_R(s); only lower tau-powers remain
        rest = add(rest, right_scale(from_monomial({preset_->one_mono(), 0, p}), s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

TensorElement Algebra::tensor_canon(std::vector<std::pair<AMonomial, AMonomial>> raw) const {
    TensorElement r{this, {}};
    for (const auto& [lm, rm] : raw) {
        AElement left = from_monomial(lm);
        for (const auto& [p, sc] : right_basis_expand(left)) {
            AElement y = left_scale(from_monomial(rm), sc);
            for (const auto& ym : y.t) r.t.push_back({p, ym});
        }
    }
    parity_canon(r.t);
    return r;
}

TensorElement Algebra::tensor_mul(const TensorElement& a, const TensorElement& b) const {
    std::vector<std::pair<AMonomial, AMonomial>> raw;
    for (const auto& ta : a.t)
        for (const auto& tb : b.t) {
            AElement left = mul(from_monomial({preset_->one_mono(), 0, ta.m1}),
                                from_monomial({preset_->one_mono(), 0, tb.m1}));
            AElement right = mul(from_monomial(ta.m2), from_monomial(tb.m2));
            for (const auto& lm : left.t)
                for (const auto& rm : right.t) raw.push_back({lm, rm});
        }
    return tensor_canon(std::move(raw));
}

TensorElement Algebra::coproduct_pure(const Pure& m) const {
    TensorElement acc{this, {{Pure{}, {preset_->one_mono(), 0, Pure{}}}}};
    for (int i = 0; i < kMaxGenStorage; ++i) {
        if (m.tau & (1 << i)) acc = tensor_mul(acc, delta_tau_gen(i));
        if (m.xi[i]) {
            TensorElement p;
            {
                std::lock_guard<std::mutex> lock(mu_);
                auto it = delta_xi_pow_.find({i, m.xi[i]});
                if (it != delta_xi_pow_.end()) p = it->second;
            }
            if (!p.alg) {
                p = TensorElement{this, {{Pure{}, {preset_->one_mono(), 0, Pure{}}}}};
                for (int k = 0; k < m.xi[i]; ++k) p = tensor_mul(p, delta_xi_gen(i));
                std::lock_guard<std::mutex> lock(mu_);
                delta_xi_pow_[{i, m.xi[i]}] = p;
            }
            acc = tensor_mul(acc, p);
        }
    }
    return acc;
}

TensorElement Algebra::coproduct(const AElement& x) const {
    std::vector<std::pair<AMonomial, AMonomial>> raw;
    for (const auto& mono : x.t) {
        TensorElement d = coproduct_pure(mono.m);
        for (const auto& term : d.t) raw.push_back({{mono.c, mono.tpow, term.m1}, term.m2});
    }
    return tensor_canon(std::move(raw));
}

const AElement& Algebra::iota_tau(int i) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (static_cast<int>(iota_tau_.size()) > i && iota_tau_[i].alg) return iota_tau_[i];
    }
    AElement v = tau_i(i);
    for (int k = 0; k <= i - 1; ++k) {
        Pure xipow;
        xipow.xi[i - k] = static_cast<uint8_t>(1 << k);
        v = add(v, mul(from_monomial({preset_->one_mono(), 0, xipow}), iota_tau(k)));
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(iota_tau_.size()) <= i) iota_tau_.resize(i + 1);
    iota_tau_[i] = v;
    return iota_tau_[i];
}

const AElement& Algebra::iota_xi(int i) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (static_cast<int>(iota_xi_.size()) > i && iota_xi_[i].alg) return iota_xi_[i];
    }
    AElement v = xi_i(i);
    for (int k = 1; k <= i - 1; ++k) {
        Pure xipow;
        xipow.xi[i - k] = static_cast<uint8_t>(1 << k);
        v = add(v, mul(from_monomial({preset_->one_mono(), 0, xipow}), iota_xi(k)));
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(iota_xi_.size()) <= i) iota_xi_.resize(i + 1);
    iota_xi_[i] = v;
    return iota_xi_[i];
}

AElement Algebra::conjugate(const AElement& x) const {
    AElement r = zero();
    for (const auto& mono : x.t) {
        AElement term = eta_r(CoefMono{mono.c, mono.tpow});
        for (int i = 0; i < kMaxGenStorage; ++i) {
            if (mono.m.tau & (1 << i)) term = mul(term, iota_tau(i));
            for (int k = 0; k < mono.m.xi[i]; ++k) term = mul(term, iota_xi(i));
        }
        r = add(r, term);
    }
    return r;
}

Scalar Algebra::kronecker(const Pure& dual_of, const AElement& x) const {
    Scalar s;
    for (const auto& mono : x.t)
        if (mono.m == dual_of) s.push_back({mono.c, mono.tpow});
    parity_canon(s);
    return s;
}

Scalar Algebra::kronecker(Sq op, const AElement& x) const {
    Pure p;
    if (op == Sq::Sq1)
        p.tau = 1;  // dual of tau_0
    else
        p.xi[1] = 1;  // dual of xi_1
    return kronecker(p, x);
}

AElement Algebra::act(Sq op, Side side, const AElement& x) const {
    TensorElement d = coproduct(x);
    AElement r = zero();
    if (side == Side::Right) {
        Pure dual;
        if (op == Sq::Sq1)
            dual.tau = 1;
        else
            dual.xi[1] = 1;
        for (const auto& term : d.t) {
            if (term.m2.m != dual) continue;
            AElement xi_prime = from_monomial({preset_->one_mono(), 0, term.m1});
            r = add(r, right_scale(xi_prime, CoefMono{term.m2.c, term.m2.tpow}));
        }
    } else {
        for (const auto& term : d.t) {
            AElement xi_prime = from_monomial({preset_->one_mono(), 0, term.m1});
            Scalar sc = kronecker(op, conjugate(xi_prime));
            if (sc.empty()) continue;
            r = add(r, left_scale(from_monomial(term.m2), sc));
        }
    }
    return r;
}

std::vector<AMonomial> Algebra::basis(Bidegree b) const {
    std::vector<AMonomial> out;
    if (b.p - 2 * b.q < 0) return out;
    int dmax = b.p - 2 * b.q;
    int budget = b.p + dmax;
    // the first generator beyond the cap must be out of reach
    if ((1 << (gen_cap_ + 2)) - 2 <= budget)
        throw CapExceeded("bidegree " + b.str() + " may need generators beyond the cap");

    std::vector<std::pair<uint16_t, Bidegree>> tau_choices;
    for (uint16_t mask = 0; mask < (1 << (gen_cap_ + 1)); ++mask) {
        Bidegree d{0, 0};
        bool ok = true;
        for (int i = 0; i <= gen_cap_; ++i)
            if (mask & (1 << i)) {
                d = d + tau_deg(i);
                if (d.p > budget) { ok = false; break; }
            }
        if (ok && d.p <= budget) tau_choices.push_back({mask, d});
    }

    Pure pure;
    auto rec = [&](auto&& self, int gen, Bidegree sofar) -> void {
        if (gen < 1) {
            for (const auto& [mask, dtau] : tau_choices) {
                Bidegree total = sofar + dtau;
                if (total.p > budget) continue;
                int d = total.p - b.p;
                if (d < 0) continue;
                int tpow = total.q - d - b.q;
                if (tpow < 0) continue;
                for (const auto& c : preset_->km_basis(d)) {
                    AMonomial m;
                    m.c = c;
                    m.tpow = tpow;
                    m.m = pure;
                    m.m.tau = mask;
                    out.push_back(m);
                }
            }
            return;
        }
        Bidegree gd = xi_deg(gen);
        for (int e = 0; sofar.p + e * gd.p <= budget; ++e) {
            pure.xi[gen] = static_cast<uint8_t>(e);
            self(self, gen - 1, sofar + gd * e);
            if (e > 250) throw AlgebraError("xi exponent overflow in basis enumeration");
        }
        pure.xi[gen] = 0;
    };
    rec(rec, gen_cap_, Bidegree{0, 0});
    std::sort(out.begin(), out.end(), amono_less);
    return out;
}

Tensor3 Algebra::delta_left(const TensorElement& x) const {
    std::vector<Tensor3Term> acc;
    for (const auto& term : x.t) {
        TensorElement d1 = coproduct_pure(term.m1);
        for (const auto& t1 : d1.t) {
            // middle factor t1.m2 goes into right-basis form; its
            // coefficients travel on to the right factor
            AElement mid = from_monomial(t1.m2);
            for (const auto& [p2, sc] : right_basis_expand(mid)) {
                AElement y = left_scale(from_monomial(term.m2), sc);
                for (const auto& ym : y.t) acc.push_back({t1.m1, p2, ym});
            }
        }
    }
    parity_canon(acc);
    return {std::move(acc)};
}

Tensor3 Algebra::delta_right(const TensorElement& x) const {
    std::vector<Tensor3Term> acc;
    for (const auto& term : x.t) {
        TensorElement d2 = coproduct(from_monomial(term.m2));
        for (const auto& t2 : d2.t) acc.push_back({term.m1, t2.m1, t2.m2});
    }
    parity_canon(acc);
    return {std::move(acc)};
}

AElement Algebra::counit_left_collapse(const TensorElement& x) const {
    AElement r = zero();
    for (const auto& term : x.t) {
        if (!term.m1.is_one()) continue;
        r = add(r, from_monomial(term.m2));
    }
    return r;
}

AElement Algebra::counit_right_collapse(const TensorElement& x) const {
    AElement r = zero();
    for (const auto& term : x.t) {
        if (!term.m2.m.is_one()) continue;
        r = add(r, right_scale(from_monomial({preset_->one_mono(), 0, term.m1}),
                               CoefMono{term.m2.c, term.m2.tpow}));
    }
    return r;
}

std::string Algebra::str(const CoefMono& s) const {
    std::string out;
    std::string km = preset_->mono_str(s.c);
    if (km != "1") out = km;
    if (s.tpow > 0) {
        if (!out.empty()) out += "*";
        out += "tau";
        if (s.tpow > 1) out += "^" + std::to_string(s.tpow);
    }
    return out.empty() ? "1" : out;
}

std::string Algebra::str(const AMonomial& m) const {
    std::string out;
    std::string coef = str(CoefMono{m.c, m.tpow});
    if (coef != "1") out = coef;
    for (int i = 0; i < kMaxGenStorage; ++i)
        if (m.m.tau & (1 << i)) {
            if (!out.empty()) out += "*";
            out += "t" + std::to_string(i);
        }
    for (int i = 0; i < kMaxGenStorage; ++i)
        if (m.m.xi[i]) {
            if (!out.empty()) out += "*";
            out += "x" + std::to_string(i);
            if (m.m.xi[i] > 1) out += "^" + std::to_string(static_cast<int>(m.m.xi[i]));
        }
    return out.empty() ? "1" : out;
}

std::string Algebra::str(const AElement& x) const {
    if (x.t.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < x.t.size(); ++i) {
        if (i) out += " + ";
        out += str(x.t[i]);
    }
    return out;
}

std::string Algebra::str(const Scalar& s) const {
    if (s.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += " + ";
        out += str(s[i]);
    }
    return out;
}

std::string Algebra::str(const TensorElement& x) const {
    if (x.t.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < x.t.size(); ++i) {
        if (i) out += " + ";
        const auto& term = x.t[i];
        out += "(" + str(AMonomial{preset_->one_mono(), 0, term.m1}) + ")x(" + str(term.m2) + ")";
    }
    return out;
}

}  // namespace wsteen
