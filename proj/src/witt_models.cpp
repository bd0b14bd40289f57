#include "wsteen/witt_models.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace wsteen {

namespace {

Bidegree tau_deg(int i) { return {(1 << (i + 1)) - 1, (1 << i) - 1}; }
Bidegree xi_deg(int i) { return {(1 << (i + 1)) - 2, (1 << i) - 1}; }
constexpr Bidegree kSDeg{6, 1};

Bidegree iset_xideg(uint16_t iset) {
    Bidegree d{0, 0};
    for (int i = 2; i < kMaxGenStorage; ++i)
        if (iset & (1 << i)) d = d + xi_deg(i);
    return d;
}
Bidegree t_deg(uint16_t iset) { return Bidegree{0, -1} + iset_xideg(iset); }
Bidegree t1_deg(uint16_t iset) { return Bidegree{3, 0} + iset_xideg(iset); }
Bidegree c_deg(uint16_t iset) { return iset_xideg(iset) - Bidegree{2, 1}; }
Bidegree c1_deg(uint16_t iset) { return Bidegree{1, 0} + iset_xideg(iset); }

std::string iset_str(uint16_t iset) {
    std::string s = "{";
    bool first = true;
    for (int i = 2; i < kMaxGenStorage; ++i)
        if (iset & (1 << i)) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

KMHWElement kmhw_scale_elt(const Context& ctx, const KMHWElement& x, const KM2Element& c) {
    KMHWElement out = ctx.kmhw_zero();
    for (const auto& mono : c.terms) out = ctx.kmhw_add(out, ctx.kmhw_scale(x, mono));
    return out;
}

}  // namespace

Bidegree FreeMono::bidegree() const {
    Bidegree d = kSDeg * s;
    for (int j = 2; j < kMaxGenStorage; ++j)
        if (t & (1 << j)) d = d + tau_deg(j);
    return d;
}

KMHWMono FreeMono::residue_mono() const {
    KMHWMono m;
    m.e0 = static_cast<uint8_t>(3 * s);
    m.tau = static_cast<uint16_t>(t | (s ? 2 : 0));
    return m;
}

WContext::WContext(PresetPtr preset, int gen_cap) : ctx_(preset, gen_cap) {
    if (!preset->has_witt_model())
        throw PresetError("preset '" + preset->name() + "' carries no Witt model; "
                          "K^W⋆⋆H_WZ is not available");
    if (!preset->km2_vanishes())
        throw PresetError("preset '" + preset->name() + "' has k^M_2 != 0: lifts of rho·tau_j "
                          "are not unique, so the O(eta)-free model is refused");
}

KWHWElement WContext::kwhw_one() const {
    return kwhw_free(FreeMono{}, preset().kw_one());
}

KWHWElement WContext::kwhw_free(const FreeMono& m, const KWElement& c) const {
    KWHWElement x = kwhw_zero();
    if (c.val != 0) x.free.push_back({m, c});
    return x;
}

KWHWElement WContext::kwhw_s() const {
    FreeMono m;
    m.s = 1;
    return kwhw_free(m, preset().kw_one());
}

KWHWElement WContext::kwhw_t(int j) const {
    if (j < 2 || j > ctx_.gen_cap()) throw CapExceeded("t_j index out of range");
    FreeMono m;
    m.t = static_cast<uint16_t>(1 << j);
    return kwhw_free(m, preset().kw_one());
}

KWHWElement WContext::kwhw_torsion_certified(const KMHWElement& z, const KMHWElement& pre) const {
    KWHWElement x = kwhw_zero();
    x.torsion = z;
    x.torsion_preimage = pre;
    return x;
}

KWHWElement WContext::kwhw_torsion(const KMHWElement& z) const {
    KMHWElement pre = ctx_.kmhw_zero();
    for (Bidegree b : z.bidegrees()) {
        LabeledMatrix lm = matrix_of(ctx_, MapId::DLeft, b + Bidegree{2, 1});
        auto sol = lm.m.solve(ctx_.kmhw_encode(z.homogeneous_part(b), b));
        if (!sol) throw AlgebraError("torsion residue is not in im(d_left) at " + b.str());
        pre = ctx_.kmhw_add(pre, ctx_.kmhw_decode(*sol, b + Bidegree{2, 1}));
    }
    return kwhw_torsion_certified(z, pre);
}

KWHWElement WContext::kwhw_add(const KWHWElement& x, const KWHWElement& y) const {
    KWHWElement r = kwhw_zero();
    // coefficients merge per (monomial, tower degree); inhomogeneous sums keep
    // one entry per degree
    std::map<std::pair<FreeMono, int>, uint8_t> acc;
    for (const auto& [m, c] : x.free) acc[{m, c.deg}] = preset().witt().add(acc[{m, c.deg}], c.val);
    for (const auto& [m, c] : y.free) acc[{m, c.deg}] = preset().witt().add(acc[{m, c.deg}], c.val);
    for (const auto& [key, val] : acc)
        if (val != 0) r.free.push_back({key.first, KWElement{key.second, val}});
    std::sort(r.free.begin(), r.free.end(),
              [](const auto& a, const auto& b) { return std::tie(a.first, a.second.deg) <
                                                        std::tie(b.first, b.second.deg); });
    r.torsion = ctx_.kmhw_add(x.torsion, y.torsion);
    r.torsion_preimage = ctx_.kmhw_add(x.torsion_preimage, y.torsion_preimage);
    return r;
}

KMHWElement WContext::rbar_free_mono(const FreeMono& m, const KWElement& c) const {
    KM2Element res = preset().kw_residue(c);
    if (res.is_zero()) return ctx_.kmhw_zero();
    return kmhw_scale_elt(ctx_, ctx_.kmhw_from_mono(m.residue_mono()), res);
}

KMHWElement WContext::rbar(const KWHWElement& x) const {
    KMHWElement r = x.torsion;
    for (const auto& [m, c] : x.free) r = ctx_.kmhw_add(r, rbar_free_mono(m, c));
    return r;
}

KWHWElement WContext::xi_tau_lift(int j) const {
    const Algebra& A = alg();
    AElement xi_tau = A.right_scale(A.xi_i(j), CoefMono{preset().one_mono(), 1});
    AElement pre_elt = A.right_scale(A.mul(A.xi_i(1), A.xi_i(j)), CoefMono{preset().one_mono(), 1});
    KMHWElement res = ctx_.to_kmhw(xi_tau);
    KMHWElement pre = ctx_.to_kmhw(pre_elt);
    return kwhw_torsion_certified(res, pre);
}

KWHWElement WContext::kwhw_mul(const KWHWElement& x, const KWHWElement& y) const {
    KWHWElement out = kwhw_zero();

    // the t_j residues b^s·∏tau_j computed inside k^M⋆⋆H_WZ
    auto residue_of_raw = [&](int s_exp, const std::array<int, kMaxGenStorage>& texp) {
        KMHWElement r = ctx_.kmhw_from_mono(KMHWMono{});
        if (s_exp) r = ctx_.kmhw_mul(r, b_class_());
        for (int j = 2; j < kMaxGenStorage; ++j)
            for (int k = 0; k < texp[j]; ++k) {
                KMHWMono tj;
                tj.tau = static_cast<uint16_t>(1 << j);
                r = ctx_.kmhw_mul(r, ctx_.kmhw_from_mono(tj));
            }
        return r;
    };

    struct Work {
        KWElement coef;
        int s_exp;
        std::array<int, kMaxGenStorage> texp;
    };
    for (const auto& [m1, c1] : x.free)
        for (const auto& [m2, c2] : y.free) {
            std::vector<Work> stack;
            Work w0;
            w0.coef = preset().kw_mul(c1, c2);
            w0.s_exp = m1.s + m2.s;
            w0.texp = {};
            for (int j = 2; j < kMaxGenStorage; ++j)
                w0.texp[j] = ((m1.t >> j) & 1) + ((m2.t >> j) & 1);
            stack.push_back(w0);
            while (!stack.empty()) {
                Work w = stack.back();
                stack.pop_back();
                if (w.coef.val == 0) continue;
                if (w.s_exp >= 2) continue;  // s^2 = 0
                int hi = -1;
                for (int j = kMaxGenStorage - 1; j >= 2; --j)
                    if (w.texp[j] >= 2) { hi = j; break; }
                if (hi < 0) {
                    FreeMono m;
                    m.s = static_cast<uint8_t>(w.s_exp);
                    for (int j = 2; j < kMaxGenStorage; ++j)
                        if (w.texp[j]) m.t |= static_cast<uint16_t>(1 << j);
                    out = kwhw_add(out, kwhw_free(m, w.coef));
                    continue;
                }
                if (hi + 1 > ctx_.gen_cap()) throw CapExceeded("t_j^2 rewrite beyond generator cap");
                // t_hi^2 = rho·t_{hi+1} + lift(xi_{hi+1}·tau)
                Work a = w;
                a.texp[hi] -= 2;
                a.texp[hi + 1] += 1;
                a.coef = preset().kw_mul(w.coef, preset().kw_rho());
                stack.push_back(a);

                Work rem = w;
                rem.texp[hi] -= 2;
                KM2Element cres = preset().kw_residue(w.coef);
                if (!cres.is_zero()) {
                    KWHWElement xt = xi_tau(hi + 1);
                    KMHWElement factor =
                        kmhw_scale_elt(ctx_, residue_of_raw(rem.s_exp, rem.texp), cres);
                    KWHWElement tor = kwhw_torsion_certified(
                        ctx_.kmhw_mul(factor, xt.torsion), ctx_.kmhw_mul(factor, xt.torsion_preimage));
                    out = kwhw_add(out, tor);
                }
            }
        }

    // free × torsion on both sides, then torsion × torsion
    auto mixed = [&](const KWHWElement& f, const KWHWElement& t) {
        for (const auto& [m, c] : f.free) {
            KMHWElement r = rbar_free_mono(m, c);
            if (r.is_zero()) continue;
            out = kwhw_add(out, kwhw_torsion_certified(ctx_.kmhw_mul(r, t.torsion),
                                                       ctx_.kmhw_mul(r, t.torsion_preimage)));
        }
    };
    mixed(x, y);
    mixed(y, x);
    out = kwhw_add(out, kwhw_torsion_certified(ctx_.kmhw_mul(x.torsion, y.torsion),
                                               ctx_.kmhw_mul(x.torsion_preimage, y.torsion)));
    return out;
}

KWHWElement WContext::kwhw_eta(const KWHWElement& x) const {
    KWHWElement r = kwhw_zero();
    for (const auto& [m, c] : x.free) r.free.push_back({m, preset().kw_eta(c)});
    return r;  // eta annihilates torsion
}

KWHWElement WContext::kwhw_right_tau(const KWHWElement& x) const {
    // torsion·tau via the module action; free·tau = rho·tau_0·residue with
    // canonical preimage rho·tau_1·residue
    KWHWElement r = kwhw_torsion_certified(ctx_.kmhw_right_tau(x.torsion),
                                           ctx_.kmhw_right_tau(x.torsion_preimage));
    auto rho = preset().rho_mono();
    if (!rho) return r;
    for (const auto& [m, c] : x.free) {
        KMHWElement res = rbar_free_mono(m, c);
        if (res.is_zero()) continue;
        KMHWMono t0m, t1m;
        t0m.e0 = 1;
        t1m.tau = 2;
        KMHWElement z = ctx_.kmhw_scale(ctx_.kmhw_mul(ctx_.kmhw_from_mono(t0m), res), *rho);
        KMHWElement pre = ctx_.kmhw_scale(ctx_.kmhw_mul(ctx_.kmhw_from_mono(t1m), res), *rho);
        r = kwhw_add(r, kwhw_torsion_certified(z, pre));
    }
    return r;
}

std::string WContext::str(const KWHWElement& x) const {
    std::string out;
    for (const auto& [m, c] : x.free) {
        if (!out.empty()) out += " + ";
        std::string mono;
        if (m.s) mono = "s";
        for (int j = 2; j < kMaxGenStorage; ++j)
            if (m.t & (1 << j)) {
                if (!mono.empty()) mono += "*";
                mono += "T" + std::to_string(j);
            }
        if (mono.empty()) mono = "1";
        out += "[" + preset().witt().names[c.val] + "@" + std::to_string(c.deg) + "]" + mono;
    }
    if (!x.torsion.is_zero()) {
        if (!out.empty()) out += " + ";
        out += "tors(" + ctx_.str(x.torsion) + ")";
    }
    return out.empty() ? "0" : out;
}

/* --- pairs --- */

HWHWPair WContext::pair_zero() const {
    return {this, ctx_.hw_from_cert({}), kwhw_zero()};
}

HWHWPair WContext::pair_one() const {
    return {this, ctx_.hw_expand(alg().one()), kwhw_one()};
}

bool WContext::pair_compatible(const HWElement& a, const KWHWElement& b, std::string* witness) const {
    KMHWElement lhs = ctx_.to_kmhw(a);
    KMHWElement rhs = rbar(b);
    if (lhs == rhs) return true;
    if (witness) *witness = "pi(a) = " + ctx_.str(lhs) + "  vs  rbar(b) = " + ctx_.str(rhs);
    return false;
}

HWHWPair WContext::make_pair(const HWElement& a, const KWHWElement& b) const {
    std::string w;
    if (!pair_compatible(a, b, &w))
        throw IncompatiblePair("incompatible pair over the pullback square", w);
    return {this, a, b};
}

HWHWPair WContext::pair_add(const HWHWPair& x, const HWHWPair& y) const {
    return {this, ctx_.hw_expand(alg().add(x.a.x, y.a.x)), kwhw_add(x.b, y.b)};
}

HWHWPair WContext::pair_mul(const HWHWPair& x, const HWHWPair& y) const {
    return {this, ctx_.hw_expand(alg().mul(x.a.x, y.a.x)), kwhw_mul(x.b, y.b)};
}

HWHWPair WContext::pair_eta(const HWHWPair& x) const {
    return {this, ctx_.hw_from_cert({}), kwhw_eta(x.b)};
}

HWHWPair WContext::pair_pow(const HWHWPair& x, int n) const {
    HWHWPair r = pair_one();
    for (int i = 0; i < n; ++i) r = pair_mul(r, x);
    return r;
}

HWHWPair WContext::scalar_tower(const KWElement& c) const {
    KM2Element res = preset().kw_residue(c);
    AElement a = alg().zero();
    for (const auto& m : res.terms) a = alg().add(a, alg().left_scale(alg().one(), CoefMono{m, 0}));
    return {this, ctx_.hw_expand(a), kwhw_free(FreeMono{}, c)};
}

HWHWPair WContext::scalar_km(const KM2Mono& c) const {
    return scalar_tower(preset().kw_lift_mono(c));
}

HWHWPair WContext::scalar_tau_left() const {
    return {this, ctx_.hw_expand(alg().tau_left()), kwhw_zero()};
}

HWHWPair WContext::scalar_tau_right() const {
    AElement a = alg().eta_r(CoefMono{preset().one_mono(), 1});
    auto rho = preset().rho_mono();
    KWHWElement b = kwhw_zero();
    if (rho) {
        KMHWMono t0m, t1m;
        t0m.e0 = 1;
        t1m.tau = 2;
        b = kwhw_torsion_certified(ctx_.kmhw_scale(ctx_.kmhw_from_mono(t0m), *rho),
                                   ctx_.kmhw_scale(ctx_.kmhw_from_mono(t1m), *rho));
    }
    return make_pair(ctx_.hw_expand(a), b);
}

HWHWPair WContext::pair_xi_tau(int j) const {
    AElement a = alg().right_scale(alg().xi_i(j), CoefMono{preset().one_mono(), 1});
    return make_pair(ctx_.hw_expand(a), xi_tau(j));
}

HWHWPair WContext::theorem_generator(const std::string& name, uint16_t iset, int j) const {
    const Algebra& A = alg();
    if (name == "tau0") {
        KMHWMono t0m, t1m;
        t0m.e0 = 1;
        t1m.tau = 2;
        return make_pair(ctx_.hw_expand(A.tau_i(0)),
                         kwhw_torsion_certified(ctx_.kmhw_from_mono(t0m), ctx_.kmhw_from_mono(t1m)));
    }
    if (name == "s")
        return make_pair(ctx_.hw_expand(A.mul(A.pow(A.tau_i(0), 3), A.tau_i(1))), kwhw_s());
    if (name == "t_j") return make_pair(ctx_.hw_expand(A.tau_i(j)), kwhw_t(j));
    if (name == "c") {
        if (iset == 0) return pair_one();  // presentation convention c(∅) = 1
        KMHWElement res = ctx_.c_class(iset);
        KMHWElement pre = ctx_.to_kmhw(ctx_.xibar_set(iset));
        return make_pair(ctx_.hw_expand(ctx_.c_of(iset)), kwhw_torsion_certified(res, pre));
    }
    if (name == "c1") {
        KMHWElement res = ctx_.c1_class(iset);
        KMHWElement pre = ctx_.to_kmhw(A.mul(A.tau_i(1), ctx_.xibar_set(iset)));
        return make_pair(ctx_.hw_expand(ctx_.c1_of(iset)), kwhw_torsion_certified(res, pre));
    }
    if (name == "t") {
        AElement a = A.mul(A.tau_left(), ctx_.xibar_set(iset));
        return make_pair(ctx_.hw_expand(a), kwhw_zero());
    }
    if (name == "t1") {
        AElement a = A.mul(A.tau_left(), A.mul(A.tau_i(1), ctx_.xibar_set(iset)));
        return make_pair(ctx_.hw_expand(a), kwhw_zero());
    }
    throw AlgebraError("unknown theorem generator '" + name + "'");
}

std::string WContext::str(const HWHWPair& x) const {
    return "(" + alg().str(x.a.x) + " | " + str(x.b) + ")";
}

KWHWElement WContext::xi_tau(int j) const {
    {
        std::lock_guard<std::mutex> lock(wmu_);
        auto it = xi_tau_cache_.find(j);
        if (it != xi_tau_cache_.end()) return it->second;
    }
    KWHWElement v = xi_tau_lift(j);
    std::lock_guard<std::mutex> lock(wmu_);
    xi_tau_cache_.emplace(j, v);
    return v;
}

KMHWElement WContext::b_class_() const { return ctx_.b_class(); }

/* ---------------- relation verifier ---------------- */

namespace {

struct Term {
    HWHWPair v;
    Bidegree d;
};

struct RelWork {
    const WContext& wc;
    uint16_t I, J;

    /* element semantics inside formulas: c(∅) = 0, c1(∅) = tau_0,
     * t(∅) = tau (eta_L), t1(∅) = tau·tau_1 */
    Term c(uint16_t s) const {
        if (s == 0) return {wc.pair_zero(), c_deg(0)};
        return {wc.theorem_generator("c", s), c_deg(s)};
    }
    Term c1(uint16_t s) const { return {wc.theorem_generator("c1", s), c1_deg(s)}; }
    Term t(uint16_t s) const { return {wc.theorem_generator("t", s), t_deg(s)}; }
    Term t1(uint16_t s) const { return {wc.theorem_generator("t1", s), t1_deg(s)}; }
    Term tau0() const { return {wc.theorem_generator("tau0", 0), {1, 0}}; }
    Term s_gen() const { return {wc.theorem_generator("s", 0), kSDeg}; }
    Term tj(int j) const { return {wc.theorem_generator("t_j", 0, j), tau_deg(j)}; }
    Term rho() const { return {wc.scalar_tower(wc.preset().kw_rho()), {-1, -1}}; }
    Term tauL() const { return {wc.scalar_tau_left(), {0, -1}}; }
    Term tauR() const { return {wc.scalar_tau_right(), {0, -1}}; }
    Term xi_tau_pair(int j) const { return {wc.pair_xi_tau(j), xi_deg(j) + Bidegree{0, -1}}; }
    Term one() const { return {wc.pair_one(), {0, 0}}; }

    Term mul(const Term& a, const Term& b) const { return {wc.pair_mul(a.v, b.v), a.d + b.d}; }
    Term add(const Term& a, const Term& b) const {
        return {wc.pair_add(a.v, b.v), a.d};  // degree of the first summand
    }
    /* rho·t_2 + xi_2·tau, the recurring coefficient of the paper */
    Term rt2_x2t() const { return add(mul(rho(), tj(2)), xi_tau_pair(2)); }
    Term prod_ce_shift(uint16_t set) const {  // ∏_{j∈set} c(e_{j+1})
        Term p = one();
        for (int j = 2; j < kMaxGenStorage; ++j)
            if (set & (1 << j)) p = mul(p, c(static_cast<uint16_t>(1 << (j + 1))));
        return p;
    }
};

std::string defect_note(const std::vector<Term>& rhs, Bidegree lhs_deg) {
    std::string note;
    for (const auto& t : rhs)
        if (t.d != lhs_deg) {
            if (!note.empty()) note += "; ";
            note += "printed summand off by " + (t.d - lhs_deg).str();
        }
    return note;
}

}  // namespace

std::vector<std::string> WContext::relation_ids() const {
    return {"c-tau0-quartic", "c-cc",        "c-cc1",      "c-c1c1",     "t-tt",
            "t-tt1",          "t-t1t1",      "t-ct",       "t-c1t",      "t-c1t1",
            "kw-tau0-quartic", "kw-tj-square", "kw-s-square", "kw-s-tau0", "kw-s-c",
            "kw-s-c1",        "thm-c-empty", "thm-tau0-quartic", "thm-tj-square",
            "thm-s-square",   "thm-s-c1",    "thm-t-s",    "thm-t1-s"};
}

RelationCheck WContext::verify_relation(const std::string& id, uint16_t I, uint16_t J) const {
    RelationCheck out;
    out.id = id;
    out.I = I;
    out.J = J;
    RelWork w{*this, I, J};
    const uint16_t meet = I & J;
    const uint16_t sym = I ^ J;
    const uint16_t ionly = I & ~J;

    auto finish_pair = [&](const Term& lhs, const std::vector<Term>& rhs,
                           const std::string& extra_note = "") {
        HWHWPair rhs_v = pair_zero();
        for (const auto& t : rhs) rhs_v = pair_add(rhs_v, t.v);
        out.lhs = str(lhs.v);
        out.rhs = str(rhs_v);
        std::string defect = defect_note(rhs, lhs.d);
        out.note = extra_note;
        if (!defect.empty()) out.note += (out.note.empty() ? "" : "; ") + defect;
        out.status = (lhs.v == rhs_v) ? RelStatus::Holds : RelStatus::Fails;
    };
    auto finish_kwhw = [&](const KWHWElement& lhs, const KWHWElement& rhs,
                           const std::string& note = "") {
        out.lhs = str(lhs);
        out.rhs = str(rhs);
        out.note = note;
        out.status = (lhs == rhs) ? RelStatus::Holds : RelStatus::Fails;
    };

    if (id == "c-tau0-quartic") {
        Term lhs = w.mul(w.tau0(), w.mul(w.tau0(), w.mul(w.tau0(), w.tau0())));
        Term rho2 = w.mul(w.rho(), w.rho());
        Term rho3 = w.mul(rho2, w.rho());
        std::vector<Term> rhs = {
            w.mul(rho3, w.tj(2)), w.mul(rho3, w.c1(1 << 2)),
            w.mul(rho2, w.t(1 << 2)),  // rho^2·tau·xibar_2 = rho^2·t(e_2)
            w.mul(w.tauL(), w.mul(w.tauL(), w.c(1 << 2)))};
        finish_pair(lhs, rhs);
    } else if (id == "c-cc" || id == "c-cc1") {
        bool c1r = (id == "c-cc1");
        Term lhs = c1r ? w.mul(w.c(I), w.c1(J)) : w.mul(w.c(I), w.c(J));
        std::vector<Term> rhs;
        for (int i = 2; i < kMaxGenStorage; ++i) {
            uint16_t ei = static_cast<uint16_t>(1 << i);
            if (meet & ei) {
                Term mid = c1r ? w.c1(static_cast<uint16_t>(sym | ei))
                               : w.c(static_cast<uint16_t>(sym | ei));
                rhs.push_back(w.mul(w.c(ei), w.mul(mid, w.prod_ce_shift(meet & ~ei))));
            }
            if (ionly & ei) {
                Term mid = c1r ? w.c1(static_cast<uint16_t>(sym & ~ei))
                               : w.c(static_cast<uint16_t>(sym & ~ei));
                rhs.push_back(w.mul(w.c(ei), w.mul(mid, w.prod_ce_shift(meet))));
            }
        }
        if (rhs.empty()) rhs.push_back({pair_zero(), lhs.d});
        finish_pair(lhs, rhs);
    } else if (id == "c-c1c1") {
        Term lhs = w.mul(w.c1(I), w.c1(J));
        std::vector<Term> rhs = {w.mul(w.tau0(), w.mul(w.c1(sym), w.prod_ce_shift(meet))),
                                 w.mul(w.rt2_x2t(), w.mul(w.c(I), w.c(J)))};
        finish_pair(lhs, rhs);
    } else if (id == "t-tt") {
        Term lhs = w.mul(w.t(I), w.t(J));
        std::vector<Term> printed = {w.mul(w.t(sym), w.prod_ce_shift(meet))};
        HWHWPair printed_v = printed[0].v;
        std::string defect = defect_note(printed, lhs.d);
        Term corrected_l = w.mul(w.tauL(), printed[0]);
        Term corrected_r = w.mul(w.tauR(), printed[0]);
        bool left_ok = (lhs.v == corrected_l.v);
        bool right_ok = (lhs.v == corrected_r.v);
        out.lhs = str(lhs.v);
        out.rhs = str(corrected_l.v);
        out.note = defect + "; tau-corrected on the left " + (left_ok ? "holds" : "fails") +
                   ", on the right " + (right_ok ? "holds" : "fails");
        if (lhs.v == printed_v)
            out.status = RelStatus::Holds;  // degenerate instances (both sides zero)
        else
            out.status = left_ok ? RelStatus::FailsAsPrintedHoldsCorrected : RelStatus::Fails;
    } else if (id == "t-tt1") {
        Term lhs = w.mul(w.t(I), w.t1(J));
        Term core = w.mul(w.t1(sym), w.prod_ce_shift(meet));
        std::vector<Term> rhs = {w.mul(w.tauL(), core)};
        bool right_ok = (lhs.v == w.mul(w.tauR(), core).v);
        finish_pair(lhs, rhs, std::string("tau on the right ") + (right_ok ? "also holds" : "fails"));
    } else if (id == "t-t1t1") {
        Term lhs = w.mul(w.t1(I), w.t1(J));
        std::vector<Term> rhs = {
            w.mul(w.tauL(), w.mul(w.rt2_x2t(), w.mul(w.t(sym), w.prod_ce_shift(meet))))};
        finish_pair(lhs, rhs);
    } else if (id == "t-ct" || id == "t-c1t" || id == "t-c1t1") {
        bool c1_left = (id != "t-ct");
        bool t1_right = (id == "t-c1t1");
        Term lhs = w.mul(c1_left ? w.c1(I) : w.c(I), t1_right ? w.t1(J) : w.t(J));
        std::vector<Term> rhs;
        if (id == "t-c1t")
            rhs.push_back(w.mul(w.tau0(), w.mul(w.t(sym), w.prod_ce_shift(meet))));
        if (id == "t-c1t1")
            rhs.push_back(w.mul(w.tau0(), w.mul(w.t1(sym), w.prod_ce_shift(meet))));
        std::vector<Term> bracket;
        for (int i = 2; i < kMaxGenStorage; ++i) {
            uint16_t ei = static_cast<uint16_t>(1 << i);
            // for t-c1t the bracket carries t1, otherwise t
            auto mid = [&](uint16_t s) {
                if (id == "t-ct") return w.t(s);
                if (id == "t-c1t") return w.t1(s);
                return w.t(s);
            };
            if (meet & ei)
                bracket.push_back(
                    w.mul(w.c(ei), w.mul(mid(static_cast<uint16_t>(sym | ei)),
                                         w.prod_ce_shift(meet & ~ei))));
            if (ionly & ei)
                bracket.push_back(w.mul(w.c(ei), w.mul(mid(static_cast<uint16_t>(sym & ~ei)),
                                                       w.prod_ce_shift(meet))));
        }
        if (id == "t-c1t1") {
            Term coeff = w.rt2_x2t();
            for (auto& t : bracket) rhs.push_back(w.mul(coeff, t));
        } else {
            for (auto& t : bracket) rhs.push_back(t);
        }
        if (rhs.empty()) rhs.push_back({pair_zero(), lhs.d});
        finish_pair(lhs, rhs);
    } else if (id == "kw-tau0-quartic") {
        KWHWElement t0 = theorem_generator("tau0", 0).b;
        finish_kwhw(kwhw_mul(kwhw_mul(t0, t0), kwhw_mul(t0, t0)), kwhw_zero());
    } else if (id == "kw-tj-square") {
        int j = std::max(2, static_cast<int>(I ? std::countr_zero(I) : 2));
        KWHWElement tj = kwhw_t(j);
        KWHWElement rho_tj1 = kwhw_free(FreeMono{0, static_cast<uint16_t>(1 << (j + 1))},
                                        preset().kw_rho());
        finish_kwhw(kwhw_mul(tj, tj), kwhw_add(rho_tj1, xi_tau(j + 1)),
                    "j=" + std::to_string(j));
    } else if (id == "kw-s-square") {
        finish_kwhw(kwhw_mul(kwhw_s(), kwhw_s()), kwhw_zero());
    } else if (id == "kw-s-tau0") {
        finish_kwhw(kwhw_mul(kwhw_s(), theorem_generator("tau0", 0).b), kwhw_zero());
    } else if (id == "kw-s-c") {
        if (I == 0) {
            finish_kwhw(kwhw_zero(), kwhw_zero(), "vacuous at I=∅");
        } else {
            KWHWElement lhs = kwhw_mul(kwhw_s(), theorem_generator("c", I).b);
            KWHWElement t0 = theorem_generator("tau0", 0).b;
            KWHWElement rhs = kwhw_mul(kwhw_mul(t0, kwhw_mul(t0, t0)),
                                       theorem_generator("c1", I).b);
            finish_kwhw(lhs, rhs);
        }
    } else if (id == "kw-s-c1") {
        KWHWElement lhs = kwhw_mul(kwhw_s(), theorem_generator("c1", I).b);
        KWHWElement t0 = theorem_generator("tau0", 0).b;
        KWHWElement t03 = kwhw_mul(t0, kwhw_mul(t0, t0));
        KWHWElement inner = kwhw_add(theorem_generator("c1", 1 << 2).b, kwhw_t(2));
        KWHWElement rho1 = kwhw_free(FreeMono{}, preset().kw_rho());
        KWHWElement cI = (I == 0) ? kwhw_zero() : theorem_generator("c", I).b;
        finish_kwhw(lhs, kwhw_mul(kwhw_mul(rho1, t03), kwhw_mul(inner, cI)),
                    I == 0 ? "c(∅)=0 element semantics" : "");
    } else if (id == "thm-c-empty") {
        HWHWPair one = theorem_generator("c", 0);
        out.lhs = str(one);
        out.rhs = str(pair_one());
        out.status = (one == pair_one()) ? RelStatus::Holds : RelStatus::Fails;
        out.note = "generator c(∅) is the unit by the presentation convention";
    } else if (id == "thm-tau0-quartic") {
        Term lhs = w.mul(w.tau0(), w.mul(w.tau0(), w.mul(w.tau0(), w.tau0())));
        Term printed = w.mul(w.c(1 << 2), w.mul(w.tauR(), w.tauR()));  // scalar written right
        bool left_ok = (lhs.v == w.mul(w.c(1 << 2), w.mul(w.tauL(), w.tauL())).v);
        finish_pair(lhs, {printed},
                    std::string("tau^2 as a left scalar ") + (left_ok ? "also holds" : "fails"));
    } else if (id == "thm-tj-square") {
        int j = std::max(2, static_cast<int>(I ? std::countr_zero(I) : 2));
        Term lhs = w.mul(w.tj(j), w.tj(j));
        std::vector<Term> rhs = {w.mul(w.rho(), w.tj(j + 1)), w.xi_tau_pair(j + 1)};
        finish_pair(lhs, rhs, "j=" + std::to_string(j));
    } else if (id == "thm-s-square") {
        Term lhs = w.mul(w.s_gen(), w.s_gen());
        Term rhs = w.mul(w.tau0(), w.mul(w.tau0(), w.mul(w.rt2_x2t(),
                     w.mul(w.c(1 << 2), w.mul(w.tauR(), w.tauR())))));
        bool left_ok =
            (lhs.v == w.mul(w.tau0(), w.mul(w.tau0(), w.mul(w.rt2_x2t(),
                         w.mul(w.c(1 << 2), w.mul(w.tauL(), w.tauL()))))).v);
        finish_pair(lhs, {rhs},
                    std::string("tau^2 as a left scalar ") + (left_ok ? "also holds" : "fails"));
    } else if (id == "thm-s-c1") {
        Term lhs = w.mul(w.s_gen(), w.c1(I));
        Term t03 = w.mul(w.tau0(), w.mul(w.tau0(), w.tau0()));
        std::vector<Term> rhs = {w.mul(t03, w.mul(w.rt2_x2t(), w.c(I))),
                                 w.mul(w.tauL(), w.mul(w.t1(I), w.c(1 << 2)))};
        bool right_ok =
            (lhs.v == pair_add(rhs[0].v, w.mul(w.tauR(), w.mul(w.t1(I), w.c(1 << 2))).v));
        finish_pair(lhs, rhs,
                    std::string("tau as a right scalar ") + (right_ok ? "also holds" : "fails"));
    } else if (id == "thm-t-s") {
        Term lhs = w.mul(w.t(I), w.s_gen());
        Term rhs = w.mul(w.t1(I), w.mul(w.tau0(), w.mul(w.tau0(), w.tau0())));
        finish_pair(lhs, {rhs});
    } else if (id == "thm-t1-s") {
        Term lhs = w.mul(w.t1(I), w.s_gen());
        Term rhs = w.mul(w.tau0(), w.mul(w.tau0(), w.mul(w.tau0(),
                     w.mul(w.t(I), w.rt2_x2t()))));
        finish_pair(lhs, {rhs});
    } else {
        throw AlgebraError("unknown relation id '" + id + "'");
    }
    return out;
}

std::vector<RelationCheck> WContext::verify_family(const std::string& family, int max_index) const {
    std::vector<RelationCheck> out;
    std::vector<uint16_t> isets;
    uint16_t full = 0;
    for (int i = 2; i <= max_index; ++i) full |= static_cast<uint16_t>(1 << i);
    for (uint16_t s = 0;; s = static_cast<uint16_t>((s - full) & full)) {
        isets.push_back(s);
        if (s == full) break;
    }
    auto run2 = [&](const std::string& id) {
        for (uint16_t i : isets)
            for (uint16_t j : isets) out.push_back(verify_relation(id, i, j));
    };
    auto run1 = [&](const std::string& id) {
        for (uint16_t i : isets) out.push_back(verify_relation(id, i, 0));
    };
    if (family == "lemma-c") {
        out.push_back(verify_relation("c-tau0-quartic", 0, 0));
        run2("c-cc");
        run2("c-cc1");
        run2("c-c1c1");
    } else if (family == "lemma-t") {
        run2("t-tt");
        run2("t-tt1");
        run2("t-t1t1");
        run2("t-ct");
        run2("t-c1t");
        run2("t-c1t1");
    } else if (family == "kw-presentation") {
        out.push_back(verify_relation("kw-tau0-quartic", 0, 0));
        out.push_back(verify_relation("kw-s-square", 0, 0));
        out.push_back(verify_relation("kw-s-tau0", 0, 0));
        for (int j = 2; j <= max_index; ++j)
            out.push_back(verify_relation("kw-tj-square", static_cast<uint16_t>(1 << j), 0));
        run1("kw-s-c");
        run1("kw-s-c1");
    } else if (family == "main-theorem") {
        out.push_back(verify_relation("thm-c-empty", 0, 0));
        out.push_back(verify_relation("thm-tau0-quartic", 0, 0));
        out.push_back(verify_relation("thm-s-square", 0, 0));
        for (int j = 2; j <= max_index; ++j)
            out.push_back(verify_relation("thm-tj-square", static_cast<uint16_t>(1 << j), 0));
        run1("thm-s-c1");
        run1("thm-t-s");
        run1("thm-t1-s");
    } else {
        throw AlgebraError("unknown relation family '" + family + "'");
    }
    return out;
}

/* ---------------- independence of the Theorem monomials ---------------- */

std::vector<WContext::Item> WContext::independence_items(Bidegree b, int max_index) const {
    std::vector<Item> out;
    int cap = ctx_.gen_cap();
    uint16_t tmask_full = 0;
    for (int j = 2; j <= std::min(max_index, cap - 1); ++j)
        tmask_full |= static_cast<uint16_t>(1 << j);

    // free part: K^W-coefficients on s^eps·∏t_j
    for (int s = 0; s < 2; ++s)
        for (uint16_t t = 0;; t = static_cast<uint16_t>((t - tmask_full) & tmask_full)) {
            FreeMono m{static_cast<uint8_t>(s), t};
            Bidegree md = m.bidegree();
            int n = md.p - b.p;
            if (md.q - n == b.q) {
                for (const KWElement& g : preset().kw_group_generators(n)) {
                    HWHWPair v = scalar_tower(g);
                    if (s) v = pair_mul(v, theorem_generator("s", 0));
                    for (int j = 2; j < kMaxGenStorage; ++j)
                        if (t & (1 << j)) v = pair_mul(v, theorem_generator("t_j", 0, j));
                    std::string label = preset().witt().names[g.val] + "@" + std::to_string(g.deg);
                    if (s) label += "*s";
                    for (int j = 2; j < kMaxGenStorage; ++j)
                        if (t & (1 << j)) label += "*T" + std::to_string(j);
                    out.push_back({label, v});
                }
            }
            if (t == tmask_full) break;
        }

    // torsion part: k^M·tau^k coefficients (acting on the right) on
    // tau_0^{a<=3}·∏t_j·∏c(e_r)^{n_r}·G
    int budget = b.p + std::max(0, b.p - 2 * b.q);
    struct G {
        std::string label;
        Bidegree d;
        std::string kind;  // "one", "c", "c1", "t", "t1"
        uint16_t iset = 0;
    };
    std::vector<G> gs;
    gs.push_back({"", {0, 0}, "one", 0});
    uint16_t gmask_full = tmask_full;
    for (uint16_t k = 0;; k = static_cast<uint16_t>((k - gmask_full) & gmask_full)) {
        if (k != 0) {
            if (std::popcount(k) >= 2) gs.push_back({"c" + iset_str(k), c_deg(k), "c", k});
            gs.push_back({"c1" + iset_str(k), c1_deg(k), "c1", k});
            gs.push_back({"t" + iset_str(k), t_deg(k), "t", k});
        }
        gs.push_back({"t1" + iset_str(k), t1_deg(k), "t1", k});
        if (k == gmask_full) break;
    }

    auto gen_pair = [&](const G& g) -> HWHWPair {
        if (g.kind == "one") return pair_one();
        if (g.kind == "c") return theorem_generator("c", g.iset);
        if (g.kind == "c1") return theorem_generator("c1", g.iset);
        if (g.kind == "t") return theorem_generator("t", g.iset);
        return theorem_generator("t1", g.iset);
    };

    int ce_max = std::min(max_index + 1, cap);
    std::vector<int> ce(kMaxGenStorage, 0);
    /* Straightening rules beyond the printed ones (all derivable):
     *   tau_0·c(K)   = Σ_{i∈K} c(e_i)·c1(K∖i)            (c-cc1 at J = ∅)
     *   tau·c(K)     = Σ_{i∈K} c(e_i)·t(K∖i)
     *   tau·c1(K)    = tau_0·t(K) + t1(∅)·c(K)
     *   tau_0^3·c1(K)= s·c(K) + tau·t(K)·c(e_2)          (rho^2 = 0)
     * so c-monomials take no tau_0-power and no tau-coefficient, c1-monomials
     * keep tau_0^{<=2} and no tau-coefficient, and s-monomials pair only with
     * c-factors. */
    auto emit = [&](int s_flag, int a, uint16_t t, const G& g, Bidegree mdeg) {
        int nce = 0;
        for (int r = 2; r <= ce_max; ++r) nce += ce[r];
        int d = mdeg.p - b.p;
        if (d < 0) return;
        int k = mdeg.q - d - b.q;
        if (k < 0) return;
        if (s_flag) {
            if (a > 0 || k > 0) return;
            if (g.kind != "one" && g.kind != "c") return;
            if (g.kind == "one" && nce == 0) return;  // would duplicate a free item
        } else {
            if (g.kind == "c" && (a > 0 || k > 0)) return;
            if (g.kind == "c1" && (a > 2 || k > 0)) return;
            if (g.kind == "one" && a == 0 && nce == 0 && k == 0) return;  // free item
        }
        for (const KM2Mono& c : preset().km_basis(d)) {
            HWHWPair v = pair_one();
            if (s_flag) v = pair_mul(v, theorem_generator("s", 0));
            for (int i = 0; i < a; ++i) v = pair_mul(v, theorem_generator("tau0", 0));
            for (int j = 2; j < kMaxGenStorage; ++j)
                if (t & (1 << j)) v = pair_mul(v, theorem_generator("t_j", 0, j));
            for (int r = 2; r <= ce_max; ++r)
                for (int n = 0; n < ce[r]; ++n)
                    v = pair_mul(v, theorem_generator("c", static_cast<uint16_t>(1 << r)));
            if (g.kind != "one") v = pair_mul(v, gen_pair(g));
            // right coefficients: first the k^M class, then tau^k
            if (!c.is_one()) v = pair_mul(v, scalar_km(c));
            for (int i = 0; i < k; ++i) v = pair_mul(v, scalar_tau_right());
            if (v.is_zero()) continue;
            std::string label;
            auto app = [&label](const std::string& s) {
                if (!label.empty()) label += "*";
                label += s;
            };
            if (s_flag) app("s");
            if (a) app("tau0^" + std::to_string(a));
            for (int j = 2; j < kMaxGenStorage; ++j)
                if (t & (1 << j)) app("T" + std::to_string(j));
            for (int r = 2; r <= ce_max; ++r)
                if (ce[r]) app("c(e" + std::to_string(r) + ")^" + std::to_string(ce[r]));
            if (!g.label.empty()) app(g.label);
            if (label.empty()) label = "1";
            if (!c.is_one()) label += " *R " + preset().mono_str(c);
            if (k) label += " *R tau^" + std::to_string(k);
            out.push_back({label, v});
        }
    };
    auto rec = [&](auto&& self, int r, Bidegree sofar) -> void {
        if (r > ce_max) {
            for (int s_flag = 0; s_flag < 2; ++s_flag)
                for (int a = 0; a <= 3; ++a) {
                    Bidegree d1 = sofar + Bidegree{1, 0} * a + kSDeg * s_flag;
                    if (d1.p > budget) break;
                    for (uint16_t t = 0;; t = static_cast<uint16_t>((t - tmask_full) & tmask_full)) {
                        Bidegree d2 = d1;
                        for (int j = 2; j < kMaxGenStorage; ++j)
                            if (t & (1 << j)) d2 = d2 + tau_deg(j);
                        if (d2.p <= budget)
                            for (const G& g : gs)
                                if ((d2 + g.d).p <= budget) emit(s_flag, a, t, g, d2 + g.d);
                        if (t == tmask_full) break;
                    }
                }
            return;
        }
        Bidegree gd = c_deg(static_cast<uint16_t>(1 << r));  // |c(e_r)| = |xibar_{r-1}^2|
        for (int n = 0; sofar.p + n * gd.p <= budget; ++n) {
            ce[r] = n;
            self(self, r + 1, sofar + gd * n);
        }
        ce[r] = 0;
    };
    rec(rec, 2, Bidegree{0, 0});
    return out;
}

IndependenceReport WContext::independence_check(Bidegree b, int max_index) const {
    IndependenceReport rep;
    rep.b = b;
    std::vector<Item> items = independence_items(b, max_index);
    rep.count = static_cast<int>(items.size());
    for (const auto& it : items) rep.monomials.push_back(it.label);
    if (items.empty()) {
        rep.independent = true;
        return rep;
    }

    // Z/4 coordinates: comp1 (F2, doubled) ++ free coefficients ++ torsion (F2, doubled)
    const auto& ab = ctx_.abasis(b);
    const auto& kb = ctx_.kmhw_basis(b);
    struct FreeCoord {
        FreeMono m;
        int deg;
    };
    std::vector<FreeCoord> fcoords;
    uint16_t tmask_full = 0;
    for (int j = 2; j < ctx_.gen_cap(); ++j) tmask_full |= static_cast<uint16_t>(1 << j);
    for (int s = 0; s < 2; ++s)
        for (uint16_t t = 0;; t = static_cast<uint16_t>((t - tmask_full) & tmask_full)) {
            FreeMono m{static_cast<uint8_t>(s), t};
            Bidegree md = m.bidegree();
            int n = md.p - b.p;
            if (md.q - n == b.q && !preset().kw_group(n).empty()) fcoords.push_back({m, n});
            if (t == tmask_full) break;
        }
    std::size_t width = preset().witt().encode_width();
    std::size_t rows = ab.size() + fcoords.size() * width + kb.size();
    Z4Matrix M(rows, items.size());
    std::vector<int> orders(items.size(), 1);
    for (std::size_t j = 0; j < items.size(); ++j) {
        const HWHWPair& v = items[j].value;
        F2Vec v1 = ctx_.encode(v.a.x, b);
        std::size_t r = 0;
        for (std::size_t i = 0; i < ab.size(); ++i, ++r) M.set(r, j, v1.get(i) ? 2 : 0);
        for (const auto& fc : fcoords) {
            KWElement c = preset().kw_zero(fc.deg);
            for (const auto& [m, cc] : v.b.free)
                if (m == fc.m && cc.deg == fc.deg) c = cc;
            auto enc = preset().witt().encode_z4(c.val);
            for (std::size_t i = 0; i < width; ++i, ++r) M.set(r, j, enc[i]);
        }
        F2Vec v2 = ctx_.kmhw_encode(v.b.torsion, b);
        for (std::size_t i = 0; i < kb.size(); ++i, ++r) M.set(r, j, v2.get(i) ? 2 : 0);
        int ord = 1;
        for (std::size_t i = 0; i < rows; ++i) {
            uint8_t e = M.get(i, j);
            if (e == 1 || e == 3) ord = std::max(ord, 4);
            if (e == 2) ord = std::max(ord, 2);
        }
        orders[j] = ord;
        if (ord == 1) {
            rep.independent = false;
            rep.note = "claimed monomial evaluates to zero: " + items[j].label;
            return rep;
        }
    }
    rep.independent = true;
    for (const auto& g : M.kernel()) {
        for (std::size_t j = 0; j < items.size(); ++j) {
            if (g[j] % orders[j] != 0) {
                rep.independent = false;
                std::string wit;
                for (std::size_t i = 0; i < items.size(); ++i)
                    if (g[i]) wit += (wit.empty() ? "" : " + ") + std::to_string(int(g[i])) + "·" +
                                     items[i].label;
                rep.note = "nontrivial relation: " + wit;
                return rep;
            }
        }
    }
    return rep;
}

std::vector<Bidegree> WContext::theorem_monomial_bidegrees(int weight_cap, int max_index) const {
    std::vector<Bidegree> out;
    auto push = [&](Bidegree d) {
        if (d.q > weight_cap) return;
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    };
    uint16_t full = 0;
    for (int i = 2; i <= max_index; ++i) full |= static_cast<uint16_t>(1 << i);
    std::vector<uint16_t> isets;
    for (uint16_t s = 0;; s = static_cast<uint16_t>((s - full) & full)) {
        isets.push_back(s);
        if (s == full) break;
    }
    std::vector<Bidegree> gdegs{{0, 0}};  // the optional G factor
    for (uint16_t k : isets) {
        if (k != 0) {
            if (std::popcount(k) >= 2) gdegs.push_back(c_deg(k));
            gdegs.push_back(c1_deg(k));
        }
        gdegs.push_back(t_deg(k));
        gdegs.push_back(t1_deg(k));
    }
    // free monomials
    for (int s = 0; s < 2; ++s)
        for (uint16_t t : isets) push(FreeMono{static_cast<uint8_t>(s), t}.bidegree());
    // torsion monomials s^eps·tau_0^a·T(t)·∏c(e_r)^{n_r}·G, pruned by weight
    int ce_max = std::min(max_index + 1, ctx_.gen_cap());
    auto rec = [&](auto&& self, int r, Bidegree sofar) -> void {
        if (sofar.q > weight_cap) return;
        if (r > ce_max) {
            for (int s = 0; s < 2; ++s)
                for (int a = 0; a <= 3; ++a) {
                    Bidegree d1 = sofar + Bidegree{1, 0} * a + kSDeg * s;
                    for (uint16_t t : isets) {
                        Bidegree d2 = d1;
                        for (int j = 2; j < kMaxGenStorage; ++j)
                            if (t & (1 << j)) d2 = d2 + tau_deg(j);
                        if (d2.q > weight_cap) continue;
                        for (Bidegree g : gdegs) push(d2 + g);
                    }
                }
            return;
        }
        Bidegree gd = c_deg(static_cast<uint16_t>(1 << r));
        for (int n = 0; sofar.q + n * gd.q <= weight_cap; ++n) self(self, r + 1, sofar + gd * n);
    };
    rec(rec, 2, Bidegree{0, 0});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wsteen
