#include "wsteen/homology.hpp"

#include <algorithm>
#include <bit>

namespace wsteen {

namespace {

Bidegree tau_deg(int i) { return {(1 << (i + 1)) - 1, (1 << i) - 1}; }
Bidegree xi_deg(int i) { return {(1 << (i + 1)) - 2, (1 << i) - 1}; }
constexpr Bidegree kDDeg{2, 1};
constexpr Bidegree kBDeg{6, 1};  // |tau_0^3 tau_1|

Bidegree c_deg(uint16_t iset) {
    Bidegree d{0, 0};
    for (int i = 2; i < kMaxGenStorage; ++i)
        if (iset & (1 << i)) d = d + xi_deg(i);
    return d - kDDeg;
}
Bidegree c1_deg(uint16_t iset) {
    Bidegree d{1, 0};
    for (int i = 2; i < kMaxGenStorage; ++i)
        if (iset & (1 << i)) d = d + xi_deg(i);
    return d;
}

void require_rho3(const Context& ctx) {
    if (ctx.preset().rho_nilpotence() > 3)
        throw PredictorRefused("Lemma predictor requires rho^3 = 0 (preset '" +
                               ctx.preset().name() + "' has rho^" +
                               std::to_string(ctx.preset().rho_nilpotence()) + " = 0)");
}

/* frames tau_0^{<=3}·tau(E, no tau_1)·xibar(2S): the tau_1-free all-even
 * basis monomials of k^M⋆⋆H_WZ */
bool is_frame(const KMHWMono& m) {
    if (m.tau & 2) return false;
    for (int j = 1; j < kMaxGenStorage; ++j)
        if (m.xib[j] % 2) return false;
    return true;
}

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

}  // namespace

LinearAnalysis linear_analysis(const F2Matrix& m) {
    LinearAnalysis out;
    F2Span img(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        F2Vec c = m.column(j);
        F2Vec red = img.reduce(c);
        if (!red.is_zero()) {
            img.add(c);
            out.image.push_back(std::move(c));
        }
    }
    out.rank = static_cast<int>(img.dim());
    out.kernel = m.kernel();
    return out;
}

LabeledMatrix matrix_of(const Context& ctx, MapId id, Bidegree b) {
    LabeledMatrix lm;
    lm.domain_deg = b;
    lm.codomain_deg = b - kDDeg;
    if (id == MapId::DLeft) {
        const auto& dom = ctx.kmhw_basis(b);
        const auto& cod = ctx.kmhw_basis(lm.codomain_deg);
        lm.m = F2Matrix(cod.size(), dom.size());
        for (std::size_t j = 0; j < dom.size(); ++j) {
            lm.domain_labels.push_back(ctx.str(dom[j]));
            KMHWElement img = ctx.d_left(KMHWElement{&ctx, {dom[j]}});
            lm.m.set_column(j, ctx.kmhw_encode(img, lm.codomain_deg));
        }
        for (const auto& it : cod) lm.codomain_labels.push_back(ctx.str(it));
    } else {
        const auto& dom = ctx.hkm_transversal(b);
        const auto& cod = ctx.hkm_transversal(lm.codomain_deg);
        lm.m = F2Matrix(cod.size(), dom.size());
        for (std::size_t j = 0; j < dom.size(); ++j) {
            lm.domain_labels.push_back(ctx.alg().str(dom[j]));
            HKMElement img = ctx.d_right(HKMElement{&ctx, ctx.alg().from_monomial(dom[j])});
            lm.m.set_column(j, ctx.hkm_encode(img, lm.codomain_deg));
        }
        for (const auto& m : cod) lm.codomain_labels.push_back(ctx.alg().str(m));
    }
    return lm;
}

int predictor_h_dim(const Context& ctx, Bidegree b) {
    require_rho3(ctx);
    int cap = ctx.gen_cap();
    int count = 0;
    for (int beta = 0; beta < 2; ++beta) {
        for (uint16_t mask = 0; mask < (1 << (cap + 1)); ++mask) {
            if (mask & 3) continue;  // generators start at tau_2
            Bidegree d = kBDeg * beta;
            for (int i = 2; i <= cap; ++i)
                if (mask & (1 << i)) d = d + tau_deg(i);
            int deg = d.p - b.p;
            if (deg < 0 || d.q - deg != b.q) continue;
            count += ctx.preset().km_dim(deg);
        }
    }
    return count;
}

int predictor_im_dim(const Context& ctx, Bidegree b) {
    require_rho3(ctx);
    int cap = ctx.gen_cap();
    F2Span span(ctx.kmhw_basis(b).size());
    // every k^M⋆⋆H_WZ monomial has p >= q; prune by degree before building
    // the (potentially huge) c-classes
    auto frames_exist = [&](Bidegree gdeg) {
        Bidegree fdeg = b - gdeg;
        return fdeg.p - fdeg.q >= 0 && fdeg.p - 2 * fdeg.q >= 0;
    };
    auto feed = [&](const KMHWElement& gen, Bidegree gdeg) {
        if (gen.is_zero()) return;
        for (const auto& item : ctx.kmhw_basis(b - gdeg)) {
            if (!is_frame(item.m)) continue;
            KMHWElement f{&ctx, {item}};
            KMHWElement prod = ctx.kmhw_mul(f, gen);
            if (prod.is_zero()) continue;
            span.add(ctx.kmhw_encode(prod, b));
        }
    };
    for (uint16_t iset = 0; iset < (1 << (cap + 1)); ++iset) {
        if (iset & 3) continue;
        if (iset != 0 && frames_exist(c_deg(iset))) feed(ctx.c_class(iset), c_deg(iset));
        if (frames_exist(c1_deg(iset))) feed(ctx.c1_class(iset), c1_deg(iset));
    }
    return static_cast<int>(span.dim());
}

int predictor_ker_dim(const Context& ctx, Bidegree b) {
    return predictor_im_dim(ctx, b) + predictor_h_dim(ctx, b);
}

HomologyReport homology_dim(const Context& ctx, MapId id, Bidegree b) {
    HomologyReport r;
    r.b = b;
    LabeledMatrix at = matrix_of(ctx, id, b);
    LabeledMatrix in = matrix_of(ctx, id, b + kDDeg);
    LinearAnalysis la = linear_analysis(at.m);
    r.dim_ker = static_cast<int>(la.kernel.size());
    r.dim_im_in = in.m.rank();
    r.dim_h = r.dim_ker - r.dim_im_in;
    r.predictor_h = (id == MapId::DLeft) ? predictor_h_dim(ctx, b) : 0;
    r.match = (r.dim_h == r.predictor_h);
    for (const auto& k : la.kernel) {
        std::string w;
        for (std::size_t j = 0; j < at.domain_labels.size(); ++j)
            if (k.get(j)) {
                if (!w.empty()) w += " + ";
                w += at.domain_labels[j];
            }
        r.witnesses.push_back(std::move(w));
        if (r.witnesses.size() >= 8) break;
    }
    return r;
}

std::vector<PredictorMono> predictor_kernel_generators(const Context& ctx, int weight_cap) {
    require_rho3(ctx);
    int cap = ctx.gen_cap();
    std::vector<PredictorMono> out;

    // special factors: 1, c(K) with |K| >= 2, c1(K) with K nonempty
    struct Special {
        std::string label;
        KMHWElement value;
        Bidegree deg;
    };
    std::vector<Special> specials;
    specials.push_back({"", ctx.kmhw_from_mono(KMHWMono{}), {0, 0}});
    for (uint16_t iset = 0; iset < (1 << (cap + 1)); ++iset) {
        if (iset & 3) continue;
        if (iset == 0) continue;
        if (c1_deg(iset).q <= weight_cap)
            specials.push_back({"c1(" + iset_str(iset) + ")", ctx.c1_class(iset), c1_deg(iset)});
        if (std::popcount(iset) >= 2 && c_deg(iset).q <= weight_cap)
            specials.push_back({"c(" + iset_str(iset) + ")", ctx.c_class(iset), c_deg(iset)});
    }

    // family A: tau_0^{a<=3}·tau(E>=2)·xibar(2S)·special
    KMHWMono frame;
    auto emit_family_a = [&](const KMHWMono& f) {
        KMHWElement fe = ctx.kmhw_from_mono(f);
        for (const auto& sp : specials) {
            Bidegree d = f.bidegree() + sp.deg;
            if (d.q > weight_cap) continue;
            KMHWElement v = sp.label.empty() ? fe : ctx.kmhw_mul(fe, sp.value);
            if (v.is_zero()) continue;
            std::string label = ctx.str(KMHWTerm{ctx.preset().one_mono(), f});
            if (!sp.label.empty()) label = (label == "1") ? sp.label : label + "*" + sp.label;
            out.push_back({label, d, v});
        }
    };
    auto rec = [&](auto&& self, int j, int wt) -> void {
        if (j < 1) {
            for (int a = 0; a <= 3; ++a) {
                frame.e0 = static_cast<uint8_t>(a);
                for (uint16_t mask = 0; mask < (1 << (cap + 1)); mask += 4) {
                    int w2 = wt;
                    bool ok = true;
                    for (int i = 2; i <= cap; ++i)
                        if (mask & (1 << i)) {
                            w2 += (1 << i) - 1;
                            if (w2 > weight_cap) { ok = false; break; }
                        }
                    if (!ok) continue;
                    frame.tau = mask;
                    emit_family_a(frame);
                }
                frame.tau = 0;
            }
            frame.e0 = 0;
            return;
        }
        int gw = (1 << j) - 1;
        for (int e = 0; wt + e * gw <= weight_cap; e += 2) {
            frame.xib[j] = static_cast<uint8_t>(e);
            self(self, j - 1, wt + e * gw);
        }
        frame.xib[j] = 0;
    };
    rec(rec, cap, 0);

    // family B: b·tau(E>=2)
    for (uint16_t mask = 0; mask < (1 << (cap + 1)); ++mask) {
        if (mask & 3) continue;
        Bidegree d = kBDeg;
        bool ok = true;
        for (int i = 2; i <= cap; ++i)
            if (mask & (1 << i)) {
                d = d + tau_deg(i);
                if (d.q > weight_cap) { ok = false; break; }
            }
        if (!ok || d.q > weight_cap) continue;
        KMHWMono m;
        m.e0 = 3;
        m.tau = static_cast<uint16_t>(mask | 2);
        KMHWElement v = ctx.kmhw_from_mono(m);
        std::string label = "b";
        for (int i = 2; i <= cap; ++i)
            if (mask & (1 << i)) label += "*t" + std::to_string(i);
        out.push_back({label, d, v});
    }

    std::sort(out.begin(), out.end(), [](const PredictorMono& a, const PredictorMono& b2) {
        if (a.b != b2.b) return a.b < b2.b;
        return a.label < b2.label;
    });
    return out;
}

}  // namespace wsteen
