// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "wsteen/eta_local.hpp"
#include "wsteen/expr.hpp"
#include "wsteen/homology.hpp"
#include "wsteen/suites.hpp"

using namespace wsteen;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void line(int criterion, const std::string& what, bool ok, const std::string& extra = "") {
    printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
           extra.empty() ? "" : ("  [" + extra + "]").c_str());
    fflush(stdout);
    if (!ok) ++g_failures;
}

long long run_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string describe(const VerificationReport& rep) {
    int failed = 0;
    std::string first;
    for (const auto& e : rep.entries)
        if (!e.passed) {
            ++failed;
            if (first.empty()) first = e.name;
        }
    if (!failed) return std::to_string(rep.entries.size()) + " checks";
    return std::to_string(failed) + " failed, first: " + first;
}

const std::vector<PresetPtr>& presets() {
    static std::vector<PresetPtr> p = {FieldPreset::qcl(), FieldPreset::fq1(), FieldPreset::fq3()};
    return p;
}

}  // namespace

int main() {
    SuiteOptions opt;  // spec defaults: weight 12, 200 random pairs, |p|<=24, -16<=q<=2, I,J ⊆ {2,3,4}

    std::vector<std::shared_ptr<Context>> ctxs;
    std::vector<std::shared_ptr<WContext>> wcs;
    for (auto& p : presets()) {
        ctxs.push_back(std::make_shared<Context>(p));
        wcs.push_back(std::make_shared<WContext>(p));
    }

    // 1. Hopf algebroid suite, weight <= 12, <= 60 s per preset
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
        auto t0 = Clock::now();
        VerificationReport rep = suite_hopf(*ctxs[i], opt);
        long long ms = run_ms(t0);
        line(1, "hopf suite on " + rep.field, rep.all_passed() && ms <= 60000,
             describe(rep) + ", " + std::to_string(ms) + " ms");
    }

    // 2. Action suite: printed values + 200 random Cartan pairs
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
        VerificationReport rep = suite_action(*ctxs[i], opt);
        line(2, "action suite on " + rep.field, rep.all_passed(), describe(rep));
    }

    // 3. d^2 = 0 over |p| <= 24, -16 <= q <= 2, <= 5 min
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < ctxs.size(); ++i) {
            VerificationReport rep = suite_d_squared(*ctxs[i], opt);
            if (!rep.all_passed()) {
                ok = false;
                detail = rep.field + ": " + describe(rep);
            }
        }
        long long ms = run_ms(t0);
        line(3, "d-squared suite on qcl, fq1, fq3", ok && ms <= 300000,
             detail.empty() ? std::to_string(ms) + " ms" : detail);
    }

    // 4. kernels and homology match the presentations exactly
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
        VerificationReport rep = suite_kernel_d(*ctxs[i], opt);
        line(4, "kernel/homology suite on " + rep.field, rep.all_passed(), describe(rep));
    }

    // 5. freeness of the right module structure over the window
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
        VerificationReport rep = suite_freeness(*ctxs[i], opt);
        line(5, "freeness suite on " + rep.field, rep.all_passed(), describe(rep));
    }

    // 6. relation suite: all printed relations for I,J ⊆ {2,3,4} + independence
    for (std::size_t i = 0; i < wcs.size(); ++i) {
        bool ok = true;
        std::string detail;
        for (const std::string& fam : {"lemma-c", "lemma-t", "kw-presentation"}) {
            VerificationReport rep = suite_relations(*wcs[i], fam, opt);
            if (!rep.all_passed()) {
                ok = false;
                detail += fam + ": " + describe(rep) + "; ";
            }
        }
        VerificationReport main = suite_main_theorem(*wcs[i], opt);
        if (!main.all_passed()) {
            ok = false;
            detail += "main-theorem: " + describe(main);
        }
        line(6, "relation + independence suite on " + wcs[i]->preset().name(), ok, detail);
    }

    // 7. eta-torsion structure over the window
    for (std::size_t i = 0; i < wcs.size(); ++i) {
        VerificationReport rep = suite_eta_torsion(*wcs[i], opt);
        line(7, "eta-torsion suite on " + rep.field, rep.all_passed(), describe(rep));
    }

    // 8. eta-inverted suite, localize a ring map on 200 random pairs, j <= 4
    for (std::size_t i = 0; i < wcs.size(); ++i) {
        VerificationReport rep = suite_eta_inverted(*wcs[i], opt);
        line(8, "eta-inverted suite on " + rep.field, rep.all_passed(), describe(rep));
    }

    // 9. oracle equivalence: every derived example value is produced by its
    // stated independent oracle and matched by the implementation
    {
        int agree = 0, total = 0;
        auto check = [&](bool ok) {
            ++total;
            if (ok) ++agree;
        };
        // symbol enumeration: k^M_2(F_q)/2 = 0 for q = 3, 5, 7; rho classes
        check(oracles::km_dim_fq(3, 2) == 0 && FieldPreset::fq3()->km_dim(2) == 0);
        check(oracles::km_dim_fq(7, 2) == 0);
        check(oracles::km_dim_fq(5, 2) == 0 && FieldPreset::fq1()->km_dim(2) == 0);
        check(oracles::rho_nonzero_fq(3) && !FieldPreset::fq3()->km_rho().is_zero());
        check(!oracles::rho_nonzero_fq(5) && FieldPreset::fq1()->km_rho().is_zero());
        check(oracles::km_dim_fq(3, 1) == FieldPreset::fq3()->km_dim(1));
        // Gram-matrix classification: Witt tables for all three presets
        check(oracles::witt_tables_agree(oracles::witt_oracle_fq(3, true),
                                         FieldPreset::qcl()->witt()));
        check(oracles::witt_tables_agree(oracles::witt_oracle_fq(3, false),
                                         FieldPreset::fq3()->witt()));
        check(oracles::witt_tables_agree(oracles::witt_oracle_fq(5, false),
                                         FieldPreset::fq1()->witt()));
        // I -> W sends the nonzero class of I to <1,1> (oracle over F_3)
        {
            auto o3 = oracles::witt_oracle_fq(3, false);
            int nonzero = o3.ideal[0] != 0 ? o3.ideal[0] : o3.ideal[1];
            check(nonzero == o3.add.at({o3.one, o3.one}) &&
                  FieldPreset::fq3()->kw_rho().val ==
                      FieldPreset::fq3()->witt().add(1, 1));
        }
        // exhaustive basis enumeration across a window, all presets
        for (auto& ctx : ctxs) {
            bool ok = true;
            for (int p = -6; p <= 10 && ok; ++p)
                for (int q = -6; q <= 3 && ok; ++q)
                    if (!(ctx->alg().basis({p, q}) ==
                          oracles::enumerate_basis(ctx->alg(), {p, q}, 7)))
                        ok = false;
            check(ok);
        }
        // right_scale(1, tau^2) equals the expanded square
        {
            const Algebra& alg = ctxs[2]->alg();
            AElement etau = alg.eta_r(CoefMono{alg.preset().one_mono(), 1});
            check(alg.right_scale(alg.one(), CoefMono{alg.preset().one_mono(), 2}) ==
                  alg.mul(etau, etau));
        }
        // exhaustive-elimination oracle agrees with the engine's ranks
        {
            bool ok = true;
            for (Bidegree b : {Bidegree{6, 1}, Bidegree{7, 3}, Bidegree{9, 4}, Bidegree{8, 2}}) {
                LabeledMatrix lm = matrix_of(*ctxs[2], MapId::DLeft, b);
                std::vector<std::vector<uint8_t>> plain(lm.m.rows(),
                                                        std::vector<uint8_t>(lm.m.cols(), 0));
                for (std::size_t r = 0; r < lm.m.rows(); ++r)
                    for (std::size_t c = 0; c < lm.m.cols(); ++c)
                        if (lm.m.get(r, c)) plain[r][c] = 1;
                if (lm.m.rank() != oracles::plain_rank(plain)) ok = false;
            }
            check(ok);
        }
        // s·lift(tau_0) = 0 via the k^M⋆⋆H_W computation b·tau_0 = 0
        {
            WContext& wc = *wcs[2];
            KMHWElement prod = wc.ctx().kmhw_mul(wc.ctx().b_class(),
                                                 wc.theorem_generator("tau0", 0).b.torsion);
            check(prod.is_zero() &&
                  wc.kwhw_mul(wc.kwhw_s(), wc.theorem_generator("tau0", 0).b).is_zero());
        }
        // localize(t2·t2) = localize(t2)^2 = 2 eta^6 x_3 over fq3
        {
            WContext& wc = *wcs[2];
            EtaLocal el(wc);
            LocalElement l2 = el.localize(wc.kwhw_t(2));
            LocalElement prod = el.localize(wc.kwhw_mul(wc.kwhw_t(2), wc.kwhw_t(2)));
            LocalMono m;
            m.m = 6;
            m.x = 1 << 3;
            check(prod == el.local_mul(l2, l2) &&
                  prod == el.from_mono(m, wc.preset().witt().add(1, 1)));
        }
        line(9, "oracle equivalence on all derived values",
             agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree");
    }

    if (g_failures) {
        printf("%d acceptance criteria FAILED\n", g_failures);
        return 1;
    }
    printf("all acceptance criteria passed\n");
    return 0;
}
