#include "doctest.h"
#include "wsteen/eta_local.hpp"
#include "wsteen/suites.hpp"

using namespace wsteen;

TEST_CASE("local normal form") {
    WContext f3(FieldPreset::fq3());
    EtaLocal el(f3);
    const uint8_t two = f3.preset().witt().add(1, 1);
    // x_2·x_2 = 2 x_3
    CHECK(el.local_mul(el.x(2), el.x(2)) == el.scale(el.x(3), two));
    // y^2 = 0
    CHECK(el.local_mul(el.y(), el.y()).is_zero());
    // eta is invertible
    CHECK(el.local_mul(el.eta(1), el.eta(-1)) == el.one());
    // x_j^4 = 4 x_{j+2} = 0 in W(F_q3) = Z/4
    CHECK(el.pow(el.x(2), 4).is_zero());
    // chains associate
    for (int k = 2; k <= 8; ++k)
        CHECK(el.pow(el.x(2), k) == el.local_mul(el.x(2), el.pow(el.x(2), k - 1)));
}

TEST_CASE("localization kills torsion and rescales by eta powers") {
    WContext f3(FieldPreset::fq3());
    EtaLocal el(f3);
    // lift(c(I)) -> 0
    CHECK(el.localize(f3.theorem_generator("c", 1 << 2).b).is_zero());
    CHECK(el.localize(f3.theorem_generator("c1", 1 << 2).b).is_zero());
    // free t_2 -> eta^3 x_2, free s -> eta y
    LocalElement lt2 = el.localize(f3.kwhw_t(2));
    REQUIRE(lt2.t.size() == 1);
    CHECK(lt2.t[0].first.m == 3);
    CHECK(lt2.t[0].first.x == (1 << 2));
    LocalElement ls = el.localize(f3.kwhw_s());
    REQUIRE(ls.t.size() == 1);
    CHECK(ls.t[0].first.m == 1);
    CHECK(ls.t[0].first.y == 1);
    // localize(t_2·t_2) = localize(t_2)^2 = 2 eta^6 x_3
    LocalElement prod = el.localize(f3.kwhw_mul(f3.kwhw_t(2), f3.kwhw_t(2)));
    CHECK(prod == el.local_mul(lt2, lt2));
    const uint8_t two = f3.preset().witt().add(1, 1);
    LocalMono m;
    m.m = 6;
    m.x = 1 << 3;
    CHECK(prod == el.from_mono(m, two));
    // degrees: |x_j| = (2^j, 0), |y| = (5, 0)
    CHECK(el.x(3).t[0].first.bidegree() == Bidegree{8, 0});
    CHECK(el.y().t[0].first.bidegree() == Bidegree{5, 0});
    // (5,0) is free of rank 1 on y over fq3
    int count = 0;
    for (int eps = 0; eps < 2; ++eps)
        for (uint16_t x = 0; x < 32; x += 4) {
            int deg = 5 * eps;
            for (int j = 2; j <= 4; ++j)
                if (x & (1 << j)) deg += 1 << j;
            if (deg == 5) ++count;
        }
    CHECK(count == 1);
}

TEST_CASE("eta-inverted suite passes on the named presets") {
    for (auto preset : {FieldPreset::qcl(), FieldPreset::fq1(), FieldPreset::fq3()}) {
        WContext wc(preset);
        SuiteOptions opt;
        opt.n_random = 60;
        opt.jmax = 4;
        VerificationReport rep = suite_eta_inverted(wc, opt);
        INFO(rep.table());
        CHECK(rep.all_passed());
    }
}
