#include "doctest.h"
#include "wsteen/expr.hpp"
#include "wsteen/witt_models.hpp"

using namespace wsteen;

TEST_CASE("K^W⋆⋆H_WZ multiplication") {
    WContext f3(FieldPreset::fq3());
    // t_2·t_2 = rho t_3 + lift(xi_3 tau)
    KWHWElement sq = f3.kwhw_mul(f3.kwhw_t(2), f3.kwhw_t(2));
    KWHWElement rho_t3 = f3.kwhw_free(FreeMono{0, 1 << 3}, f3.preset().kw_rho());
    KWHWElement want = f3.kwhw_add(rho_t3, f3.xi_tau(3));
    CHECK(sq == want);
    // d certifies the torsion part
    CHECK(f3.ctx().d_left(sq.torsion_preimage) == sq.torsion);
    // s^2 = s·tau_0 = 0
    CHECK(f3.kwhw_mul(f3.kwhw_s(), f3.kwhw_s()).is_zero());
    KWHWElement tau0 = f3.theorem_generator("tau0", 0).b;
    CHECK(f3.kwhw_mul(f3.kwhw_s(), tau0).is_zero());
    // s·lift(tau_0) -> 0 via the k^M⋆⋆H_W oracle: b·tau_0 = tau_0^4 tau_1 = 0
    KMHWElement b_res = f3.ctx().b_class();
    KMHWElement t0_res = tau0.torsion;
    CHECK(f3.ctx().kmhw_mul(b_res, t0_res).is_zero());
    // eta kills torsion, is injective on the free part
    CHECK(f3.kwhw_eta(f3.theorem_generator("c", 1 << 2).b).is_zero());
    CHECK_FALSE(f3.kwhw_eta(f3.kwhw_t(2)).is_zero());
    // refusal without a Witt model
    CHECK_THROWS_AS(WContext(FieldPreset::custom(4, {}, {}, "rho4")), PresetError);
}

TEST_CASE("pairs over the pullback square") {
    WContext f3(FieldPreset::fq3());
    // (tau_0, lift(c1(∅))) is the generator pair
    HWHWPair t0 = f3.theorem_generator("tau0", 0);
    CHECK(f3.pair_compatible(t0.a, t0.b, nullptr));
    // (0,0) is a valid pair
    CHECK(f3.pair_zero().is_zero());
    // (tau_0, 0) is rejected with a witness
    std::string w;
    CHECK_FALSE(f3.pair_compatible(f3.ctx().hw_expand(f3.alg().tau_i(0)), f3.kwhw_zero(), &w));
    CHECK(w.find("t0") != std::string::npos);
    CHECK_THROWS_AS(f3.make_pair(f3.ctx().hw_expand(f3.alg().tau_i(0)), f3.kwhw_zero()),
                    IncompatiblePair);
    // canonical generators
    HWHWPair tI = f3.theorem_generator("t", 0);
    CHECK(tI.a.x == f3.alg().tau_left());
    CHECK(tI.b.is_zero());
    HWHWPair c0 = f3.theorem_generator("c", 0);
    CHECK(c0 == f3.pair_one());
    HWHWPair t1I = f3.theorem_generator("t1", 0);
    CHECK(t1I.a.x == f3.alg().mul(f3.alg().tau_left(), f3.alg().tau_i(1)));
    // products stay compatible
    HWHWPair prod = f3.pair_mul(t0, f3.theorem_generator("s", 0));
    CHECK(f3.pair_compatible(prod.a, prod.b, nullptr));
    // ring sanity on a triple
    HWHWPair a = t0, b = f3.theorem_generator("c1", 1 << 2), c = f3.theorem_generator("t_j", 0, 2);
    CHECK(f3.pair_mul(f3.pair_mul(a, b), c) == f3.pair_mul(a, f3.pair_mul(b, c)));
    CHECK(f3.pair_mul(a, f3.pair_add(b, c)) ==
          f3.pair_add(f3.pair_mul(a, b), f3.pair_mul(a, c)));
}

TEST_CASE("relation families hold on all presets (small index range)") {
    for (auto preset : {FieldPreset::qcl(), FieldPreset::fq1(), FieldPreset::fq3()}) {
        WContext wc(preset);
        for (const std::string& fam : {"lemma-c", "lemma-t", "kw-presentation", "main-theorem"}) {
            for (const RelationCheck& rc : wc.verify_family(fam, 3)) {
                INFO(preset->name(), " ", rc.id, " I=", rc.I, " J=", rc.J, " ", rc.note);
                CHECK(rc.status != RelStatus::Fails);
            }
        }
    }
}

TEST_CASE("the printed first t-relation is inhomogeneous; left-tau corrects it") {
    WContext f3(FieldPreset::fq3());
    RelationCheck rc = f3.verify_relation("t-tt", (1 << 2) | (1 << 3), 1 << 2);
    CHECK(rc.status == RelStatus::FailsAsPrintedHoldsCorrected);
    CHECK(rc.note.find("off by (0,1)") != std::string::npos);
    CHECK(rc.note.find("left holds") != std::string::npos);
    CHECK(rc.note.find("right fails") != std::string::npos);  // rho != 0 here
    WContext qc(FieldPreset::qcl());
    RelationCheck rq = qc.verify_relation("t-tt", (1 << 2) | (1 << 3), 1 << 2);
    CHECK(rq.note.find("right holds") != std::string::npos);  // rho = 0 collapses the sides
}

TEST_CASE("theorem relation examples") {
    WContext qc(FieldPreset::qcl());
    CHECK(qc.verify_relation("thm-tau0-quartic", 0, 0).status == RelStatus::Holds);
    WContext f3(FieldPreset::fq3());
    CHECK(f3.verify_relation("c-c1c1", 1 << 2, 1 << 2).status == RelStatus::Holds);
    CHECK(f3.verify_relation("thm-t-s", (1 << 2), 0).status == RelStatus::Holds);
    CHECK(f3.verify_relation("kw-tj-square", 1 << 3, 0).status == RelStatus::Holds);
}

TEST_CASE("independence of theorem monomials at small bidegrees") {
    WContext f3(FieldPreset::fq3());
    auto r00 = f3.independence_check({0, 0}, 3);
    CHECK(r00.independent);
    CHECK(r00.count == 1);
    auto r10 = f3.independence_check({1, 0}, 3);
    CHECK(r10.independent);
    REQUIRE(r10.count == 1);
    CHECK(r10.monomials[0] == "tau0^1");
    // (5,0) holds an s-multiple (|s| = (6,1), coefficient rho) and tau_0^2·t1(∅)
    auto r50 = f3.independence_check({5, 0}, 3);
    CHECK(r50.independent);
    bool has_s = false;
    for (const auto& m : r50.monomials)
        if (m.find("s") != std::string::npos) has_s = true;
    CHECK(has_s);
    // a sweep over the monomial bidegrees of weight <= 5
    for (Bidegree b : f3.theorem_monomial_bidegrees(5, 3)) {
        auto rep = f3.independence_check(b, 3);
        INFO(b.str(), " ", rep.note);
        CHECK(rep.independent);
    }
}

TEST_CASE("rbar is a ring map from the free part") {
    WContext f3(FieldPreset::fq3());
    std::vector<KWHWElement> gens = {f3.kwhw_s(), f3.kwhw_t(2), f3.kwhw_t(3),
                                     f3.kwhw_free(FreeMono{}, f3.preset().kw_rho())};
    for (const auto& x : gens)
        for (const auto& y : gens) {
            KMHWElement lhs = f3.rbar(f3.kwhw_mul(x, y));
            KMHWElement rhs = f3.ctx().kmhw_mul(f3.rbar(x), f3.rbar(y));
            CHECK(lhs == rhs);
        }
}
