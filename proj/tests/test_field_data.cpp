#include <fstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wsteen/field_data.hpp"

using namespace wsteen;

TEST_CASE("k^M arithmetic per preset") {
    auto qcl = FieldPreset::qcl();
    auto fq1 = FieldPreset::fq1();
    auto fq3 = FieldPreset::fq3();

    // unit law
    CHECK(km_mul(fq3->km_one(), fq3->km_rho()) == fq3->km_rho());
    // rho vanishes on construction when every unit is a square
    CHECK(qcl->km_rho().is_zero());
    CHECK(fq1->km_rho().is_zero());
    // rho^2 = 0 at fq3, matching the symbol-enumeration oracle for q = 3, 7
    CHECK(km_mul(fq3->km_rho(), fq3->km_rho()).is_zero());
    CHECK(oracles::km_dim_fq(3, 2) == 0);
    CHECK(oracles::km_dim_fq(7, 2) == 0);
    CHECK(fq3->km_dim(2) == 0);
    // degree-1 bases
    CHECK(qcl->km_basis(0).size() == 1);
    CHECK(fq3->km_basis(1).size() == 1);
    CHECK(fq3->mono_str(fq3->km_basis(1)[0]) == "rho");
    CHECK(oracles::km_dim_fq(3, 1) == 1);
    CHECK(oracles::rho_nonzero_fq(3));
    CHECK_FALSE(oracles::rho_nonzero_fq(5));
    // fq1: u is the only degree-1 class and u^2 = 0 (oracle at q = 5)
    CHECK(fq1->km_basis(1).size() == 1);
    CHECK(fq1->mono_str(fq1->km_basis(1)[0]) == "u");
    CHECK(fq1->km_basis(2).empty());
    CHECK(oracles::km_dim_fq(5, 2) == 0);
    // preset mismatch
    CHECK_THROWS_AS(km_mul(fq3->km_rho(), fq1->km_one()), PresetError);
}

TEST_CASE("Witt tables match the Gram-classification oracle and are rings") {
    auto qcl = FieldPreset::qcl();
    auto fq1 = FieldPreset::fq1();
    auto fq3 = FieldPreset::fq3();
    CHECK(qcl->witt().order == 2);
    CHECK(fq3->witt().order == 4);
    CHECK(fq1->witt().order == 4);
    // <1> + <1> = 0 at fq1, but has order 4 at fq3
    CHECK(fq1->witt().add(fq1->witt().one, fq1->witt().one) == 0);
    CHECK(fq3->witt().element_order(static_cast<uint8_t>(fq3->witt().one)) == 4);
    for (auto& p : {qcl, fq1, fq3}) CHECK(p->witt().is_associative_commutative_unital());

    CHECK(oracles::witt_tables_agree(oracles::witt_oracle_fq(3, true), qcl->witt()));
    CHECK(oracles::witt_tables_agree(oracles::witt_oracle_fq(3, false), fq3->witt()));
    CHECK(oracles::witt_tables_agree(oracles::witt_oracle_fq(5, false), fq1->witt()));
    // no Witt model on custom presets
    auto rho4 = FieldPreset::custom(4, {}, {}, "rho4");
    CHECK_FALSE(rho4->has_witt_model());
    CHECK_THROWS_AS(rho4->witt(), PresetError);
}

TEST_CASE("K^W tower: eta, residues and exact-sequence accounting") {
    auto fq3 = FieldPreset::fq3();
    // eta is the identity below degree 0
    KWElement w{-2, 3};
    CHECK(fq3->kw_eta(w).val == w.val);
    // K^W_2 = 0 for k^M_2 = 0 presets
    CHECK(fq3->kw_group(2).size() == 1);
    // I -> W sends the nonzero class of I to 2<1> (Gram oracle over F_3)
    KWElement rho = fq3->kw_rho();
    CHECK(rho.deg == 1);
    CHECK(rho.val == fq3->witt().add(fq3->witt().one, fq3->witt().one));
    {
        auto o3 = oracles::witt_oracle_fq(3, false);
        REQUIRE(o3.ideal.size() == 2);
        int nonzero = o3.ideal[0] != 0 ? o3.ideal[0] : o3.ideal[1];
        CHECK(nonzero == o3.add.at({o3.one, o3.one}));
    }
    // residues land in k^M and vanish on I^2
    CHECK(fq3->kw_residue(rho) == fq3->km_rho());
    CHECK(fq3->kw_residue(fq3->kw_one()) == fq3->km_one());
    CHECK(fq3->kw_residue(fq3->kw_mul(rho, rho)).is_zero());
    // dim K^W_n / eta K^W_{n+1} = dim k^M_n on [-4, 4]
    for (auto& p : {FieldPreset::qcl(), FieldPreset::fq1(), FieldPreset::fq3()})
        for (int n = -4; n <= 4; ++n) CHECK(p->kw_eta_coker_dim(n) == p->km_dim(n));
    // lifts of degree-1 classes
    auto fq1 = FieldPreset::fq1();
    KWElement ulift = fq1->kw_lift_class(1);
    CHECK(fq1->kw_residue(ulift) == fq1->km_from_mono(fq1->mono_by_name("u")));
}

TEST_CASE("custom preset files parse with line-level errors") {
    {
        std::ofstream f("/tmp/wsteen_preset_ok.txt");
        f << "# rho^3 = 0 with one extra class\n";
        f << "rho_nilpotence 3\n";
        f << "class a\n";
        f << "vanish a^2 rho^2*a\n";
    }
    auto p = FieldPreset::custom_from_file("/tmp/wsteen_preset_ok.txt");
    CHECK(p->rho_nilpotence() == 3);
    CHECK(p->num_classes() == 2);
    CHECK(p->km_dim(1) == 2);   // rho, a
    CHECK(p->km_dim(2) == 2);   // rho^2, rho*a
    CHECK(p->km_dim(3) == 0);   // rho^3 = 0, a^2 = 0, rho^2 a = 0
    {
        std::ofstream f("/tmp/wsteen_preset_bad.txt");
        f << "classes a b\n";
    }
    CHECK_THROWS_AS(FieldPreset::custom_from_file("/tmp/wsteen_preset_bad.txt"), PresetError);
    CHECK_THROWS_AS(FieldPreset::by_flag("nope"), PresetError);
}
