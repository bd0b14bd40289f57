#pragma once

#include <string>
#include <vector>

#include "wsteen/homology.hpp"
#include "wsteen/shadow.hpp"
#include "wsteen/z4.hpp"

namespace wsteen {

struct IncompatiblePair : AlgebraError {
    std::string witness;
    IncompatiblePair(const std::string& msg, std::string w)
        : AlgebraError(msg), witness(std::move(w)) {}
};

/* square-free monomial s^eps · ∏_{j in J, j>=2} t_j of the free part */
struct FreeMono {
    uint8_t s = 0;
    uint16_t t = 0;  // bit j set = t_j present, j >= 2

    Bidegree bidegree() const;
    KMHWMono residue_mono() const;  // tau_0^{3s} tau_1^{s} ∏ tau_j
    auto operator<=>(const FreeMono&) const = default;
};

/* Element of K^W⋆⋆H_WZ: free part over the Witt K-theory tower plus
 * eta-torsion stored by its k^M⋆⋆H_WZ residue (an element of im(d_left),
 * certified by a d-preimage). */
struct KWHWElement {
    const class WContext* wc = nullptr;
    std::vector<std::pair<FreeMono, KWElement>> free;  // sorted by monomial
    KMHWElement torsion;
    KMHWElement torsion_preimage;

    bool is_zero() const { return free.empty() && torsion.is_zero(); }
    /* preimages are certificates, not part of the value */
    bool operator==(const KWHWElement& o) const {
        return free == o.free && torsion == o.torsion;
    }
};

/* Element of H_WZ⋆⋆H_WZ as a compatible pair over the pullback square. */
struct HWHWPair {
    const class WContext* wc = nullptr;
    HWElement a;      // image in H𝔽₂⋆⋆H_WZ
    KWHWElement b;    // image in K^W⋆⋆H_WZ

    bool is_zero() const { return a.x.is_zero() && b.is_zero(); }
    bool operator==(const HWHWPair& o) const { return a.x == o.a.x && b == o.b; }
};

enum class RelStatus { Holds, Fails, FailsAsPrintedHoldsCorrected };

struct RelationCheck {
    std::string id;
    uint16_t I = 0, J = 0;
    RelStatus status = RelStatus::Fails;
    std::string lhs, rhs;  // computed normal forms
    std::string note;      // homogeneity defects, scalar-side outcomes
};

struct IndependenceReport {
    Bidegree b;
    int count = 0;
    bool independent = false;
    std::vector<std::string> monomials;
    std::string note;
};

/* Witt-model engine over a preset with a Witt ring and k^M_2 = 0. */
class WContext {
public:
    explicit WContext(PresetPtr preset, int gen_cap = 6);

    Context& ctx() { return ctx_; }
    const Context& ctx() const { return ctx_; }
    const Algebra& alg() const { return ctx_.alg(); }
    const FieldPreset& preset() const { return ctx_.preset(); }
    int max_index() const { return ctx_.gen_cap() - 1; }

    /* --- K^W⋆⋆H_WZ --- */
    KWHWElement kwhw_zero() const { return {this, {}, ctx_.kmhw_zero(), ctx_.kmhw_zero()}; }
    KWHWElement kwhw_one() const;
    KWHWElement kwhw_free(const FreeMono& m, const KWElement& c) const;
    KWHWElement kwhw_s() const;
    KWHWElement kwhw_t(int j) const;
    /* torsion from a residue known to lie in im(d_left); solves for a preimage */
    KWHWElement kwhw_torsion(const KMHWElement& z) const;
    KWHWElement kwhw_torsion_certified(const KMHWElement& z, const KMHWElement& preimage) const;
    KWHWElement kwhw_add(const KWHWElement& x, const KWHWElement& y) const;
    KWHWElement kwhw_mul(const KWHWElement& x, const KWHWElement& y) const;
    KWHWElement kwhw_eta(const KWHWElement& x) const;
    KWHWElement kwhw_right_tau(const KWHWElement& x) const;
    KMHWElement rbar(const KWHWElement& x) const;
    KMHWElement rbar_free_mono(const FreeMono& m, const KWElement& c) const;
    std::string str(const KWHWElement& x) const;

    /* --- pairs --- */
    HWHWPair pair_zero() const;
    HWHWPair pair_one() const;
    HWHWPair make_pair(const HWElement& a, const KWHWElement& b) const;  // may throw
    HWHWPair pair_add(const HWHWPair& x, const HWHWPair& y) const;
    HWHWPair pair_mul(const HWHWPair& x, const HWHWPair& y) const;
    HWHWPair pair_eta(const HWHWPair& x) const;
    HWHWPair pair_pow(const HWHWPair& x, int n) const;
    bool pair_compatible(const HWElement& a, const KWHWElement& b, std::string* witness) const;
    std::string str(const HWHWPair& x) const;

    /* scalar pairs: eta_L / eta_R images of H_WZ⋆⋆ coefficients */
    HWHWPair scalar_tower(const KWElement& c) const;  // classes from the sphere
    HWHWPair scalar_km(const KM2Mono& c) const;
    HWHWPair scalar_tau_left() const;   // eta_L(tau) = t(∅)
    HWHWPair scalar_tau_right() const;  // eta_R(tau)
    HWHWPair pair_xi_tau(int j) const;  // xi_j·tau with its canonical torsion lift

    /* name in {tau0, s, t, c, c1, tI, t1I}; iset is a bitmask over {2..} */
    HWHWPair theorem_generator(const std::string& name, uint16_t iset, int j = 0) const;

    /* --- verifier --- */
    RelationCheck verify_relation(const std::string& id, uint16_t I, uint16_t J) const;
    std::vector<std::string> relation_ids() const;
    std::vector<RelationCheck> verify_family(const std::string& family, int max_index) const;
    IndependenceReport independence_check(Bidegree b, int max_index) const;
    /* bidegrees of all reduced Theorem monomials of weight <= cap */
    std::vector<Bidegree> theorem_monomial_bidegrees(int weight_cap, int max_index) const;

    /* torsion lift of xi_j·tau in K^W⋆⋆H_WZ (cached) */
    KWHWElement xi_tau(int j) const;

private:
    struct Item {
        std::string label;
        HWHWPair value;
    };
    std::vector<Item> independence_items(Bidegree b, int max_index) const;
    KWHWElement xi_tau_lift(int j) const;
    KMHWElement b_class_() const;

    Context ctx_;
    mutable std::mutex wmu_;
    mutable std::map<int, KWHWElement> xi_tau_cache_;
};

}  // namespace wsteen
