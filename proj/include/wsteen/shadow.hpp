#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wsteen/f2.hpp"
#include "wsteen/milnor.hpp"

namespace wsteen {

struct NotInSubalgebra : AlgebraError {
    using AlgebraError::AlgebraError;
};

/* Basis monomial of the subalgebra H𝔽₂⋆⋆H_WZ:
 * tau(E)·(xibar_1 tau)^eps·xibar_1^{2 r1}·xibar_2^{R2}·... */
struct HWMono {
    uint16_t tau = 0;
    uint8_t eps = 0;
    uint8_t r1 = 0;
    std::array<uint8_t, kMaxGenStorage> xib{};  // xibar_j exponents, j >= 2

    Bidegree bidegree() const;
    bool is_one() const;
    auto operator<=>(const HWMono&) const = default;
};
struct HWBasisItem {
    CoefMono s;
    HWMono m;
    Bidegree bidegree() const { return s.bidegree() + m.bidegree(); }
    auto operator<=>(const HWBasisItem&) const = default;
};

struct HWElement {
    const class Context* ctx = nullptr;
    AElement x;
    std::vector<HWBasisItem> cert;  // re-expands to exactly x
};

/* Class in H𝔽₂⋆⋆k^M = A/(tau+rho·tau_0)A, by reduced representative. */
struct HKMElement {
    const class Context* ctx = nullptr;
    AElement rep;

    bool is_zero() const { return rep.is_zero(); }
    bool operator==(const HKMElement& o) const { return rep == o.rep; }
};

/* Basis monomial of k^M⋆⋆H_WZ: tau_0^{E0<=3}·tau(E>=1)·xibar(I+2S). */
struct KMHWMono {
    uint8_t e0 = 0;
    uint16_t tau = 0;                            // bits i >= 1
    std::array<uint8_t, kMaxGenStorage> xib{};   // xibar_j exponents; xib[1] even

    Bidegree bidegree() const;
    bool is_one() const;
    auto operator<=>(const KMHWMono&) const = default;
};
struct KMHWTerm {
    KM2Mono c;
    KMHWMono m;
    Bidegree bidegree() const { return c.bidegree() + m.bidegree(); }
    auto operator<=>(const KMHWTerm&) const = default;
};
struct KMHWElement {
    const class Context* ctx = nullptr;
    std::vector<KMHWTerm> t;  // sorted, duplicate-free

    bool is_zero() const { return t.empty(); }
    std::vector<Bidegree> bidegrees() const;
    KMHWElement homogeneous_part(Bidegree b) const;
    bool operator==(const KMHWElement& o) const { return t == o.t; }
};

/* Presentation monomial of H𝔽₂⋆⋆K^W: tau(E)·xibar_1^{2 r1}·xibar_{>=2}(R),
 * with k^M coefficients (tau ≡ rho·tau_0 in this quotient). */
struct HKWMono {
    uint16_t tau = 0;
    uint8_t r1 = 0;
    std::array<uint8_t, kMaxGenStorage> xib{};

    Bidegree bidegree() const;
    auto operator<=>(const HKWMono&) const = default;
};
struct HKWBasisItem {
    KM2Mono c;
    HKWMono m;
    Bidegree bidegree() const { return c.bidegree() + m.bidegree(); }
    auto operator<=>(const HKWBasisItem&) const = default;
};

/* Per-preset engine: the algebra plus lazily built per-bidegree structure
 * (bases, the subalgebra solver, quotient transversals).  Labs are built
 * once and read-only afterwards. */
class Context {
public:
    explicit Context(PresetPtr preset, int gen_cap = 6);

    const Algebra& alg() const { return alg_; }
    const FieldPreset& preset() const { return alg_.preset(); }
    int gen_cap() const { return alg_.gen_cap(); }

    const std::vector<AMonomial>& abasis(Bidegree b) const;
    F2Vec encode(const AElement& x, Bidegree b) const;
    AElement decode(const F2Vec& v, Bidegree b) const;

    /* --- H𝔽₂⋆⋆H_WZ --- */
    const std::vector<HWBasisItem>& hw_basis(Bidegree b) const;
    AElement hw_mono_element(const HWMono& m) const;
    AElement hw_item_element(const HWBasisItem& it) const;
    HWElement hw_expand(const AElement& x) const;  // throws NotInSubalgebra
    std::optional<HWElement> hw_try_expand(const AElement& x) const;
    HWElement hw_from_cert(std::vector<HWBasisItem> cert) const;

    /* --- H𝔽₂⋆⋆k^M --- */
    const std::vector<AMonomial>& hkm_transversal(Bidegree b) const;
    HKMElement to_hkm(const AElement& x) const;
    HKMElement d_right(const HKMElement& x) const;
    F2Vec hkm_encode(const HKMElement& x, Bidegree b) const;

    /* --- k^M⋆⋆H_WZ --- */
    const std::vector<KMHWTerm>& kmhw_basis(Bidegree b) const;
    KMHWElement to_kmhw(const HWElement& x) const;
    KMHWElement to_kmhw(const AElement& x) const;  // hw_expand first
    AElement kmhw_mono_lift(const KMHWMono& m) const;
    AElement kmhw_lift(const KMHWElement& x) const;
    KMHWElement kmhw_add(const KMHWElement& a, const KMHWElement& b) const;
    KMHWElement kmhw_mul(const KMHWElement& a, const KMHWElement& b) const;
    KMHWElement kmhw_scale(const KMHWElement& x, const KM2Mono& c) const;
    KMHWElement kmhw_right_tau(const KMHWElement& x) const;
    KMHWElement kmhw_zero() const { return {this, {}}; }
    KMHWElement kmhw_from_mono(const KMHWMono& m) const;
    KMHWElement d_left(const KMHWElement& x) const;
    F2Vec kmhw_encode(const KMHWElement& x, Bidegree b) const;
    KMHWElement kmhw_decode(const F2Vec& v, Bidegree b) const;

    /* c(I), c1(I) and friends (element semantics: c(∅)=0, c1(∅)=tau_0) */
    AElement xibar_set(uint16_t iset) const;        // ∏_{i∈I} xibar_i
    AElement c_of(uint16_t iset) const;             // Σ_{i∈I} xibar_{i-1}^2 xibar(I∖i)
    AElement c1_of(uint16_t iset) const;            // tau_0 xibar(I) + tau_1 c(I)
    KMHWElement c_class(uint16_t iset) const;
    KMHWElement c1_class(uint16_t iset) const;
    KMHWElement b_class() const;                    // tau_0^3 tau_1

    /* --- H𝔽₂⋆⋆K^W presentation --- */
    const std::vector<HKWBasisItem>& hkw_presentation_basis(Bidegree b) const;
    HKMElement hkw_item_class(const HKWBasisItem& it) const;

    std::string str(const HWBasisItem& it) const;
    std::string str(const KMHWTerm& t) const;
    std::string str(const KMHWElement& x) const;
    std::string str(const HKWBasisItem& it) const;

private:
    struct Lab {
        Bidegree b;
        std::vector<AMonomial> abasis;
        std::map<AMonomial, std::size_t> aindex;
        std::vector<HWBasisItem> hw_items;
        std::unique_ptr<F2Solver> hw_solver;
        F2Span etaR_span;
        std::vector<AMonomial> transversal;
        std::vector<KMHWTerm> kmhw_items;
        std::vector<std::size_t> mu_items;  // indices into hw_items with tpow == 0
        std::unique_ptr<F2Solver> remark_solver;
        std::vector<HKWBasisItem> hkw_items;
    };

    const Lab& lab(Bidegree b) const;
    void build_lab(Lab& L) const;
    void enumerate_hw(Bidegree b, std::vector<HWBasisItem>& out) const;
    void enumerate_kmhw(Bidegree b, std::vector<KMHWTerm>& out) const;
    void enumerate_hkw(Bidegree b, std::vector<HKWBasisItem>& out) const;

    Algebra alg_;
    mutable std::mutex mu_;
    mutable std::map<Bidegree, std::unique_ptr<Lab>> labs_;
    mutable std::map<HWMono, AElement> hw_mono_cache_;
    mutable std::map<KMHWMono, AElement> kmhw_lift_cache_;
    mutable unsigned lift_check_counter_ = 0;
};

}  // namespace wsteen
