#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsteen/bidegree.hpp"

namespace wsteen {

struct PresetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PresetKind { QuadraticallyClosed, FiniteFieldQ1, FiniteFieldQ3, CustomNilpotent };

/* Monomial of k^M_*(k) mod 2: exponent per degree-1 class; class 0 is rho. */
struct KM2Mono {
    std::vector<uint8_t> e;

    int degree() const {
        int d = 0;
        for (uint8_t x : e) d += x;
        return d;
    }
    bool is_one() const { return degree() == 0; }
    Bidegree bidegree() const { return {-degree(), -degree()}; }
    auto operator<=>(const KM2Mono&) const = default;
};

class FieldPreset;
using PresetPtr = std::shared_ptr<const FieldPreset>;

/* Element of k^M_*(k): F2 sum of normalized monomials. */
struct KM2Element {
    PresetPtr preset;
    std::vector<KM2Mono> terms;  // sorted, no duplicates

    bool is_zero() const { return terms.empty(); }
    bool operator==(const KM2Element& o) const { return terms == o.terms; }
};

/* Explicit table model of W(k); elements are indices 0..order-1, 0 is the
 * zero form and `one` is <1>. */
struct WittRing {
    int order = 0;
    int one = 0;
    std::vector<uint8_t> add_table;  // order*order
    std::vector<uint8_t> mul_table;
    std::vector<uint8_t> unit_classes;            // classes of units: <1>, <u>, ...
    std::vector<std::vector<uint8_t>> ideal_pow;  // I^0 ⊇ I^1 ⊇ ... down to {0}
    std::vector<std::string> names;               // printable element names

    uint8_t add(uint8_t a, uint8_t b) const { return add_table[a * order + b]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_table[a * order + b]; }
    uint8_t neg(uint8_t a) const;
    int element_order(uint8_t a) const;  // additive order: 1, 2 or 4
    bool in_ideal_pow(uint8_t a, int n) const;
    /* additive embedding into (Z/4)^k, for linear algebra over Z/4 */
    std::vector<uint8_t> encode_z4(uint8_t a) const;
    std::size_t encode_width() const;
    bool is_associative_commutative_unital() const;
};

/* Element of K^W_n = I^max(n,0)(k). */
struct KWElement {
    int deg = 0;
    uint8_t val = 0;

    bool is_zero() const { return val == 0; }
    Bidegree bidegree() const { return {-deg, -deg}; }
    bool operator==(const KWElement&) const = default;
};

class FieldPreset : public std::enable_shared_from_this<FieldPreset> {
public:
    static PresetPtr qcl();
    static PresetPtr fq1();
    static PresetPtr fq3();
    static PresetPtr custom(int rho_nilpotence, std::vector<std::string> extra_classes,
                            std::vector<std::vector<uint8_t>> vanishing,
                            std::string name = "custom");
    /* file format: lines `rho_nilpotence N`, `class NAME`, `vanish MONO` */
    static PresetPtr custom_from_file(const std::string& path);
    static PresetPtr by_flag(const std::string& flag);  // qcl|fq1|fq3|custom:<file>

    PresetKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    int rho_nilpotence() const { return rho_nilpotence_; }
    int num_classes() const { return static_cast<int>(class_names_.size()); }
    const std::vector<std::string>& class_names() const { return class_names_; }
    bool has_witt_model() const { return witt_ != nullptr; }
    const WittRing& witt() const;
    bool km2_vanishes() const;  // k^M_2 = 0 (unique-lift hypothesis)

    /* --- k^M arithmetic --- */
    KM2Mono one_mono() const { return KM2Mono{std::vector<uint8_t>(class_names_.size(), 0)}; }
    /* nullopt when the normalized monomial is zero (rho nilpotence / vanishing product) */
    std::optional<KM2Mono> normalize_mono(const std::vector<int>& raw_exps) const;
    std::optional<KM2Mono> mono_mul(const KM2Mono& a, const KM2Mono& b) const;
    std::optional<KM2Mono> mono_by_name(const std::string& cls) const;  // single class
    std::optional<KM2Mono> rho_mono() const { return mono_by_name("rho"); }

    KM2Element km_zero() const;
    KM2Element km_from_mono(const std::optional<KM2Mono>& m) const;
    KM2Element km_one() const { return km_from_mono(one_mono()); }
    KM2Element km_rho() const { return km_from_mono(rho_mono()); }
    std::vector<KM2Mono> km_basis(int degree) const;
    int km_dim(int degree) const { return static_cast<int>(km_basis(degree).size()); }
    std::string mono_str(const KM2Mono& m) const;

    /* --- Witt K-theory tower K^W_n = I^max(n,0) --- */
    std::vector<KWElement> kw_group(int n) const;
    int kw_log2_order(int n) const;
    KWElement kw_zero(int n) const { return {n, 0}; }
    KWElement kw_one() const { return {0, static_cast<uint8_t>(witt().one)}; }
    KWElement kw_rho() const;  // <1,1> in K^W_1
    KWElement kw_add(const KWElement& a, const KWElement& b) const;
    KWElement kw_mul(const KWElement& a, const KWElement& b) const;
    KWElement kw_eta(const KWElement& x) const;  // K^W_{n+1} -> K^W_n, inclusion
    /* residue under r̄ : K^W_n -> k^M_n */
    KM2Element kw_residue(const KWElement& x) const;
    int kw_eta_coker_dim(int n) const;  // dim_F2 K^W_n / eta K^W_{n+1}
    /* Pfister-form lift of a degree-1 class of k^M into I = K^W_1 */
    KWElement kw_lift_class(int class_idx) const;
    KWElement kw_lift_mono(const KM2Mono& c) const;
    /* generating set of the finite abelian group K^W_n */
    std::vector<KWElement> kw_group_generators(int n) const;

private:
    FieldPreset() = default;

    PresetKind kind_ = PresetKind::CustomNilpotent;
    std::string name_;
    int rho_nilpotence_ = 1;
    std::vector<std::string> class_names_;              // [0] == "rho"
    std::vector<std::vector<uint8_t>> vanishing_;       // exponent vectors
    std::shared_ptr<const WittRing> witt_;
    /* residues of I^n/I^{n+1}: for each n >= 0, map element -> k^M_n class id list */
    std::vector<std::vector<uint8_t>> residue_class_;   // residue_class_[n][val] = km basis index + 1, 0 = zero
};

KM2Element km_add(const KM2Element& a, const KM2Element& b);
KM2Element km_mul(const KM2Element& a, const KM2Element& b);  // errors on preset mismatch

}  // namespace wsteen
