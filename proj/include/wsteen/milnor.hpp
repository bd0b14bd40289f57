#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsteen/bidegree.hpp"
#include "wsteen/field_data.hpp"

namespace wsteen {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapExceeded : AlgebraError {
    using AlgebraError::AlgebraError;
};

constexpr int kMaxGenStorage = 12;

/* Coefficient monomial c·tau^t of H_{**} = k^M[tau]. */
struct CoefMono {
    KM2Mono c;
    int tpow = 0;

    Bidegree bidegree() const { return c.bidegree() + Bidegree{0, -1} * tpow; }
    auto operator<=>(const CoefMono&) const = default;
};
/* F2 sum of coefficient monomials (sorted, duplicate-free). */
using Scalar = std::vector<CoefMono>;
Scalar scalar_add(const Scalar& a, const Scalar& b);

/* tau(E)·xi(R) with E binary; the left-module basis monomials. */
struct Pure {
    uint16_t tau = 0;                            // bit i = tau_i present
    std::array<uint8_t, kMaxGenStorage> xi{};    // xi[i] = exponent of xi_i (i >= 1)

    bool is_one() const;
    Bidegree bidegree() const;
    int weight() const { return bidegree().q; }
    auto operator<=>(const Pure&) const = default;
};

struct AMonomial {
    KM2Mono c;
    int tpow = 0;
    Pure m;

    Bidegree bidegree() const { return c.bidegree() + Bidegree{0, -1} * tpow + m.bidegree(); }
    CoefMono coef() const { return {c, tpow}; }
    auto operator<=>(const AMonomial&) const = default;  // structural order
};
/* canonical total order used for element storage: (bidegree, c, tpow, E, R) */
bool amono_less(const AMonomial& a, const AMonomial& b);

class Algebra;

/* Sparse F2 sum of normalized AMonomials. */
struct AElement {
    const Algebra* alg = nullptr;
    std::vector<AMonomial> t;  // sorted by amono_less, no duplicates

    bool is_zero() const { return t.empty(); }
    bool is_homogeneous() const;
    std::optional<Bidegree> bidegree() const;  // nullopt if zero or inhomogeneous
    AElement homogeneous_part(Bidegree b) const;
    std::vector<Bidegree> bidegrees() const;
    bool operator==(const AElement& o) const { return t == o.t; }
    friend AElement operator+(const AElement& a, const AElement& b);
    friend AElement operator*(const AElement& a, const AElement& b);
};

/* Middle-normalized element of A ⊗_{H**} A.  All transportable coefficient
 * content of the left factor is pushed to the right factor through
 * x·eta_R(s) ⊗ y = x ⊗ s·y, i.e. the left factor is expanded in the
 * right-module basis of pures; these coordinates are unique. */
struct TensorTerm {
    Pure m1;
    AMonomial m2;

    auto operator<=>(const TensorTerm&) const = default;
};
struct TensorElement {
    const Algebra* alg = nullptr;
    std::vector<TensorTerm> t;

    bool operator==(const TensorElement& o) const { return t == o.t; }
    friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
};

/* A ⊗ A ⊗ A with the left and middle factors in right-basis form. */
struct Tensor3Term {
    Pure m1;
    Pure m2;
    AMonomial m3;

    auto operator<=>(const Tensor3Term&) const = default;
};
struct Tensor3 {
    std::vector<Tensor3Term> t;
    bool operator==(const Tensor3&) const = default;
};

enum class Sq { Sq1, Sq2 };
enum class Side { Left, Right };

/* Raw (pre-normal-form) monomial: tau exponents unrestricted. */
struct RawMono {
    std::vector<int> km;                          // exponents per k^M class
    int tpow = 0;
    std::array<int, kMaxGenStorage> tau{};        // exponents of tau_i
    std::array<int, kMaxGenStorage> xi{};         // exponents of xi_i
};

/* The dual motivic Steenrod algebra over one preset.  All operations are
 * pure; generator caches are filled lazily behind a mutex. */
class Algebra {
public:
    explicit Algebra(PresetPtr preset, int gen_cap = 6);

    const FieldPreset& preset() const { return *preset_; }
    PresetPtr preset_ptr() const { return preset_; }
    int gen_cap() const { return gen_cap_; }

    /* --- constructors --- */
    AElement zero() const { return {this, {}}; }
    AElement one() const;
    AElement tau_left() const;      // the coefficient tau
    AElement rho() const;           // may be zero
    AElement km_class(const std::string& name) const;
    AElement tau_i(int i) const;
    AElement xi_i(int i) const;
    AElement xibar_i(int i) const;  // conjugate
    AElement from_monomial(const AMonomial& m) const;
    AElement from_coef(const CoefMono& s) const;  // eta_L(s)
    AElement from_scalar(const Scalar& s) const;

    /* --- spec operations --- */
    AElement normal_form(const std::vector<RawMono>& raw) const;
    AElement mul(const AElement& x, const AElement& y) const;
    AElement add(const AElement& x, const AElement& y) const;
    AElement left_scale(const AElement& x, const CoefMono& s) const;
    AElement left_scale(const AElement& x, const Scalar& s) const;
    AElement right_scale(const AElement& x, const CoefMono& s) const;  // x·eta_R(s)
    AElement right_scale(const AElement& x, const Scalar& s) const;
    AElement eta_r(const CoefMono& s) const;  // eta_R(s) as an element
    AElement pow(const AElement& x, int n) const;
    TensorElement coproduct(const AElement& x) const;
    AElement conjugate(const AElement& x) const;
    Scalar kronecker(const Pure& dual_of, const AElement& x) const;
    Scalar kronecker(Sq op, const AElement& x) const;
    AElement act(Sq op, Side side, const AElement& x) const;
    std::vector<AMonomial> basis(Bidegree b) const;

    /* --- tensor machinery --- */
    TensorElement tensor_zero() const { return {this, {}}; }
    /* expansion of x in the right-module basis: x = Σ pure·eta_R(coef) */
    std::vector<std::pair<Pure, CoefMono>> right_basis_expand(const AElement& x) const;
    TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) const;
    Tensor3 delta_left(const TensorElement& x) const;   // (Δ ⊗ id)
    Tensor3 delta_right(const TensorElement& x) const;  // (id ⊗ Δ)
    AElement counit_left_collapse(const TensorElement& x) const;
    AElement counit_right_collapse(const TensorElement& x) const;

    std::string str(const AElement& x) const;
    std::string str(const AMonomial& m) const;
    std::string str(const CoefMono& s) const;
    std::string str(const Scalar& s) const;
    std::string str(const TensorElement& x) const;

private:
    AElement mul_monomials(const AMonomial& a, const AMonomial& b) const;
    TensorElement tensor_canon(std::vector<std::pair<AMonomial, AMonomial>> raw) const;
    TensorElement coproduct_pure(const Pure& m) const;
    const TensorElement& delta_tau_gen(int i) const;
    const TensorElement& delta_xi_gen(int i) const;
    const AElement& iota_tau(int i) const;
    const AElement& iota_xi(int i) const;
    const AElement& eta_r_tau_pow(int k) const;
    void check_same(const AElement& x, const AElement& y) const;

    PresetPtr preset_;
    int gen_cap_;

    mutable std::mutex mu_;
    mutable std::vector<AElement> iota_tau_, iota_xi_, eta_r_tau_pow_;
    mutable std::vector<TensorElement> delta_tau_, delta_xi_;
    mutable std::map<std::pair<int, int>, TensorElement> delta_xi_pow_;
};

}  // namespace wsteen
