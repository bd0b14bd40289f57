#pragma once

#include <string>
#include <vector>

#include "wsteen/witt_models.hpp"

namespace wsteen {

/* Monomial eta^m · y^eps · ∏_{j in J, j>=2} x_j of the eta-inverted algebra. */
struct LocalMono {
    int m = 0;        // eta exponent, may be negative
    uint8_t y = 0;    // y exponent (0/1)
    uint16_t x = 0;   // bit j = x_j present, j >= 2

    Bidegree bidegree() const;
    auto operator<=>(const LocalMono&) const = default;
};

/* W(k)-linear combination of LocalMonos in normal form
 * (y^2 = 0, x_j^2 -> 2 x_{j+1}). */
struct LocalElement {
    const class EtaLocal* el = nullptr;
    std::vector<std::pair<LocalMono, uint8_t>> t;  // sorted; value in W(k), nonzero

    bool is_zero() const { return t.empty(); }
    bool operator==(const LocalElement& o) const { return t == o.t; }
};

class EtaLocal {
public:
    explicit EtaLocal(const WContext& wc) : wc_(wc) {}

    const WContext& wc() const { return wc_; }
    const WittRing& witt() const { return wc_.preset().witt(); }

    LocalElement zero() const { return {this, {}}; }
    LocalElement one() const;
    LocalElement from_mono(const LocalMono& m, uint8_t coeff) const;
    LocalElement eta(int power) const;
    LocalElement y() const;
    LocalElement x(int j) const;

    LocalElement add(const LocalElement& a, const LocalElement& b) const;
    LocalElement local_mul(const LocalElement& a, const LocalElement& b) const;
    LocalElement scale(const LocalElement& a, uint8_t w) const;
    LocalElement pow(const LocalElement& a, int n) const;

    /* kill torsion, rescale free monomials by the printed eta powers:
     * x_j = eta^{1-2^j} t_j, y = eta^{-1} s */
    LocalElement localize(const KWHWElement& v) const;

    std::string str(const LocalElement& v) const;

private:
    const WContext& wc_;
};

}  // namespace wsteen
