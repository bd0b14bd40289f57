#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wsteen/field_data.hpp"
#include "wsteen/milnor.hpp"

/* Independent oracles used to derive expected values before the engine is
 * trusted with them: brute-force symbol enumeration for k^M(F_q)/2,
 * Gram-matrix classification for W(k), exhaustive enumeration for bases and
 * a second, plain Gaussian elimination over F2. */
namespace wsteen::oracles {

/* arithmetic of F_q for small odd prime q */
struct Fq {
    int q;
    int add(int a, int b) const { return (a + b) % q; }
    int mul(int a, int b) const { return (a * b) % q; }
    int neg(int a) const { return (q - a) % q; }
    bool is_square(int a) const;
};

/* dim_F2 of k^M_n(F_q) for n = 0,1,2 by symbol enumeration with Steinberg
 * relations */
int km_dim_fq(int q, int n);
/* true if the class of -1 is the nonzero square class */
bool rho_nonzero_fq(int q);

/* Witt group/ring of diagonal forms over F_q (or over a quadratically
 * closed model when every_unit_square), presented by binary-form
 * congruences found by brute force and computed by Smith reduction. */
struct WittOracle {
    int order = 0;
    std::vector<std::string> elems;             // canonical element names
    std::map<std::pair<int, int>, int> add;
    std::map<std::pair<int, int>, int> mul;
    int one = 0;
    std::vector<int> ideal;                     // I = even-rank classes
    std::vector<int> ideal_sq;                  // I^2
};
WittOracle witt_oracle_fq(int q, bool every_unit_square);

/* true if the oracle group/ring tables agree with the preset's frozen ones
 * under some bijection fixing 0 and <1> */
bool witt_tables_agree(const WittOracle& o, const WittRing& w);

/* exhaustive enumeration of A-basis monomials at one bidegree, independent
 * of Algebra::basis (plain nested loops over bounded exponents) */
std::vector<AMonomial> enumerate_basis(const Algebra& alg, Bidegree b, int exp_bound);

/* plain row-reduction rank over F2, no bitsets */
int plain_rank(std::vector<std::vector<uint8_t>> rows);

}  // namespace wsteen::oracles
