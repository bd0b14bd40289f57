#pragma once

#include <string>
#include <vector>

#include "wsteen/shadow.hpp"

namespace wsteen {

enum class MapId { DLeft, DRight };

struct LabeledMatrix {
    F2Matrix m;
    Bidegree domain_deg, codomain_deg;
    std::vector<std::string> domain_labels, codomain_labels;
};

struct LinearAnalysis {
    int rank = 0;
    std::vector<F2Vec> kernel;  // vectors over domain coordinates
    std::vector<F2Vec> image;   // echelon basis of the column space
};

LinearAnalysis linear_analysis(const F2Matrix& m);

/* d has degree (2,1): the matrix at b maps the basis at b to the basis at
 * b-(2,1). */
LabeledMatrix matrix_of(const Context& ctx, MapId id, Bidegree b);

struct HomologyReport {
    Bidegree b;
    int dim_ker = 0;
    int dim_im_in = 0;  // image arriving from b+(2,1)
    int dim_h = 0;
    int predictor_h = 0;
    bool match = false;
    std::vector<std::string> witnesses;  // kernel representatives
};

/* H(d_left) against the closed-form predictor (requires rho^3 = 0);
 * H(d_right) is predicted to vanish by the split exact sequence. */
HomologyReport homology_dim(const Context& ctx, MapId id, Bidegree b);

struct PredictorRefused : AlgebraError {
    using AlgebraError::AlgebraError;
};

/* counting only: monomials b^beta·tau(E, indices >= 2) with k^M coefficients */
int predictor_h_dim(const Context& ctx, Bidegree b);
/* rank of the spanning set {frame·c(I), frame·c1(I)} */
int predictor_im_dim(const Context& ctx, Bidegree b);
int predictor_ker_dim(const Context& ctx, Bidegree b);

struct PredictorMono {
    std::string label;
    Bidegree b;
    KMHWElement value;
};
/* all monomials in the kernel generators (b, tau_j, c(I), c1(I)) with the
 * stated relations applied, up to the given weight cap */
std::vector<PredictorMono> predictor_kernel_generators(const Context& ctx, int weight_cap);

}  // namespace wsteen
