#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsteen/report.hpp"
#include "wsteen/witt_models.hpp"

namespace wsteen {

struct SuiteOptions {
    std::string field = "qcl";
    int weight_cap = 12;
    int n_random = 200;
    int max_p = 24;
    int min_q = -16;
    int max_q = 2;
    int max_index = 4;
    int jmax = 4;
    uint64_t seed = 20260810;
};

std::vector<std::string> suite_names();
/* builds the contexts for the preset named in opt and runs one suite */
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt);

/* suite bodies over prebuilt contexts (shared by the CLI and the tests) */
VerificationReport suite_hopf(const Context& ctx, const SuiteOptions& opt);
VerificationReport suite_action(const Context& ctx, const SuiteOptions& opt);
VerificationReport suite_d_squared(const Context& ctx, const SuiteOptions& opt);
VerificationReport suite_kernel_d(const Context& ctx, const SuiteOptions& opt);
VerificationReport suite_freeness(const Context& ctx, const SuiteOptions& opt);
VerificationReport suite_relations(const WContext& wc, const std::string& family,
                                   const SuiteOptions& opt);
VerificationReport suite_main_theorem(const WContext& wc, const SuiteOptions& opt);
VerificationReport suite_eta_torsion(const WContext& wc, const SuiteOptions& opt);
VerificationReport suite_eta_inverted(const WContext& wc, const SuiteOptions& opt);

/* enumeration helpers shared with tests */
std::vector<Pure> pures_of_weight_le(const Algebra& alg, int weight_cap);

}  // namespace wsteen
