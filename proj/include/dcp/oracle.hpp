#ifndef DCP_ORACLE_HPP
#define DCP_ORACLE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dcp/mvpoly.hpp"
#include "dcp/partition.hpp"

namespace dcp {

struct GradedDims {
    std::vector<long long> dims; // dims[d] = dim_k (R/I)_d
    bool stabilized_zero = false;
};

// dim_k (R/I)_d from the rank of the span of degree-d multiples of the
// generators in the degree-d monomial basis; exact arithmetic throughout.
long long graded_dim(const std::vector<MvPoly>& gens, int nvars, int degree);

// dims 0..dmax with the Artinian stopping rule: once a graded piece
// vanishes every later one does, so the scan halts at the first zero.
GradedDims hilbert_oracle(const std::vector<MvPoly>& gens, int nvars, int dmax);

// Total k-dimension of an Artinian quotient; NotArtinianWithinCap when no
// zero graded piece shows up by hard_cap.
long long total_dimension(const std::vector<MvPoly>& gens, int nvars, int hard_cap);

// True iff multiplication by e is injective (R/I)_d -> (R/I)_{d+deg e}
// for every d <= dmax; one-sided truncated evidence.
bool nzd_truncated_check(const std::vector<MvPoly>& gens, const MvPoly& e, int nvars, int dmax);

// Stepwise regular-sequence evidence for a hook: e_i checked over
// J_mu + (e_1..e_{i-1}) for i = 1..b, each up to degree dmax.
struct NzdStepReport {
    int step = 0; // the index i of e_i
    bool pass = false;
    int checked_to = 0;
};
std::vector<NzdStepReport> stepwise_nzd_hook(const Hook& h, int dmax);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    Hook hook;
    int dmax = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_json() const;
};

// Bundles the nine cross-checks of the closed forms against the oracle.
VerificationReport verify_hook(const Hook& h, int dmax);

} // namespace dcp

#endif
