#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symwalk/characters.hpp"
#include "symwalk/numeric.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

// zeta(r) = ln max(1, r^{1/8}).
double zeta_helper(long r);

// theta-biased skew dimension d_mu^theta * d_{lambda\mu} / d_lambda.
struct BiasedDim {
    Partition lambda;
    Partition mu;
    double theta = 0.0;
    Int d_mu;
    Int d_skew;
    Int d_lambda;
    double log_value = 0.0;

    // Exact value of B_theta^q when theta*q is integral.
    Rat exact_power(long q) const;
};

BiasedDim biased_skew_dim(const Partition& lambda, const Partition& mu, double theta);

// W_lambda(k) = (S(lambda,[k]) - S(lambda,[k-1,1])) / n^{falling k}; depends on
// sigma only through its support size. Requires 2 <= k <= n and lambda_1 >= k.
Rat w_term(const Partition& lambda, int k);

// Z = chi^lambda(sigma) - W_lambda(k), the branching tail over seeds with at
// least two boxes above the first row.
Rat z_term(const Partition& lambda, const CycleType& sigma);

struct CheckReport {
    std::string name;
    long checked = 0;
    long skipped = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

struct SuiteReport {
    std::vector<CheckReport> checks;
    bool all_ok() const;
    long total_checked() const;
    long total_skipped() const;
    long total_violations() const;
};

// Exhaustive scans of the proven lemmas, each gated on its exact hypotheses;
// zero violations expected. Exact-rational comparisons where both sides are
// rational, log-space doubles with a 1e-9 guard where a side is transcendental.
SuiteReport lemma_suite(int n_max, int threads = 1);

// The remaining theorem-backed inequalities (fragmentation, shifts, counts,
// crude and elementary bounds, slice products, dimension bounds, and the
// depth-M triple-slicing bound on biased skew dimensions).
SuiteReport inequality_suite(int n_max, int threads = 1);

enum class TheoremVariant { thm1_1, thm1_2, thm5_helping };

std::string variant_name(TheoremVariant variant);

struct MarginRecord {
    int n = 0;
    Partition lambda;
    CycleType sigma;
    std::string variant;
    double lhs_log = 0.0;  // ln |chi|, -inf when chi = 0
    double rhs_log = 0.0;
    double margin = 0.0;   // rhs_log - lhs_log
    bool satisfied = false;
};

struct MarginScan {
    std::vector<MarginRecord> records;
    long satisfied_count = 0;
    double min_margin = 0.0;
    std::optional<MarginRecord> argmin;
};

// Margin data for the asymptotic theorems; reported, never asserted. Variant
// thm1_1 scans every non-trivial class (delta ignored, q = 1/2); thm1_2 scans
// classes with f >= delta*n (q = 1); thm5_helping likewise with
// q = 1 + zeta(r_sym(lambda))/ln n.
MarginScan theorem_margin_scan(int n, double delta, TheoremVariant variant, int threads = 1,
                               bool include_extremes = true);

struct EmpiricalConstant {
    int n = 0;
    double c_star = 0.0;
    std::string witness;
};

// C*(n) = max over in-hypothesis instances of (f^2/(r^2 k)) ln^+(|chi|(n/f)^r);
// empirical counterpart of the low-level bound's universal constant.
std::vector<EmpiricalConstant> empirical_constant_scan(int n_min, int n_max, int threads = 1);

}  // namespace symwalk
