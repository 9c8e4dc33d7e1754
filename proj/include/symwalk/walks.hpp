#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symwalk/characters.hpp"
#include "symwalk/numeric.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

// |C| = n! / prod_i i^{f_i} f_i!.
Int class_size(const CycleType& sigma);

// The coset of the alternating group on which the walk lives at time t: the
// odd coset iff the step class is odd and t is odd, the alternating group
// otherwise.
struct CosetSpec {
    int n = 0;
    CycleType step_class;
    long t = 0;
    enum class Kind { alternating, odd } kind = Kind::alternating;

    static CosetSpec of(const CycleType& step_class, long t);
    int sign() const { return kind == Kind::alternating ? 1 : -1; }
    Int size() const;  // n!/2
};

// One-line permutation of {0,...,n-1}; only the Monte Carlo simulator uses it.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    int n() const { return static_cast<int>(images.size()); }
    Partition cycle_type() const;
};

// Full character table of S_n: rows indexed by representations, columns by
// classes, both in reverse-lexicographic order.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> lambdas;
    std::vector<CycleType> classes;
    std::vector<Int> dims;
    std::vector<Int> class_sizes;
    std::vector<std::vector<Int>> ch;  // ch[lambda][class]

    static CharacterTable build(int n, int threads = 1);
    int class_index(const CycleType& sigma) const;
};

// Law of the walk at a fixed time, as exact class probabilities (one entry per
// cycle type, reverse-lexicographic). Probabilities sum to 1 and vanish off
// the coset sgn = sgn(C)^t.
struct WalkLaw {
    int n = 0;
    CycleType step_class;
    long t = 0;
    std::vector<Partition> types;
    std::vector<Int> sizes;
    std::vector<Rat> class_probs;

    Rat element_prob(std::size_t index) const;
    int coset_sign() const;
    void validate() const;  // throws on mass/coset violations
};

// Law by Fourier inversion: mu_t(sigma) = (1/n!) sum_lambda d ch(C)^t/d^t ch(sigma).
WalkLaw fourier_walk_law(const CycleType& step_class, long t, const CharacterTable* table = nullptr,
                         int threads = 1);

// Independent oracle: explicit t-fold convolution over all n! elements.
WalkLaw convolution_oracle(const CycleType& step_class, long t, long t_limit = 12);

// Total variation distance to the uniform law on the walk's coset, exact.
Rat dtv(const WalkLaw& law);

// Squared L2 coset distance, both routes: directly from the law, and as the
// half-sum of d_lambda^2 chi^{2t} over nontrivial representations.
Rat dl2_squared_from_law(const WalkLaw& law);
Rat dl2_squared_ds(const CycleType& step_class, long t, const CharacterTable* table = nullptr);

// sqrt of the exact DS radicand, in doubles.
double dl2(const CycleType& step_class, long t);

struct DsIdentityReport {
    Rat dtv_value;
    Rat dl2_squared_law;
    Rat dl2_squared_sum;
    bool identity_holds = false;   // law form == DS sum, exactly
    bool cauchy_schwarz = false;   // 4 dtv^2 <= dl2^2, exactly
};
DsIdentityReport ds_identity_check(const CycleType& step_class, long t);

// Witten zeta sum_{lambda != (n),(1^n)} d_lambda^{-s}.
double witten_zeta(int n, double s);
Rat witten_zeta_exact(int n, unsigned long s);

struct MixingProfileRow {
    long t = 0;
    std::optional<Rat> dtv;  // present only within the cost budget
    double dl2 = 0.0;
    double t_over_tc = 0.0;
};

struct MixingProfile {
    CycleType step_class;
    double t_c = 0.0;
    bool dtv_available = false;
    std::vector<MixingProfileRow> rows;
};

// ln n / ln(n/f(C)).
double cutoff_time(const CycleType& step_class);

// dl2 from the DS sum for each t in [t_min, t_max]; dtv included while the
// full-table cost model (#classes^2 MN evaluations) fits the budget.
MixingProfile mixing_profile(const CycleType& step_class, long t_min, long t_max,
                             long dtv_cost_budget = 31000, int threads = 1);

struct EmpiricalLaw {
    int n = 0;
    CycleType step_class;
    long t = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<Partition> types;
    std::vector<std::uint64_t> counts;

    Rat probability(std::size_t index) const {
        Rat p{Int(counts[index]), Int(samples)};
        p.canonicalize();
        return p;
    }
};

// Empirical law of the cycle type of sigma_1...sigma_t. Per-sample streams are
// derived from (seed, sample index): counts are identical for every thread count.
EmpiricalLaw mc_simulate(const CycleType& step_class, long t, std::uint64_t samples,
                         std::uint64_t seed, int threads = 1);

// Exact total variation between an exact law and an empirical one.
Rat tv_distance(const WalkLaw& law, const EmpiricalLaw& empirical);

struct SupportTailRow {
    int y = 0;
    double empirical_tail = 0.0;  // P(kt - supp >= y), empirical
    double binomial_tail = 0.0;   // P(Bin(kt, 2kt/n) >= y), exact, rounded
    double sigma = 0.0;           // binomial std error of the empirical estimate
    bool flagged = false;         // empirical exceeds binomial by more than 3 sigma
};

struct SupportConcentrationReport {
    bool skipped = false;
    std::string notice;
    int n = 0, k = 0;
    long t = 0;
    std::vector<SupportTailRow> rows;
    long flagged_count = 0;
};

// Empirical CDF of kt - supp(Z) against the dominating binomial tail. The
// class defaults to a single k-cycle; any class with support k is accepted.
SupportConcentrationReport support_concentration(int n, int k, long t, std::uint64_t samples,
                                                 std::uint64_t seed,
                                                 const std::optional<CycleType>& step_class = std::nullopt,
                                                 int threads = 1);

struct BootstrapReport {
    Rat chi_power;          // chi^lambda(C)^t
    Rat spectral_sum;       // sum_C' mu_t(C') chi^lambda(C')
    bool identity_holds = false;
    Rat mass_outside;       // mu_t(B^c)
    Rat max_abs_chi_inside; // max_{sigma in B} |chi^lambda(sigma)|
    bool inequality_holds = false;
};

// Verifies the eigenvalue-power identity exactly and the window inequality
// |chi(C)^t| <= mu_t(B^c) + max_B |chi| for B = {support in [lo, hi]}.
BootstrapReport bootstrap_identity_check(const CycleType& step_class, long t, const Partition& lambda,
                                         int support_lo, int support_hi);

}  // namespace symwalk
