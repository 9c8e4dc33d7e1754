#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "symwalk/numeric.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

// Conjugacy class of S_n, stored as the partition of cycle lengths.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(Partition cycles);

    // Cycle lengths list ("3,2") with implicit fixed points up to n.
    static CycleType parse(const std::string& cycles, int n);

    const Partition& cycles() const { return cycles_; }
    int n() const { return cycles_.size(); }
    int fixed_points() const { return fixed_points_; }
    int f() const { return std::max(fixed_points_, 1); }
    int support() const { return n() - fixed_points_; }
    int cycle_count() const { return cycles_.rows(); }
    int multiplicity(int length) const;  // f_i
    bool is_identity() const { return support() == 0; }
    int sign() const { return (n() - cycle_count()) % 2 == 0 ? 1 : -1; }

    std::string to_string() const { return cycles_.to_string(); }

    auto operator<=>(const CycleType&) const = default;

private:
    Partition cycles_;
    int fixed_points_ = 0;
};

// sigma^*: same cycle structure with the fixed points removed, living in the
// symmetric group of the support. Requires sigma != Id.
CycleType sigma_star(const CycleType& sigma);

enum class PeelOrder { largest_first, smallest_first };

// Murnaghan–Nakayama evaluator. Border strips are peeled cycle by cycle in a
// fixed order (largest first by default); values are memoized on the pair
// (remaining shape, remaining cycle multiset). Instances are independent, so
// concurrent workers each own one (sharded memo); evaluation is pure.
class CharacterEvaluator {
public:
    explicit CharacterEvaluator(PeelOrder order = PeelOrder::largest_first) : order_(order) {}

    Int character(const Partition& lambda, const CycleType& sigma);

    std::size_t memo_size() const { return memo_.size(); }

private:
    Int peel(const std::vector<int>& beta, const std::vector<int>& cycles, std::size_t index);

    struct VectorHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ULL;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9E3779B9u;
                h *= 1099511628211ULL;
            }
            return h;
        }
    };

    PeelOrder order_;
    std::unordered_map<std::vector<int>, Int, VectorHash> memo_;
};

// ch^lambda(sigma), exact integer. Convenience wrapper over a thread-local
// evaluator with the default peel order.
Int mn_character(const Partition& lambda, const CycleType& sigma);

// chi^lambda(sigma) = ch^lambda(sigma) / d_lambda.
Rat reduced_character(const Partition& lambda, const CycleType& sigma);

// chi^lambda on the transposition class, by the row/column binomial formula.
Rat transposition_character(const Partition& lambda);

struct BranchTerm {
    Partition mu;
    Int ch_mu_star;   // ch^mu(sigma^*)
    Int skew_dim;     // d_{lambda\mu}
};

// One term per mu contained in lambda with |mu| = support(sigma); the weighted
// sum of ch_mu_star * skew_dim equals ch^lambda(sigma) exactly.
std::vector<BranchTerm> branching_decomposition(const Partition& lambda, const CycleType& sigma);

// Sum of the decomposition divided by d_lambda; equals chi^lambda(sigma).
Rat branching_reduced_sum(const Partition& lambda, const CycleType& sigma);

struct OrbitGrowthProfile {
    std::vector<double> e;          // orbit growth sequence e_1..e_n
    double exponent = 0.0;          // E(sigma) = sum e_i / i
    std::vector<long> prefix_sums;  // Sigma_k = sum_{i<=k} i f_i
};

// Orbit growth sequence and exponent. Doubles with ~1e-12 relative accuracy;
// used for reporting only, never inside exact identities.
OrbitGrowthProfile orbit_growth(const CycleType& sigma);

// D(lambda) = (n-1)! / prod_k a_k! b_k!, over Frobenius arm/leg lengths.
Rat virtual_degree(const Partition& lambda);

}  // namespace symwalk
