#include "symwalk/characters.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "symwalk/excited.hpp"

namespace symwalk {

CycleType::CycleType(Partition cycles) : cycles_(std::move(cycles)) {
    for (int i = cycles_.rows(); i >= 1 && cycles_.part(i) == 1; --i) ++fixed_points_;
}

CycleType CycleType::parse(const std::string& cycles, int n) {
    std::vector<int> parts;
    std::stringstream ss(cycles);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    int total = 0;
    for (int p : parts) total += p;
    if (total > n) throw std::invalid_argument("CycleType: cycles exceed n");
    parts.insert(parts.end(), static_cast<std::size_t>(n - total), 1);
    return CycleType(Partition(parts));
}

int CycleType::multiplicity(int length) const {
    int count = 0;
    for (int p : cycles_.parts()) count += (p == length);
    return count;
}

CycleType sigma_star(const CycleType& sigma) {
    if (sigma.is_identity()) throw std::invalid_argument("sigma_star: identity has no support");
    std::vector<int> parts;
    for (int p : sigma.cycles().parts())
        if (p >= 2) parts.push_back(p);
    return CycleType(Partition(parts));
}

namespace {

// Beta numbers lambda_i + (m - i) for a fixed row count m; removing a border
// strip of length L replaces a beta value b (with b - L fresh) by b - L. The
// strip's height equals the number of beta values strictly between them.
std::vector<int> beta_numbers(const Partition& lambda) {
    const int m = lambda.rows();
    std::vector<int> beta(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) beta[static_cast<std::size_t>(i - 1)] = lambda.part(i) + m - i;
    return beta;
}

std::vector<int> sorted_cycles(const CycleType& sigma, PeelOrder order) {
    std::vector<int> cycles = sigma.cycles().parts();
    if (order == PeelOrder::largest_first) std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    else std::sort(cycles.begin(), cycles.end());
    return cycles;
}

Partition partition_from_beta(const std::vector<int>& beta) {
    std::vector<int> sorted_beta = beta;
    std::sort(sorted_beta.begin(), sorted_beta.end(), std::greater<int>());
    const int m = static_cast<int>(sorted_beta.size());
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) {
        const int part = sorted_beta[static_cast<std::size_t>(i)] - (m - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(parts);
}

std::vector<int> memo_key(const std::vector<int>& beta, const std::vector<int>& cycles,
                          std::size_t index) {
    // Normalize the shape part of the key: strip the padding so that the same
    // partition reached with different row counts shares an entry.
    std::vector<int> key = partition_from_beta(beta).parts();
    key.push_back(-1);
    key.insert(key.end(), cycles.begin() + static_cast<std::ptrdiff_t>(index), cycles.end());
    return key;
}

}  // namespace

Int CharacterEvaluator::peel(const std::vector<int>& beta, const std::vector<int>& cycles,
                             std::size_t index) {
    if (index == cycles.size()) return 1;
    const std::vector<int> key = memo_key(beta, cycles, index);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int length = cycles[index];
    if (std::all_of(cycles.begin() + static_cast<std::ptrdiff_t>(index), cycles.end(),
                    [](int c) { return c == 1; })) {
        // Peeling single boxes one by one counts standard tableaux.
        Int d = dim(partition_from_beta(beta));
        memo_.emplace(key, d);
        return d;
    }
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i];
        if (b < length) continue;
        const int target = b - length;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int other : beta)
            if (other > target && other < b) ++height;
        std::vector<int> next = beta;
        next[i] = target;
        const Int sub = peel(next, cycles, index + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(key, total);
    return total;
}

Int CharacterEvaluator::character(const Partition& lambda, const CycleType& sigma) {
    if (lambda.size() != sigma.n())
        throw std::invalid_argument("character: |lambda| != n(sigma)");
    if (lambda.size() == 0) return 1;
    return peel(beta_numbers(lambda), sorted_cycles(sigma, order_), 0);
}

Int mn_character(const Partition& lambda, const CycleType& sigma) {
    thread_local CharacterEvaluator evaluator;
    return evaluator.character(lambda, sigma);
}

Rat reduced_character(const Partition& lambda, const CycleType& sigma) {
    Rat r(mn_character(lambda, sigma), dim(lambda));
    r.canonicalize();
    return r;
}

Rat transposition_character(const Partition& lambda) {
    const int n = lambda.size();
    if (n < 2) throw std::invalid_argument("transposition_character: need n >= 2");
    Int num = 0;
    const Partition conj = lambda.conjugate();
    for (int p : lambda.parts()) num += binomial(static_cast<unsigned long>(p), 2);
    for (int p : conj.parts()) num -= binomial(static_cast<unsigned long>(p), 2);
    Rat r(num, binomial(static_cast<unsigned long>(n), 2));
    r.canonicalize();
    return r;
}

std::vector<BranchTerm> branching_decomposition(const Partition& lambda, const CycleType& sigma) {
    if (sigma.is_identity())
        throw std::invalid_argument("branching_decomposition: sigma must not be the identity");
    if (lambda.size() != sigma.n())
        throw std::invalid_argument("branching_decomposition: |lambda| != n(sigma)");
    const CycleType star = sigma_star(sigma);
    std::vector<BranchTerm> terms;
    for (const Partition& mu : subdiagrams_of(lambda, sigma.support())) {
        BranchTerm term;
        term.mu = mu;
        term.ch_mu_star = mn_character(mu, star);
        term.skew_dim = skew_dim_naruse(SkewShape(lambda, mu));
        terms.push_back(std::move(term));
    }
    return terms;
}

Rat branching_reduced_sum(const Partition& lambda, const CycleType& sigma) {
    Int sum = 0;
    for (const BranchTerm& term : branching_decomposition(lambda, sigma))
        sum += term.ch_mu_star * term.skew_dim;
    Rat r(sum, dim(lambda));
    r.canonicalize();
    return r;
}

OrbitGrowthProfile orbit_growth(const CycleType& sigma) {
    const int n = sigma.n();
    if (n < 2) throw std::invalid_argument("orbit_growth: need n >= 2");
    OrbitGrowthProfile profile;
    profile.prefix_sums.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        profile.prefix_sums[static_cast<std::size_t>(i)] =
            profile.prefix_sums[static_cast<std::size_t>(i - 1)] +
            static_cast<long>(i) * sigma.multiplicity(i);
    profile.e.resize(static_cast<std::size_t>(n));
    const double log_n = std::log(static_cast<double>(n));
    double previous = 0.0;  // log max(Sigma_0, 1)
    for (int i = 1; i <= n; ++i) {
        const double current =
            std::log(static_cast<double>(std::max<long>(profile.prefix_sums[static_cast<std::size_t>(i)], 1)));
        profile.e[static_cast<std::size_t>(i - 1)] = (current - previous) / log_n;
        profile.exponent += profile.e[static_cast<std::size_t>(i - 1)] / i;
        previous = current;
    }
    return profile;
}

Rat virtual_degree(const Partition& lambda) {
    const int n = lambda.size();
    if (n < 1) throw std::invalid_argument("virtual_degree: need n >= 1");
    Int denominator = 1;
    for (const FrobeniusCoordinate& fc : frobenius(lambda)) {
        denominator *= factorial(static_cast<unsigned long>(fc.arm));
        denominator *= factorial(static_cast<unsigned long>(fc.leg));
    }
    Rat r(factorial(static_cast<unsigned long>(n - 1)), denominator);
    r.canonicalize();
    return r;
}

}  // namespace symwalk
