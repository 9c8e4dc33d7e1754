#include "symwalk/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "symwalk/excited.hpp"
#include "symwalk/parallel.hpp"
#include "symwalk/rng.hpp"

namespace symwalk {

double zeta_helper(long r) {
    if (r < 0) throw std::invalid_argument("zeta_helper: r must be nonnegative");
    return std::log(static_cast<double>(std::max<long>(r, 1))) / 8.0;
}

Rat BiasedDim::exact_power(long q) const {
    const double exponent = theta * static_cast<double>(q);
    const long p = std::lround(exponent);
    if (q <= 0 || std::abs(exponent - static_cast<double>(p)) > 1e-12 || p < 0)
        throw std::invalid_argument("BiasedDim::exact_power: theta*q is not a nonnegative integer");
    Rat r(pow_int(d_mu, static_cast<unsigned long>(p)) * pow_int(d_skew, static_cast<unsigned long>(q)),
          pow_int(d_lambda, static_cast<unsigned long>(q)));
    r.canonicalize();
    return r;
}

BiasedDim biased_skew_dim(const Partition& lambda, const Partition& mu, double theta) {
    if (!lambda.contains(mu)) throw std::invalid_argument("biased_skew_dim: mu not contained in lambda");
    BiasedDim b;
    b.lambda = lambda;
    b.mu = mu;
    b.theta = theta;
    b.d_mu = dim(mu);
    b.d_skew = skew_dim_naruse(SkewShape(lambda, mu));
    b.d_lambda = dim(lambda);
    b.log_value = theta * log_int(b.d_mu) + log_int(b.d_skew) - log_int(b.d_lambda);
    return b;
}

Rat w_term(const Partition& lambda, int k) {
    const int n = lambda.size();
    if (k < 2 || k > n) throw std::invalid_argument("w_term: need 2 <= k <= n");
    if (lambda.part(1) < k) throw std::invalid_argument("w_term: first row shorter than k");
    const Int s_row = excited_sum(lambda, Partition({k}));
    const Int s_hook = excited_sum(lambda, Partition({k - 1, 1}));
    Rat w(s_row - s_hook, falling_factorial(n, k));
    w.canonicalize();
    return w;
}

Rat z_term(const Partition& lambda, const CycleType& sigma) {
    const int k = sigma.support();
    if (k < 2) throw std::invalid_argument("z_term: sigma must not be the identity");
    if (lambda.part(1) < k) throw std::invalid_argument("z_term: first row shorter than support");
    return reduced_character(lambda, sigma) - w_term(lambda, k);
}

bool SuiteReport::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.ok(); });
}

long SuiteReport::total_checked() const {
    long t = 0;
    for (const CheckReport& c : checks) t += c.checked;
    return t;
}

long SuiteReport::total_skipped() const {
    long t = 0;
    for (const CheckReport& c : checks) t += c.skipped;
    return t;
}

long SuiteReport::total_violations() const {
    long t = 0;
    for (const CheckReport& c : checks) t += static_cast<long>(c.violations.size());
    return t;
}

namespace {

struct Accum {
    long checked = 0;
    long skipped = 0;
    std::vector<std::string> violations;

    void record(bool ok, const std::string& witness) {
        ++checked;
        if (!ok) violations.push_back(witness);
    }
};

// Per-diagram scratch shared by the individual checks of one worker.
struct LambdaContext {
    Partition lambda;
    int n = 0;
    Int d_lambda;
    std::vector<Partition> subdiagrams;
    std::map<Partition, Int> sums;

    explicit LambdaContext(const Partition& l)
        : lambda(l), n(l.size()), d_lambda(dim(l)), subdiagrams(subdiagrams_of(l)) {}

    const Int& excited_sum_of(const Partition& mu) {
        auto it = sums.find(mu);
        if (it == sums.end()) it = sums.emplace(mu, excited_sum(lambda, mu)).first;
        return it->second;
    }
};

std::string witness(const Partition& lambda, const std::string& detail) {
    return "lambda=(" + lambda.to_string() + ") " + detail;
}

// ---- lemma_suite checks -------------------------------------------------

void check_slicing_from_als(LambdaContext& ctx, Accum& a, Accum& b) {
    const int lam1 = ctx.lambda.part(1);
    const int r = ctx.n - lam1;
    for (int len = 1; len <= lam1; ++len) {
        const Int hooks = hook_product(ctx.lambda, row_diagram(len));
        const double ratio_log =
            log_int(hooks) - log_int(falling_factorial(lam1, len));
        a.record(ratio_log <= 3.0 * std::sqrt(ctx.n) + kLogGuard,
                 witness(ctx.lambda, "len=" + std::to_string(len) + " part(a)"));
        if (4 * r <= ctx.n)
            b.record(ratio_log <= 2.0 * r / ctx.n + kLogGuard,
                     witness(ctx.lambda, "len=" + std::to_string(len) + " part(b)"));
        else
            ++b.skipped;
    }
}

void check_row_excited_bound(LambdaContext& ctx, Accum& a) {
    const int n = ctx.n;
    const int lam1 = ctx.lambda.part(1);
    const int r = n - lam1;
    for (int k = 2; k <= n - 1; ++k) {
        const int f = n - k;
        if (lam1 < k || 4 * r > f) {
            ++a.skipped;
            continue;
        }
        for (int len = 0; len <= k; ++len) {
            const Int s = ctx.excited_sum_of(len == 0 ? Partition() : Partition({len}));
            const double lhs = log_int(s);
            const double rhs = 6.0 * r / f + log_int(falling_factorial(lam1, len));
            a.record(lhs <= rhs + kLogGuard,
                     witness(ctx.lambda, "k=" + std::to_string(k) + " len=" + std::to_string(len)));
        }
    }
}

void check_excited_bound_j(LambdaContext& ctx, Accum& a) {
    const int n = ctx.n;
    const int lam1 = ctx.lambda.part(1);
    const int r = n - lam1;
    for (int k = 2; k <= n - 1; ++k) {
        const int f = n - k;
        if (lam1 < k || 4 * r > f) {
            ++a.skipped;
            continue;
        }
        const double log_fall = log_int(falling_factorial(lam1, k));
        for (const Partition& mu : subdiagrams_of(ctx.lambda, k)) {
            const int j = k - mu.part(1);
            const double lhs = log_int(ctx.excited_sum_of(mu)) - log_fall;
            const double rhs =
                6.0 * r / f + (j > 0 ? j * std::log(2.0 * r / f) : 0.0);
            a.record(lhs <= rhs + kLogGuard,
                     witness(ctx.lambda, "k=" + std::to_string(k) + " mu=(" + mu.to_string() + ")"));
        }
    }
}

void check_w_terms(LambdaContext& ctx, Accum& nonneg, Accum& upper) {
    const int n = ctx.n;
    const int lam1 = ctx.lambda.part(1);
    const int r = n - lam1;
    for (int k = 2; k <= n - 1; ++k) {
        const int f = n - k;
        if (lam1 < k || 6 * r > f) {
            ++nonneg.skipped;
            ++upper.skipped;
            continue;
        }
        const Rat w = w_term(ctx.lambda, k);
        nonneg.record(w >= 0, witness(ctx.lambda, "k=" + std::to_string(k) + " W<0"));
        if (w > 0) {
            const double lhs = log_rat(w);
            const double rhs = r * std::log(static_cast<double>(f) / n) + 12.0 * r * r / (static_cast<double>(f) * f);
            upper.record(lhs <= rhs + kLogGuard,
                         witness(ctx.lambda, "k=" + std::to_string(k) + " W upper"));
        } else {
            upper.record(true, "");
        }
    }
}

void check_monotonicity(LambdaContext& ctx, Accum& a) {
    const int n = ctx.n;
    const int lam1 = ctx.lambda.part(1);
    const std::vector<int> u = u_profile(ctx.lambda);
    for (int k = 2; k <= n - 1; ++k) {
        if (lam1 < k) {
            ++a.skipped;
            continue;
        }
        long u_below = 0;
        for (int i = 0; i < k - 1; ++i) u_below += u[static_cast<std::size_t>(i)];
        const Int lhs = hook_product(ctx.lambda, row_diagram(k - 1)) * Int(lam1 - (k - 1) - u_below);
        a.record(lhs <= falling_factorial(lam1, k),
                 witness(ctx.lambda, "k=" + std::to_string(k) + " monotonicity"));
    }
}

void check_central_hooks(LambdaContext& ctx, Accum& a) {
    for (int depth = 1; depth <= 3; ++depth) {
        for (Box u : triple_slices(ctx.lambda, depth).deep) {
            const int h = hook_length(ctx.lambda, u);
            a.record(static_cast<long>(depth) * h <= ctx.n,
                     witness(ctx.lambda, "M=" + std::to_string(depth) + " box=(" +
                                             std::to_string(u.row) + "," + std::to_string(u.col) + ")"));
        }
    }
}

// ---- inequality_suite checks --------------------------------------------

void check_elementary_and_biased(LambdaContext& ctx, Accum& elementary, Accum& biased) {
    for (const Partition& mu : ctx.subdiagrams) {
        const Int d_mu = dim(mu);
        const Int d_skew = skew_dim_naruse(SkewShape(ctx.lambda, mu));
        elementary.record(d_mu * d_skew <= ctx.d_lambda,
                          witness(ctx.lambda, "mu=(" + mu.to_string() + ") elementary"));
        // B_theta(lambda,mu) <= (d_skew/d_lambda)^{1-theta} at theta = p/q,
        // compared exactly through q-th powers.
        for (const auto& [p, q] : {std::pair<int, int>{1, 2}, {2, 3}}) {
            const Int lhs = pow_int(d_mu, static_cast<unsigned long>(p)) *
                            pow_int(d_skew, static_cast<unsigned long>(q)) *
                            pow_int(ctx.d_lambda, static_cast<unsigned long>(q - p));
            const Int rhs = pow_int(d_skew, static_cast<unsigned long>(q - p)) *
                            pow_int(ctx.d_lambda, static_cast<unsigned long>(q));
            biased.record(lhs <= rhs, witness(ctx.lambda, "mu=(" + mu.to_string() + ") theta=" +
                                                              std::to_string(p) + "/" + std::to_string(q)));
        }
    }
}

void check_crude_bound(LambdaContext& ctx, Accum& a) {
    const Int two_n = pow_int(2, static_cast<unsigned long>(ctx.n));
    for (const Partition& mu : ctx.subdiagrams) {
        const Int rhs = two_n * hook_product(ctx.lambda, mu.boxes());
        a.record(ctx.excited_sum_of(mu) <= rhs, witness(ctx.lambda, "mu=(" + mu.to_string() + ") crude"));
    }
}

void check_fragmentation(LambdaContext& ctx, Accum& a) {
    SplitMix64 rng(0x5EEDu);
    for (const Partition& mu : ctx.subdiagrams) {
        if (mu.size() < 2) continue;
        const BoxSet boxes = mu.boxes();

        std::vector<std::vector<BoxSet>> decompositions;
        // Singletons, row split, and one seeded bipartition.
        std::vector<BoxSet> singles;
        for (Box b : boxes) singles.push_back({b});
        decompositions.push_back(singles);
        std::vector<BoxSet> rows;
        for (int r = 1; r <= mu.rows(); ++r) rows.push_back(row_diagram(mu.part(r), r, 1));
        if (rows.size() >= 2) decompositions.push_back(rows);
        BoxSet left, right;
        for (Box b : boxes) (rng.next() & 1 ? left : right).push_back(b);
        if (!left.empty() && !right.empty()) decompositions.push_back({left, right});

        const Int s_all = ctx.excited_sum_of(mu);
        const auto count_all = excited_diagrams(ctx.lambda, boxes).size();
        for (const auto& parts : decompositions) {
            Int sum_product = 1;
            Int count_product = 1;
            for (const BoxSet& part : parts) {
                sum_product *= excited_sum(ctx.lambda, part);
                count_product *= Int(excited_diagrams(ctx.lambda, part).size());
            }
            a.record(s_all <= sum_product && Int(count_all) <= count_product,
                     witness(ctx.lambda, "mu=(" + mu.to_string() + ") fragmentation p=" +
                                             std::to_string(parts.size())));
        }
    }
}

void check_shift_monotonicity(LambdaContext& ctx, Accum& a) {
    const Partition conj = ctx.lambda.conjugate();
    for (int orientation = 0; orientation < 2; ++orientation) {
        const int max_len = orientation == 0 ? ctx.lambda.part(1) : conj.part(1);
        for (int len = 1; len <= max_len; ++len) {
            const BoxSet base = orientation == 0 ? row_diagram(len) : column_diagram(len);
            const Int s_base = excited_sum(ctx.lambda, base);
            const Int c_base = Int(excited_diagrams(ctx.lambda, base).size());
            for (int dr = 0; dr <= ctx.lambda.rows(); ++dr) {
                for (int dc = 0; dc <= ctx.lambda.part(1); ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    const BoxSet moved = shifted(base, dr, dc);
                    if (!ctx.lambda.contains(moved.back()) || !ctx.lambda.contains(moved.front()))
                        continue;
                    a.record(excited_sum(ctx.lambda, moved) <= s_base &&
                                 Int(excited_diagrams(ctx.lambda, moved).size()) <= c_base,
                             witness(ctx.lambda, "len=" + std::to_string(len) + " shift=(" +
                                                     std::to_string(dr) + "," + std::to_string(dc) +
                                                     ") orient=" + std::to_string(orientation)));
                }
            }
        }
    }
}

void check_count_bounds(LambdaContext& ctx, Accum& binom, Accum& exp_bound) {
    const int delta = ctx.lambda.diagonal_length();
    for (int len = 1; len <= ctx.lambda.part(1); ++len) {
        const Int count = Int(excited_diagrams(ctx.lambda, row_diagram(len)).size());
        const Int bound1 = binomial(static_cast<unsigned long>(len + ctx.n / len),
                                    static_cast<unsigned long>(len));
        const Int bound2 =
            binomial(static_cast<unsigned long>(len + delta), static_cast<unsigned long>(len));
        binom.record(count <= bound1 && count <= bound2,
                     witness(ctx.lambda, "len=" + std::to_string(len) + " binomial count"));
        exp_bound.record(log_int(count) <= 5.0 * std::sqrt(ctx.n) + kLogGuard,
                         witness(ctx.lambda, "len=" + std::to_string(len) + " e^{5 sqrt n}"));
    }
}

void check_product_of_slices(LambdaContext& ctx, Accum& a) {
    // d_lambda / n! <= prod d_{slice} / n_i!, slice dimensions by standard
    // fillings; holds for slicings whose prefixes are Young diagrams.
    struct Piece {
        Int d;
        int size;
    };
    std::vector<std::vector<Piece>> slicings;

    std::vector<Piece> first_row_pieces;
    first_row_pieces.push_back({Int(1), ctx.lambda.part(1)});
    std::vector<int> rest(ctx.lambda.parts().begin() + (ctx.lambda.rows() > 0 ? 1 : 0),
                          ctx.lambda.parts().end());
    const Partition rest_partition{rest};
    if (rest_partition.size() > 0) first_row_pieces.push_back({dim(rest_partition), rest_partition.size()});
    slicings.push_back(first_row_pieces);

    for (int depth = 1; depth <= 2; ++depth) {
        TripleSlices t = triple_slices(ctx.lambda, depth);
        std::vector<Piece> pieces;
        if (!t.first_row.empty()) pieces.push_back({Int(1), static_cast<int>(t.first_row.size())});
        if (!t.shallow.empty())
            pieces.push_back({standard_fillings(t.shallow), static_cast<int>(t.shallow.size())});
        if (!t.deep.empty())
            pieces.push_back({dim(deep_partition(ctx.lambda, depth)), static_cast<int>(t.deep.size())});
        slicings.push_back(pieces);
    }

    for (std::size_t s = 0; s < slicings.size(); ++s) {
        Int lhs = ctx.d_lambda;
        Int rhs = factorial(static_cast<unsigned long>(ctx.n));
        for (const Piece& piece : slicings[s]) {
            lhs *= factorial(static_cast<unsigned long>(piece.size));
            rhs *= piece.d;
        }
        a.record(lhs <= rhs, witness(ctx.lambda, "slicing#" + std::to_string(s) + " product of slices"));
    }
}

void check_dimension_bounds(LambdaContext& ctx, Accum& two_delta, Accum& four_m) {
    const int delta = ctx.lambda.diagonal_length();
    two_delta.record(ctx.d_lambda <= pow_int(2 * delta, static_cast<unsigned long>(ctx.n)),
                     witness(ctx.lambda, "(2 delta)^n"));
    for (int depth = 1; depth <= 3; ++depth) {
        const int m = deep_partition(ctx.lambda, depth).size();
        // d^2 <= (4M)^{2n} m^m, squared to keep the comparison exact.
        const Int rhs = pow_int(4 * depth, static_cast<unsigned long>(2 * ctx.n)) *
                        (m == 0 ? Int(1) : pow_int(m, static_cast<unsigned long>(m)));
        four_m.record(ctx.d_lambda * ctx.d_lambda <= rhs,
                      witness(ctx.lambda, "M=" + std::to_string(depth) + " (4M)^n m^{m/2}"));
    }
}

void check_triple_btheta(LambdaContext& ctx, Accum& a) {
    // Per-slice surrogates follow the proof chain: S_1 = n_1^{falling k_1},
    // S_2 = sliced hook product in the shallow slice, S_3 = excited sum of the
    // deep partitions; slice dimensions are standard-filling counts.
    for (int depth = 1; depth <= 2; ++depth) {
        const TripleSlices lambda_slices = triple_slices(ctx.lambda, depth);
        const Partition deep_lambda = deep_partition(ctx.lambda, depth);
        for (const Partition& mu : ctx.subdiagrams) {
            if (mu.size() == 0) continue;
            const TripleSlices mu_slices = triple_slices(mu, depth);
            const Partition deep_mu = deep_partition(mu, depth);
            const int k = mu.size();
            const int k1 = static_cast<int>(mu_slices.first_row.size());
            const int k2 = static_cast<int>(mu_slices.shallow.size());
            const int k3 = static_cast<int>(mu_slices.deep.size());
            const int n1 = static_cast<int>(lambda_slices.first_row.size());
            const int n2 = static_cast<int>(lambda_slices.shallow.size());
            const int n3 = static_cast<int>(lambda_slices.deep.size());

            Int s2 = 1;
            for (Box u : mu_slices.shallow) s2 *= hook_length_in_set(lambda_slices.shallow, u);
            const Int s3 = excited_sum(deep_lambda, deep_mu);

            const double log_d_mu2 = log_int(standard_fillings(mu_slices.shallow));
            const double log_d_mu3 = log_int(dim(deep_mu));

            const double log_s1 = log_int(falling_factorial(n1, k1));
            const double log_multinomial =
                log_int(factorial(static_cast<unsigned long>(k))) -
                log_int(factorial(static_cast<unsigned long>(k1))) -
                log_int(factorial(static_cast<unsigned long>(k2))) -
                log_int(factorial(static_cast<unsigned long>(k3)));

            for (double theta : {2.0 / 3.0, 1.0}) {
                const double lhs = theta * log_int(dim(mu)) + log_int(ctx.excited_sum_of(mu)) -
                                   log_int(falling_factorial(ctx.n, k));
                double rhs = 24.0 * depth * std::sqrt(ctx.n) + theta * log_multinomial;
                rhs += log_s1 - log_int(falling_factorial(n1, k1));
                rhs += theta * log_d_mu2 + log_int(s2) - log_int(falling_factorial(n2, k2));
                rhs += theta * log_d_mu3 + log_int(s3) - log_int(falling_factorial(n3, k3));
                rhs += log_int(falling_factorial(n1, k1)) + log_int(falling_factorial(n2, k2)) +
                       log_int(falling_factorial(n3, k3)) - log_int(falling_factorial(ctx.n, k));
                a.record(lhs <= rhs + kLogGuard,
                         witness(ctx.lambda, "mu=(" + mu.to_string() + ") M=" + std::to_string(depth) +
                                                 " theta=" + std::to_string(theta)));
            }
        }
    }
}

// ---- n-indexed checks ----------------------------------------------------

void check_power_compare(int n_max, Accum& a) {
    for (int n = 0; n <= n_max; ++n) {
        if (n >= 1) {
            const double lhs = log_int(factorial(static_cast<unsigned long>(n)));
            a.record(lhs + kLogGuard >= n * (std::log(static_cast<double>(n)) - 1.0),
                     "k=" + std::to_string(n) + " factorial lower bound");
        }
        for (int k = 0; k <= n; ++k) {
            if (n >= 1) {
                const double lhs =
                    k * std::log(static_cast<double>(n)) - log_int(falling_factorial(n, k));
                a.record(lhs <= k + kLogGuard,
                         "n=" + std::to_string(n) + " k=" + std::to_string(k) + " n^k/n^(falling k)");
            }
            if (k >= 1) {
                const double lhs = log_int(binomial(static_cast<unsigned long>(n),
                                                    static_cast<unsigned long>(k)));
                const double rhs =
                    k * (1.0 + std::log(static_cast<double>(n)) - std::log(static_cast<double>(k)));
                a.record(lhs <= rhs + kLogGuard,
                         "n=" + std::to_string(n) + " k=" + std::to_string(k) + " binomial upper");
            }
        }
    }
}

void check_binomial_tail(int n_max, Accum& a) {
    const std::vector<Rat> epsilons{Rat(1, 10), Rat(1, 4), Rat(2, 5)};
    for (const Rat& eps : epsilons) {
        for (int A : {2, 3}) {
            // Largest alpha = floor((eps/e) e^{-A} 10^6)/10^6 keeps the
            // hypothesis alpha <= (eps/e) e^{-A} exactly.
            const double bound = to_double(eps) / std::exp(1.0) * std::exp(-A);
            const long scaled = static_cast<long>(std::floor(bound * 1e6));
            if (scaled <= 0) continue;
            Rat alpha(scaled, 1000000);
            alpha.canonicalize();
            std::vector<int> ns;
            for (int n = 2; n <= n_max; ++n) ns.push_back(n);
            ns.push_back(50);
            for (int n : ns) {
                if (Rat(n) * eps < 1) {
                    ++a.skipped;
                    continue;
                }
                // ceil(eps * n)
                const Int num = eps.get_num() * n;
                Int threshold;
                mpz_cdiv_q(threshold.get_mpz_t(), num.get_mpz_t(), eps.get_den().get_mpz_t());
                const long y = mpz_get_si(threshold.get_mpz_t());
                Rat tail = 0;
                const Rat one_minus = Rat(1) - alpha;
                for (long j = y; j <= n; ++j) {
                    tail += Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
                            pow_rat(alpha, static_cast<unsigned long>(j)) *
                            pow_rat(one_minus, static_cast<unsigned long>(n - j));
                }
                const double rhs = -to_double(eps) * A / 2.0 * n;
                const bool ok = tail == 0 || log_rat(tail) <= rhs + kLogGuard;
                a.record(ok, "eps=" + eps.get_str() + " A=" + std::to_string(A) + " n=" + std::to_string(n));
            }
        }
    }
}

struct NamedAccums {
    std::vector<std::string> names;
    std::vector<Accum> accums;

    explicit NamedAccums(std::vector<std::string> check_names) : names(std::move(check_names)) {
        accums.resize(names.size());
    }
};

SuiteReport merge(const std::vector<std::string>& names, std::vector<NamedAccums>& locals) {
    SuiteReport report;
    for (std::size_t c = 0; c < names.size(); ++c) {
        CheckReport check;
        check.name = names[c];
        for (NamedAccums& local : locals) {
            check.checked += local.accums[c].checked;
            check.skipped += local.accums[c].skipped;
            for (std::string& v : local.accums[c].violations) check.violations.push_back(std::move(v));
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::vector<Partition> all_diagrams_up_to(int n_max, int n_min = 1) {
    std::vector<Partition> out;
    for (int n = n_min; n <= n_max; ++n) {
        auto ps = partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

}  // namespace

constexpr int kSuiteLimit = 12;

SuiteReport lemma_suite(int n_max, int threads) {
    if (n_max > kSuiteLimit)
        throw std::invalid_argument("lemma_suite: n_max exceeds the configured limit of 12");
    const std::vector<std::string> names{
        "slicing_from_als_a", "slicing_from_als_b", "row_excited_e6rf", "excited_2rf_power_j",
        "w_nonnegative",      "w_upper_bound",      "monotonicity_u",   "central_hooks",
    };
    const std::vector<Partition> diagrams = all_diagrams_up_to(n_max);
    std::vector<NamedAccums> locals(diagrams.size(), NamedAccums(names));
    parallel_for(diagrams.size(), threads, [&](std::size_t i) {
        LambdaContext ctx(diagrams[i]);
        auto& acc = locals[i].accums;
        check_slicing_from_als(ctx, acc[0], acc[1]);
        check_row_excited_bound(ctx, acc[2]);
        check_excited_bound_j(ctx, acc[3]);
        check_w_terms(ctx, acc[4], acc[5]);
        check_monotonicity(ctx, acc[6]);
        check_central_hooks(ctx, acc[7]);
    });
    SuiteReport report = merge(names, locals);

    CheckReport powers;
    powers.name = "power_comparisons";
    Accum pa;
    check_power_compare(n_max, pa);
    powers.checked = pa.checked;
    powers.skipped = pa.skipped;
    powers.violations = pa.violations;
    report.checks.push_back(std::move(powers));

    CheckReport tails;
    tails.name = "binomial_tail";
    Accum ta;
    check_binomial_tail(n_max, ta);
    tails.checked = ta.checked;
    tails.skipped = ta.skipped;
    tails.violations = ta.violations;
    report.checks.push_back(std::move(tails));

    return report;
}

SuiteReport inequality_suite(int n_max, int threads) {
    if (n_max > kSuiteLimit)
        throw std::invalid_argument("inequality_suite: n_max exceeds the configured limit of 12");
    const std::vector<std::string> names{
        "elementary_d_mu_d_skew", "biased_le_skew_power", "crude_2n_hook",    "fragmentation",
        "shift_monotonicity",     "count_binomial",       "count_e5sqrt",     "product_of_slices",
        "dim_2delta",             "dim_4M_sqrt_m",        "triple_slicing_b_theta",
    };
    const std::vector<Partition> diagrams = all_diagrams_up_to(n_max);
    std::vector<NamedAccums> locals(diagrams.size(), NamedAccums(names));
    parallel_for(diagrams.size(), threads, [&](std::size_t i) {
        LambdaContext ctx(diagrams[i]);
        auto& acc = locals[i].accums;
        check_elementary_and_biased(ctx, acc[0], acc[1]);
        check_crude_bound(ctx, acc[2]);
        check_fragmentation(ctx, acc[3]);
        check_shift_monotonicity(ctx, acc[4]);
        check_count_bounds(ctx, acc[5], acc[6]);
        check_product_of_slices(ctx, acc[7]);
        check_dimension_bounds(ctx, acc[8], acc[9]);
        check_triple_btheta(ctx, acc[10]);
    });
    return merge(names, locals);
}

std::string variant_name(TheoremVariant variant) {
    switch (variant) {
        case TheoremVariant::thm1_1: return "thm1_1";
        case TheoremVariant::thm1_2: return "thm1_2";
        case TheoremVariant::thm5_helping: return "thm5_helping";
    }
    return "unknown";
}

MarginScan theorem_margin_scan(int n, double delta, TheoremVariant variant, int threads,
                               bool include_extremes) {
    if (n < 5) throw std::invalid_argument("theorem_margin_scan: need n >= 5");
    if (variant != TheoremVariant::thm1_1 && (delta <= 0.0 || delta >= 1.0))
        throw std::invalid_argument("theorem_margin_scan: delta must lie in (0,1)");

    std::vector<Partition> lambdas = partitions_of(n);
    if (!include_extremes) {
        std::erase_if(lambdas, [&](const Partition& l) {
            return l.rows() == 1 || l.part(1) == 1;
        });
    }
    std::vector<CycleType> classes;
    for (const Partition& c : partitions_of(n)) {
        CycleType sigma{c};
        if (variant != TheoremVariant::thm1_1 &&
            static_cast<double>(sigma.f()) < delta * static_cast<double>(n))
            continue;
        classes.push_back(std::move(sigma));
    }

    const double log_n = std::log(static_cast<double>(n));
    const std::string name = variant_name(variant);
    std::vector<std::vector<MarginRecord>> rows(lambdas.size());
    parallel_for(lambdas.size(), threads, [&](std::size_t i) {
        const Partition& lambda = lambdas[i];
        const double log_dim = log_int(dim(lambda));
        double q = 0.5;
        if (variant == TheoremVariant::thm1_2) q = 1.0;
        if (variant == TheoremVariant::thm5_helping) q = 1.0 + zeta_helper(lambda.r_sym()) / log_n;
        CharacterEvaluator evaluator;
        for (const CycleType& sigma : classes) {
            MarginRecord rec;
            rec.n = n;
            rec.lambda = lambda;
            rec.sigma = sigma;
            rec.variant = name;
            const Int ch = evaluator.character(lambda, sigma);
            const double log_f = std::log(static_cast<double>(sigma.f()));
            rec.rhs_log = -q * ((log_n - log_f) / log_n) * log_dim;
            if (ch == 0) {
                rec.lhs_log = -std::numeric_limits<double>::infinity();
                rec.margin = std::numeric_limits<double>::infinity();
            } else {
                Int mag = abs(ch);
                rec.lhs_log = log_int(mag) - log_dim;
                rec.margin = rec.rhs_log - rec.lhs_log;
            }
            rec.satisfied = rec.margin >= -kLogGuard;
            rows[i].push_back(std::move(rec));
        }
    });

    MarginScan scan;
    scan.min_margin = std::numeric_limits<double>::infinity();
    for (auto& bucket : rows) {
        for (MarginRecord& rec : bucket) {
            if (rec.satisfied) ++scan.satisfied_count;
            if (rec.margin < scan.min_margin) {
                scan.min_margin = rec.margin;
                scan.argmin = rec;
            }
            scan.records.push_back(std::move(rec));
        }
    }
    return scan;
}

std::vector<EmpiricalConstant> empirical_constant_scan(int n_min, int n_max, int threads) {
    std::vector<EmpiricalConstant> out;
    for (int n = std::max(n_min, 4); n <= n_max; ++n) {
        std::vector<Partition> lambdas = partitions_of(n);
        std::vector<EmpiricalConstant> per_lambda(lambdas.size());
        std::vector<CycleType> classes;
        for (const Partition& c : partitions_of(n)) {
            CycleType sigma{c};
            const int k = sigma.support();
            if (k >= 2 && k <= n - 1) classes.push_back(std::move(sigma));
        }
        parallel_for(lambdas.size(), threads, [&](std::size_t i) {
            const Partition& lambda = lambdas[i];
            const int r = n - lambda.part(1);
            EmpiricalConstant best{n, -std::numeric_limits<double>::infinity(), ""};
            CharacterEvaluator evaluator;
            for (const CycleType& sigma : classes) {
                const int k = sigma.support();
                const int f = n - k;
                if (lambda.part(1) < k || 6 * r > f || r < 1) continue;
                const Int ch = evaluator.character(lambda, sigma);
                if (ch == 0) continue;
                const double log_chi = log_int(Int(abs(ch))) - log_int(dim(lambda));
                const double positive_part =
                    std::max(0.0, log_chi + r * std::log(static_cast<double>(n) / f));
                const double value =
                    static_cast<double>(f) * f / (static_cast<double>(r) * r * k) * positive_part;
                if (value > best.c_star) {
                    best.c_star = value;
                    best.witness = "lambda=(" + lambda.to_string() + ") sigma=(" + sigma.to_string() + ")";
                }
            }
            per_lambda[i] = best;
        });
        EmpiricalConstant overall{n, -std::numeric_limits<double>::infinity(), ""};
        for (const EmpiricalConstant& cand : per_lambda)
            if (cand.c_star > overall.c_star) overall = cand;
        if (std::isfinite(overall.c_star)) out.push_back(overall);
    }
    return out;
}

}  // namespace symwalk
