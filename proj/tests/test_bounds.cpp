#include "doctest.h"

#include <cmath>

#include "symwalk/bounds.hpp"
#include "symwalk/excited.hpp"

using namespace symwalk;

TEST_CASE("zeta helper") {
    CHECK(zeta_helper(0) == 0.0);
    CHECK(zeta_helper(1) == 0.0);
    CHECK(zeta_helper(2) == doctest::Approx(std::log(2.0) / 8.0));
    CHECK(zeta_helper(2981) > 1.0);
    CHECK(zeta_helper(2980) < 1.0);
    CHECK_THROWS_AS(zeta_helper(-1), std::invalid_argument);
}

TEST_CASE("biased skew dimensions") {
    const Partition lambda({3, 3, 1});
    const BiasedDim at_one = biased_skew_dim(lambda, lambda, 0.0);
    CHECK(at_one.d_skew == 1);
    CHECK(at_one.log_value == doctest::Approx(-std::log(21.0)));

    const BiasedDim b = biased_skew_dim(lambda, Partition({2}), 2.0 / 3.0);
    CHECK(b.d_mu == 1);
    CHECK(b.d_skew == 11);
    CHECK(b.d_lambda == 21);
    CHECK(b.log_value == doctest::Approx(std::log(11.0) - std::log(21.0)));

    // theta = 1: B <= 1 across all sub-diagrams
    for (const Partition& mu : subdiagrams_of(lambda)) {
        const BiasedDim full = biased_skew_dim(lambda, mu, 1.0);
        CHECK(full.exact_power(1) <= 1);
        CHECK(full.log_value <= kLogGuard);
    }
    const BiasedDim frac = biased_skew_dim(lambda, Partition({2}), 0.5);
    CHECK(frac.exact_power(2) == Rat(Int(1) * 11 * 11, Int(21) * 21));
    CHECK_THROWS_AS(frac.exact_power(3), std::invalid_argument);
    CHECK_THROWS_AS(biased_skew_dim(Partition({2}), Partition({3}), 1.0), std::invalid_argument);
}

TEST_CASE("w term") {
    CHECK(w_term(Partition({6}), 3) == 1);
    CHECK(w_term(Partition({3, 3, 1}), 2) == Rat(1, 21));
    CHECK_THROWS_AS(w_term(Partition({2, 2}), 3), std::invalid_argument);

    // W via excited sums == W via oracle skew dimensions, independently
    for (int n = 3; n <= 8; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int k = 2; k <= n - 1; ++k) {
                if (lambda.part(1) < k) continue;
                const Int d_lambda = dim(lambda);
                const Int top = skew_dim_oracle(SkewShape(lambda, Partition({k})));
                Int hook_term = 0;
                if (lambda.contains(Partition({k - 1, 1})))
                    hook_term = skew_dim_oracle(SkewShape(lambda, Partition({k - 1, 1})));
                Rat expected(top - hook_term, d_lambda);
                expected.canonicalize();
                CHECK(w_term(lambda, k) == expected);
            }
        }
    }
}

TEST_CASE("z term and the W+Z split") {
    CHECK(z_term(Partition({6}), CycleType(Partition({3, 2, 1}))) == 0);
    CHECK(z_term(Partition({3, 3, 1}), CycleType(Partition({2, 1, 1, 1, 1, 1}))) == 0);

    // chi = W + Z with Z equal to the branching tail over seeds with at least
    // two boxes above the first row.
    for (int n = 3; n <= 7; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (const Partition& c : partitions_of(n)) {
                const CycleType sigma(c);
                const int k = sigma.support();
                if (k < 2 || lambda.part(1) < k) continue;
                Rat tail = 0;
                for (const BranchTerm& term : branching_decomposition(lambda, sigma)) {
                    if (term.mu.size() - term.mu.part(1) >= 2)
                        tail += Rat(term.ch_mu_star * term.skew_dim, dim(lambda));
                }
                tail.canonicalize();
                CHECK(z_term(lambda, sigma) == tail);
                CHECK(w_term(lambda, k) + z_term(lambda, sigma) ==
                      reduced_character(lambda, sigma));
            }
        }
    }
}

TEST_CASE("lemma suite has no violations and gates hypotheses") {
    const SuiteReport report = lemma_suite(7);
    CHECK(report.all_ok());
    CHECK(report.total_checked() > 0);
    // the W checks only run under r <= f/6, so plenty of instances are skipped
    for (const CheckReport& check : report.checks)
        if (check.name == "w_nonnegative") CHECK(check.skipped > 0);
}

TEST_CASE("inequality suite has no violations") {
    const SuiteReport report = inequality_suite(7);
    CHECK(report.all_ok());
    for (const CheckReport& check : report.checks) CHECK(check.checked > 0);
}

TEST_CASE("margin scan schema and near-tight level-1 margin") {
    const MarginScan scan = theorem_margin_scan(10, 0.5, TheoremVariant::thm1_2);
    long with_f_ge_5 = 0;
    for (const Partition& c : partitions_of(10))
        if (CycleType(c).f() >= 5) ++with_f_ge_5;
    CHECK(static_cast<long>(scan.records.size()) == 42 * with_f_ge_5);

    for (const MarginRecord& rec : scan.records) {
        CHECK(rec.variant == "thm1_2");
        if (std::isinf(rec.margin)) CHECK(rec.satisfied);
        if (rec.lambda == Partition({9, 1}) && rec.sigma == CycleType(Partition({2,1,1,1,1,1,1,1,1}))) {
            CHECK(rec.margin > 0.0);
            CHECK(rec.margin < 0.1);
        }
    }
    CHECK(std::isfinite(scan.min_margin));
    CHECK(scan.argmin.has_value());
    CHECK_THROWS_AS(theorem_margin_scan(4, 0.5, TheoremVariant::thm1_2), std::invalid_argument);
    CHECK_THROWS_AS(theorem_margin_scan(10, 1.5, TheoremVariant::thm1_2), std::invalid_argument);
}

TEST_CASE("thm1_1 scans every class") {
    const MarginScan scan = theorem_margin_scan(8, 0.0, TheoremVariant::thm1_1);
    CHECK(scan.records.size() == 22u * 22u);
}

TEST_CASE("empirical constant scan emits finite values") {
    const auto rows = empirical_constant_scan(8, 10);
    REQUIRE(!rows.empty());
    for (const EmpiricalConstant& row : rows) {
        CHECK(row.c_star >= 0.0);
        CHECK(std::isfinite(row.c_star));
    }
}

TEST_CASE("margin scan can exclude the extreme representations") {
    const MarginScan all = theorem_margin_scan(8, 0.5, TheoremVariant::thm1_2, 1, true);
    const MarginScan inner = theorem_margin_scan(8, 0.5, TheoremVariant::thm1_2, 1, false);
    CHECK(all.records.size() > inner.records.size());
    for (const MarginRecord& rec : inner.records) {
        CHECK(rec.lambda != Partition({8}));
        CHECK(rec.lambda != Partition({1, 1, 1, 1, 1, 1, 1, 1}));
    }
}
