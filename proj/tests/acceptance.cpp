// Acceptance harness: runs every criterion end to end and prints one
// PASS/FAIL line per criterion with its wall time. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symwalk/bounds.hpp"
#include "symwalk/characters.hpp"
#include "symwalk/excited.hpp"
#include "symwalk/io.hpp"
#include "symwalk/partition.hpp"
#include "symwalk/walks.hpp"

using namespace symwalk;

namespace {

int failures = 0;
const int kThreads = 4;

class Criterion {
public:
    Criterion(int id, std::string label)
        : id_(id), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (!details_.empty()) details_ += "; ";
            details_ += detail;
        }
    }

    ~Criterion() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        std::printf("%s criterion %d (%s) [%lld ms]%s%s\n", ok_ ? "PASS" : "FAIL", id_,
                    label_.c_str(), static_cast<long long>(elapsed), ok_ ? "" : ": ",
                    ok_ ? "" : details_.c_str());
        std::fflush(stdout);
        if (!ok_) ++failures;
    }

private:
    int id_;
    std::string label_;
    bool ok_ = true;
    std::string details_;
    std::chrono::steady_clock::time_point start_;
};

CycleType transpositions(int n) { return CycleType::parse("2", n); }

void criterion_1_worked_examples() {
    Criterion c(1, "worked example vectors");
    c.expect(dim(Partition({3, 3, 1})) == 21, "d_(3,3,1)");
    c.expect(excited_sum(Partition({3, 3, 1}), Partition({2})) == 22, "S((3,3,1),(2))");
    c.expect(skew_dim_naruse(SkewShape(Partition({3, 3, 1}), Partition({2}))) == 11, "skew dim 11");
    c.expect(excited_diagrams(Partition({3, 3, 3}), Partition({1})).size() == 3, "count [3,3,3]/[1]");
    c.expect(excited_diagrams(Partition({3, 3, 3}), Partition({2, 1})).size() == 5,
             "count [3,3,3]/[2,1]");
    c.expect(excited_diagrams(Partition({3, 3, 3, 3, 3}), Partition({1, 1, 1})).size() == 10,
             "count [3^5]/[1^3]");
    c.expect(excited_diagrams(Partition({8, 3, 3, 1}), Partition({6, 2, 1})).size() == 2,
             "count [8,3,3,1]/[6,2,1]");
    c.expect(excited_diagrams(Partition({3, 3, 3}), BoxSet{{2, 2}}).size() == 2,
             "count [3,3,3]/{(2,2)}");
    c.expect(sigma_star(CycleType(Partition({4, 2, 1, 1, 1}))) == CycleType(Partition({4, 2})),
             "sigma star");
}

void criterion_2_naruse_oracle() {
    Criterion c(2, "naruse vs oracle, n <= 7, all skew shapes");
    long pairs = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (const Partition& mu : subdiagrams_of(lambda)) {
                const SkewShape shape(lambda, mu);
                ++pairs;
                if (skew_dim_naruse(shape) != skew_dim_oracle(shape)) {
                    c.expect(false, "mismatch at (" + lambda.to_string() + ")/(" + mu.to_string() + ")");
                    return;
                }
            }
        }
    }
    c.expect(pairs == 448, "expected 448 skew shapes, saw " + std::to_string(pairs));
}

void criterion_3_character_tables() {
    Criterion c(3, "character table integrity");
    for (int n = 1; n <= 8; ++n) {
        const CharacterTable table = CharacterTable::build(n, kThreads);
        const Int n_fact = factorial(static_cast<unsigned long>(n));
        for (std::size_t a = 0; a < table.lambdas.size(); ++a)
            for (std::size_t b = a; b < table.lambdas.size(); ++b) {
                Int sum = 0;
                for (std::size_t j = 0; j < table.classes.size(); ++j)
                    sum += table.class_sizes[j] * table.ch[a][j] * table.ch[b][j];
                if (sum != (a == b ? n_fact : Int(0))) {
                    c.expect(false, "row orthogonality fails at n=" + std::to_string(n));
                    return;
                }
            }
        for (std::size_t i = 0; i < table.classes.size(); ++i)
            for (std::size_t j = i; j < table.classes.size(); ++j) {
                Int sum = 0;
                for (std::size_t a = 0; a < table.lambdas.size(); ++a)
                    sum += table.ch[a][i] * table.ch[a][j];
                if (sum != (i == j ? n_fact / table.class_sizes[i] : Int(0))) {
                    c.expect(false, "column orthogonality fails at n=" + std::to_string(n));
                    return;
                }
            }
        // sign/transpose identity over the whole table
        for (std::size_t a = 0; a < table.lambdas.size(); ++a) {
            const Partition conj = table.lambdas[a].conjugate();
            const std::size_t b = static_cast<std::size_t>(
                std::find(table.lambdas.begin(), table.lambdas.end(), conj) - table.lambdas.begin());
            for (std::size_t j = 0; j < table.classes.size(); ++j)
                if (table.ch[b][j] != table.classes[j].sign() * table.ch[a][j]) {
                    c.expect(false, "sign identity fails at n=" + std::to_string(n));
                    return;
                }
        }
        // branching identity for every lambda and every non-identity class
        for (const Partition& lambda : table.lambdas)
            for (const CycleType& sigma : table.classes) {
                if (sigma.is_identity()) continue;
                if (branching_reduced_sum(lambda, sigma) != reduced_character(lambda, sigma)) {
                    c.expect(false, "branching identity fails at n=" + std::to_string(n));
                    return;
                }
            }
    }
    for (int n = 1; n <= 10; ++n) {
        Int sum = 0;
        for (const Partition& lambda : partitions_of(n)) {
            const Int d = dim(lambda);
            sum += d * d;
        }
        c.expect(sum == factorial(static_cast<unsigned long>(n)),
                 "sum of squared dims at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 10; ++n)
        for (const Partition& lambda : partitions_of(n))
            if (transposition_character(lambda) != reduced_character(lambda, transpositions(n))) {
                c.expect(false, "transposition formula fails at n=" + std::to_string(n));
                return;
            }
}

void criterion_4_inequality_suite() {
    Criterion c(4, "theorem-backed inequality suite, n <= 10");
    const SuiteReport lemmas = lemma_suite(10, kThreads);
    const SuiteReport inequalities = inequality_suite(10, kThreads);
    for (const SuiteReport* suite : {&lemmas, &inequalities})
        for (const CheckReport& check : suite->checks)
            c.expect(check.ok(), check.name + " violations=" + std::to_string(check.violations.size()) +
                                     (check.violations.empty() ? "" : " first: " + check.violations[0]));
}

void criterion_5_walk_laws() {
    Criterion c(5, "walk-law correctness");
    for (int n = 2; n <= 5; ++n) {
        const CharacterTable table = CharacterTable::build(n);
        for (const Partition& cls : partitions_of(n)) {
            const CycleType step(cls);
            if (step.is_identity()) continue;
            for (long t = 0; t <= 6; ++t) {
                const WalkLaw fourier = fourier_walk_law(step, t, &table);
                const WalkLaw oracle = convolution_oracle(step, t);
                if (fourier.class_probs != oracle.class_probs) {
                    c.expect(false, "law mismatch n=" + std::to_string(n) + " C=" + step.to_string() +
                                        " t=" + std::to_string(t));
                    return;
                }
            }
        }
    }
    for (int n = 3; n <= 6; ++n) {
        for (const Partition& cls : partitions_of(n)) {
            const CycleType step(cls);
            if (step.is_identity()) continue;
            for (long t = 0; t <= 6; ++t) {
                const DsIdentityReport report = ds_identity_check(step, t);
                if (!report.identity_holds || !report.cauchy_schwarz) {
                    c.expect(false, "DS failure n=" + std::to_string(n) + " C=" + step.to_string() +
                                        " t=" + std::to_string(t));
                    return;
                }
            }
        }
    }
}

void criterion_6_monte_carlo() {
    Criterion c(6, "monte carlo consistency");
    struct Instance {
        int n;
        std::string cls;
        long t;
    };
    const std::vector<Instance> instances{{3, "2", 2}, {5, "2,2", 3}, {8, "3,2", 4}};
    for (const Instance& instance : instances) {
        const CycleType step = CycleType::parse(instance.cls, instance.n);
        const WalkLaw exact = fourier_walk_law(step, instance.t, nullptr, kThreads);
        const EmpiricalLaw mc = mc_simulate(step, instance.t, 100000, 2024, kThreads);
        const Rat tv = tv_distance(exact, mc);
        c.expect(tv < Rat(1, 50), "TV=" + std::to_string(to_double(tv)) + " at n=" +
                                      std::to_string(instance.n));
    }
    const CycleType step = CycleType::parse("3,2", 8);
    const EmpiricalLaw a = mc_simulate(step, 4, 100000, 99, 1);
    const EmpiricalLaw b = mc_simulate(step, 4, 100000, 99, kThreads);
    c.expect(a.counts == b.counts, "histograms differ across thread counts");
}

void criterion_7_cutoff() {
    Criterion c(7, "desk-scale cutoff demonstration");
    const CycleType t15 = transpositions(15);
    const double tc15 = cutoff_time(t15);
    const long t_lo = static_cast<long>(std::floor(0.5 * tc15));
    const long t_hi = static_cast<long>(std::ceil(2.0 * tc15));
    const CharacterTable table = CharacterTable::build(15, kThreads);
    const Rat early = dtv(fourier_walk_law(t15, t_lo, &table, kThreads));
    const Rat late = dtv(fourier_walk_law(t15, t_hi, &table, kThreads));
    c.expect(early > Rat(9, 10), "dtv(" + std::to_string(t_lo) + ")=" + std::to_string(to_double(early)));
    c.expect(late < Rat(1, 20), "dtv(" + std::to_string(t_hi) + ")=" + std::to_string(to_double(late)));

    const CycleType t30 = transpositions(30);
    const double tc30 = cutoff_time(t30);
    const MixingProfile profile = mixing_profile(t30, 35, 65, 31000, kThreads);
    c.expect(!profile.dtv_available, "dtv should be gated at n=30");
    long crossing = -1;
    for (const MixingProfileRow& row : profile.rows)
        if (row.dl2 < 1.0) {
            crossing = row.t;
            break;
        }
    c.expect(crossing > 0, "no dl2 crossing in the scan window");
    if (crossing > 0) {
        c.expect(profile.rows[0].dl2 >= 1.0, "window starts below 1");
        c.expect(std::abs(static_cast<double>(crossing) - tc30) <= 0.15 * tc30,
                 "crossing t=" + std::to_string(crossing) + " vs t_C=" + std::to_string(tc30));
    }
}

void criterion_8_witten_zeta_trend() {
    Criterion c(8, "witten zeta trend table");
    for (double s : {1.0, 2.0}) {
        const double reference = std::pow(10.0, s) * witten_zeta(10, s);
        for (int n = 10; n <= 40; ++n) {
            const double value = std::pow(static_cast<double>(n), s) * witten_zeta(n, s);
            if (!(value > 0.0) || value > 2.0 * reference) {
                c.expect(false, "trend breaks at n=" + std::to_string(n) + " s=" + std::to_string(s));
                return;
            }
        }
    }
}

void criterion_9_margin_scans() {
    Criterion c(9, "margin scans thm1_2, n in 10..16");
    std::string csv = csv_row({"n", "lambda", "sigma", "variant", "lhs_log", "rhs_log", "margin",
                               "satisfied"});
    for (int n = 10; n <= 16; ++n) {
        const MarginScan scan = theorem_margin_scan(n, 0.4, TheoremVariant::thm1_2, kThreads);
        c.expect(!scan.records.empty(), "empty scan at n=" + std::to_string(n));
        c.expect(scan.argmin.has_value() && std::isfinite(scan.min_margin),
                 "missing min-margin summary at n=" + std::to_string(n));
        for (const MarginRecord& rec : scan.records)
            csv += csv_row({std::to_string(rec.n), rec.lambda.to_string(), rec.sigma.to_string(),
                            rec.variant, format_double(rec.lhs_log), format_double(rec.rhs_log),
                            format_double(rec.margin), rec.satisfied ? "true" : "false"});
    }
    // schema check: header plus data rows, each with exactly 8 fields
    std::istringstream lines(csv);
    std::string line;
    long rows = 0;
    bool schema_ok = true;
    while (std::getline(lines, line)) {
        long fields = 1;
        bool quoted = false;
        for (char ch : line) {
            if (ch == '"') quoted = !quoted;
            if (ch == ',' && !quoted) ++fields;
        }
        schema_ok = schema_ok && fields == 8;
        ++rows;
    }
    c.expect(schema_ok, "csv rows with wrong arity");
    c.expect(rows > 1000, "scan suspiciously small");
    write_file_atomic("acceptance_margin_scan.csv", csv);
}

void criterion_10_support_concentration() {
    Criterion c(10, "support concentration vs binomial tail");
    struct Instance {
        int n, k;
        long t;
    };
    for (const Instance& instance : {Instance{100, 4, 10}, Instance{200, 3, 20}}) {
        const SupportConcentrationReport report = support_concentration(
            instance.n, instance.k, instance.t, 100000, 7, std::nullopt, kThreads);
        c.expect(!report.skipped, "unexpected hypothesis skip");
        c.expect(report.flagged_count == 0,
                 "flagged=" + std::to_string(report.flagged_count) + " at n=" +
                     std::to_string(instance.n));
    }
}

}  // namespace

int main() {
    criterion_1_worked_examples();
    criterion_2_naruse_oracle();
    criterion_3_character_tables();
    criterion_4_inequality_suite();
    criterion_5_walk_laws();
    criterion_6_monte_carlo();
    criterion_7_cutoff();
    criterion_8_witten_zeta_trend();
    criterion_9_margin_scans();
    criterion_10_support_concentration();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
