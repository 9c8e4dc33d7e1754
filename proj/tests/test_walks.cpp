#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "symwalk/walks.hpp"

using namespace symwalk;

namespace {

// Brute-force class sizes by enumerating all of S_n.
std::map<Partition, long> class_sizes_brute(int n) {
    std::map<Partition, long> sizes;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        Permutation p{perm};
        ++sizes[p.cycle_type()];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sizes;
}

}  // namespace

TEST_CASE("class sizes") {
    CHECK(class_size(CycleType(Partition({1, 1, 1, 1}))) == 1);
    CHECK(class_size(CycleType(Partition({3}))) == 2);
    for (int n = 2; n <= 6; ++n) {
        const auto brute = class_sizes_brute(n);
        Int total = 0;
        for (const Partition& c : partitions_of(n)) {
            const Int size = class_size(CycleType(c));
            CHECK(size == brute.at(c));
            total += size;
        }
        CHECK(total == factorial(static_cast<unsigned long>(n)));
        std::vector<int> tr{2};
        tr.insert(tr.end(), static_cast<std::size_t>(n - 2), 1);
        CHECK(class_size(CycleType(Partition(tr))) == n * (n - 1) / 2);
    }
}

TEST_CASE("walk law base cases") {
    const CycleType transpositions(Partition({2, 1}));
    const WalkLaw point = fourier_walk_law(transpositions, 0);
    CHECK(point.class_probs.back() == 1);  // identity type is last in rev-lex order
    const WalkLaw one = fourier_walk_law(transpositions, 1);
    for (std::size_t i = 0; i < one.types.size(); ++i) {
        if (one.types[i] == Partition({2, 1}))
            CHECK(one.class_probs[i] == 1);
        else
            CHECK(one.class_probs[i] == 0);
    }
    const WalkLaw two = fourier_walk_law(transpositions, 2);
    for (std::size_t i = 0; i < two.types.size(); ++i) {
        if (two.types[i] == Partition({1, 1, 1})) CHECK(two.class_probs[i] == Rat(1, 3));
        if (two.types[i] == Partition({3})) CHECK(two.class_probs[i] == Rat(2, 3));
    }
    CHECK_THROWS_AS(fourier_walk_law(CycleType(Partition({1, 1})), 1), std::invalid_argument);
}

TEST_CASE("fourier inversion equals the convolution oracle") {
    for (int n = 3; n <= 5; ++n) {
        const CharacterTable table = CharacterTable::build(n);
        for (const Partition& c : partitions_of(n)) {
            const CycleType step(c);
            if (step.is_identity()) continue;
            for (long t = 0; t <= 6; ++t) {
                const WalkLaw fourier = fourier_walk_law(step, t, &table);
                const WalkLaw oracle = convolution_oracle(step, t);
                CHECK(fourier.class_probs == oracle.class_probs);
            }
        }
    }
    CHECK_THROWS_AS(convolution_oracle(CycleType(Partition({2, 1, 1, 1, 1, 1, 1})), 1),
                    std::invalid_argument);
}

TEST_CASE("laws respect the sign coset") {
    const CycleType odd_class(Partition({2, 1, 1}));  // odd
    for (long t = 0; t <= 5; ++t) {
        const WalkLaw law = fourier_walk_law(odd_class, t);
        const int coset = (t % 2 == 0) ? 1 : -1;
        CHECK(law.coset_sign() == coset);
        for (std::size_t i = 0; i < law.types.size(); ++i)
            if (CycleType(law.types[i]).sign() != coset) CHECK(law.class_probs[i] == 0);
    }
}

TEST_CASE("coset distances") {
    const CycleType t3(Partition({2, 1}));
    CHECK(dtv(fourier_walk_law(t3, 1)) == 0);  // uniform on the 3 transpositions
    CHECK(dtv(fourier_walk_law(t3, 2)) == 0);
    const WalkLaw point = fourier_walk_law(t3, 0);
    CHECK(dtv(point) == Rat(1) - Rat(1, 3));
    CHECK(dl2_squared_from_law(fourier_walk_law(t3, 2)) == 0);
}

TEST_CASE("diaconis-shahshahani identity and bound") {
    for (int n = 3; n <= 6; ++n) {
        for (const Partition& c : partitions_of(n)) {
            const CycleType step(c);
            if (step.is_identity()) continue;
            for (long t = 0; t <= 4; ++t) {
                const DsIdentityReport report = ds_identity_check(step, t);
                CHECK(report.identity_holds);
                CHECK(report.cauchy_schwarz);
            }
        }
    }
    // t=0: the DS sum is (n!-2)/2
    const DsIdentityReport at_zero = ds_identity_check(CycleType(Partition({2, 1, 1})), 0);
    CHECK(at_zero.dl2_squared_sum == Rat(11));
}

TEST_CASE("witten zeta") {
    CHECK(witten_zeta_exact(3, 2) == Rat(1, 4));
    CHECK(witten_zeta_exact(4, 1) == Rat(7, 6));
    CHECK(witten_zeta(4, 1.0) == doctest::Approx(7.0 / 6.0));
    CHECK(witten_zeta(12, 2.0) == doctest::Approx(to_double(witten_zeta_exact(12, 2))));
    CHECK_THROWS_AS(witten_zeta(1, 1.0), std::invalid_argument);
}

TEST_CASE("mixing profile") {
    const CycleType step = CycleType::parse("2", 8);
    const MixingProfile profile = mixing_profile(step, 1, 6);
    CHECK(profile.dtv_available);
    REQUIRE(profile.rows.size() == 6);
    CHECK(profile.t_c == doctest::Approx(std::log(8.0) / std::log(8.0 / 6.0)));
    // dtv decreasing over the scanned window
    for (std::size_t i = 1; i < profile.rows.size(); ++i)
        CHECK(to_double(*profile.rows[i].dtv) <= to_double(*profile.rows[i - 1].dtv) + 1e-15);
    // dl2 from the DS sum agrees with the law route
    for (const MixingProfileRow& row : profile.rows) {
        const Rat law_sq = dl2_squared_from_law(fourier_walk_law(step, row.t));
        CHECK(row.dl2 == doctest::Approx(std::sqrt(to_double(law_sq))));
        CHECK(row.t_over_tc == doctest::Approx(row.t / profile.t_c));
    }
}

TEST_CASE("monte carlo simulation") {
    const CycleType t3(Partition({2, 1}));
    const EmpiricalLaw point = mc_simulate(t3, 0, 500, 11);
    CHECK(point.counts.back() == 500);

    // determinism across thread counts
    const CycleType step(Partition({3, 2, 1, 1, 1}));
    const EmpiricalLaw a = mc_simulate(step, 4, 20000, 123, 1);
    const EmpiricalLaw b = mc_simulate(step, 4, 20000, 123, 4);
    CHECK(a.counts == b.counts);
    // and a different seed actually changes the histogram
    const EmpiricalLaw c = mc_simulate(step, 4, 20000, 124, 2);
    CHECK(a.counts != c.counts);

    // convergence within the generic 3 sqrt(support/samples) envelope
    const WalkLaw exact = fourier_walk_law(t3, 2);
    const EmpiricalLaw mc = mc_simulate(t3, 2, 20000, 7);
    const double tv = to_double(tv_distance(exact, mc));
    CHECK(tv < 3.0 * std::sqrt(3.0 / 20000.0));
}

TEST_CASE("sampled steps stay in the class") {
    // t=1: empirical law must be supported on the step class alone
    const CycleType step(Partition({4, 2, 1, 1}));
    const EmpiricalLaw law = mc_simulate(step, 1, 2000, 5);
    for (std::size_t i = 0; i < law.types.size(); ++i) {
        if (law.types[i] == step.cycles())
            CHECK(law.counts[i] == 2000);
        else
            CHECK(law.counts[i] == 0);
    }
}

TEST_CASE("support concentration") {
    const SupportConcentrationReport gated = support_concentration(10, 3, 4, 100, 1);
    CHECK(gated.skipped);

    // t = 1: kt - supp(Z) is identically zero
    const SupportConcentrationReport trivial = support_concentration(20, 4, 1, 2000, 3);
    REQUIRE(!trivial.skipped);
    CHECK(trivial.rows[0].empirical_tail == doctest::Approx(1.0));
    for (const SupportTailRow& row : trivial.rows)
        if (row.y >= 1) CHECK(row.empirical_tail == 0.0);
    CHECK(trivial.flagged_count == 0);

    const SupportConcentrationReport small = support_concentration(60, 3, 5, 20000, 17);
    REQUIRE(!small.skipped);
    CHECK(small.flagged_count == 0);
}

TEST_CASE("bootstrap identity and window inequality") {
    const CycleType transpositions = CycleType::parse("2", 6);
    const BootstrapReport tautology =
        bootstrap_identity_check(transpositions, 1, Partition({4, 2}), 0, 6);
    CHECK(tautology.identity_holds);
    CHECK(tautology.inequality_holds);

    const BootstrapReport report =
        bootstrap_identity_check(transpositions, 3, Partition({4, 2}), 0, 6);
    CHECK(report.identity_holds);
    // B = all of S_6: inequality reduces to |chi^t| <= max |chi|
    CHECK(report.mass_outside == 0);
    CHECK(report.inequality_holds);

    const BootstrapReport window =
        bootstrap_identity_check(transpositions, 3, Partition({4, 2}), 2, 4);
    CHECK(window.identity_holds);
    CHECK(window.inequality_holds);
}

TEST_CASE("coset specification") {
    const CycleType odd_class(Partition({2, 1, 1}));
    const CycleType even_class(Partition({3, 1}));
    CHECK(CosetSpec::of(odd_class, 1).kind == CosetSpec::Kind::odd);
    CHECK(CosetSpec::of(odd_class, 2).kind == CosetSpec::Kind::alternating);
    CHECK(CosetSpec::of(even_class, 1).kind == CosetSpec::Kind::alternating);
    CHECK(CosetSpec::of(odd_class, 3).sign() == -1);
    CHECK(CosetSpec::of(odd_class, 2).size() == 12);
}

TEST_CASE("profile landmarks: early dtv near 1, late dl2 negligible") {
    const CycleType step = CycleType::parse("2", 8);
    CHECK(to_double(dtv(fourier_walk_law(step, 1))) > 0.9);
    CHECK(dl2(step, 40) < 1e-3);  // far beyond the cutoff time (~7.2)
}
