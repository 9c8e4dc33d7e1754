#include "symwalk/selftest.hpp"

#include <algorithm>

#include "symwalk/bounds.hpp"
#include "symwalk/characters.hpp"
#include "symwalk/excited.hpp"
#include "symwalk/partition.hpp"
#include "symwalk/walks.hpp"

namespace symwalk {

namespace {

void check(std::vector<SelfTestResult>& out, const std::string& name, bool ok,
           const std::string& detail = "") {
    out.push_back({name, ok, ok ? "" : detail});
}

}  // namespace

std::vector<SelfTestResult> selftest_diagrams() {
    std::vector<SelfTestResult> out;
    check(out, "partitions_of(0) singleton", partitions_of(0).size() == 1);
    check(out, "partitions_of(3) count", partitions_of(3).size() == 3);
    check(out, "partitions_of(10) count", partitions_of(10).size() == 42);
    const Partition l331({3, 3, 1});
    check(out, "conjugate (3,3,1)", l331.conjugate() == Partition({3, 2, 2}));
    check(out, "hook (3,3,1)@(1,1)", hook_length(l331, {1, 1}) == 5);
    check(out, "hook (3,3,1)@(1,2)", hook_length(l331, {1, 2}) == 3);
    check(out, "hook product row pair", hook_product(l331, row_diagram(2)) == 15);
    check(out, "hook product full", hook_product(l331, l331.boxes()) == 240);
    const Partition stairs_example({14, 8, 6, 2, 2, 1});
    check(out, "stairs slicing first row",
          sliced_hook_product(stairs_example, Slicing::stairs(stairs_example),
                              stairs_example.first_row_boxes()) == factorial(14));
    check(out, "u profile (3,3,1)", u_profile(l331) == std::vector<int>({2, 1, 1}));
    check(out, "frobenius (3,3,1)",
          frobenius(l331) == std::vector<FrobeniusCoordinate>({{2, 2}, {1, 0}}));
    return out;
}

std::vector<SelfTestResult> selftest_excited() {
    std::vector<SelfTestResult> out;
    const Partition l333({3, 3, 3});
    check(out, "excited [3,3,3]/[1]", excited_diagrams(l333, Partition({1})).size() == 3);
    check(out, "excited [3,3,3]/[2,1]", excited_diagrams(l333, Partition({2, 1})).size() == 5);
    check(out, "excited [3^5]/[1^3]",
          excited_diagrams(Partition({3, 3, 3, 3, 3}), Partition({1, 1, 1})).size() == 10);
    check(out, "excited [8,3,3,1]/[6,2,1]",
          excited_diagrams(Partition({8, 3, 3, 1}), Partition({6, 2, 1})).size() == 2);
    check(out, "excited [3,3,3]/{(2,2)}", excited_diagrams(l333, BoxSet{{2, 2}}).size() == 2);
    const Partition l331({3, 3, 1});
    check(out, "excited sum S((3,3,1),(2)) = 22", excited_sum(l331, Partition({2})) == 22);
    check(out, "dim (3,3,1) = 21", dim(l331) == 21);
    check(out, "naruse skew dim 11", skew_dim_naruse(SkewShape(l331, Partition({2}))) == 11);
    check(out, "oracle skew dim 11", skew_dim_oracle(SkewShape(l331, Partition({2}))) == 11);
    check(out, "oracle dim 21", skew_dim_oracle(SkewShape(l331, Partition())) == 21);
    return out;
}

std::vector<SelfTestResult> selftest_characters() {
    std::vector<SelfTestResult> out;
    const CycleType three_cycle(Partition({3}));
    check(out, "ch^{(2,1)}((3)) = -1", mn_character(Partition({2, 1}), three_cycle) == -1);
    check(out, "ch^{(2,1)}((2,1)) = 0",
          mn_character(Partition({2, 1}), CycleType(Partition({2, 1}))) == 0);
    check(out, "ch^{(2,1)}(id) = 2",
          mn_character(Partition({2, 1}), CycleType(Partition({1, 1, 1}))) == 2);
    check(out, "sigma* of (4,2,1,1,1)",
          sigma_star(CycleType(Partition({4, 2, 1, 1, 1}))) == CycleType(Partition({4, 2})));
    check(out, "chi^{(3,1)}(transposition) = 1/3",
          reduced_character(Partition({3, 1}), CycleType(Partition({2, 1, 1}))) == Rat(1, 3));
    check(out, "transposition formula (3,1)",
          transposition_character(Partition({3, 1})) == Rat(1, 3));
    check(out, "virtual degree (2,1) = 2", virtual_degree(Partition({2, 1})) == 2);
    check(out, "orbit growth n-cycle",
          std::abs(orbit_growth(CycleType(Partition({6}))).exponent - 1.0 / 6.0) < 1e-12);
    return out;
}

std::vector<SelfTestResult> selftest_bounds() {
    std::vector<SelfTestResult> out;
    check(out, "zeta(0) = 0", zeta_helper(0) == 0.0);
    check(out, "zeta(1) = 0", zeta_helper(1) == 0.0);
    check(out, "zeta just above e^8 crosses 1",
          zeta_helper(2981) > 1.0 && zeta_helper(2981) < 1.001 && zeta_helper(2980) < 1.0);
    check(out, "W((6)) at k=3 is 1", w_term(Partition({6}), 3) == 1);
    const Partition l331({3, 3, 1});
    check(out, "W((3,3,1)) at k=2 is 1/21", w_term(l331, 2) == Rat(1, 21));
    check(out, "Z((3,3,1), transposition) = 0",
          z_term(l331, CycleType(Partition({2, 1, 1, 1, 1, 1}))) == 0);
    const BiasedDim b = biased_skew_dim(l331, Partition({2}), 1.0);
    check(out, "biased dim d_skew 11", b.d_skew == 11 && b.d_lambda == 21);
    return out;
}

std::vector<SelfTestResult> selftest_walks() {
    std::vector<SelfTestResult> out;
    const CycleType t3(Partition({2, 1}));  // transpositions in S_3
    check(out, "class size transpositions S_3", class_size(t3) == 3);
    const WalkLaw law0 = fourier_walk_law(t3, 0);
    check(out, "t=0 point mass", law0.class_probs.back() == 1);
    const WalkLaw law2 = fourier_walk_law(t3, 2);
    Rat identity_mass;
    for (std::size_t i = 0; i < law2.types.size(); ++i)
        if (law2.types[i] == Partition({1, 1, 1})) identity_mass = law2.class_probs[i];
    check(out, "S_3 t=2 identity mass 1/3", identity_mass == Rat(1, 3));
    check(out, "dtv at t=1 is 0", dtv(fourier_walk_law(t3, 1)) == 0);
    check(out, "witten zeta exact n=3 s=2", witten_zeta_exact(3, 2) == Rat(1, 4));
    check(out, "witten zeta exact n=4 s=1", witten_zeta_exact(4, 1) == Rat(7, 6));
    const EmpiricalLaw mc = mc_simulate(t3, 0, 100, 7);
    check(out, "mc t=0 mass on identity", mc.counts.back() == 100);
    return out;
}

bool all_passed(const std::vector<SelfTestResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SelfTestResult& r) { return r.passed; });
}

}  // namespace symwalk
