#pragma once

#include <cstdint>
#include <string>

namespace symwalk {

// Parsed invocation of one CLI subcommand. Serialization round-trips through
// JSON; unknown keys are rejected on parse.
struct RunConfig {
    std::string command;

    int n = 0;
    int n_min = 0;
    int n_max = 0;

    std::string class_spec;   // non-trivial cycle lengths, e.g. "3,2"
    std::string lambda;       // partition, e.g. "3,3,1"
    std::string outer;
    std::string inner;
    std::string seed_shape;   // partition seed for excited enumeration
    std::string seed_boxes;   // explicit box list "r,c;r,c"

    long t = 0;
    long t_min = 0;
    long t_max = 0;

    double delta = 0.0;
    double theta = 0.0;
    int depth_m = 1;
    int k = 0;

    std::uint64_t seed = 0;
    std::uint64_t samples = 0;

    std::string variant;      // thm1_1 | thm1_2 | thm5_helping
    std::string s_values;     // zeta exponents, e.g. "1,2"
    bool count_only = false;
    bool selftest = false;

    int threads = 1;
    std::string output;       // output path; empty = stdout only
    std::string format = "json";  // csv | json

    std::string to_json() const;
    static RunConfig from_json(const std::string& text);  // throws on unknown keys

    bool operator==(const RunConfig&) const = default;
};

// Executes one subcommand. Returns 0 on success, 1 on exact-check failure,
// 2 on usage errors.
int run_command(const RunConfig& config);

}  // namespace symwalk
