#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "symwalk/config.hpp"

namespace {

using symwalk::RunConfig;

void add_common(CLI::App* cmd, RunConfig& config) {
    cmd->add_flag("--selftest", config.selftest, "run this module's example vectors and exit");
    cmd->add_option("--output", config.output, "output file path (written atomically)");
    cmd->add_option("--format", config.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", config.threads, "worker count (outputs are thread-count invariant)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for symmetric-group characters, skew dimensions, and\n"
                 "conjugacy-class random-walk mixing"};
    app.require_subcommand(0, 1);

    RunConfig config;
    app.add_option("--threads", config.threads, "worker count (outputs are thread-count invariant)")
        ->check(CLI::PositiveNumber);

    auto* dim = app.add_subcommand("dim", "dimension of an irreducible representation");
    dim->add_option("--lambda", config.lambda, "partition, e.g. 3,3,1");
    add_common(dim, config);

    auto* skew = app.add_subcommand("skew-dim", "number of standard tableaux of a skew shape");
    skew->add_option("--outer", config.outer, "outer partition");
    skew->add_option("--inner", config.inner, "inner partition (may be empty)");
    add_common(skew, config);

    auto* excited = app.add_subcommand("excited", "excited diagrams of a seed inside a diagram");
    excited->add_option("--outer", config.outer, "ambient partition");
    excited->add_option("--seed-shape", config.seed_shape, "seed partition");
    excited->add_option("--seed-boxes", config.seed_boxes, "seed boxes r,c;r,c");
    excited->add_flag("--count", config.count_only, "print only the count");
    add_common(excited, config);

    auto* chr = app.add_subcommand("char", "character value on a conjugacy class");
    chr->add_option("--lambda", config.lambda, "partition");
    chr->add_option("--class", config.class_spec, "non-trivial cycle lengths, e.g. 3,2");
    chr->add_option("--n", config.n, "group degree (defaults to |lambda|)");
    add_common(chr, config);

    auto* branch = app.add_subcommand("branch", "iterated branching decomposition");
    branch->add_option("--lambda", config.lambda, "partition");
    branch->add_option("--class", config.class_spec, "non-trivial cycle lengths");
    branch->add_option("--n", config.n, "group degree (defaults to |lambda|)");
    add_common(branch, config);

    auto* walk = app.add_subcommand("walk-law", "exact law of the class walk at time t");
    walk->add_option("--n", config.n, "group degree");
    walk->add_option("--class", config.class_spec, "step class cycle lengths");
    walk->add_option("--t", config.t, "number of steps");
    add_common(walk, config);

    auto* mix = app.add_subcommand("mix-profile", "dtv/dl2 profile over a time window");
    mix->add_option("--n", config.n, "group degree");
    mix->add_option("--class", config.class_spec, "step class cycle lengths");
    mix->add_option("--t-min", config.t_min, "first time");
    mix->add_option("--t-max", config.t_max, "last time");
    add_common(mix, config);

    auto* zeta = app.add_subcommand("zeta", "Witten zeta trend table");
    zeta->add_option("--n-min", config.n_min, "first degree (default 4)");
    zeta->add_option("--n-max", config.n_max, "last degree (default 40)");
    zeta->add_option("--s", config.s_values, "comma-separated exponents (default 1,2)");
    add_common(zeta, config);

    auto* verify = app.add_subcommand("verify", "exhaustive verification suites");
    verify->require_subcommand(1);
    auto* lemmas = verify->add_subcommand("lemmas", "scan the proven inequalities");
    lemmas->add_option("--n-max", config.n_max, "largest n scanned (default 8)");
    add_common(lemmas, config);
    auto* theorems = verify->add_subcommand("theorems", "margin scans for the main theorems");
    theorems->add_option("--variant", config.variant, "thm1_1 | thm1_2 | thm5_helping");
    theorems->add_option("--n", config.n, "single degree");
    theorems->add_option("--n-min", config.n_min, "first degree");
    theorems->add_option("--n-max", config.n_max, "last degree");
    theorems->add_option("--delta", config.delta, "fixed-point density threshold (default 0.4)");
    add_common(theorems, config);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo law of the class walk");
    simulate->add_option("--n", config.n, "group degree");
    simulate->add_option("--class", config.class_spec, "step class cycle lengths");
    simulate->add_option("--t", config.t, "number of steps");
    simulate->add_option("--samples", config.samples, "sample count");
    simulate->add_option("--seed", config.seed, "RNG seed");
    add_common(simulate, config);

    auto* conc = app.add_subcommand("support-conc", "support concentration vs binomial tail");
    conc->add_option("--n", config.n, "group degree");
    conc->add_option("--k", config.k, "class support");
    conc->add_option("--t", config.t, "number of steps");
    conc->add_option("--samples", config.samples, "sample count");
    conc->add_option("--seed", config.seed, "RNG seed");
    conc->add_option("--class", config.class_spec, "override class (default: one k-cycle)");
    add_common(conc, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit code 2
    }

    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return 2;
    }
    CLI::App* chosen = app.get_subcommands().front();
    config.command = chosen->get_name();
    if (config.command == "verify")
        config.command += "-" + chosen->get_subcommands().front()->get_name();

    try {
        return symwalk::run_command(config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
