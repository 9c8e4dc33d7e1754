#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "symwalk/bounds.hpp"
#include "symwalk/characters.hpp"
#include "symwalk/config.hpp"
#include "symwalk/excited.hpp"
#include "symwalk/io.hpp"
#include "symwalk/partition.hpp"
#include "symwalk/selftest.hpp"
#include "symwalk/walks.hpp"

namespace symwalk {

namespace {

using nlohmann::json;

void emit(const RunConfig& config, const std::string& contents) {
    if (config.output.empty()) {
        std::cout << contents;
        if (!contents.empty() && contents.back() != '\n') std::cout << '\n';
    } else {
        write_file_atomic(config.output, contents);
        std::cout << "wrote " << config.output << "\n";
    }
}

int run_selftests(const std::vector<SelfTestResult>& results) {
    for (const SelfTestResult& r : results)
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name
                  << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    return all_passed(results) ? 0 : 1;
}

CycleType class_from(const RunConfig& config, int n) {
    if (config.class_spec.empty()) throw std::invalid_argument("missing --class");
    return CycleType::parse(config.class_spec, n);
}

BoxSet parse_boxes(const std::string& text) {
    BoxSet boxes;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        if (pair.empty()) continue;
        const auto comma = pair.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad box '" + pair + "'");
        boxes.push_back({std::stoi(pair.substr(0, comma)), std::stoi(pair.substr(comma + 1))});
    }
    return normalized(boxes);
}

std::string box_set_string(const BoxSet& boxes) {
    std::string s;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(boxes[i].row) + "," + std::to_string(boxes[i].col);
    }
    return s;
}

std::vector<double> parse_doubles(const std::string& text, std::vector<double> fallback) {
    if (text.empty()) return fallback;
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

int cmd_dim(const RunConfig& config) {
    const Partition lambda = Partition::parse(config.lambda);
    std::cout << dim(lambda).get_str() << "\n";
    return 0;
}

int cmd_skew_dim(const RunConfig& config) {
    const SkewShape shape(Partition::parse(config.outer), Partition::parse(config.inner));
    std::cout << skew_dim_naruse(shape).get_str() << "\n";
    return 0;
}

int cmd_excited(const RunConfig& config) {
    const Partition outer = Partition::parse(config.outer);
    BoxSet seed;
    if (!config.seed_shape.empty()) seed = Partition::parse(config.seed_shape).boxes();
    else if (!config.seed_boxes.empty()) seed = parse_boxes(config.seed_boxes);
    else throw std::invalid_argument("excited: need --seed-shape or --seed-boxes");
    const auto diagrams = excited_diagrams(outer, seed);
    if (config.count_only) {
        std::cout << diagrams.size() << "\n";
        return 0;
    }
    std::string body;
    for (const BoxSet& d : diagrams) body += box_set_string(d) + "\n";
    body += "count=" + std::to_string(diagrams.size()) +
            " sum=" + excited_sum(outer, seed).get_str() + "\n";
    emit(config, body);
    return 0;
}

int cmd_char(const RunConfig& config) {
    const Partition lambda = Partition::parse(config.lambda);
    const CycleType sigma = class_from(config, config.n > 0 ? config.n : lambda.size());
    if (sigma.n() != lambda.size()) throw std::invalid_argument("char: |lambda| != n");
    const Int ch = mn_character(lambda, sigma);
    std::cout << "ch=" << ch.get_str() << " chi=" << reduced_character(lambda, sigma).get_str()
              << "\n";
    // reported companions of the character value
    std::cout << "virtual_degree=" << virtual_degree(lambda).get_str()
              << " r_sym=" << lambda.r_sym();
    if (sigma.n() >= 2)
        std::cout << " orbit_growth_E=" << format_double(orbit_growth(sigma).exponent);
    std::cout << "\n";
    return 0;
}

int cmd_branch(const RunConfig& config) {
    const Partition lambda = Partition::parse(config.lambda);
    const CycleType sigma = class_from(config, config.n > 0 ? config.n : lambda.size());
    const auto terms = branching_decomposition(lambda, sigma);
    std::string body = csv_row({"mu", "ch_mu_sigma_star", "skew_dim"});
    Int sum = 0;
    for (const BranchTerm& term : terms) {
        body += csv_row({term.mu.to_string(), term.ch_mu_star.get_str(), term.skew_dim.get_str()});
        sum += term.ch_mu_star * term.skew_dim;
    }
    emit(config, body);
    const Int direct = mn_character(lambda, sigma);
    if (sum != direct) {
        std::cout << "branching sum " << sum.get_str() << " != MN " << direct.get_str() << "\n";
        return 1;
    }
    std::cout << "branching sum matches MN: " << sum.get_str() << "\n";
    return 0;
}

std::string walk_law_csv(const WalkLaw& law) {
    std::string body = csv_row({"cycle_type", "class_size", "class_prob", "element_prob"});
    for (std::size_t i = 0; i < law.types.size(); ++i)
        body += csv_row({law.types[i].to_string(), law.sizes[i].get_str(),
                         law.class_probs[i].get_str(), law.element_prob(i).get_str()});
    return body;
}

json walk_law_json(const WalkLaw& law) {
    json j;
    j["n"] = law.n;
    j["class"] = law.step_class.to_string();
    j["t"] = law.t;
    j["entries"] = json::array();
    for (std::size_t i = 0; i < law.types.size(); ++i) {
        j["entries"].push_back({{"cycle_type", law.types[i].to_string()},
                                {"class_size", law.sizes[i].get_str()},
                                {"class_prob", law.class_probs[i].get_str()},
                                {"element_prob", law.element_prob(i).get_str()}});
    }
    return j;
}

int cmd_walk_law(const RunConfig& config) {
    if (config.n < 2) throw std::invalid_argument("walk-law: need --n >= 2");
    const CycleType step = class_from(config, config.n);
    const WalkLaw law = fourier_walk_law(step, config.t, nullptr, config.threads);
    emit(config, config.format == "csv" ? walk_law_csv(law) : walk_law_json(law).dump(2) + "\n");
    return 0;
}

int cmd_mix_profile(const RunConfig& config) {
    if (config.n < 2) throw std::invalid_argument("mix-profile: need --n >= 2");
    const CycleType step = class_from(config, config.n);
    const long t_lo = config.t_min;
    const long t_hi = config.t_max > 0 ? config.t_max : config.t_min;
    const MixingProfile profile = mixing_profile(step, t_lo, t_hi, 31000, config.threads);
    std::string body = csv_row({"t", "dtv", "dl2", "t_over_tc"});
    for (const MixingProfileRow& row : profile.rows)
        body += csv_row({std::to_string(row.t), row.dtv ? row.dtv->get_str() : "",
                         format_double(row.dl2), format_double(row.t_over_tc)});
    if (config.format == "json") {
        json j;
        j["n"] = config.n;
        j["class"] = step.to_string();
        j["t_c"] = profile.t_c;
        j["dtv_available"] = profile.dtv_available;
        j["rows"] = json::array();
        for (const MixingProfileRow& row : profile.rows) {
            json r{{"t", row.t},
                   {"dl2", format_double(row.dl2)},
                   {"t_over_tc", format_double(row.t_over_tc)}};
            if (row.dtv) {
                r["dtv"] = row.dtv->get_str();
                r["dtv_float"] = format_double(to_double(*row.dtv));
            }
            j["rows"].push_back(r);
        }
        emit(config, j.dump(2) + "\n");
    } else {
        emit(config, body);
    }
    return 0;
}

int cmd_zeta(const RunConfig& config) {
    const int n_hi = config.n_max > 0 ? config.n_max : 40;
    const int n_lo = config.n_min > 0 ? config.n_min : 4;
    const std::vector<double> s_values = parse_doubles(config.s_values, {1.0, 2.0});
    std::string body = csv_row({"n", "s", "zeta", "n_pow_s_times_zeta"});
    json rows = json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
        for (double s : s_values) {
            const double z = witten_zeta(n, s);
            const double scaled = std::pow(static_cast<double>(n), s) * z;
            body += csv_row({std::to_string(n), format_double(s), format_double(z),
                             format_double(scaled)});
            rows.push_back({{"n", n},
                            {"s", format_double(s)},
                            {"zeta", format_double(z)},
                            {"n_pow_s_times_zeta", format_double(scaled)}});
        }
    }
    if (config.format == "json") {
        json j{{"rows", rows}};
        emit(config, j.dump(2) + "\n");
    } else {
        emit(config, body);
    }
    return 0;
}

json suite_json(const SuiteReport& report) {
    json j;
    j["checks"] = json::array();
    for (const CheckReport& check : report.checks) {
        json c{{"name", check.name},
               {"checked", check.checked},
               {"skipped", check.skipped},
               {"violations", check.violations}};
        j["checks"].push_back(c);
    }
    j["total_checked"] = report.total_checked();
    j["total_skipped"] = report.total_skipped();
    j["total_violations"] = report.total_violations();
    return j;
}

int cmd_verify_lemmas(const RunConfig& config) {
    const int n_max = config.n_max > 0 ? config.n_max : 8;
    const SuiteReport lemmas = lemma_suite(n_max, config.threads);
    const SuiteReport inequalities = inequality_suite(n_max, config.threads);
    for (const SuiteReport* suite : {&lemmas, &inequalities}) {
        for (const CheckReport& check : suite->checks)
            std::cout << (check.ok() ? "PASS " : "FAIL ") << check.name << " checked="
                      << check.checked << " skipped=" << check.skipped
                      << " violations=" << check.violations.size() << "\n";
    }
    json j;
    j["n_max"] = n_max;
    j["lemma_suite"] = suite_json(lemmas);
    j["inequality_suite"] = suite_json(inequalities);
    // reported, never asserted: empirical counterpart of the low-level bound's
    // universal constant, with its running maximum
    j["low_level_constant"] = json::array();
    double running = 0.0;
    for (const EmpiricalConstant& row : empirical_constant_scan(6, n_max, config.threads)) {
        running = std::max(running, row.c_star);
        j["low_level_constant"].push_back({{"n", row.n},
                                           {"c_star", format_double(row.c_star)},
                                           {"running_max", format_double(running)},
                                           {"witness", row.witness}});
        std::cout << "reported C*(" << row.n << ") = " << format_double(row.c_star) << "\n";
    }
    const bool ok = lemmas.all_ok() && inequalities.all_ok();
    j["all_ok"] = ok;
    if (!config.output.empty()) {
        write_file_atomic(config.output, j.dump(2) + "\n");
        std::cout << "wrote " << config.output << "\n";
    }
    return ok ? 0 : 1;
}

std::string margin_csv(const MarginScan& scan) {
    std::string body =
        csv_row({"n", "lambda", "sigma", "variant", "lhs_log", "rhs_log", "margin", "satisfied"});
    for (const MarginRecord& rec : scan.records)
        body += csv_row({std::to_string(rec.n), rec.lambda.to_string(), rec.sigma.to_string(),
                         rec.variant, format_double(rec.lhs_log), format_double(rec.rhs_log),
                         format_double(rec.margin), rec.satisfied ? "true" : "false"});
    return body;
}

json margin_summary(const MarginScan& scan) {
    json j;
    j["records"] = scan.records.size();
    j["satisfied"] = scan.satisfied_count;
    j["min_margin"] = format_double(scan.min_margin);
    if (scan.argmin) {
        j["argmin"] = {{"lambda", scan.argmin->lambda.to_string()},
                       {"sigma", scan.argmin->sigma.to_string()},
                       {"margin", format_double(scan.argmin->margin)}};
    }
    return j;
}

int cmd_verify_theorems(const RunConfig& config) {
    TheoremVariant variant = TheoremVariant::thm1_2;
    if (config.variant == "thm1_1") variant = TheoremVariant::thm1_1;
    else if (config.variant == "thm1_2" || config.variant.empty()) variant = TheoremVariant::thm1_2;
    else if (config.variant == "thm5_helping") variant = TheoremVariant::thm5_helping;
    else throw std::invalid_argument("verify theorems: unknown --variant " + config.variant);
    const int n_lo = config.n_min > 0 ? config.n_min : (config.n > 0 ? config.n : 10);
    const int n_hi = config.n_max > 0 ? config.n_max : n_lo;
    const double delta = config.delta > 0 ? config.delta : 0.4;

    std::string body;
    json summaries = json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
        const MarginScan scan = theorem_margin_scan(n, delta, variant, config.threads);
        const std::string csv = margin_csv(scan);
        body += (n == n_lo) ? csv : csv.substr(csv.find('\n') + 1);
        json s = margin_summary(scan);
        s["n"] = n;
        summaries.push_back(s);
        std::cout << "n=" << n << " records=" << scan.records.size()
                  << " min_margin=" << format_double(scan.min_margin) << "\n";
    }
    if (config.format == "csv") {
        emit(config, body);
    } else if (!config.output.empty()) {
        json j{{"variant", variant_name(variant)}, {"delta", delta}, {"summaries", summaries}};
        write_file_atomic(config.output, j.dump(2) + "\n");
        std::cout << "wrote " << config.output << "\n";
    }
    return 0;
}

int cmd_simulate(const RunConfig& config) {
    if (config.n < 2) throw std::invalid_argument("simulate: need --n >= 2");
    if (config.samples == 0) throw std::invalid_argument("simulate: need --samples >= 1");
    const CycleType step = class_from(config, config.n);
    const EmpiricalLaw empirical =
        mc_simulate(step, config.t, config.samples, config.seed, config.threads);
    const long classes = static_cast<long>(empirical.types.size());
    const bool exact_feasible = classes * classes <= 31000;
    std::optional<WalkLaw> law;
    if (exact_feasible) law = fourier_walk_law(step, config.t, nullptr, config.threads);
    if (config.format == "csv") {
        std::string body = csv_row({"cycle_type", "count", "empirical", "exact"});
        for (std::size_t i = 0; i < empirical.types.size(); ++i)
            body += csv_row({empirical.types[i].to_string(), std::to_string(empirical.counts[i]),
                             empirical.probability(i).get_str(),
                             law ? law->class_probs[i].get_str() : ""});
        emit(config, body);
    } else {
        json j{{"n", config.n},       {"class", step.to_string()}, {"t", config.t},
               {"samples", config.samples}, {"seed", config.seed}};
        j["entries"] = json::array();
        for (std::size_t i = 0; i < empirical.types.size(); ++i) {
            json row{{"cycle_type", empirical.types[i].to_string()},
                     {"count", empirical.counts[i]},
                     {"empirical", empirical.probability(i).get_str()}};
            if (law) row["exact"] = law->class_probs[i].get_str();
            j["entries"].push_back(row);
        }
        if (law) j["tv_distance"] = tv_distance(*law, empirical).get_str();
        emit(config, j.dump(2) + "\n");
    }
    if (law) {
        const Rat tv = tv_distance(*law, empirical);
        std::cout << "tv_distance=" << tv.get_str() << " (" << format_double(to_double(tv))
                  << ")\n";
    }
    return 0;
}

int cmd_support_conc(const RunConfig& config) {
    if (config.samples == 0) throw std::invalid_argument("support-conc: need --samples >= 1");
    std::optional<CycleType> step;
    if (!config.class_spec.empty()) step = CycleType::parse(config.class_spec, config.n);
    const SupportConcentrationReport report = support_concentration(
        config.n, config.k, config.t, config.samples, config.seed, step, config.threads);
    if (report.skipped) {
        std::cout << "skipped: " << report.notice << "\n";
        return 0;
    }
    if (config.format == "csv") {
        std::string body = csv_row({"y", "empirical_tail", "binomial_tail", "sigma", "flagged"});
        for (const SupportTailRow& row : report.rows)
            body += csv_row({std::to_string(row.y), format_double(row.empirical_tail),
                             format_double(row.binomial_tail), format_double(row.sigma),
                             row.flagged ? "true" : "false"});
        emit(config, body);
    } else {
        json j{{"n", report.n}, {"k", report.k}, {"t", report.t}, {"flagged", report.flagged_count}};
        j["rows"] = json::array();
        for (const SupportTailRow& row : report.rows)
            j["rows"].push_back({{"y", row.y},
                                 {"empirical_tail", format_double(row.empirical_tail)},
                                 {"binomial_tail", format_double(row.binomial_tail)},
                                 {"sigma", format_double(row.sigma)},
                                 {"flagged", row.flagged}});
        emit(config, j.dump(2) + "\n");
    }
    std::cout << "flagged=" << report.flagged_count << "\n";
    return 0;
}

}  // namespace

int run_command(const RunConfig& config) {
    if (config.selftest) {
        if (config.command == "dim" || config.command == "skew-dim" || config.command == "excited") {
            std::vector<SelfTestResult> results = selftest_diagrams();
            const std::vector<SelfTestResult> more = selftest_excited();
            results.insert(results.end(), more.begin(), more.end());
            return run_selftests(results);
        }
        if (config.command == "char" || config.command == "branch")
            return run_selftests(selftest_characters());
        if (config.command == "verify-lemmas" || config.command == "verify-theorems")
            return run_selftests(selftest_bounds());
        return run_selftests(selftest_walks());
    }
    if (config.command == "dim") return cmd_dim(config);
    if (config.command == "skew-dim") return cmd_skew_dim(config);
    if (config.command == "excited") return cmd_excited(config);
    if (config.command == "char") return cmd_char(config);
    if (config.command == "branch") return cmd_branch(config);
    if (config.command == "walk-law") return cmd_walk_law(config);
    if (config.command == "mix-profile") return cmd_mix_profile(config);
    if (config.command == "zeta") return cmd_zeta(config);
    if (config.command == "verify-lemmas") return cmd_verify_lemmas(config);
    if (config.command == "verify-theorems") return cmd_verify_theorems(config);
    if (config.command == "simulate") return cmd_simulate(config);
    if (config.command == "support-conc") return cmd_support_conc(config);
    throw std::invalid_argument("unknown command '" + config.command + "'");
}

}  // namespace symwalk
