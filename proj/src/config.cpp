#include "symwalk/config.hpp"

#include <set>
#include <stdexcept>

#include "json.hpp"

namespace symwalk {

using nlohmann::json;

std::string RunConfig::to_json() const {
    json j;
    j["command"] = command;
    j["n"] = n;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["class_spec"] = class_spec;
    j["lambda"] = lambda;
    j["outer"] = outer;
    j["inner"] = inner;
    j["seed_shape"] = seed_shape;
    j["seed_boxes"] = seed_boxes;
    j["t"] = t;
    j["t_min"] = t_min;
    j["t_max"] = t_max;
    j["delta"] = delta;
    j["theta"] = theta;
    j["depth_m"] = depth_m;
    j["k"] = k;
    j["seed"] = seed;
    j["samples"] = samples;
    j["variant"] = variant;
    j["s_values"] = s_values;
    j["count_only"] = count_only;
    j["selftest"] = selftest;
    j["threads"] = threads;
    j["output"] = output;
    j["format"] = format;
    return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
    const json j = json::parse(text);
    static const std::set<std::string> known{
        "command", "n",       "n_min",     "n_max",   "class_spec", "lambda",  "outer",
        "inner",   "seed_shape", "seed_boxes", "t",   "t_min",      "t_max",   "delta",
        "theta",   "depth_m", "k",         "seed",    "samples",    "variant", "s_values",
        "count_only", "selftest", "threads", "output", "format",
    };
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key)) throw std::invalid_argument("RunConfig: unknown key '" + key + "'");
    }
    RunConfig c;
    c.command = j.value("command", "");
    c.n = j.value("n", 0);
    c.n_min = j.value("n_min", 0);
    c.n_max = j.value("n_max", 0);
    c.class_spec = j.value("class_spec", "");
    c.lambda = j.value("lambda", "");
    c.outer = j.value("outer", "");
    c.inner = j.value("inner", "");
    c.seed_shape = j.value("seed_shape", "");
    c.seed_boxes = j.value("seed_boxes", "");
    c.t = j.value("t", 0L);
    c.t_min = j.value("t_min", 0L);
    c.t_max = j.value("t_max", 0L);
    c.delta = j.value("delta", 0.0);
    c.theta = j.value("theta", 0.0);
    c.depth_m = j.value("depth_m", 1);
    c.k = j.value("k", 0);
    c.seed = j.value("seed", static_cast<std::uint64_t>(0));
    c.samples = j.value("samples", static_cast<std::uint64_t>(0));
    c.variant = j.value("variant", "");
    c.s_values = j.value("s_values", "");
    c.count_only = j.value("count_only", false);
    c.selftest = j.value("selftest", false);
    c.threads = j.value("threads", 1);
    c.output = j.value("output", "");
    c.format = j.value("format", "json");
    return c;
}

}  // namespace symwalk
