#include "symwalk/walks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "symwalk/excited.hpp"
#include "symwalk/parallel.hpp"
#include "symwalk/rng.hpp"

namespace symwalk {

Int class_size(const CycleType& sigma) {
    const int n = sigma.n();
    Int denominator = 1;
    for (int length = 1; length <= n; ++length) {
        const int mult = sigma.multiplicity(length);
        if (mult == 0) continue;
        denominator *= pow_int(length, static_cast<unsigned long>(mult));
        denominator *= factorial(static_cast<unsigned long>(mult));
    }
    return factorial(static_cast<unsigned long>(n)) / denominator;
}

CosetSpec CosetSpec::of(const CycleType& step_class, long t) {
    CosetSpec spec;
    spec.n = step_class.n();
    spec.step_class = step_class;
    spec.t = t;
    spec.kind = (step_class.sign() == -1 && t % 2 == 1) ? Kind::odd : Kind::alternating;
    return spec;
}

Int CosetSpec::size() const { return factorial(static_cast<unsigned long>(n)) / 2; }

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.images[static_cast<std::size_t>(i)] = i;
    return p;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(images.size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start]) continue;
        int length = 0;
        std::size_t x = start;
        while (!seen[x]) {
            seen[x] = true;
            x = static_cast<std::size_t>(images[x]);
            ++length;
        }
        lengths.push_back(length);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(lengths);
}

CharacterTable CharacterTable::build(int n, int threads) {
    CharacterTable table;
    table.n = n;
    table.lambdas = partitions_of(n);
    for (const Partition& c : table.lambdas) table.classes.emplace_back(c);
    table.dims.resize(table.lambdas.size());
    table.class_sizes.resize(table.classes.size());
    for (std::size_t j = 0; j < table.classes.size(); ++j)
        table.class_sizes[j] = class_size(table.classes[j]);
    table.ch.assign(table.lambdas.size(), std::vector<Int>(table.classes.size()));
    parallel_for(table.lambdas.size(), threads, [&](std::size_t i) {
        CharacterEvaluator evaluator;
        table.dims[i] = dim(table.lambdas[i]);
        for (std::size_t j = 0; j < table.classes.size(); ++j)
            table.ch[i][j] = evaluator.character(table.lambdas[i], table.classes[j]);
    });
    return table;
}

int CharacterTable::class_index(const CycleType& sigma) const {
    for (std::size_t j = 0; j < classes.size(); ++j)
        if (classes[j] == sigma) return static_cast<int>(j);
    throw std::invalid_argument("CharacterTable::class_index: unknown class");
}

Rat WalkLaw::element_prob(std::size_t index) const {
    Rat r = class_probs[index] / Rat(sizes[index]);
    r.canonicalize();
    return r;
}

int WalkLaw::coset_sign() const { return CosetSpec::of(step_class, t).sign(); }

void WalkLaw::validate() const {
    Rat total = 0;
    const int coset = coset_sign();
    for (std::size_t i = 0; i < types.size(); ++i) {
        total += class_probs[i];
        if (class_probs[i] < 0) throw std::logic_error("WalkLaw: negative probability");
        if (CycleType(types[i]).sign() != coset && class_probs[i] != 0)
            throw std::logic_error("WalkLaw: mass off the sign coset");
    }
    if (total != 1) throw std::logic_error("WalkLaw: probabilities do not sum to 1");
}

WalkLaw fourier_walk_law(const CycleType& step_class, long t, const CharacterTable* table,
                         int threads) {
    if (step_class.is_identity())
        throw std::invalid_argument("fourier_walk_law: step class must not be the identity");
    if (t < 0) throw std::invalid_argument("fourier_walk_law: t must be nonnegative");
    const int n = step_class.n();
    CharacterTable local;
    if (table == nullptr) {
        local = CharacterTable::build(n, threads);
        table = &local;
    }
    const int c_index = table->class_index(step_class);

    WalkLaw law;
    law.n = n;
    law.step_class = step_class;
    law.t = t;
    for (const Partition& type : partitions_of(n)) law.types.push_back(type);
    law.sizes = table->class_sizes;
    law.class_probs.resize(law.types.size());

    const Int n_fact = factorial(static_cast<unsigned long>(n));
    std::vector<Rat> chi_powers(table->lambdas.size());
    for (std::size_t i = 0; i < table->lambdas.size(); ++i) {
        Rat chi(table->ch[i][static_cast<std::size_t>(c_index)], table->dims[i]);
        chi.canonicalize();
        chi_powers[i] = pow_rat(chi, static_cast<unsigned long>(t));
    }
    parallel_for(law.types.size(), threads, [&](std::size_t j) {
        Rat sum = 0;
        for (std::size_t i = 0; i < table->lambdas.size(); ++i) {
            if (chi_powers[i] == 0) continue;
            sum += Rat(table->dims[i] * table->ch[i][j]) * chi_powers[i];
        }
        Rat prob = sum * Rat(table->class_sizes[j], n_fact);
        prob.canonicalize();
        law.class_probs[j] = prob;
    });
    law.validate();
    return law;
}

namespace {

std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& c) {
    std::vector<int> out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x)
        out[x] = g[static_cast<std::size_t>(c[x])];
    return out;
}

}  // namespace

WalkLaw convolution_oracle(const CycleType& step_class, long t, long t_limit) {
    const int n = step_class.n();
    if (step_class.is_identity())
        throw std::invalid_argument("convolution_oracle: step class must not be the identity");
    if (n > 6) throw std::invalid_argument("convolution_oracle: n must be at most 6");
    if (t < 0 || t > t_limit) throw std::invalid_argument("convolution_oracle: t out of range");

    std::vector<std::vector<int>> elements;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        elements.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

    std::vector<int> class_members;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        Permutation p{elements[i]};
        if (CycleType(p.cycle_type()) == step_class) class_members.push_back(static_cast<int>(i));
    }

    std::vector<Rat> law(elements.size(), Rat(0));
    law[static_cast<std::size_t>(index[Permutation::identity(n).images])] = 1;
    const Rat step_weight(1, static_cast<unsigned long>(class_members.size()));
    for (long s = 0; s < t; ++s) {
        std::vector<Rat> next(elements.size(), Rat(0));
        for (std::size_t g = 0; g < elements.size(); ++g) {
            if (law[g] == 0) continue;
            const Rat mass = law[g] * step_weight;
            for (int c : class_members) {
                const int target = index[compose(elements[g], elements[static_cast<std::size_t>(c)])];
                next[static_cast<std::size_t>(target)] += mass;
            }
        }
        law = std::move(next);
    }

    WalkLaw out;
    out.n = n;
    out.step_class = step_class;
    out.t = t;
    std::map<Partition, std::size_t> type_index;
    for (const Partition& type : partitions_of(n)) {
        type_index[type] = out.types.size();
        out.types.push_back(type);
        out.sizes.push_back(class_size(CycleType(type)));
        out.class_probs.emplace_back(0);
    }
    for (std::size_t g = 0; g < elements.size(); ++g) {
        if (law[g] == 0) continue;
        Permutation p{elements[g]};
        out.class_probs[type_index[p.cycle_type()]] += law[g];
    }
    for (Rat& q : out.class_probs) q.canonicalize();
    out.validate();
    return out;
}

Rat dtv(const WalkLaw& law) {
    const Int n_fact = factorial(static_cast<unsigned long>(law.n));
    const int coset = law.coset_sign();
    Rat total = 0;
    for (std::size_t i = 0; i < law.types.size(); ++i) {
        if (CycleType(law.types[i]).sign() != coset) continue;
        Rat uniform(2 * law.sizes[i], n_fact);
        uniform.canonicalize();
        Rat diff = law.class_probs[i] - uniform;
        if (diff < 0) diff = -diff;
        total += diff;
    }
    total /= 2;
    total.canonicalize();
    return total;
}

Rat dl2_squared_from_law(const WalkLaw& law) {
    const Int n_fact = factorial(static_cast<unsigned long>(law.n));
    const int coset = law.coset_sign();
    Rat total = 0;
    for (std::size_t i = 0; i < law.types.size(); ++i) {
        if (CycleType(law.types[i]).sign() != coset) continue;
        Rat uniform(2, n_fact);
        uniform.canonicalize();
        Rat diff = law.element_prob(i) - uniform;
        total += Rat(law.sizes[i]) * diff * diff;
    }
    total *= Rat(n_fact, 2);
    total.canonicalize();
    total.canonicalize();
    return total;
}

namespace {

// Column of character/dimension pairs over the nontrivial representations.
struct SpectralColumn {
    std::vector<Int> ch;
    std::vector<Int> dims;
};

SpectralColumn spectral_column(const CycleType& step_class, const CharacterTable* table) {
    SpectralColumn column;
    const int n = step_class.n();
    CharacterEvaluator evaluator;
    const std::size_t c_index =
        table != nullptr ? static_cast<std::size_t>(table->class_index(step_class)) : 0;
    const std::vector<Partition> lambdas = partitions_of(n);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const Partition& lambda = lambdas[i];
        if (lambda.rows() == 1 || lambda.part(1) == 1) continue;  // trivial and sign
        if (table != nullptr) {
            column.ch.push_back(table->ch[i][c_index]);
            column.dims.push_back(table->dims[i]);
        } else {
            column.ch.push_back(evaluator.character(lambda, step_class));
            column.dims.push_back(dim(lambda));
        }
    }
    return column;
}

Rat ds_sum(const SpectralColumn& column, long t) {
    Rat total = 0;
    for (std::size_t i = 0; i < column.ch.size(); ++i) {
        if (t == 0) {
            total += Rat(column.dims[i] * column.dims[i]);
            continue;
        }
        if (column.ch[i] == 0) continue;
        Rat term(pow_int(column.ch[i], static_cast<unsigned long>(2 * t)),
                 pow_int(column.dims[i], static_cast<unsigned long>(2 * t - 2)));
        term.canonicalize();
        total += term;
    }
    total /= 2;
    total.canonicalize();
    return total;
}

double sqrt_log_safe(const Rat& radicand) {
    if (radicand == 0) return 0.0;
    return std::exp(0.5 * log_rat(radicand));
}

}  // namespace

Rat dl2_squared_ds(const CycleType& step_class, long t, const CharacterTable* table) {
    if (step_class.is_identity())
        throw std::invalid_argument("dl2_squared_ds: step class must not be the identity");
    return ds_sum(spectral_column(step_class, table), t);
}

double dl2(const CycleType& step_class, long t) {
    return sqrt_log_safe(dl2_squared_ds(step_class, t));
}

DsIdentityReport ds_identity_check(const CycleType& step_class, long t) {
    DsIdentityReport report;
    const WalkLaw law = fourier_walk_law(step_class, t);
    report.dtv_value = dtv(law);
    report.dl2_squared_law = dl2_squared_from_law(law);
    report.dl2_squared_sum = dl2_squared_ds(step_class, t);
    report.identity_holds = (report.dl2_squared_law == report.dl2_squared_sum);
    report.cauchy_schwarz = (4 * report.dtv_value * report.dtv_value <= report.dl2_squared_sum);
    return report;
}

double witten_zeta(int n, double s) {
    if (n < 2 || s <= 0) throw std::invalid_argument("witten_zeta: need n >= 2 and s > 0");
    double sum = 0.0;
    for (const Partition& lambda : partitions_of(n)) {
        if (lambda.rows() == 1 || lambda.part(1) == 1) continue;
        sum += std::exp(-s * log_int(dim(lambda)));
    }
    return sum;
}

Rat witten_zeta_exact(int n, unsigned long s) {
    if (n < 2 || s == 0) throw std::invalid_argument("witten_zeta_exact: need n >= 2 and s > 0");
    Rat sum = 0;
    for (const Partition& lambda : partitions_of(n)) {
        if (lambda.rows() == 1 || lambda.part(1) == 1) continue;
        Rat term(Int(1), pow_int(dim(lambda), s));
        term.canonicalize();
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

double cutoff_time(const CycleType& step_class) {
    if (step_class.is_identity()) throw std::invalid_argument("cutoff_time: identity class");
    const double n = static_cast<double>(step_class.n());
    const double f = static_cast<double>(step_class.f());
    return std::log(n) / std::log(n / f);
}

MixingProfile mixing_profile(const CycleType& step_class, long t_min, long t_max,
                             long dtv_cost_budget, int threads) {
    if (t_min < 0 || t_max < t_min) throw std::invalid_argument("mixing_profile: bad t range");
    MixingProfile profile;
    profile.step_class = step_class;
    profile.t_c = cutoff_time(step_class);

    const long class_count = static_cast<long>(partitions_of(step_class.n()).size());
    profile.dtv_available = class_count * class_count <= dtv_cost_budget;

    CharacterTable table;
    if (profile.dtv_available) table = CharacterTable::build(step_class.n(), threads);
    const SpectralColumn column =
        spectral_column(step_class, profile.dtv_available ? &table : nullptr);

    const long count = t_max - t_min + 1;
    profile.rows.resize(static_cast<std::size_t>(count));
    parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t i) {
        MixingProfileRow row;
        row.t = t_min + static_cast<long>(i);
        row.dl2 = sqrt_log_safe(ds_sum(column, row.t));
        if (profile.dtv_available)
            row.dtv = dtv(fourier_walk_law(step_class, row.t, &table, 1));
        row.t_over_tc = static_cast<double>(row.t) / profile.t_c;
        profile.rows[i] = std::move(row);
    });
    return profile;
}

EmpiricalLaw mc_simulate(const CycleType& step_class, long t, std::uint64_t samples,
                         std::uint64_t seed, int threads) {
    if (samples < 1) throw std::invalid_argument("mc_simulate: need samples >= 1");
    if (t < 0) throw std::invalid_argument("mc_simulate: t must be nonnegative");
    const int n = step_class.n();

    EmpiricalLaw law;
    law.n = n;
    law.step_class = step_class;
    law.t = t;
    law.samples = samples;
    law.seed = seed;
    law.types = partitions_of(n);
    law.counts.assign(law.types.size(), 0);

    std::map<Partition, std::size_t> type_index;
    for (std::size_t i = 0; i < law.types.size(); ++i) type_index[law.types[i]] = i;

    // Non-trivial cycle lengths of the step template.
    std::vector<int> cycle_lengths;
    for (int p : step_class.cycles().parts())
        if (p >= 2) cycle_lengths.push_back(p);
    const int support = step_class.support();

    const int workers = std::max(1, threads);
    std::vector<std::vector<std::uint64_t>> histograms(
        static_cast<std::size_t>(workers), std::vector<std::uint64_t>(law.types.size(), 0));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::vector<int> product(static_cast<std::size_t>(n));
            std::vector<int> pool_positions(static_cast<std::size_t>(n));
            std::vector<int> step_targets(static_cast<std::size_t>(n));
            std::vector<std::pair<int, int>> updates;
            updates.reserve(static_cast<std::size_t>(support));
            const std::uint64_t begin = samples * static_cast<std::uint64_t>(w) / workers;
            const std::uint64_t end = samples * static_cast<std::uint64_t>(w + 1) / workers;
            for (std::uint64_t sample = begin; sample < end; ++sample) {
                SplitMix64 rng = SplitMix64::stream(seed, sample);
                for (int i = 0; i < n; ++i) {
                    product[static_cast<std::size_t>(i)] = i;
                    pool_positions[static_cast<std::size_t>(i)] = i;
                }
                for (long step = 0; step < t; ++step) {
                    // Uniform element of the class: a uniformly shuffled [n]
                    // written into the cycle template. Fixed-point slots never
                    // affect the element, so only the first `support` entries
                    // of the shuffle are ever drawn.
                    for (int i = 0; i < support; ++i) {
                        const std::uint64_t j =
                            static_cast<std::uint64_t>(i) +
                            rng.next_below(static_cast<std::uint64_t>(n - i));
                        std::swap(pool_positions[static_cast<std::size_t>(i)],
                                  pool_positions[static_cast<std::size_t>(j)]);
                    }
                    updates.clear();
                    int offset = 0;
                    for (int length : cycle_lengths) {
                        for (int i = 0; i < length; ++i) {
                            const int from = pool_positions[static_cast<std::size_t>(offset + i)];
                            const int to = pool_positions[static_cast<std::size_t>(offset + (i + 1) % length)];
                            step_targets[static_cast<std::size_t>(from)] = to;
                        }
                        offset += length;
                    }
                    // product <- product o step, touched only on the support
                    for (int i = 0; i < support; ++i) {
                        const int x = pool_positions[static_cast<std::size_t>(i)];
                        updates.emplace_back(
                            x, product[static_cast<std::size_t>(step_targets[static_cast<std::size_t>(x)])]);
                    }
                    for (const auto& [x, value] : updates) product[static_cast<std::size_t>(x)] = value;
                }
                Permutation p{product};
                ++histograms[static_cast<std::size_t>(w)][type_index.at(p.cycle_type())];
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& histogram : histograms)
        for (std::size_t i = 0; i < histogram.size(); ++i) law.counts[i] += histogram[i];
    return law;
}

Rat tv_distance(const WalkLaw& law, const EmpiricalLaw& empirical) {
    if (law.n != empirical.n) throw std::invalid_argument("tv_distance: mismatched n");
    Rat total = 0;
    for (std::size_t i = 0; i < law.types.size(); ++i) {
        Rat diff = law.class_probs[i] - empirical.probability(i);
        if (diff < 0) diff = -diff;
        total += diff;
    }
    total /= 2;
    total.canonicalize();
    return total;
}

SupportConcentrationReport support_concentration(int n, int k, long t, std::uint64_t samples,
                                                 std::uint64_t seed,
                                                 const std::optional<CycleType>& step_class,
                                                 int threads) {
    SupportConcentrationReport report;
    report.n = n;
    report.k = k;
    report.t = t;
    if (samples < 1) throw std::invalid_argument("support_concentration: need samples >= 1");
    if (2 * static_cast<long>(k) * t > n) {
        report.skipped = true;
        report.notice = "hypothesis kt <= n/2 violated; lemma does not apply";
        return report;
    }

    CycleType walk_class = step_class.value_or([&] {
        std::vector<int> parts{k};
        parts.insert(parts.end(), static_cast<std::size_t>(n - k), 1);
        return CycleType(Partition(parts));
    }());
    if (walk_class.n() != n || walk_class.support() != k)
        throw std::invalid_argument("support_concentration: class does not match (n, k)");

    const long kt = static_cast<long>(k) * t;

    // Per-sample statistic kt - supp(Z), accumulated into a histogram.
    std::vector<int> cycle_lengths;
    for (int p : walk_class.cycles().parts())
        if (p >= 2) cycle_lengths.push_back(p);

    const int workers = std::max(1, threads);
    std::vector<std::vector<std::uint64_t>> histograms(
        static_cast<std::size_t>(workers), std::vector<std::uint64_t>(static_cast<std::size_t>(kt) + 1, 0));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::vector<int> product(static_cast<std::size_t>(n));
            std::vector<int> pool_positions(static_cast<std::size_t>(n));
            std::vector<int> step_targets(static_cast<std::size_t>(n));
            std::vector<std::pair<int, int>> updates;
            const std::uint64_t begin = samples * static_cast<std::uint64_t>(w) / workers;
            const std::uint64_t end = samples * static_cast<std::uint64_t>(w + 1) / workers;
            for (std::uint64_t sample = begin; sample < end; ++sample) {
                SplitMix64 rng = SplitMix64::stream(seed, sample);
                for (int i = 0; i < n; ++i) {
                    product[static_cast<std::size_t>(i)] = i;
                    pool_positions[static_cast<std::size_t>(i)] = i;
                }
                for (long step = 0; step < t; ++step) {
                    for (int i = 0; i < k; ++i) {
                        const std::uint64_t j =
                            static_cast<std::uint64_t>(i) +
                            rng.next_below(static_cast<std::uint64_t>(n - i));
                        std::swap(pool_positions[static_cast<std::size_t>(i)],
                                  pool_positions[static_cast<std::size_t>(j)]);
                    }
                    updates.clear();
                    int offset = 0;
                    for (int length : cycle_lengths) {
                        for (int i = 0; i < length; ++i) {
                            const int from = pool_positions[static_cast<std::size_t>(offset + i)];
                            const int to = pool_positions[static_cast<std::size_t>(offset + (i + 1) % length)];
                            step_targets[static_cast<std::size_t>(from)] = to;
                        }
                        offset += length;
                    }
                    for (int i = 0; i < k; ++i) {
                        const int x = pool_positions[static_cast<std::size_t>(i)];
                        updates.emplace_back(
                            x, product[static_cast<std::size_t>(step_targets[static_cast<std::size_t>(x)])]);
                    }
                    for (const auto& [x, value] : updates) product[static_cast<std::size_t>(x)] = value;
                }
                int moved = 0;
                for (int i = 0; i < n; ++i)
                    if (product[static_cast<std::size_t>(i)] != i) ++moved;
                const long statistic = kt - moved;
                ++histograms[static_cast<std::size_t>(w)][static_cast<std::size_t>(
                    std::clamp<long>(statistic, 0, kt))];
            }
        });
    }
    for (auto& th : pool) th.join();

    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(kt) + 1, 0);
    for (const auto& h : histograms)
        for (std::size_t i = 0; i < h.size(); ++i) histogram[i] += h[i];

    // Exact binomial tails for Bin(kt, 2kt/n).
    Rat alpha(2 * kt, n);
    alpha.canonicalize();
    std::vector<Rat> binomial_tails(static_cast<std::size_t>(kt) + 2, Rat(0));
    for (long y = kt; y >= 0; --y) {
        Rat point = Rat(binomial(static_cast<unsigned long>(kt), static_cast<unsigned long>(y))) *
                    pow_rat(alpha, static_cast<unsigned long>(y)) *
                    pow_rat(Rat(1) - alpha, static_cast<unsigned long>(kt - y));
        binomial_tails[static_cast<std::size_t>(y)] = binomial_tails[static_cast<std::size_t>(y + 1)] + point;
    }

    std::uint64_t tail_count = 0;
    std::vector<SupportTailRow> rows(static_cast<std::size_t>(kt) + 1);
    for (long y = kt; y >= 0; --y) {
        tail_count += histogram[static_cast<std::size_t>(y)];
        SupportTailRow row;
        row.y = static_cast<int>(y);
        row.empirical_tail = static_cast<double>(tail_count) / static_cast<double>(samples);
        row.binomial_tail = to_double(binomial_tails[static_cast<std::size_t>(y)]);
        row.sigma = std::sqrt(row.binomial_tail * (1.0 - row.binomial_tail) /
                              static_cast<double>(samples));
        row.flagged = row.empirical_tail > row.binomial_tail + 3.0 * row.sigma + 1e-12;
        if (row.flagged) ++report.flagged_count;
        rows[static_cast<std::size_t>(y)] = row;
    }
    report.rows = std::move(rows);
    return report;
}

BootstrapReport bootstrap_identity_check(const CycleType& step_class, long t, const Partition& lambda,
                                         int support_lo, int support_hi) {
    if (step_class.is_identity())
        throw std::invalid_argument("bootstrap_identity_check: identity class");
    const int n = step_class.n();
    if (lambda.size() != n) throw std::invalid_argument("bootstrap_identity_check: |lambda| != n");

    const CharacterTable table = CharacterTable::build(n);
    const WalkLaw law = fourier_walk_law(step_class, t, &table);
    const std::size_t lambda_index = static_cast<std::size_t>(
        std::find(table.lambdas.begin(), table.lambdas.end(), lambda) - table.lambdas.begin());

    BootstrapReport report;
    Rat chi(table.ch[lambda_index][static_cast<std::size_t>(table.class_index(step_class))],
            table.dims[lambda_index]);
    chi.canonicalize();
    report.chi_power = pow_rat(chi, static_cast<unsigned long>(t));

    report.spectral_sum = 0;
    report.mass_outside = 0;
    report.max_abs_chi_inside = 0;
    for (std::size_t j = 0; j < law.types.size(); ++j) {
        Rat chi_j(table.ch[lambda_index][j], table.dims[lambda_index]);
        chi_j.canonicalize();
        report.spectral_sum += law.class_probs[j] * chi_j;
        const int support = CycleType(law.types[j]).support();
        if (support < support_lo || support > support_hi) {
            report.mass_outside += law.class_probs[j];
        } else {
            if (chi_j < 0) chi_j = -chi_j;
            if (chi_j > report.max_abs_chi_inside) report.max_abs_chi_inside = chi_j;
        }
    }
    report.spectral_sum.canonicalize();
    report.identity_holds = (report.chi_power == report.spectral_sum);
    Rat magnitude = report.chi_power;
    if (magnitude < 0) magnitude = -magnitude;
    report.inequality_holds = magnitude <= report.mass_outside + report.max_abs_chi_inside;
    return report;
}

}  // namespace symwalk
