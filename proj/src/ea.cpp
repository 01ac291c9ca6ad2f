#include "evo/ea.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <limits>

namespace evo {

std::string_view kind_name(EvolutionKind k) {
    switch (k) {
    case EvolutionKind::Darwinian:
        return "darwinian";
    case EvolutionKind::Baldwinian:
        return "baldwinian";
    case EvolutionKind::Lamarckian:
        return "lamarckian";
    case EvolutionKind::LB:
        return "lb";
    }
    return "?";
}

std::string EvolutionType::name() const { return std::string(kind_name(kind)); }

EvolutionKind EvolutionType::parse_kind(std::string_view s) {
    std::string t(s);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "darwin" || t == "darwinian") {
        return EvolutionKind::Darwinian;
    }
    if (t == "baldwin" || t == "baldwinian") {
        return EvolutionKind::Baldwinian;
    }
    if (t == "lamarck" || t == "lamarckian") {
        return EvolutionKind::Lamarckian;
    }
    if (t == "lb" || t == "l-b") {
        return EvolutionKind::LB;
    }
    throw ConfigError("unknown evolution type: " + std::string(s));
}

void EAConfig::validate(std::size_t n) const {
    if (n == 0) {
        throw ConfigError("EAConfig: problem dimension is zero");
    }
    if (mu < 1 || lambda < 1) {
        throw ConfigError("EAConfig: mu and lambda must be >= 1");
    }
    if (crossover_rate < 0.0 || crossover_rate > 1.0) {
        throw ConfigError("EAConfig: crossover rate must lie in [0, 1]");
    }
    const double r = resolved_mutation_rate(n);
    if (!(r > 0.0) || r > 1.0) {
        throw ConfigError("EAConfig: mutation rate must lie in (0, 1]");
    }
    if (evolution.kind == EvolutionKind::LB && (evolution.p_lb < 0.0 || evolution.p_lb > 1.0)) {
        throw ConfigError("EAConfig: p_lb must lie in [0, 1]");
    }
    if (budget < 1) {
        throw ConfigError("EAConfig: budget must be >= 1");
    }
}

BitString uniform_crossover(const BitString& a, const BitString& b, Rng& rng) {
    if (a.size() != b.size()) {
        throw LengthMismatch("uniform_crossover: parents of different length");
    }
    BitString child(a.size());
    auto cw = child.words();
    auto aw = a.words();
    auto bw = b.words();
    for (std::size_t i = 0; i < cw.size(); ++i) {
        const std::uint64_t mask = rng();
        cw[i] = (aw[i] & mask) | (bw[i] & ~mask);
    }
    return child;
}

BitString bernoulli_mutation(const BitString& x, double rate, Rng& rng) {
    if (rate < 0.0 || rate > 1.0) {
        throw ConfigError("bernoulli_mutation: rate must lie in [0, 1]");
    }
    BitString y = x;
    if (rate <= 0.0) {
        return y;
    }
    if (rate >= 1.0) {
        return x.complemented();
    }
    // Geometric gaps between flips reproduce independent per-bit coins.
    const double denom = std::log1p(-rate);
    const std::size_t n = x.size();
    std::size_t i = 0;
    for (;;) {
        const double u = rand_unit_pos(rng);
        const double skip = std::floor(std::log(u) / denom);
        if (skip >= static_cast<double>(n - i)) {
            break;
        }
        i += static_cast<std::size_t>(skip);
        y.flip(i);
        ++i;
        if (i >= n) {
            break;
        }
    }
    return y;
}

BitString make_offspring(const Population& pop, const EAConfig& cfg, Rng& rng) {
    const std::size_t i1 = rand_below(rng, pop.size());
    const std::size_t i2 = rand_below(rng, pop.size());
    const double rate = cfg.resolved_mutation_rate(pop[i1].genotype.size());
    if (rand_bool(rng, cfg.crossover_rate)) {
        return bernoulli_mutation(uniform_crossover(pop[i1].genotype, pop[i2].genotype, rng), rate,
                                  rng);
    }
    return bernoulli_mutation(pop[i1].genotype, rate, rng);
}

OffspringEval evaluate_offspring(BitString y, const EAConfig& cfg, const Problem& problem, Rng& rng,
                                 EvalCounter& ctr) {
    ctr.offspring_evals += 1;
    const EvolutionType& evo = cfg.evolution;
    if (evo.kind == EvolutionKind::Darwinian) {
        const double f = problem.evaluate(y);
        BitString solution = y;
        return {{std::move(y), f}, std::move(solution)};
    }

    LocalSearchResult ls = problem.local_search(y, rng);
    ctr.ls_iterations += ls.steps;
    const double f = problem.evaluate(ls.point);
    switch (evo.kind) {
    case EvolutionKind::Baldwinian:
        return {{std::move(y), f}, std::move(ls.point)};
    case EvolutionKind::Lamarckian: {
        BitString solution = ls.point;
        return {{std::move(ls.point), f}, std::move(solution)};
    }
    case EvolutionKind::LB: {
        BitString solution = ls.point;
        const bool replace = rand_bool(rng, evo.p_lb);
        return {{replace ? std::move(ls.point) : std::move(y), f}, std::move(solution)};
    }
    default:
        throw ConfigError("evaluate_offspring: unexpected evolution type");
    }
}

Population select_mu_fittest(const Population& parents, const Population& offspring, std::size_t mu,
                             Rng& rng) {
    const std::size_t pool_size = parents.size() + offspring.size();
    if (pool_size < mu) {
        throw PoolTooSmall("select_mu_fittest: pool of " + std::to_string(pool_size) +
                           " cannot fill mu=" + std::to_string(mu));
    }
    const auto& at = [&](std::size_t i) -> const Individual& {
        return i < parents.size() ? parents[i] : offspring[i - parents.size()];
    };

    std::vector<std::size_t> order(pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return at(a).fitness > at(b).fitness; });

    Population next;
    next.reserve(mu);
    if (mu == 0) {
        return next;
    }
    const double cutoff = at(order[mu - 1]).fitness;
    std::size_t first_tied = 0;
    while (first_tied < mu && at(order[first_tied]).fitness > cutoff) {
        next.push_back(at(order[first_tied]));
        ++first_tied;
    }
    std::size_t last_tied = pool_size;
    while (last_tied > first_tied && at(order[last_tied - 1]).fitness < cutoff) {
        --last_tied;
    }

    std::vector<std::size_t> tied(order.begin() + static_cast<std::ptrdiff_t>(first_tied),
                                  order.begin() + static_cast<std::ptrdiff_t>(last_tied));
    const std::size_t need = mu - next.size();
    if (need == tied.size()) {
        for (std::size_t i : tied) {
            next.push_back(at(i));
        }
    } else {
        // Partial Fisher–Yates: draw `need` tied individuals without replacement.
        for (std::size_t j = 0; j < need; ++j) {
            const std::size_t pick = j + rand_below(rng, tied.size() - j);
            std::swap(tied[j], tied[pick]);
            next.push_back(at(tied[j]));
        }
    }
    return next;
}

namespace {

double population_best(const Population& pop) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& ind : pop) {
        best = std::max(best, ind.fitness);
    }
    return best;
}

} // namespace

RunRecord run_mu_plus_lambda(const EAConfig& cfg, const Problem& problem) {
    const std::size_t n = problem.dimension();
    cfg.validate(n);

    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(cfg.seed);
    RunRecord rec;
    EvalCounter& ctr = rec.counters;
    UniqueOptimaTracker tracker;

    double best_f = -std::numeric_limits<double>::infinity();
    BitString best_solution;
    const auto absorb = [&](OffspringEval&& ev) -> Individual {
        if (ev.individual.fitness > best_f) {
            best_f = ev.individual.fitness;
            best_solution = ev.solution;
        }
        // For Baldwinian runs unique solutions are the locally searched
        // offspring (they never enter the population); for the other types
        // the genotype that enters the pool.
        tracker.observe(ev.individual.fitness,
                        cfg.evolution.kind == EvolutionKind::Baldwinian ? ev.solution
                                                                        : ev.individual.genotype);
        return std::move(ev.individual);
    };

    Population pop;
    pop.reserve(cfg.mu);
    for (std::size_t i = 0; i < cfg.mu; ++i) {
        pop.push_back(absorb(evaluate_offspring(BitString::random(n, rng), cfg, problem, rng, ctr)));
    }
    rec.convergence.emplace_back(ctr.offspring_evals, population_best(pop));
    rec.diversity.emplace_back(ctr.offspring_evals, population_diversity(pop));

    Population offspring;
    offspring.reserve(cfg.lambda);
    while (ctr.offspring_evals - cfg.mu < cfg.budget) {
        offspring.clear();
        for (std::size_t j = 0; j < cfg.lambda; ++j) {
            offspring.push_back(
                absorb(evaluate_offspring(make_offspring(pop, cfg, rng), cfg, problem, rng, ctr)));
        }
        pop = select_mu_fittest(pop, offspring, cfg.mu, rng);
        ++rec.generations;
        rec.convergence.emplace_back(ctr.offspring_evals, population_best(pop));
        rec.diversity.emplace_back(ctr.offspring_evals, population_diversity(pop));
    }

    rec.best_fitness = best_f;
    rec.best_genotype = std::move(best_solution);
    rec.unique_optima = tracker.count();
    rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

OnePlusOneResult run_one_plus_one(const DlbProblem& p, EvolutionKind evolution, std::uint64_t seed,
                                  std::uint64_t max_iterations,
                                  const std::optional<BitString>& initial) {
    if (evolution == EvolutionKind::LB) {
        throw ConfigError("run_one_plus_one: supported types are darwinian, baldwinian, lamarckian");
    }
    if (max_iterations < 1) {
        throw ConfigError("run_one_plus_one: max_iterations must be >= 1");
    }
    const std::size_t n = p.dimension();
    const std::int64_t opt = static_cast<std::int64_t>(n);
    const double rate = 1.0 / static_cast<double>(n);

    OnePlusOneResult res;
    Rng rng(seed);

    BitString x = initial ? *initial : BitString::random(n, rng);
    if (initial && initial->size() != n) {
        throw LengthMismatch("run_one_plus_one: initial genotype length != n");
    }
    std::int64_t fx;
    res.counters.offspring_evals += 1;
    switch (evolution) {
    case EvolutionKind::Darwinian:
        fx = p.value(x);
        break;
    case EvolutionKind::Lamarckian: {
        LsResult ls = hillclimb(p, x, rng);
        res.counters.ls_iterations += ls.ls_iterations;
        res.counters.ls_neighbor_evals += ls.neighbor_evals;
        x = std::move(ls.result);
        fx = p.value(x);
        break;
    }
    default: { // Baldwinian
        LsResult ls = hillclimb(p, x, rng);
        res.counters.ls_iterations += ls.ls_iterations;
        res.counters.ls_neighbor_evals += ls.neighbor_evals;
        fx = p.value(ls.result);
        break;
    }
    }

    res.success = (fx == opt);
    BitString y;
    while (!res.success && res.iterations < max_iterations) {
        ++res.iterations;
        const std::int64_t prev_fx = fx;
        y = bernoulli_mutation(x, rate, rng);
        std::int64_t fy;
        res.counters.offspring_evals += 1;
        switch (evolution) {
        case EvolutionKind::Darwinian:
            fy = p.value(y);
            break;
        case EvolutionKind::Lamarckian: {
            LsResult ls = hillclimb(p, y, rng);
            res.counters.ls_iterations += ls.ls_iterations;
            res.counters.ls_neighbor_evals += ls.neighbor_evals;
            y = std::move(ls.result);
            fy = p.value(y);
            break;
        }
        default: {
            LsResult ls = hillclimb(p, y, rng);
            res.counters.ls_iterations += ls.ls_iterations;
            res.counters.ls_neighbor_evals += ls.neighbor_evals;
            fy = p.value(ls.result);
            break;
        }
        }
        if (fy >= fx) {
            x = std::move(y);
            fx = fy;
            res.success = (fx == opt);
        }
        res.fitness_monotone = res.fitness_monotone && fx >= prev_fx;
    }
    return res;
}

} // namespace evo
