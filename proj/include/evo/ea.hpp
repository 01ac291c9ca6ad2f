#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evo/bitstring.hpp"
#include "evo/dlb.hpp"
#include "evo/population.hpp"
#include "evo/problem.hpp"
#include "evo/rng.hpp"

namespace evo {

enum class EvolutionKind { Darwinian, Baldwinian, Lamarckian, LB };

/// Evolution type: how offspring are evaluated and whether local-search
/// results replace genotypes.
///  - Darwinian:  offspring evaluated as-is, no local search.
///  - Baldwinian: genotype kept, stored fitness is that of its local optimum.
///  - Lamarckian: genotype replaced by its local optimum.
///  - LB:         stored fitness from the local optimum; the optimum replaces
///                the genotype with probability p_lb.
struct EvolutionType {
    EvolutionKind kind = EvolutionKind::Darwinian;
    double p_lb = 0.0;

    static EvolutionType darwinian() { return {EvolutionKind::Darwinian, 0.0}; }
    static EvolutionType baldwinian() { return {EvolutionKind::Baldwinian, 0.0}; }
    static EvolutionType lamarckian() { return {EvolutionKind::Lamarckian, 0.0}; }
    static EvolutionType lb(double p) { return {EvolutionKind::LB, p}; }

    bool uses_local_search() const { return kind != EvolutionKind::Darwinian; }
    std::string name() const;

    /// Accepts darwin(ian), baldwin(ian), lamarck(ian), lb / l-b.
    static EvolutionKind parse_kind(std::string_view s);
};

std::string_view kind_name(EvolutionKind k);

struct EAConfig {
    std::size_t mu = 50;
    std::size_t lambda = 50;
    double crossover_rate = 0.9;
    /// Per-bit mutation rate; values <= 0 mean the 1/n default.
    double mutation_rate = 0.0;
    EvolutionType evolution = EvolutionType::darwinian();
    /// Offspring-evaluation budget, not counting the mu initial evaluations.
    std::uint64_t budget = 40000;
    std::uint64_t seed = 0;

    double resolved_mutation_rate(std::size_t n) const {
        return mutation_rate > 0.0 ? mutation_rate : 1.0 / static_cast<double>(n);
    }
    void validate(std::size_t n) const;
};

struct EvalCounter {
    std::uint64_t offspring_evals = 0;  // one per evaluated offspring (and per initial individual)
    std::uint64_t ls_neighbor_evals = 0; // actual fitness calls inside local search
    std::uint64_t ls_iterations = 0;     // local-search moves / repair steps
};

struct RunRecord {
    double best_fitness = 0.0;
    /// Solution realising best_fitness: the offspring itself for Darwinian
    /// runs, the local-search output for the other types.
    BitString best_genotype;
    std::vector<std::pair<std::uint64_t, double>> convergence; // (offspring_evals, best fitness)
    std::vector<std::pair<std::uint64_t, double>> diversity;   // (offspring_evals, mean pairwise Hamming)
    std::uint64_t unique_optima = 0;
    EvalCounter counters;
    std::uint64_t generations = 0;
    double wall_time_s = 0.0;
};

/// Each bit copied from a or b with probability 1/2.
BitString uniform_crossover(const BitString& a, const BitString& b, Rng& rng);

/// Each bit flipped independently with probability rate. Sampled via
/// geometric gap skipping, so the cost is proportional to the number of
/// flips rather than to n.
BitString bernoulli_mutation(const BitString& x, double rate, Rng& rng);

/// Sample two parents uniformly with replacement; with probability
/// crossover_rate mutate their crossover, otherwise mutate the first parent.
BitString make_offspring(const Population& pop, const EAConfig& cfg, Rng& rng);

struct OffspringEval {
    Individual individual;
    /// The solution whose evaluation produced individual.fitness (equals the
    /// genotype except for Baldwinian and unreplaced LB offspring).
    BitString solution;
};

OffspringEval evaluate_offspring(BitString y, const EAConfig& cfg, const Problem& problem, Rng& rng,
                                 EvalCounter& ctr);

/// The mu fittest from parents plus offspring; ties at the cutoff fitness are
/// resolved uniformly at random among the tied individuals.
Population select_mu_fittest(const Population& parents, const Population& offspring, std::size_t mu,
                             Rng& rng);

/// The (mu+lambda) EA: random initialisation (mu evaluations), then
/// generations of lambda offspring until the post-initialisation evaluation
/// count reaches the budget at a generation boundary. Deterministic given
/// cfg.seed.
RunRecord run_mu_plus_lambda(const EAConfig& cfg, const Problem& problem);

struct OnePlusOneResult {
    std::uint64_t iterations = 0;
    EvalCounter counters;
    bool success = false;
    /// True iff the parent's stored fitness never decreased (it cannot,
    /// given the f(y) >= f(x) acceptance rule; recorded as an audit).
    bool fitness_monotone = true;
};

/// The (1+1) EA on deceptive leading blocks with standard-bit-mutation rate
/// 1/n and acceptance f(y) >= f(x). Lamarckian runs replace the initial
/// individual and every offspring by their hillclimb result; Baldwinian runs
/// keep genotypes and store the hillclimb result's fitness. Stops when the
/// optimum is reached (for Baldwinian: when some hillclimb result is the
/// all-ones string) or after max_iterations. `initial` forces the starting
/// genotype (testing hook); by default it is uniform random.
OnePlusOneResult run_one_plus_one(const DlbProblem& p, EvolutionKind evolution, std::uint64_t seed,
                                  std::uint64_t max_iterations,
                                  const std::optional<BitString>& initial = std::nullopt);

} // namespace evo
