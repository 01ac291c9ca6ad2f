#pragma once

#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "evo/bitstring.hpp"
#include "evo/errors.hpp"

namespace evo {

/// Genotype plus its stored fitness. Depending on the evolution type the
/// stored fitness may be the fitness of the genotype's local optimum rather
/// than of the genotype itself.
struct Individual {
    BitString genotype;
    double fitness = 0.0;
};

using Population = std::vector<Individual>;

/// Mean pairwise Hamming distance over all unordered pairs; 0 for a
/// single-member population. Uses the per-position identity
/// sum_pairs d(a,b) = sum_j c_j (|P| - c_j) with c_j the count of ones at
/// position j, so the cost is O(|P| * n / w) instead of O(|P|^2 * n / w).
double population_diversity(const Population& pop);

/// Set of distinct genotypes attaining the best fitness seen so far; the set
/// resets whenever the best fitness improves.
class UniqueOptimaTracker {
public:
    void observe(double fitness, const BitString& genotype) {
        if (fitness > best_) {
            best_ = fitness;
            set_.clear();
            set_.insert(genotype);
        } else if (fitness == best_) {
            set_.insert(genotype);
        }
    }

    std::size_t count() const { return set_.size(); }
    double best_fitness() const { return best_; }

private:
    double best_ = -std::numeric_limits<double>::infinity();
    std::unordered_set<BitString, BitStringHash> set_;
};

} // namespace evo
