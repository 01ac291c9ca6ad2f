#include "evo/population.hpp"

namespace evo {

double population_diversity(const Population& pop) {
    const std::size_t mu = pop.size();
    if (mu < 2) {
        return 0.0;
    }
    const std::size_t n = pop[0].genotype.size();
    std::vector<std::size_t> ones(n, 0);
    for (const auto& ind : pop) {
        if (ind.genotype.size() != n) {
            throw LengthMismatch("population_diversity: genotypes of different length");
        }
        ind.genotype.for_each_set([&](std::size_t j) { ++ones[j]; });
    }
    // sum over unordered pairs of Hamming distances, position by position
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        total += static_cast<double>(ones[j]) * static_cast<double>(mu - ones[j]);
    }
    const double pairs = 0.5 * static_cast<double>(mu) * static_cast<double>(mu - 1);
    return total / pairs;
}

} // namespace evo
