#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "evo/bitstring.hpp"
#include "evo/errors.hpp"
#include "evo/rng.hpp"

namespace evo {

/// Deceptive leading blocks over length-k blocks of an n-bit string
/// (k >= 2, n a multiple of k). Leading all-ones blocks contribute k each;
/// the first incomplete block contributes k-1 minus its number of ones, so
/// within that block more zeros score higher. Strings made of all-ones
/// blocks followed by an all-zero block are true local optima. The all-ones
/// string is assigned value n, strictly above every other value.
class DlbProblem {
public:
    DlbProblem(std::size_t n, std::size_t k);

    std::size_t dimension() const { return n_; }
    std::size_t block_length() const { return k_; }
    std::size_t num_blocks() const { return n_ / k_; }

    /// 1-based index of the first block that is not all-ones; empty for the
    /// all-ones string.
    std::optional<std::size_t> critical_block(const BitString& x) const;

    std::int64_t value(const BitString& x) const;

private:
    std::size_t n_;
    std::size_t k_;
};

struct LsResult {
    BitString result;
    std::uint64_t ls_iterations = 0;  // hillclimber moves
    std::uint64_t neighbor_evals = 0; // fitness calls: n per scan, final scan included
};

/// Best-improvement hillclimber on the Hamming-1 neighbourhood: evaluate all
/// n neighbours; while the best strictly beats the current value, move to a
/// uniformly random argmax neighbour. Each scan costs n neighbour
/// evaluations, including the final failed one.
LsResult hillclimb(const DlbProblem& p, const BitString& x, Rng& rng);

/// Fitness of the hillclimber's end point, together with the search record;
/// x itself is left unchanged.
std::pair<std::int64_t, LsResult> baldwin_value(const DlbProblem& p, const BitString& x, Rng& rng);

} // namespace evo
