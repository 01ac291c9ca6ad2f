#include "evo/dlb.hpp"

#include <string>
#include <vector>

namespace evo {

DlbProblem::DlbProblem(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k < 2) {
        throw ConfigError("DlbProblem: block length must be >= 2");
    }
    if (n == 0 || n % k != 0) {
        throw ConfigError("DlbProblem: n=" + std::to_string(n) + " is not a positive multiple of k=" +
                          std::to_string(k));
    }
}

std::optional<std::size_t> DlbProblem::critical_block(const BitString& x) const {
    if (x.size() != n_) {
        throw LengthMismatch("critical_block: genotype length != n");
    }
    for (std::size_t b = 0; b < num_blocks(); ++b) {
        for (std::size_t i = b * k_; i < (b + 1) * k_; ++i) {
            if (!x.get(i)) {
                return b + 1;
            }
        }
    }
    return std::nullopt;
}

std::int64_t DlbProblem::value(const BitString& x) const {
    if (x.size() != n_) {
        throw LengthMismatch("value: genotype length != n");
    }
    for (std::size_t b = 0; b < num_blocks(); ++b) {
        std::size_t ones = 0;
        bool full = true;
        for (std::size_t i = b * k_; i < (b + 1) * k_; ++i) {
            if (x.get(i)) {
                ++ones;
            } else {
                full = false;
            }
        }
        if (!full) {
            return static_cast<std::int64_t>(k_ * b) +
                   static_cast<std::int64_t>(k_ - 1 - ones);
        }
    }
    return static_cast<std::int64_t>(n_);
}

LsResult hillclimb(const DlbProblem& p, const BitString& start, Rng& rng) {
    const std::size_t n = p.dimension();
    const std::size_t k = p.block_length();
    const std::size_t nb = p.num_blocks();
    if (start.size() != n) {
        throw LengthMismatch("hillclimb: genotype length != n");
    }

    BitString x = start;
    std::vector<std::size_t> ones(nb, 0);
    x.for_each_set([&](std::size_t i) { ++ones[i / k]; });
    std::size_t c0 = 0; // first non-full block, == nb at the optimum
    while (c0 < nb && ones[c0] == k) {
        ++c0;
    }

    std::uint64_t moves = 0;
    std::uint64_t evals = 0;
    std::vector<std::size_t> args;

    for (;;) {
        evals += n;
        if (c0 == nb) {
            break; // optimum: every neighbour is strictly worse
        }
        const std::int64_t cur = static_cast<std::int64_t>(k * c0) +
                                 static_cast<std::int64_t>(k - 1 - ones[c0]);

        // Value reached when the critical block gets completed by one flip:
        // the next non-full block becomes critical.
        std::int64_t completed_value = static_cast<std::int64_t>(n);
        if (ones[c0] + 1 == k) {
            std::size_t c2 = c0 + 1;
            while (c2 < nb && ones[c2] == k) {
                ++c2;
            }
            if (c2 < nb) {
                completed_value = static_cast<std::int64_t>(k * c2) +
                                  static_cast<std::int64_t>(k - 1 - ones[c2]);
            }
        }

        std::int64_t best = cur;
        args.clear();
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t b = i / k;
            std::int64_t nv;
            if (b < c0) {
                nv = static_cast<std::int64_t>(k * b); // breaks a full block
            } else if (b > c0) {
                nv = cur; // bits past the critical block do not matter
            } else if (x.get(i)) {
                nv = cur + 1; // deceptive: dropping a one scores higher
            } else {
                nv = (ones[c0] + 1 == k) ? completed_value : cur - 1;
            }
            if (nv <= cur) {
                continue;
            }
            if (nv > best) {
                best = nv;
                args.clear();
                args.push_back(i);
            } else if (nv == best) {
                args.push_back(i);
            }
        }
        if (best <= cur) {
            break;
        }
        const std::size_t move = (args.size() == 1) ? args[0] : args[rand_below(rng, args.size())];
        const std::size_t b = move / k;
        if (x.get(move)) {
            x.set(move, false);
            --ones[b];
        } else {
            x.set(move, true);
            ++ones[b];
            while (c0 < nb && ones[c0] == k) {
                ++c0;
            }
        }
        ++moves;
    }
    return {std::move(x), moves, evals};
}

std::pair<std::int64_t, LsResult> baldwin_value(const DlbProblem& p, const BitString& x, Rng& rng) {
    LsResult ls = hillclimb(p, x, rng);
    const std::int64_t v = p.value(ls.result);
    return {v, std::move(ls)};
}

} // namespace evo
