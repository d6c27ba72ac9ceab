#pragma once

#include <cstddef>

#include <wsrp/domain.hpp>
#include <wsrp/rng.hpp>

namespace wsrp {

/// Uniform random permutation with uniform random mode genes.
Genotype randomGenotype(std::size_t visitCount, Rng& rng);

/// Relocation of the tour entry at `from` so that it ends up at index `to`.
struct TourMove {
    std::size_t from = 0;
    std::size_t to = 0;
    bool operator==(const TourMove&) const = default;
};

/// Uniform over the n(n-1) ordered pairs with from != to. Requires n >= 2.
TourMove drawMove(std::size_t n, Rng& rng);

/// Removes the entry (tour and mode gene together) and reinserts it at `to`.
void applyMove(Genotype& g, TourMove move);

struct MutationConfig {
    // Chance of also flipping one uniformly chosen mode gene.
    double modeFlipProbability = 0.1;
};

/// Tour relocation move, then an optional single mode-gene flip.
Genotype mutate(const Genotype& g, Rng& rng, const MutationConfig& config = {});

/// Order crossover: positions [first, last] are copied from parent1 in place,
/// the remaining visits fill the other positions left to right in the order
/// they appear in parent2. Each visit keeps the mode gene of the parent it was
/// taken from.
Genotype crossoverSection(const Genotype& parent1, const Genotype& parent2, std::size_t first, std::size_t last);

/// crossoverSection with a uniformly drawn section first <= last.
Genotype crossover(const Genotype& parent1, const Genotype& parent2, Rng& rng);

} // namespace wsrp
