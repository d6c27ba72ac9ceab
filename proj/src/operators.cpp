#include <wsrp/operators.hpp>

#include <algorithm>
#include <cassert>

namespace wsrp {

Genotype randomGenotype(std::size_t visitCount, Rng& rng)
{
    Genotype g;
    g.tour.resize(visitCount);
    for (std::size_t i = 0; i < visitCount; ++i)
        g.tour[i] = static_cast<VisitId>(i);
    // Fisher-Yates
    for (std::size_t i = visitCount; i > 1; --i)
        std::swap(g.tour[i - 1], g.tour[rng.index(i)]);
    g.modes.resize(visitCount);
    for (auto& m : g.modes)
        m = rng.bernoulli(0.5) ? Mode::Car : Mode::PublicTransport;
    return g;
}

TourMove drawMove(std::size_t n, Rng& rng)
{
    assert(n >= 2);
    const std::size_t from = rng.index(n);
    std::size_t to = rng.index(n - 1);
    if (to >= from)
        ++to;
    return {from, to};
}

void applyMove(Genotype& g, TourMove move)
{
    const auto shift = [&](auto& v) {
        auto first = v.begin();
        if (move.from < move.to)
            std::rotate(first + static_cast<std::ptrdiff_t>(move.from), first + static_cast<std::ptrdiff_t>(move.from) + 1,
                        first + static_cast<std::ptrdiff_t>(move.to) + 1);
        else if (move.to < move.from)
            std::rotate(first + static_cast<std::ptrdiff_t>(move.to), first + static_cast<std::ptrdiff_t>(move.from),
                        first + static_cast<std::ptrdiff_t>(move.from) + 1);
    };
    shift(g.tour);
    shift(g.modes);
}

Genotype mutate(const Genotype& g, Rng& rng, const MutationConfig& config)
{
    Genotype child = g;
    const std::size_t n = child.size();
    if (n >= 2)
        applyMove(child, drawMove(n, rng));
    if (n >= 1 && rng.bernoulli(config.modeFlipProbability)) {
        Mode& m = child.modes[rng.index(n)];
        m = otherMode(m);
    }
    return child;
}

Genotype crossoverSection(const Genotype& parent1, const Genotype& parent2, std::size_t first, std::size_t last)
{
    const std::size_t n = parent1.size();
    assert(parent2.size() == n && first <= last && last < n);

    Genotype child;
    child.tour.resize(n);
    child.modes.resize(n);
    std::vector<bool> taken(n, false);
    for (std::size_t i = first; i <= last; ++i) {
        child.tour[i] = parent1.tour[i];
        child.modes[i] = parent1.modes[i];
        taken[static_cast<std::size_t>(parent1.tour[i])] = true;
    }
    std::size_t out = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const VisitId v = parent2.tour[k];
        if (taken[static_cast<std::size_t>(v)])
            continue;
        if (out == first)
            out = last + 1;
        child.tour[out] = v;
        child.modes[out] = parent2.modes[k];
        ++out;
    }
    return child;
}

Genotype crossover(const Genotype& parent1, const Genotype& parent2, Rng& rng)
{
    const std::size_t n = parent1.size();
    if (n == 0)
        return parent1;
    std::size_t a = rng.index(n);
    std::size_t b = rng.index(n);
    if (a > b)
        std::swap(a, b);
    return crossoverSection(parent1, parent2, a, b);
}

} // namespace wsrp
