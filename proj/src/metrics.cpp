#include <wsrp/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wsrp {

CellPool buildCellPool(std::span<const RunRecord> runs)
{
    if (runs.empty())
        throw ValidationError("cell pool: no runs");
    const RunRecord& ref = runs.front();
    CellPool pool;
    for (const RunRecord& r : runs) {
        if (r.instanceFingerprint != ref.instanceFingerprint || r.instanceName != ref.instanceName)
            throw ValidationError("cell pool: runs on different instances ('" + ref.instanceName + "' vs '" +
                                  r.instanceName + "')");
        if (r.binsPerDim != ref.binsPerDim || r.bounds != ref.bounds)
            throw ValidationError("cell pool: runs use different archive grids; pooled runs must share bounds");
        for (const CellEntry& c : r.cells) {
            pool.cMax.insert(c.key);
            auto [it, fresh] = pool.bestPerCell.try_emplace(c.key, c.fitness);
            if (!fresh)
                it->second = std::min(it->second, c.fitness);
        }
    }
    return pool;
}

double coverage(const RunRecord& run, const std::set<CellKey>& cMax)
{
    if (cMax.empty())
        throw std::invalid_argument("coverage: empty C_Max");
    std::size_t filled = 0;
    for (const CellEntry& c : run.cells)
        if (cMax.count(c.key))
            ++filled;
    return static_cast<double>(filled) / static_cast<double>(cMax.size());
}

double precision(const RunRecord& run, const std::map<CellKey, Metres>& bestPerCell)
{
    if (run.cells.empty())
        throw std::invalid_argument("precision: run has no filled cells");
    double sum = 0.0;
    for (const CellEntry& c : run.cells) {
        const auto it = bestPerCell.find(c.key);
        if (it == bestPerCell.end())
            throw std::invalid_argument("precision: cell missing from best-per-cell table");
        // A zero-length cell is only possible for a zero-distance instance.
        sum += c.fitness == 0 ? 1.0 : static_cast<double>(it->second) / static_cast<double>(c.fitness);
    }
    return sum / static_cast<double>(run.cells.size());
}

std::string_view magnitudeName(EffectMagnitude m)
{
    switch (m) {
    case EffectMagnitude::Small:
        return "small";
    case EffectMagnitude::Medium:
        return "medium";
    case EffectMagnitude::Large:
        return "large";
    }
    return "?";
}

double varghaDelaneyA(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("Vargha-Delaney A needs two non-empty samples");

    // Mid-ranks over the pooled sample, ranked by descending value so that a
    // higher rank means a lower (better) value.
    struct Tagged {
        double value;
        bool fromA;
    };
    std::vector<Tagged> pooled;
    pooled.reserve(a.size() + b.size());
    for (double x : a)
        pooled.push_back({x, true});
    for (double x : b)
        pooled.push_back({x, false});
    std::sort(pooled.begin(), pooled.end(), [](const Tagged& l, const Tagged& r) { return l.value > r.value; });

    double rankSumA = 0.0;
    for (std::size_t i = 0; i < pooled.size();) {
        std::size_t j = i;
        while (j < pooled.size() && pooled[j].value == pooled[i].value)
            ++j;
        const double midRank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (pooled[k].fromA)
                rankSumA += midRank;
        i = j;
    }
    const double m = static_cast<double>(a.size());
    const double n = static_cast<double>(b.size());
    // rankSumA is a sum of half-integers, so the pair count below is exact.
    const double wins = rankSumA - m * (m + 1.0) / 2.0;
    return wins / (m * n);
}

EffectMagnitude effectMagnitude(double aHat)
{
    // Closed upper band edges; the slack absorbs representation error so that
    // e.g. 64/100 lands in the medium band.
    constexpr double kSlack = 1e-12;
    const double d = std::abs(aHat - 0.5);
    if (d <= 0.06 + kSlack)
        return EffectMagnitude::Small;
    if (d <= 0.14 + kSlack)
        return EffectMagnitude::Medium;
    return EffectMagnitude::Large;
}

EffectSize varghaDelaney(std::span<const double> a, std::span<const double> b)
{
    const double aHat = varghaDelaneyA(a, b);
    return {aHat, effectMagnitude(aHat)};
}

std::string effectArrows(const EffectSize& e)
{
    if (e.aHat == 0.5)
        return "<->";
    const std::size_t count = e.magnitude == EffectMagnitude::Small ? 1 : e.magnitude == EffectMagnitude::Medium ? 2 : 3;
    return std::string(count, e.aHat > 0.5 ? '^' : 'v');
}

} // namespace wsrp
