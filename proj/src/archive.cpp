#include <wsrp/archive.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wsrp {

CellKey featureDescriptor(const Characteristics& c, int binsPerDim, const ArchiveBounds& bounds)
{
    const auto x = featureVector(c);
    CellKey key{};
    for (std::size_t d = 0; d < kFeatureDims; ++d) {
        const double scaled = (x[d] - bounds.lower[d]) / (bounds.upper[d] - bounds.lower[d]) * binsPerDim;
        const double bin = std::clamp(std::floor(scaled), 0.0, static_cast<double>(binsPerDim - 1));
        key[d] = static_cast<std::uint16_t>(bin);
    }
    return key;
}

ArchiveBounds calibrateBounds(std::span<const Characteristics> samples, double padding)
{
    if (samples.empty())
        throw std::invalid_argument("calibrateBounds: no samples");
    ArchiveBounds b;
    b.lower.fill(INFINITY);
    b.upper.fill(-INFINITY);
    for (const Characteristics& c : samples) {
        const auto x = featureVector(c);
        for (std::size_t d = 0; d < kFeatureDims; ++d) {
            b.lower[d] = std::min(b.lower[d], x[d]);
            b.upper[d] = std::max(b.upper[d], x[d]);
        }
    }
    for (std::size_t d = 0; d < kFeatureDims; ++d) {
        const double range = b.upper[d] - b.lower[d];
        double pad = range * padding;
        if (!(pad > 0.0))
            pad = std::max(std::abs(b.lower[d]) * padding, 1e-6);
        b.lower[d] -= pad;
        b.upper[d] += pad;
    }
    return b;
}

Archive::Archive(int binsPerDim, ArchiveBounds bounds) : bins_(binsPerDim), bounds_(bounds)
{
    if (binsPerDim < 1 || binsPerDim > 65535)
        throw std::invalid_argument("binsPerDim must be in [1, 65535]");
    for (std::size_t d = 0; d < kFeatureDims; ++d)
        if (!(bounds.lower[d] < bounds.upper[d]))
            throw std::invalid_argument("archive bounds: lower must be below upper for " +
                                        std::string(kFeatureNames[d]));
}

std::size_t Archive::cellCount() const
{
    std::size_t cells = 1;
    for (std::size_t d = 0; d < kFeatureDims; ++d)
        cells *= static_cast<std::size_t>(bins_);
    return cells;
}

std::uint64_t Archive::pack(const CellKey& k)
{
    std::uint64_t code = 0;
    for (auto b : k)
        code = (code << 16) | b;
    return code;
}

InsertOutcome Archive::tryInsert(const Genotype& genotype, Metres fitness, const Characteristics& c)
{
    const CellKey key = keyOf(c);
    const auto [it, fresh] = index_.try_emplace(pack(key), elites_.size());
    if (fresh) {
        elites_.push_back({genotype, fitness, c});
        keys_.push_back(key);
        return InsertOutcome::Inserted;
    }
    Elite& incumbent = elites_[it->second];
    if (fitness < incumbent.fitness) {
        incumbent = {genotype, fitness, c};
        return InsertOutcome::Replaced;
    }
    return InsertOutcome::Rejected;
}

const Elite* Archive::find(const CellKey& key) const
{
    auto it = index_.find(pack(key));
    return it == index_.end() ? nullptr : &elites_[it->second];
}

std::vector<std::size_t> Archive::sortedSlots() const
{
    std::vector<std::size_t> slots(elites_.size());
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    std::sort(slots.begin(), slots.end(), [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
    return slots;
}

} // namespace wsrp
