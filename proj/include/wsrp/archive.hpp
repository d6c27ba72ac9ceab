#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <wsrp/domain.hpp>

namespace wsrp {

/// Bin index per characteristic, in kFeatureNames order.
using CellKey = std::array<std::uint16_t, kFeatureDims>;

struct ArchiveBounds {
    std::array<double, kFeatureDims> lower{};
    std::array<double, kFeatureDims> upper{};
    bool operator==(const ArchiveBounds&) const = default;
};

struct ArchiveConfig {
    int binsPerDim = 20;
    // Explicit discretisation bounds; when empty the MAP-Elites run calibrates
    // them from its initial random samples.
    std::optional<ArchiveBounds> bounds;
    double calibrationPadding = 0.1;
};

/// floor((x - lo) / (hi - lo) * bins) per dimension, clamped to [0, bins - 1].
CellKey featureDescriptor(const Characteristics& c, int binsPerDim, const ArchiveBounds& bounds);

/// [min, max] of the samples per dimension, widened by `padding` x range on
/// both sides. Degenerate ranges get a small absolute width so lo < hi holds.
ArchiveBounds calibrateBounds(std::span<const Characteristics> samples, double padding);

struct Elite {
    Genotype genotype;
    Metres fitness = 0;
    Characteristics characteristics;
};

enum class InsertOutcome { Inserted, Replaced, Rejected };

/// Sparse grid holding at most one elite (lowest distance) per cell.
class Archive {
public:
    Archive(int binsPerDim, ArchiveBounds bounds);

    int binsPerDim() const { return bins_; }
    const ArchiveBounds& bounds() const { return bounds_; }
    std::size_t cellCount() const;

    CellKey keyOf(const Characteristics& c) const { return featureDescriptor(c, bins_, bounds_); }

    /// Fills an empty cell, replaces a strictly worse incumbent, otherwise
    /// rejects (ties keep the incumbent).
    InsertOutcome tryInsert(const Genotype& genotype, Metres fitness, const Characteristics& c);

    std::size_t size() const { return elites_.size(); }
    bool empty() const { return elites_.empty(); }

    /// Elites in first-filled order; replacement keeps the slot.
    const Elite& at(std::size_t slot) const { return elites_[slot]; }
    const CellKey& keyAt(std::size_t slot) const { return keys_[slot]; }

    const Elite* find(const CellKey& key) const;

    /// Slots ordered by cell key (lexicographic).
    std::vector<std::size_t> sortedSlots() const;

private:
    static std::uint64_t pack(const CellKey& k);

    int bins_;
    ArchiveBounds bounds_;
    std::vector<Elite> elites_;
    std::vector<CellKey> keys_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

} // namespace wsrp
