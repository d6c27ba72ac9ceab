#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <wsrp/archive.hpp>
#include <wsrp/operators.hpp>
#include <wsrp/search.hpp>

namespace wsrp {

struct MapElitesConfig {
    std::int64_t evaluationBudget = 100000;
    // Evaluations spent on uniform random genotypes before variation starts.
    std::int64_t initCount = 1000;
    double crossoverProbability = 0.5;
    MutationConfig mutation;
    std::uint64_t seed = 0;
    std::int64_t checkpointCount = 100;
};

/// Throws std::invalid_argument for an unusable configuration.
void validate(const MapElitesConfig& config);

struct InsertEvent {
    std::int64_t evaluation = 0; // 1-based evaluation index
    CellKey key{};
    Metres fitness = 0;
    InsertOutcome outcome = InsertOutcome::Rejected;
};

using InsertObserver = std::function<void(const InsertEvent&, const Archive&)>;

struct MapElitesResult {
    Archive archive;
    std::vector<Checkpoint> history;
    std::int64_t evaluations = 0;
    Metres bestObjective = 0;
    int modeFallbacks = 0;
};

/// Bounds calibrated from `samples` uniform random genotypes drawn from a
/// stream determined by (instance, seed) alone, so every run that uses the
/// same calibration seed bins into the same grid.
ArchiveBounds calibrateFromRandomSamples(const Instance& instance, std::int64_t samples, std::uint64_t seed,
                                         double padding = 0.1);

/// MAP-Elites: the first initCount evaluations are random genotypes; every
/// later one picks a uniformly random elite and applies either crossover with
/// a second random elite followed by mutation, or mutation alone. Consumes
/// exactly evaluationBudget evaluations and is reproducible from the seed.
/// Without explicit bounds, the archive is calibrated from the initial
/// random samples before any of them is inserted.
MapElitesResult runMapElites(const Instance& instance, const MapElitesConfig& config,
                             const ArchiveConfig& archiveConfig, const InsertObserver& observer = {});

} // namespace wsrp
