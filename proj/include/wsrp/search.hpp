#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <wsrp/decoder.hpp>
#include <wsrp/domain.hpp>

namespace wsrp {

/// Best objective seen after a given number of evaluations.
struct Checkpoint {
    std::int64_t evaluations = 0;
    Metres bestObjective = 0;
    bool operator==(const Checkpoint&) const = default;
};

/// Records the best-so-far objective at `count` evenly spaced evaluation
/// counts (every budget/count evaluations, plus the final one).
class CheckpointRecorder {
public:
    explicit CheckpointRecorder(std::int64_t budget, std::int64_t count = 100);

    /// Call once per evaluation, in order.
    void record(Metres objective);

    std::int64_t evaluations() const { return evaluations_; }
    Metres best() const { return best_; }
    const std::vector<Checkpoint>& checkpoints() const { return checkpoints_; }

private:
    std::int64_t budget_;
    std::int64_t step_;
    std::int64_t evaluations_ = 0;
    Metres best_ = std::numeric_limits<Metres>::max();
    std::vector<Checkpoint> checkpoints_;
};

/// Decoded and evaluated candidate.
struct Candidate {
    Genotype genotype;
    Metres fitness = 0;
    Characteristics characteristics;
    int modeFallbacks = 0;
};

inline Candidate evaluateCandidate(const Instance& instance, Genotype genotype)
{
    const Phenotype ph = decode(instance, genotype);
    return {std::move(genotype), ph.objective, ph.characteristics, ph.modeFallbacks};
}

} // namespace wsrp
