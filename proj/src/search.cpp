#include <wsrp/search.hpp>

#include <algorithm>

namespace wsrp {

CheckpointRecorder::CheckpointRecorder(std::int64_t budget, std::int64_t count)
    : budget_(budget), step_(std::max<std::int64_t>(1, budget / std::max<std::int64_t>(1, count)))
{
}

void CheckpointRecorder::record(Metres objective)
{
    ++evaluations_;
    best_ = std::min(best_, objective);
    if (evaluations_ % step_ == 0 || evaluations_ == budget_)
        checkpoints_.push_back({evaluations_, best_});
}

} // namespace wsrp
