#include <wsrp/decoder.hpp>

#include <algorithm>
#include <string>

#include <wsrp/evaluator.hpp>

namespace wsrp {

InfeasibleVisitError::InfeasibleVisitError(VisitId visit)
    : std::runtime_error("visit " + std::to_string(visit) +
                         " cannot be served even as the only stop of a journey, by either mode"),
      visit_(visit)
{
}

namespace {

    struct Opening {
        Minutes departure;
        Minutes serviceStart;
    };

    // Just-in-time departure for a journey opening at v, or nullopt when the
    // window cannot be met from the depot.
    std::optional<Opening> openAt(const Instance& inst, const Visit& v, Mode mode)
    {
        const Minutes travel = inst.travel.time(mode, inst.depot, v.location);
        const Minutes departure = std::max(inst.dayStart, v.windowStart - travel);
        const Minutes start = std::max(departure + travel, v.windowStart);
        if (start > v.windowEnd)
            return std::nullopt;
        return Opening{departure, start};
    }

} // namespace

Phenotype decode(const Instance& instance, const Genotype& genotype)
{
    Phenotype ph;
    const std::size_t n = genotype.tour.size();
    std::size_t pos = 0;
    while (pos < n) {
        const Visit& first = instance.visits[static_cast<std::size_t>(genotype.tour[pos])];
        Mode mode = genotype.modes[pos];
        auto opening = openAt(instance, first, mode);
        if (!opening) {
            mode = otherMode(mode);
            opening = openAt(instance, first, mode);
            if (!opening)
                throw InfeasibleVisitError(first.id);
            ++ph.modeFallbacks;
        }

        Journey& j = ph.journeys.emplace_back();
        j.mode = mode;
        j.visits.push_back(first.id);
        j.departureTimes.push_back(opening->departure);
        j.serviceStartTimes.push_back(opening->serviceStart);
        Minutes end = opening->serviceStart + first.serviceDuration;
        LocationId at = first.location;
        ++pos;

        for (; pos < n; ++pos) {
            const Visit& next = instance.visits[static_cast<std::size_t>(genotype.tour[pos])];
            const Minutes start = std::max(end + instance.travel.time(mode, at, next.location), next.windowStart);
            if (start > next.windowEnd)
                break;
            j.visits.push_back(next.id);
            j.departureTimes.push_back(end);
            j.serviceStartTimes.push_back(start);
            end = start + next.serviceDuration;
            at = next.location;
        }
        j.departureTimes.push_back(end);
        j.returnTime = end + instance.travel.time(mode, at, instance.depot);
    }

    const Evaluation e = evaluate(instance, ph);
    ph.objective = e.objective;
    ph.characteristics = e.characteristics;
    return ph;
}

} // namespace wsrp
