#include <wsrp/evaluator.hpp>

namespace wsrp {

Metres journeyDistance(const Instance& instance, const Journey& journey)
{
    Metres d = 0;
    LocationId at = instance.depot;
    for (VisitId v : journey.visits) {
        const LocationId next = instance.visits[static_cast<std::size_t>(v)].location;
        d += instance.travel.distance(journey.mode, at, next);
        at = next;
    }
    return d + instance.travel.distance(journey.mode, at, instance.depot);
}

Evaluation evaluate(const Instance& instance, const Phenotype& phenotype)
{
    // Integer totals per mode first, so the floating-point result does not
    // depend on journey order.
    std::array<Metres, 2> metres{0, 0};
    std::int64_t elapsedMinutes = 0;
    std::size_t carJourneys = 0;
    for (const Journey& j : phenotype.journeys) {
        metres[static_cast<std::size_t>(j.mode)] += journeyDistance(instance, j);
        elapsedMinutes += j.elapsed();
        if (j.mode == Mode::Car)
            ++carJourneys;
    }

    const CostParams& cp = instance.costParams;
    Evaluation e;
    e.objective = metres[0] + metres[1];
    const double carKm = toKm(metres[0]);
    const double ptKm = toKm(metres[1]);
    e.characteristics.emissions = carKm * cp.carEmissionsPerKm + ptKm * cp.ptEmissionsPerKm;
    e.characteristics.staffCost = static_cast<double>(elapsedMinutes) / 60.0 * cp.staffRatePerHour;
    e.characteristics.travelCost = carKm * cp.carCostPerKm + ptKm * cp.ptCostPerKm;
    e.characteristics.carUseFraction =
        phenotype.journeys.empty()
            ? 0.0
            : static_cast<double>(carJourneys) / static_cast<double>(phenotype.journeys.size());
    return e;
}

} // namespace wsrp
