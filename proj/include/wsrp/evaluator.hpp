#pragma once

#include <wsrp/domain.hpp>

namespace wsrp {

struct Evaluation {
    Metres objective = 0;
    Characteristics characteristics;
};

/// Depot -> visits -> depot distance under the journey's mode.
Metres journeyDistance(const Instance& instance, const Journey& journey);

/// Total distance plus the four characteristics:
///   emissions      = sum of journey km x emissions factor of its mode
///   staffCost      = sum of journey elapsed hours (waiting and service included) x staff rate
///   travelCost     = sum of journey km x cost factor of its mode
///   carUseFraction = car journeys / journeys (one journey per employee)
Evaluation evaluate(const Instance& instance, const Phenotype& phenotype);

} // namespace wsrp
