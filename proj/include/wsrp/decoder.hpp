#pragma once

#include <stdexcept>

#include <wsrp/domain.hpp>

namespace wsrp {

/// A visit that cannot be served even as the only stop of a fresh journey,
/// under either transport mode.
class InfeasibleVisitError : public std::runtime_error {
public:
    explicit InfeasibleVisitError(VisitId visit);
    VisitId visit() const { return visit_; }

private:
    VisitId visit_;
};

/// Splits the grand tour into journeys. Visits are taken in tour order; a
/// journey adopts the mode gene of its opening visit and keeps appending the
/// next visit while its service can start inside its window when travelling
/// from the previous visit under that mode. Employees may wait for a window to
/// open, and each journey leaves the depot as late as possible.
///
/// Throws InfeasibleVisitError when a visit cannot open a journey under either
/// mode. Precondition: isValidGenotype(genotype, instance.visitCount()).
Phenotype decode(const Instance& instance, const Genotype& genotype);

} // namespace wsrp
