#pragma once

#include <map>
#include <set>
#include <span>
#include <string>

#include <wsrp/run_record.hpp>

namespace wsrp {

/// Filled cells and best-ever distance per cell across a pool of runs on one
/// instance (all algorithms, all seeds).
struct CellPool {
    std::set<CellKey> cMax;
    std::map<CellKey, Metres> bestPerCell;
};

/// Throws ValidationError when runs disagree on instance or archive grid.
CellPool buildCellPool(std::span<const RunRecord> runs);

/// |filled(run) ∩ cMax| / |cMax|.
double coverage(const RunRecord& run, const std::set<CellKey>& cMax);

/// Mean over the run's filled cells of bestPerCell[cell] / run fitness[cell].
double precision(const RunRecord& run, const std::map<CellKey, Metres>& bestPerCell);

enum class EffectMagnitude { Small, Medium, Large };

std::string_view magnitudeName(EffectMagnitude m);

struct EffectSize {
    double aHat = 0.5;
    EffectMagnitude magnitude = EffectMagnitude::Small;
};

/// Vargha-Delaney A for minimisation: probability that a value drawn from A
/// is lower than one drawn from B, ties counting one half. Values above 0.5
/// favour A. Throws std::invalid_argument on an empty sample.
double varghaDelaneyA(std::span<const double> a, std::span<const double> b);

/// |aHat - 0.5| <= 0.06 small, <= 0.14 medium, otherwise large.
EffectMagnitude effectMagnitude(double aHat);

EffectSize varghaDelaney(std::span<const double> a, std::span<const double> b);

/// Arrow notation: up arrows when A wins, down when B wins, one to three by
/// magnitude, "<->" for exactly 0.5.
std::string effectArrows(const EffectSize& e);

} // namespace wsrp
