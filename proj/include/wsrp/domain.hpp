#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wsrp {

// Distances are fixed-point: one unit is one metre (km with three decimals).
using Metres = std::int64_t;
// Times are whole minutes from the start of the working day.
using Minutes = std::int32_t;
using VisitId = std::int32_t;
using LocationId = std::int32_t;

inline double toKm(Metres m) { return static_cast<double>(m) / 1000.0; }

enum class Mode : std::uint8_t { Car = 0, PublicTransport = 1 };

inline constexpr std::array<Mode, 2> kModes{Mode::Car, Mode::PublicTransport};

inline Mode otherMode(Mode m) { return m == Mode::Car ? Mode::PublicTransport : Mode::Car; }
inline char modeChar(Mode m) { return m == Mode::Car ? 'C' : 'P'; }
std::string_view modeName(Mode m);

/// Time-window scheme used to build an instance: 1, 2, 4 or 8 equal windows
/// across the day, or a random mixture of 8h/4h/2h/1h windows.
enum class WindowScheme : std::uint8_t { One, Two, Four, Eight, Random };

std::string windowSchemeName(WindowScheme s);
/// Throws std::invalid_argument for anything other than "1", "2", "4", "8" or "rnd".
WindowScheme parseWindowScheme(std::string_view s);

/// Raised when input data (instance files, run records, configs) is malformed.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Visit {
    VisitId id = 0;
    LocationId location = 0;
    Minutes serviceDuration = 0;
    // The window bounds the time service may START, both ends inclusive.
    Minutes windowStart = 0;
    Minutes windowEnd = 0;

    bool operator==(const Visit&) const = default;
};

/// Square distance/time matrices for both transport modes over all locations
/// (depot included). Row-major, indexed [from * size + to].
class TravelModel {
public:
    TravelModel() = default;
    TravelModel(std::size_t locations, std::array<std::vector<Metres>, 2> distances,
                std::array<std::vector<Minutes>, 2> times);

    std::size_t locationCount() const { return size_; }

    Metres distance(Mode m, LocationId from, LocationId to) const
    {
        return distances_[index(m)][static_cast<std::size_t>(from) * size_ + static_cast<std::size_t>(to)];
    }
    Minutes time(Mode m, LocationId from, LocationId to) const
    {
        return times_[index(m)][static_cast<std::size_t>(from) * size_ + static_cast<std::size_t>(to)];
    }

    const std::vector<Metres>& distances(Mode m) const { return distances_[index(m)]; }
    const std::vector<Minutes>& times(Mode m) const { return times_[index(m)]; }

    bool operator==(const TravelModel&) const = default;

private:
    static std::size_t index(Mode m) { return static_cast<std::size_t>(m); }

    std::size_t size_ = 0;
    std::array<std::vector<Metres>, 2> distances_;
    std::array<std::vector<Minutes>, 2> times_;
};

struct CostParams {
    double carEmissionsPerKm = 140.0; // g CO2
    double ptEmissionsPerKm = 80.0;   // g CO2
    double staffRatePerHour = 15.0;
    double carCostPerKm = 0.45;
    double ptCostPerKm = 0.20;

    double emissionsPerKm(Mode m) const { return m == Mode::Car ? carEmissionsPerKm : ptEmissionsPerKm; }
    double costPerKm(Mode m) const { return m == Mode::Car ? carCostPerKm : ptCostPerKm; }

    bool operator==(const CostParams&) const = default;
};

struct Instance {
    std::string name;
    std::vector<Visit> visits; // visits[i].id == i
    LocationId depot = 0;
    Minutes dayStart = 0;
    Minutes dayEnd = 480;
    TravelModel travel;
    CostParams costParams;
    WindowScheme timeWindowScheme = WindowScheme::One;

    std::size_t visitCount() const { return visits.size(); }

    bool operator==(const Instance&) const = default;
};

/// Throws ValidationError describing the first broken invariant.
void validateInstance(const Instance& instance);

/// Grand tour plus one transport-mode gene per tour position. The gene at
/// position i belongs to the visit at tour[i] and moves with it.
struct Genotype {
    std::vector<VisitId> tour;
    std::vector<Mode> modes;

    std::size_t size() const { return tour.size(); }
    bool operator==(const Genotype&) const = default;
};

bool isValidGenotype(const Genotype& g, std::size_t visitCount);

/// "3;0;2;1" and "CPPC" encodings used in exports.
std::string encodeTour(const Genotype& g);
std::string encodeModes(const Genotype& g);
Genotype decodeGenotypeText(std::string_view tour, std::string_view modes);

struct Journey {
    Mode mode = Mode::Car;
    std::vector<VisitId> visits;
    // departureTimes[0] leaves the depot, departureTimes[k] leaves visits[k-1];
    // the last entry is the departure back to the depot.
    std::vector<Minutes> departureTimes;
    std::vector<Minutes> serviceStartTimes;
    Minutes returnTime = 0;

    Minutes elapsed() const { return returnTime - departureTimes.front(); }
    bool operator==(const Journey&) const = default;
};

struct Characteristics {
    double emissions = 0.0; // grams CO2
    double staffCost = 0.0;
    double travelCost = 0.0;
    double carUseFraction = 0.0;

    bool operator==(const Characteristics&) const = default;
};

inline constexpr std::size_t kFeatureDims = 4;
inline constexpr std::array<std::string_view, kFeatureDims> kFeatureNames{"emissions", "staffCost", "travelCost",
                                                                           "carUseFraction"};

inline std::array<double, kFeatureDims> featureVector(const Characteristics& c)
{
    return {c.emissions, c.staffCost, c.travelCost, c.carUseFraction};
}

/// Index into kFeatureNames, or nullopt for an unknown name.
std::optional<std::size_t> featureIndex(std::string_view name);

struct Phenotype {
    std::vector<Journey> journeys;
    Metres objective = 0;
    Characteristics characteristics;
    // Journeys whose opening visit had to use the other mode to be feasible.
    int modeFallbacks = 0;

    double objectiveKm() const { return toKm(objective); }
    bool operator==(const Phenotype&) const = default;
};

enum class ViolationKind {
    EmptyJourney,
    UnknownVisit,
    DuplicateVisit,
    MissingVisit,
    WindowViolation,
    TimingInconsistent,
    ObjectiveMismatch,
};

struct Violation {
    ViolationKind kind;
    int journey = -1;  // -1 when not tied to a journey
    VisitId visit = -1; // -1 when not tied to a visit
    std::string message;
};

/// Checks every journey/phenotype invariant against the instance. An empty
/// result means the phenotype is feasible and internally consistent.
std::vector<Violation> validatePhenotype(const Instance& instance, const Phenotype& phenotype);

} // namespace wsrp
