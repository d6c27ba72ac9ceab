#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <wsrp/domain.hpp>

namespace wsrp {

/// Parameters of the synthetic instance generator. Visits are scattered
/// uniformly over a square city with the depot at its centre; car distances
/// are straight-line times a road circuity factor, public transport is the
/// car distance times a detour factor and runs slower.
struct GeneratorConfig {
    int visitCount = 60;
    WindowScheme timeWindowScheme = WindowScheme::One;
    std::uint64_t seed = 0;
    double areaExtentKm = 12.0;
    double carSpeedKmH = 25.0;
    double ptSpeedKmH = 17.0;
    double ptDetourFactor = 1.4;
    double roadCircuity = 1.2;
    Minutes serviceDuration = 30;
    Minutes dayLength = 480;
    CostParams costParams;
    std::string name; // defaults to "syn<visits>-<scheme>-s<seed>"
};

struct GenerationReport {
    Instance instance;
    // Number of times the window assignment was redrawn because a visit could
    // not be served on its own by car.
    int windowRetries = 0;
};

GenerationReport generateInstanceWithReport(const GeneratorConfig& config);

/// Deterministic in config: equal configs give identical instances.
inline Instance generateInstance(const GeneratorConfig& config) { return generateInstanceWithReport(config).instance; }

/// JSON instance document (distances in km with three decimals, integer minutes).
std::string instanceToJson(const Instance& instance);
Instance instanceFromJson(const std::string& text);

void saveInstance(const Instance& instance, const std::filesystem::path& path);
/// Throws ValidationError (with a field path) on schema or invariant violations.
Instance loadInstance(const std::filesystem::path& path);

/// FNV-1a over the canonical JSON form; used to tie run records to instances.
std::uint64_t instanceFingerprint(const Instance& instance);

} // namespace wsrp
