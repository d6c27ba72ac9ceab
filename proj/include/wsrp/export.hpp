#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <wsrp/archive.hpp>
#include <wsrp/run_record.hpp>

namespace wsrp {

// Archive CSV, one row per filled cell sorted by key:
// binEmissions,binStaffCost,binTravelCost,binCarUse,emissions,staffCost,
// travelCost,carUseFraction,fitnessKm,tour,modes
std::string archiveCsv(std::span<const CellEntry> cells);
std::vector<CellEntry> parseArchiveCsv(std::string_view text);

void exportArchive(const Archive& archive, const std::filesystem::path& path);
void exportArchive(std::span<const CellEntry> cells, const std::filesystem::path& path);
std::vector<CellEntry> importArchive(const std::filesystem::path& path);

/// Best distance per (binX, binY) after projecting the 4-D cells onto two
/// characteristics.
struct SliceGrid {
    std::size_t dimX = 0;
    std::size_t dimY = 1;
    int bins = 0;
    // Raw characteristic range of each axis, for tick labels.
    double lowX = 0.0, highX = 1.0, lowY = 0.0, highY = 1.0;
    std::vector<std::optional<Metres>> cells; // index binY * bins + binX

    const std::optional<Metres>& at(int binX, int binY) const
    {
        return cells[static_cast<std::size_t>(binY) * static_cast<std::size_t>(bins) + static_cast<std::size_t>(binX)];
    }
    std::size_t filled() const;
};

SliceGrid slice(std::span<const CellEntry> cells, int binsPerDim, const ArchiveBounds& bounds, std::size_t dimX,
                std::size_t dimY);
/// Throws std::invalid_argument for unknown or equal dimension names.
SliceGrid slice(std::span<const CellEntry> cells, int binsPerDim, const ArchiveBounds& bounds, std::string_view dimX,
                std::string_view dimY);

/// binX,binY,fitnessKm rows for filled cells, row-major from (0,0).
std::string sliceCsv(const SliceGrid& grid);

/// Green (lowest distance) to red (highest) colour for a fitness within
/// [lo, hi]; lo == hi maps to green.
std::string rampColour(Metres fitness, Metres lo, Metres hi);

/// Standalone SVG heat map of a slice.
std::string renderSlice(const SliceGrid& grid);

/// The six unordered pairs of characteristics, in (0,1), (0,2), ... order.
std::vector<std::pair<std::size_t, std::size_t>> featurePairs();

/// Writes <x>__<y>.csv and <x>__<y>.svg for every pair into outDir.
void writeSlices(std::span<const CellEntry> cells, int binsPerDim, const ArchiveBounds& bounds,
                 const std::filesystem::path& outDir);

/// Shortest text that parses back to the same double.
std::string formatDouble(double x);
/// Metres as km with exactly three decimals.
std::string formatKm(Metres m);

} // namespace wsrp
