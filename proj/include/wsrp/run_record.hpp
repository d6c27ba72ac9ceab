#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <wsrp/archive.hpp>
#include <wsrp/search.hpp>

namespace wsrp {

struct CellEntry {
    CellKey key{};
    Metres fitness = 0;
    Characteristics characteristics;
    Genotype genotype;
    bool operator==(const CellEntry&) const = default;
};

/// Everything one run leaves behind, in archive shape for either algorithm.
struct RunRecord {
    std::string algorithm; // "me" or "ea"
    std::string instanceName;
    std::uint64_t instanceFingerprint = 0;
    std::uint64_t seed = 0;
    std::map<std::string, double> parameters;
    std::int64_t evaluations = 0;
    Metres bestObjective = 0;
    std::vector<Checkpoint> checkpoints;
    int binsPerDim = 0;
    ArchiveBounds bounds;
    std::vector<CellEntry> cells; // sorted by key, one per filled cell

    bool operator==(const RunRecord&) const = default;
};

/// Cell table of an archive, sorted by key.
std::vector<CellEntry> cellTable(const Archive& archive);

/// Projects individuals into a fresh archive with the given grid, keeping the
/// best per cell.
Archive projectIntoArchive(std::span<const Candidate> individuals, int binsPerDim, const ArchiveBounds& bounds);

std::string runRecordToJson(const RunRecord& record);
RunRecord runRecordFromJson(const std::string& text);

inline constexpr const char* kRunRecordFile = "run.json";

void saveRunRecord(const RunRecord& record, const std::filesystem::path& runDir);
RunRecord loadRunRecord(const std::filesystem::path& runDir);

/// Each path is either a run directory (holding run.json) or a directory whose
/// immediate subdirectories are run directories. Results are sorted by path.
std::vector<std::filesystem::path> collectRunDirs(const std::vector<std::filesystem::path>& paths);

} // namespace wsrp
