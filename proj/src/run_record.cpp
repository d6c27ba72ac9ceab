#include <wsrp/run_record.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wsrp {

using nlohmann::json;

std::vector<CellEntry> cellTable(const Archive& archive)
{
    std::vector<CellEntry> cells;
    cells.reserve(archive.size());
    for (std::size_t slot : archive.sortedSlots()) {
        const Elite& e = archive.at(slot);
        cells.push_back({archive.keyAt(slot), e.fitness, e.characteristics, e.genotype});
    }
    return cells;
}

Archive projectIntoArchive(std::span<const Candidate> individuals, int binsPerDim, const ArchiveBounds& bounds)
{
    Archive archive(binsPerDim, bounds);
    for (const Candidate& c : individuals)
        archive.tryInsert(c.genotype, c.fitness, c.characteristics);
    return archive;
}

namespace {

    json boundsJson(const std::array<double, kFeatureDims>& v)
    {
        json out = json::object();
        for (std::size_t d = 0; d < kFeatureDims; ++d)
            out[std::string(kFeatureNames[d])] = v[d];
        return out;
    }

    std::array<double, kFeatureDims> boundsFrom(const json& j)
    {
        std::array<double, kFeatureDims> v{};
        for (std::size_t d = 0; d < kFeatureDims; ++d)
            v[d] = j.at(std::string(kFeatureNames[d])).get<double>();
        return v;
    }

} // namespace

std::string runRecordToJson(const RunRecord& r)
{
    json doc;
    doc["algorithm"] = r.algorithm;
    doc["instance"] = {{"name", r.instanceName}, {"fingerprint", r.instanceFingerprint}};
    doc["seed"] = r.seed;
    doc["parameters"] = r.parameters;
    doc["evaluations"] = r.evaluations;
    doc["bestObjectiveKm"] = toKm(r.bestObjective);
    json cps = json::array();
    for (const Checkpoint& c : r.checkpoints)
        cps.push_back({c.evaluations, toKm(c.bestObjective)});
    doc["checkpoints"] = std::move(cps);
    doc["archive"] = {{"binsPerDim", r.binsPerDim}, {"lower", boundsJson(r.bounds.lower)},
                      {"upper", boundsJson(r.bounds.upper)}};
    json cells = json::array();
    for (const CellEntry& c : r.cells) {
        cells.push_back({{"key", c.key},
                         {"fitnessKm", toKm(c.fitness)},
                         {"characteristics", featureVector(c.characteristics)},
                         {"tour", encodeTour(c.genotype)},
                         {"modes", encodeModes(c.genotype)}});
    }
    doc["cells"] = std::move(cells);
    return doc.dump(1) + "\n";
}

RunRecord runRecordFromJson(const std::string& text)
{
    try {
        const json doc = json::parse(text);
        const auto metres = [](const json& km) { return static_cast<Metres>(std::llround(km.get<double>() * 1000.0)); };
        RunRecord r;
        r.algorithm = doc.at("algorithm").get<std::string>();
        r.instanceName = doc.at("instance").at("name").get<std::string>();
        r.instanceFingerprint = doc.at("instance").at("fingerprint").get<std::uint64_t>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.parameters = doc.at("parameters").get<std::map<std::string, double>>();
        r.evaluations = doc.at("evaluations").get<std::int64_t>();
        r.bestObjective = metres(doc.at("bestObjectiveKm"));
        for (const json& c : doc.at("checkpoints"))
            r.checkpoints.push_back({c.at(0).get<std::int64_t>(), metres(c.at(1))});
        const json& a = doc.at("archive");
        r.binsPerDim = a.at("binsPerDim").get<int>();
        r.bounds.lower = boundsFrom(a.at("lower"));
        r.bounds.upper = boundsFrom(a.at("upper"));
        for (const json& c : doc.at("cells")) {
            CellEntry e;
            e.key = c.at("key").get<CellKey>();
            e.fitness = metres(c.at("fitnessKm"));
            const auto x = c.at("characteristics").get<std::array<double, kFeatureDims>>();
            e.characteristics = {x[0], x[1], x[2], x[3]};
            e.genotype = decodeGenotypeText(c.at("tour").get<std::string>(), c.at("modes").get<std::string>());
            r.cells.push_back(std::move(e));
        }
        return r;
    }
    catch (const json::exception& e) {
        throw ValidationError(std::string("run record: ") + e.what());
    }
}

void saveRunRecord(const RunRecord& record, const std::filesystem::path& runDir)
{
    std::filesystem::create_directories(runDir);
    const auto path = runDir / kRunRecordFile;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << runRecordToJson(record);
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

RunRecord loadRunRecord(const std::filesystem::path& runDir)
{
    const auto path = runDir / kRunRecordFile;
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open run record '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return runRecordFromJson(buf.str());
    }
    catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

std::vector<std::filesystem::path> collectRunDirs(const std::vector<std::filesystem::path>& paths)
{
    namespace fs = std::filesystem;
    std::vector<fs::path> out;
    for (const fs::path& p : paths) {
        if (fs::is_regular_file(p / kRunRecordFile)) {
            out.push_back(p);
            continue;
        }
        if (!fs::is_directory(p))
            throw std::runtime_error("'" + p.string() + "' is not a run directory");
        std::vector<fs::path> found;
        for (const auto& entry : fs::directory_iterator(p))
            if (entry.is_directory() && fs::is_regular_file(entry.path() / kRunRecordFile))
                found.push_back(entry.path());
        if (found.empty())
            throw std::runtime_error("'" + p.string() + "' contains no run records");
        std::sort(found.begin(), found.end());
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

} // namespace wsrp
