#include <wsrp/instances.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <wsrp/rng.hpp>

namespace wsrp {

namespace {

    using nlohmann::json;

    constexpr int kMaxWindowRetries = 1000;

    void checkConfig(const GeneratorConfig& c)
    {
        if (c.visitCount < 1)
            throw std::invalid_argument("visitCount must be at least 1");
        if (!(c.carSpeedKmH > 0.0) || !(c.ptSpeedKmH > 0.0))
            throw std::invalid_argument("travel speeds must be positive");
        if (!(c.ptDetourFactor >= 1.0))
            throw std::invalid_argument("ptDetourFactor must be >= 1");
        if (!(c.roadCircuity >= 1.0))
            throw std::invalid_argument("roadCircuity must be >= 1");
        if (!(c.areaExtentKm > 0.0))
            throw std::invalid_argument("areaExtentKm must be positive");
        if (c.serviceDuration <= 0 || c.dayLength <= 0 || c.dayLength % 8 != 0)
            throw std::invalid_argument("serviceDuration must be positive and dayLength a positive multiple of 8");
    }

    int windowCount(WindowScheme s)
    {
        switch (s) {
        case WindowScheme::One:
            return 1;
        case WindowScheme::Two:
            return 2;
        case WindowScheme::Four:
            return 4;
        case WindowScheme::Eight:
            return 8;
        case WindowScheme::Random:
            break;
        }
        return 0;
    }

    Minutes travelMinutes(Metres d, double speedKmH)
    {
        return static_cast<Minutes>(std::ceil(static_cast<double>(d) * 60.0 / (speedKmH * 1000.0)));
    }

    void assignWindows(std::vector<Visit>& visits, WindowScheme scheme, Minutes dayLength, Rng& rng)
    {
        for (Visit& v : visits) {
            int count = windowCount(scheme);
            if (count == 0) {
                // Window lengths of 8, 4, 2 or 1 hours (for a 480 min day), equally likely.
                static constexpr int kCounts[] = {1, 2, 4, 8};
                count = kCounts[rng.index(4)];
            }
            const Minutes length = dayLength / count;
            const auto slot = static_cast<Minutes>(rng.index(static_cast<std::size_t>(count)));
            v.windowStart = slot * length;
            v.windowEnd = (slot + 1) * length;
        }
    }

} // namespace

GenerationReport generateInstanceWithReport(const GeneratorConfig& config)
{
    checkConfig(config);
    const auto n = static_cast<std::size_t>(config.visitCount);
    const std::size_t locations = n + 1;

    // Stream 0 places locations, streams 1.. draw window assignments.
    Rng placement(config.seed, 0);
    std::vector<std::pair<double, double>> points(locations);
    points[0] = {config.areaExtentKm / 2.0, config.areaExtentKm / 2.0};
    for (std::size_t i = 1; i < locations; ++i) {
        const double x = placement.uniform() * config.areaExtentKm;
        const double y = placement.uniform() * config.areaExtentKm;
        points[i] = {x, y};
    }

    std::array<std::vector<Metres>, 2> dist{std::vector<Metres>(locations * locations, 0),
                                           std::vector<Metres>(locations * locations, 0)};
    std::array<std::vector<Minutes>, 2> time{std::vector<Minutes>(locations * locations, 0),
                                            std::vector<Minutes>(locations * locations, 0)};
    for (std::size_t a = 0; a < locations; ++a) {
        for (std::size_t b = 0; b < locations; ++b) {
            if (a == b)
                continue;
            const double dx = points[a].first - points[b].first;
            const double dy = points[a].second - points[b].second;
            const double km = std::sqrt(dx * dx + dy * dy) * config.roadCircuity;
            const auto car = static_cast<Metres>(std::llround(km * 1000.0));
            const auto pt = static_cast<Metres>(std::llround(static_cast<double>(car) * config.ptDetourFactor));
            const std::size_t k = a * locations + b;
            dist[0][k] = car;
            dist[1][k] = pt;
            time[0][k] = travelMinutes(car, config.carSpeedKmH);
            time[1][k] = travelMinutes(pt, config.ptSpeedKmH);
        }
    }

    GenerationReport report;
    Instance& inst = report.instance;
    inst.name = config.name.empty() ? "syn" + std::to_string(n) + "-" + windowSchemeName(config.timeWindowScheme) +
                                          "-s" + std::to_string(config.seed)
                                    : config.name;
    inst.depot = 0;
    inst.dayStart = 0;
    inst.dayEnd = config.dayLength;
    inst.costParams = config.costParams;
    inst.timeWindowScheme = config.timeWindowScheme;
    inst.travel = TravelModel(locations, std::move(dist), std::move(time));
    inst.visits.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        inst.visits[i].id = static_cast<VisitId>(i);
        inst.visits[i].location = static_cast<LocationId>(i + 1);
        inst.visits[i].serviceDuration = config.serviceDuration;
    }

    for (int attempt = 0;; ++attempt) {
        if (attempt > kMaxWindowRetries)
            throw ValidationError("could not draw a window assignment where every visit is reachable by car; "
                                  "reduce areaExtentKm");
        Rng windows(config.seed, 1 + static_cast<std::uint64_t>(attempt));
        assignWindows(inst.visits, config.timeWindowScheme, config.dayLength, windows);
        bool feasible = true;
        for (const Visit& v : inst.visits)
            if (inst.dayStart + inst.travel.time(Mode::Car, inst.depot, v.location) > v.windowEnd)
                feasible = false;
        if (feasible) {
            report.windowRetries = attempt;
            break;
        }
    }
    validateInstance(inst);
    return report;
}

namespace {

    json matrixKm(const std::vector<Metres>& flat, std::size_t size)
    {
        json rows = json::array();
        for (std::size_t r = 0; r < size; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < size; ++c)
                row.push_back(toKm(flat[r * size + c]));
            rows.push_back(std::move(row));
        }
        return rows;
    }

    json matrixMinutes(const std::vector<Minutes>& flat, std::size_t size)
    {
        json rows = json::array();
        for (std::size_t r = 0; r < size; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < size; ++c)
                row.push_back(flat[r * size + c]);
            rows.push_back(std::move(row));
        }
        return rows;
    }

    const json& field(const json& obj, const char* key, const std::string& path)
    {
        if (!obj.is_object())
            throw ValidationError(path + ": expected an object");
        auto it = obj.find(key);
        if (it == obj.end())
            throw ValidationError(path + (path.empty() ? "" : ".") + key + ": missing field");
        return *it;
    }

    std::int64_t integer(const json& obj, const char* key, const std::string& path)
    {
        const json& v = field(obj, key, path);
        if (!v.is_number_integer())
            throw ValidationError(path + (path.empty() ? "" : ".") + key + ": expected an integer");
        return v.get<std::int64_t>();
    }

    double number(const json& obj, const char* key, const std::string& path)
    {
        const json& v = field(obj, key, path);
        if (!v.is_number())
            throw ValidationError(path + (path.empty() ? "" : ".") + key + ": expected a number");
        return v.get<double>();
    }

    template <typename Cell, typename Convert>
    std::vector<Cell> readMatrix(const json& m, std::size_t size, const std::string& path, Convert convert)
    {
        if (!m.is_array() || m.size() != size)
            throw ValidationError(path + ": shape mismatch, expected " + std::to_string(size) + " rows");
        std::vector<Cell> flat;
        flat.reserve(size * size);
        for (std::size_t r = 0; r < size; ++r) {
            const json& row = m[r];
            const std::string rowPath = path + "[" + std::to_string(r) + "]";
            if (!row.is_array() || row.size() != size)
                throw ValidationError(rowPath + ": shape mismatch, expected " + std::to_string(size) + " columns");
            for (std::size_t c = 0; c < size; ++c) {
                const json& x = row[c];
                const std::string cellPath = rowPath + "[" + std::to_string(c) + "]";
                if (!x.is_number())
                    throw ValidationError(cellPath + ": expected a number");
                if (x.get<double>() < 0)
                    throw ValidationError(cellPath + ": negative entry");
                flat.push_back(convert(x, cellPath));
            }
        }
        return flat;
    }

} // namespace

std::string instanceToJson(const Instance& inst)
{
    json doc;
    doc["name"] = inst.name;
    doc["timeWindowScheme"] = windowSchemeName(inst.timeWindowScheme);
    doc["dayStart"] = inst.dayStart;
    doc["dayEnd"] = inst.dayEnd;
    doc["depot"] = inst.depot;
    doc["locations"] = inst.travel.locationCount();
    json visits = json::array();
    for (const Visit& v : inst.visits)
        visits.push_back({{"id", v.id},
                          {"location", v.location},
                          {"serviceDuration", v.serviceDuration},
                          {"windowStart", v.windowStart},
                          {"windowEnd", v.windowEnd}});
    doc["visits"] = std::move(visits);
    const std::size_t size = inst.travel.locationCount();
    doc["travel"]["car"]["distance"] = matrixKm(inst.travel.distances(Mode::Car), size);
    doc["travel"]["car"]["time"] = matrixMinutes(inst.travel.times(Mode::Car), size);
    doc["travel"]["pt"]["distance"] = matrixKm(inst.travel.distances(Mode::PublicTransport), size);
    doc["travel"]["pt"]["time"] = matrixMinutes(inst.travel.times(Mode::PublicTransport), size);
    const CostParams& c = inst.costParams;
    doc["costParams"] = {{"carEmissionsPerKm", c.carEmissionsPerKm},
                         {"ptEmissionsPerKm", c.ptEmissionsPerKm},
                         {"staffRatePerHour", c.staffRatePerHour},
                         {"carCostPerKm", c.carCostPerKm},
                         {"ptCostPerKm", c.ptCostPerKm}};
    return doc.dump(1) + "\n";
}

Instance instanceFromJson(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw ValidationError(std::string("instance: malformed JSON: ") + e.what());
    }

    Instance inst;
    const json& name = field(doc, "name", "");
    if (!name.is_string())
        throw ValidationError("name: expected a string");
    inst.name = name.get<std::string>();
    if (auto it = doc.find("timeWindowScheme"); it != doc.end()) {
        if (!it->is_string())
            throw ValidationError("timeWindowScheme: expected a string");
        try {
            inst.timeWindowScheme = parseWindowScheme(it->get<std::string>());
        }
        catch (const std::invalid_argument& e) {
            throw ValidationError(std::string("timeWindowScheme: ") + e.what());
        }
    }
    inst.dayStart = static_cast<Minutes>(integer(doc, "dayStart", ""));
    inst.dayEnd = static_cast<Minutes>(integer(doc, "dayEnd", ""));
    inst.depot = static_cast<LocationId>(integer(doc, "depot", ""));
    const std::int64_t locations = integer(doc, "locations", "");
    if (locations < 1)
        throw ValidationError("locations: must be positive");
    const auto size = static_cast<std::size_t>(locations);

    const json& visits = field(doc, "visits", "");
    if (!visits.is_array())
        throw ValidationError("visits: expected an array");
    for (std::size_t i = 0; i < visits.size(); ++i) {
        const std::string path = "visits[" + std::to_string(i) + "]";
        const json& v = visits[i];
        Visit visit;
        visit.id = static_cast<VisitId>(integer(v, "id", path));
        visit.location = static_cast<LocationId>(integer(v, "location", path));
        visit.serviceDuration = static_cast<Minutes>(integer(v, "serviceDuration", path));
        visit.windowStart = static_cast<Minutes>(integer(v, "windowStart", path));
        visit.windowEnd = static_cast<Minutes>(integer(v, "windowEnd", path));
        inst.visits.push_back(visit);
    }

    const json& travel = field(doc, "travel", "");
    std::array<std::vector<Metres>, 2> dist;
    std::array<std::vector<Minutes>, 2> time;
    for (Mode m : kModes) {
        const std::string key(modeName(m));
        const std::string path = "travel." + key;
        const json& mode = field(travel, key.c_str(), "travel");
        const auto k = static_cast<std::size_t>(m);
        dist[k] = readMatrix<Metres>(field(mode, "distance", path), size, path + ".distance",
                                     [](const json& x, const std::string&) {
                                         return static_cast<Metres>(std::llround(x.get<double>() * 1000.0));
                                     });
        time[k] = readMatrix<Minutes>(field(mode, "time", path), size, path + ".time",
                                      [](const json& x, const std::string& p) {
                                          if (!x.is_number_integer())
                                              throw ValidationError(p + ": expected integer minutes");
                                          return static_cast<Minutes>(x.get<std::int64_t>());
                                      });
    }
    inst.travel = TravelModel(size, std::move(dist), std::move(time));

    const json& cp = field(doc, "costParams", "");
    inst.costParams.carEmissionsPerKm = number(cp, "carEmissionsPerKm", "costParams");
    inst.costParams.ptEmissionsPerKm = number(cp, "ptEmissionsPerKm", "costParams");
    inst.costParams.staffRatePerHour = number(cp, "staffRatePerHour", "costParams");
    inst.costParams.carCostPerKm = number(cp, "carCostPerKm", "costParams");
    inst.costParams.ptCostPerKm = number(cp, "ptCostPerKm", "costParams");

    validateInstance(inst);
    return inst;
}

void saveInstance(const Instance& instance, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << instanceToJson(instance);
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

Instance loadInstance(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open instance file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return instanceFromJson(buf.str());
    }
    catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

std::uint64_t instanceFingerprint(const Instance& instance)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : instanceToJson(instance)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace wsrp
