#include <wsrp/domain.hpp>

#include <algorithm>
#include <string>

namespace wsrp {

std::string_view modeName(Mode m) { return m == Mode::Car ? "car" : "pt"; }

std::string windowSchemeName(WindowScheme s)
{
    switch (s) {
    case WindowScheme::One:
        return "1";
    case WindowScheme::Two:
        return "2";
    case WindowScheme::Four:
        return "4";
    case WindowScheme::Eight:
        return "8";
    case WindowScheme::Random:
        return "rnd";
    }
    return "?";
}

WindowScheme parseWindowScheme(std::string_view s)
{
    if (s == "1")
        return WindowScheme::One;
    if (s == "2")
        return WindowScheme::Two;
    if (s == "4")
        return WindowScheme::Four;
    if (s == "8")
        return WindowScheme::Eight;
    if (s == "rnd")
        return WindowScheme::Random;
    throw std::invalid_argument("unknown time-window scheme '" + std::string(s) + "' (expected 1, 2, 4, 8 or rnd)");
}

std::optional<std::size_t> featureIndex(std::string_view name)
{
    for (std::size_t i = 0; i < kFeatureNames.size(); ++i)
        if (kFeatureNames[i] == name)
            return i;
    return std::nullopt;
}

TravelModel::TravelModel(std::size_t locations, std::array<std::vector<Metres>, 2> distances,
                         std::array<std::vector<Minutes>, 2> times)
    : size_(locations), distances_(std::move(distances)), times_(std::move(times))
{
    const std::size_t cells = locations * locations;
    for (Mode m : kModes) {
        const auto& d = distances_[index(m)];
        const auto& t = times_[index(m)];
        const std::string mode(modeName(m));
        if (d.size() != cells)
            throw ValidationError("travel." + mode + ".distance: expected " + std::to_string(locations) + "x" +
                                  std::to_string(locations) + " matrix");
        if (t.size() != cells)
            throw ValidationError("travel." + mode + ".time: expected " + std::to_string(locations) + "x" +
                                  std::to_string(locations) + " matrix");
        for (std::size_t i = 0; i < cells; ++i) {
            const std::size_t r = i / locations, c = i % locations;
            const std::string where = "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (d[i] < 0)
                throw ValidationError("travel." + mode + ".distance" + where + ": negative entry");
            if (t[i] < 0)
                throw ValidationError("travel." + mode + ".time" + where + ": negative entry");
            if (r == c && (d[i] != 0 || t[i] != 0))
                throw ValidationError("travel." + mode + where + ": diagonal entry must be zero");
        }
    }
}

void validateInstance(const Instance& instance)
{
    const auto locations = static_cast<LocationId>(instance.travel.locationCount());
    if (instance.visits.empty())
        throw ValidationError("visits: instance has no visits");
    if (instance.dayStart >= instance.dayEnd)
        throw ValidationError("dayStart: must be before dayEnd");
    if (instance.depot < 0 || instance.depot >= locations)
        throw ValidationError("depot: location " + std::to_string(instance.depot) + " outside travel matrices");
    for (std::size_t i = 0; i < instance.visits.size(); ++i) {
        const Visit& v = instance.visits[i];
        const std::string path = "visits[" + std::to_string(i) + "]";
        if (v.id != static_cast<VisitId>(i))
            throw ValidationError(path + ".id: expected " + std::to_string(i) + ", got " + std::to_string(v.id));
        if (v.location < 0 || v.location >= locations)
            throw ValidationError(path + ".location: " + std::to_string(v.location) + " outside travel matrices");
        if (v.serviceDuration <= 0)
            throw ValidationError(path + ".serviceDuration: must be positive (visit " + std::to_string(v.id) + ")");
        if (v.windowStart >= v.windowEnd)
            throw ValidationError(path + ".windowStart: must be before windowEnd (visit " + std::to_string(v.id) +
                                  ")");
    }
    const CostParams& c = instance.costParams;
    for (double x : {c.carEmissionsPerKm, c.ptEmissionsPerKm, c.staffRatePerHour, c.carCostPerKm, c.ptCostPerKm})
        if (!(x >= 0.0))
            throw ValidationError("costParams: all parameters must be non-negative");
}

bool isValidGenotype(const Genotype& g, std::size_t visitCount)
{
    if (g.tour.size() != visitCount || g.modes.size() != visitCount)
        return false;
    std::vector<bool> seen(visitCount, false);
    for (VisitId v : g.tour) {
        if (v < 0 || static_cast<std::size_t>(v) >= visitCount || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

std::string encodeTour(const Genotype& g)
{
    std::string out;
    for (std::size_t i = 0; i < g.tour.size(); ++i) {
        if (i)
            out += ';';
        out += std::to_string(g.tour[i]);
    }
    return out;
}

std::string encodeModes(const Genotype& g)
{
    std::string out;
    out.reserve(g.modes.size());
    for (Mode m : g.modes)
        out += modeChar(m);
    return out;
}

Genotype decodeGenotypeText(std::string_view tour, std::string_view modes)
{
    Genotype g;
    std::size_t pos = 0;
    while (pos <= tour.size() && !tour.empty()) {
        const std::size_t next = std::min(tour.find(';', pos), tour.size());
        const std::string token(tour.substr(pos, next - pos));
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (token.empty() || used != token.size())
            throw ValidationError("tour: bad visit id '" + token + "'");
        g.tour.push_back(value);
        pos = next + 1;
    }
    for (char c : modes) {
        if (c == 'C')
            g.modes.push_back(Mode::Car);
        else if (c == 'P')
            g.modes.push_back(Mode::PublicTransport);
        else
            throw ValidationError(std::string("modes: bad mode character '") + c + "'");
    }
    if (g.modes.size() != g.tour.size())
        throw ValidationError("modes: length does not match tour length");
    return g;
}

namespace {

    std::string visitText(VisitId v) { return "visit " + std::to_string(v); }
    std::string journeyText(int j) { return "journey " + std::to_string(j); }

} // namespace

std::vector<Violation> validatePhenotype(const Instance& instance, const Phenotype& phenotype)
{
    std::vector<Violation> out;
    const std::size_t n = instance.visitCount();
    std::vector<int> seenIn(n, -1);
    const TravelModel& tm = instance.travel;
    Metres total = 0;

    for (std::size_t jj = 0; jj < phenotype.journeys.size(); ++jj) {
        const Journey& j = phenotype.journeys[jj];
        const int ji = static_cast<int>(jj);
        if (j.visits.empty()) {
            out.push_back({ViolationKind::EmptyJourney, ji, -1, journeyText(ji) + " has no visits"});
            continue;
        }

        bool idsOk = true;
        for (VisitId v : j.visits) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                out.push_back({ViolationKind::UnknownVisit, ji, v, journeyText(ji) + " references unknown " + visitText(v)});
                idsOk = false;
                continue;
            }
            int& owner = seenIn[static_cast<std::size_t>(v)];
            if (owner >= 0)
                out.push_back({ViolationKind::DuplicateVisit, ji, v,
                               visitText(v) + " appears in " + journeyText(owner) + " and " + journeyText(ji)});
            else
                owner = ji;
        }
        if (!idsOk)
            continue;

        if (j.departureTimes.size() != j.visits.size() + 1 || j.serviceStartTimes.size() != j.visits.size()) {
            out.push_back({ViolationKind::TimingInconsistent, ji, -1, journeyText(ji) + " has malformed timing vectors"});
            continue;
        }

        if (j.departureTimes.front() < instance.dayStart)
            out.push_back({ViolationKind::TimingInconsistent, ji, -1, journeyText(ji) + " leaves the depot before day start"});

        LocationId at = instance.depot;
        for (std::size_t k = 0; k < j.visits.size(); ++k) {
            const Visit& v = instance.visits[static_cast<std::size_t>(j.visits[k])];
            const Minutes start = j.serviceStartTimes[k];
            if (start < v.windowStart || start > v.windowEnd)
                out.push_back({ViolationKind::WindowViolation, ji, v.id,
                               visitText(v.id) + " service starts at " + std::to_string(start) + " outside window [" +
                                   std::to_string(v.windowStart) + "," + std::to_string(v.windowEnd) + "]"});
            if (start < j.departureTimes[k] + tm.time(j.mode, at, v.location))
                out.push_back({ViolationKind::TimingInconsistent, ji, v.id,
                               visitText(v.id) + " service starts before the employee can arrive"});
            if (j.departureTimes[k + 1] != start + v.serviceDuration)
                out.push_back({ViolationKind::TimingInconsistent, ji, v.id,
                               visitText(v.id) + " departure does not follow service end"});
            total += tm.distance(j.mode, at, v.location);
            at = v.location;
        }
        total += tm.distance(j.mode, at, instance.depot);
        if (j.returnTime != j.departureTimes.back() + tm.time(j.mode, at, instance.depot))
            out.push_back({ViolationKind::TimingInconsistent, ji, -1, journeyText(ji) + " return time inconsistent"});
    }

    for (std::size_t v = 0; v < n; ++v)
        if (seenIn[v] < 0)
            out.push_back({ViolationKind::MissingVisit, -1, static_cast<VisitId>(v),
                           visitText(static_cast<VisitId>(v)) + " is not in any journey"});

    if (total != phenotype.objective)
        out.push_back({ViolationKind::ObjectiveMismatch, -1, -1,
                       "objective " + std::to_string(phenotype.objective) + " m differs from journey distance sum " +
                           std::to_string(total) + " m"});
    return out;
}

} // namespace wsrp
