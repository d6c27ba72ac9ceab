#pragma once

#include <vector>

#include <wsrp/domain.hpp>

namespace wsrp::test {

/// Builds an instance from explicit symmetric matrices. `carKm`/`ptKm` and
/// `carMin`/`ptMin` are (n+1)x(n+1) with the depot at index 0.
inline Instance handInstance(const std::vector<std::vector<Metres>>& carM, const std::vector<std::vector<Minutes>>& carMin,
                             const std::vector<std::vector<Metres>>& ptM, const std::vector<std::vector<Minutes>>& ptMin,
                             const std::vector<std::pair<Minutes, Minutes>>& windows, Minutes service = 30)
{
    const std::size_t size = carM.size();
    std::array<std::vector<Metres>, 2> d;
    std::array<std::vector<Minutes>, 2> t;
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            d[0].push_back(carM[r][c]);
            d[1].push_back(ptM[r][c]);
            t[0].push_back(carMin[r][c]);
            t[1].push_back(ptMin[r][c]);
        }
    Instance inst;
    inst.name = "hand";
    inst.depot = 0;
    inst.dayStart = 0;
    inst.dayEnd = 480;
    inst.travel = TravelModel(size, d, t);
    for (std::size_t i = 0; i < windows.size(); ++i)
        inst.visits.push_back({static_cast<VisitId>(i), static_cast<LocationId>(i + 1), service, windows[i].first,
                               windows[i].second});
    validateInstance(inst);
    return inst;
}

/// Same matrix for every pair of distinct locations.
template <typename T>
std::vector<std::vector<T>> uniformMatrix(std::size_t size, T value)
{
    std::vector<std::vector<T>> m(size, std::vector<T>(size, value));
    for (std::size_t i = 0; i < size; ++i)
        m[i][i] = 0;
    return m;
}

inline Genotype makeGenotype(std::vector<VisitId> tour, const char* modes)
{
    Genotype g;
    g.tour = std::move(tour);
    for (const char* p = modes; *p; ++p)
        g.modes.push_back(*p == 'C' ? Mode::Car : Mode::PublicTransport);
    return g;
}

} // namespace wsrp::test
