#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <wsrp/metrics.hpp>
#include <wsrp/rng.hpp>

#include "oracles.hpp"

using namespace wsrp;

namespace {

CellKey k(int i) { return CellKey{static_cast<std::uint16_t>(i), 0, 0, 0}; }

RunRecord runWith(std::vector<std::pair<CellKey, Metres>> cells)
{
    RunRecord r;
    r.algorithm = "me";
    r.instanceName = "inst";
    r.instanceFingerprint = 42;
    r.binsPerDim = 20;
    r.bounds.upper.fill(1.0);
    std::sort(cells.begin(), cells.end());
    for (const auto& [key, fitness] : cells) {
        CellEntry e;
        e.key = key;
        e.fitness = fitness;
        r.cells.push_back(e);
    }
    return r;
}

} // namespace

TEST_CASE("coverage examples")
{
    const RunRecord full = runWith({{k(1), 10}, {k(2), 10}});
    CHECK(coverage(full, {k(1), k(2)}) == 1.0);

    std::set<CellKey> pool;
    for (int i = 0; i < 200; ++i)
        pool.insert(k(i));
    CHECK(coverage(runWith({{k(7), 500}}), pool) == doctest::Approx(0.005).epsilon(1e-12));
    CHECK_THROWS(coverage(full, {}));
}

TEST_CASE("precision examples")
{
    CHECK(precision(runWith({{k(0), 100}}), {{k(0), 90}}) == doctest::Approx(0.9));
    CHECK(precision(runWith({{k(0), 90}, {k(3), 5}}), {{k(0), 90}, {k(3), 5}}) == 1.0);
    CHECK_THROWS(precision(runWith({}), {{k(0), 90}}));
}

TEST_CASE("three runs counted by hand")
{
    // A fills 1,2,3; B fills 3,4; C fills 5,1. Best per cell: 1:80 2:200 3:40 4:80 5:10.
    std::vector<RunRecord> runs{runWith({{k(1), 100}, {k(2), 200}, {k(3), 50}}), runWith({{k(3), 40}, {k(4), 80}}),
                                runWith({{k(5), 10}, {k(1), 80}})};
    const CellPool pool = buildCellPool(runs);
    CHECK(pool.cMax.size() == 5);
    CHECK(pool.bestPerCell.at(k(1)) == 80);
    CHECK(pool.bestPerCell.at(k(3)) == 40);
    CHECK(coverage(runs[0], pool.cMax) == doctest::Approx(3.0 / 5));
    CHECK(coverage(runs[1], pool.cMax) == doctest::Approx(2.0 / 5));
    CHECK(coverage(runs[2], pool.cMax) == doctest::Approx(2.0 / 5));
    CHECK(precision(runs[0], pool.bestPerCell) == doctest::Approx((0.8 + 1.0 + 0.8) / 3));
    CHECK(precision(runs[1], pool.bestPerCell) == doctest::Approx(1.0));
    CHECK(precision(runs[2], pool.bestPerCell) == doctest::Approx(1.0));

    std::reverse(runs.begin(), runs.end());
    const CellPool reversed = buildCellPool(runs);
    CHECK(reversed.cMax == pool.cMax);
    CHECK(reversed.bestPerCell == pool.bestPerCell);
}

TEST_CASE("pooling rejects runs from different instances or grids")
{
    std::vector<RunRecord> runs{runWith({{k(1), 1}}), runWith({{k(1), 1}})};
    runs[1].instanceFingerprint = 43;
    CHECK_THROWS_AS(buildCellPool(runs), ValidationError);
    runs[1].instanceFingerprint = 42;
    runs[1].binsPerDim = 10;
    CHECK_THROWS_AS(buildCellPool(runs), ValidationError);
    runs[1].binsPerDim = 20;
    runs[1].bounds.upper[0] = 2.0;
    CHECK_THROWS_AS(buildCellPool(runs), ValidationError);
}

TEST_CASE("Vargha-Delaney examples")
{
    const std::vector<double> a{1, 2}, b{3, 4}, c{1, 3}, d{2, 4};
    CHECK(varghaDelaneyA(a, a) == 0.5);
    CHECK(varghaDelaneyA(a, b) == 1.0);
    CHECK(varghaDelaneyA(b, a) == 0.0);
    CHECK(varghaDelaneyA(c, d) == 0.75);
    const std::vector<double> empty;
    CHECK_THROWS_AS(varghaDelaneyA(empty, a), std::invalid_argument);
    CHECK_THROWS_AS(varghaDelaneyA(a, empty), std::invalid_argument);
}

TEST_CASE("Vargha-Delaney properties against pair counting")
{
    Rng rng(8);
    for (int t = 0; t < 1000; ++t) {
        std::vector<double> a(1 + rng.index(15)), b(1 + rng.index(15));
        // Integer-valued draws so ties occur often.
        for (double& x : a)
            x = static_cast<double>(rng.below(12));
        for (double& x : b)
            x = static_cast<double>(rng.below(12));
        const double ab = varghaDelaneyA(a, b);
        CHECK(std::abs(ab - oracle::pairCountA(a, b)) <= 1e-12);
        CHECK(std::abs(ab + varghaDelaneyA(b, a) - 1.0) <= 1e-12);
        CHECK(varghaDelaneyA(a, a) == 0.5);
        std::vector<double> ta = a, tb = b;
        for (double& x : ta)
            x = std::exp(x / 3.0) + x * x * x;
        for (double& x : tb)
            x = std::exp(x / 3.0) + x * x * x;
        CHECK(std::abs(varghaDelaneyA(ta, tb) - ab) <= 1e-12);
    }
}

TEST_CASE("effect bands and arrows")
{
    CHECK(effectMagnitude(0.5) == EffectMagnitude::Small);
    CHECK(effectMagnitude(0.56) == EffectMagnitude::Small);
    CHECK(effectMagnitude(0.44) == EffectMagnitude::Small);
    CHECK(effectMagnitude(0.6) == EffectMagnitude::Medium);
    CHECK(effectMagnitude(0.64) == EffectMagnitude::Medium);
    CHECK(effectMagnitude(0.36) == EffectMagnitude::Medium);
    CHECK(effectMagnitude(0.65) == EffectMagnitude::Large);
    CHECK(effectMagnitude(0.0) == EffectMagnitude::Large);
    CHECK(magnitudeName(EffectMagnitude::Medium) == "medium");

    CHECK(effectArrows({0.5, EffectMagnitude::Small}) == "<->");
    CHECK(effectArrows({0.53, EffectMagnitude::Small}) == "^");
    CHECK(effectArrows({0.62, EffectMagnitude::Medium}) == "^^");
    CHECK(effectArrows({0.1, EffectMagnitude::Large}) == "vvv");
    const std::vector<double> a{1, 2}, b{3, 4};
    const EffectSize e = varghaDelaney(a, b);
    CHECK(e.aHat == 1.0);
    CHECK(e.magnitude == EffectMagnitude::Large);
}
