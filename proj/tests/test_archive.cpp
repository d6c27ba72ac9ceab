#include <doctest.h>

#include <map>

#include <wsrp/archive.hpp>
#include <wsrp/rng.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace wsrp;

namespace {

ArchiveBounds unitBounds()
{
    ArchiveBounds b;
    b.lower.fill(0.0);
    b.upper.fill(1.0);
    return b;
}

Characteristics uniformCharacteristics(double x) { return {x, x, x, x}; }

} // namespace

TEST_CASE("bin edges and midpoint")
{
    const ArchiveBounds b = unitBounds();
    CHECK(featureDescriptor(uniformCharacteristics(0.0), 20, b) == CellKey{0, 0, 0, 0});
    CHECK(featureDescriptor(uniformCharacteristics(1.0), 20, b) == CellKey{19, 19, 19, 19});
    CHECK(featureDescriptor(uniformCharacteristics(0.5), 20, b) == CellKey{10, 10, 10, 10});
    CHECK(featureDescriptor(uniformCharacteristics(-3.0), 20, b) == CellKey{0, 0, 0, 0});
    CHECK(featureDescriptor(uniformCharacteristics(7.0), 20, b) == CellKey{19, 19, 19, 19});
    CHECK(featureDescriptor({0.0, 0.26, 0.51, 0.99}, 4, b) == CellKey{0, 1, 2, 3});
}

TEST_CASE("binning agrees with a linear scan over bin edges")
{
    Rng rng(11);
    ArchiveBounds b;
    b.lower = {100.0, 20.0, 3.0, 0.0};
    b.upper = {2500.0, 400.0, 90.0, 1.0};
    for (int i = 0; i < 1000; ++i) {
        Characteristics c;
        std::array<double, 4> x{};
        for (std::size_t d = 0; d < 4; ++d) {
            const double span = b.upper[d] - b.lower[d];
            x[d] = b.lower[d] - 0.1 * span + 1.2 * span * rng.uniform();
        }
        c = {x[0], x[1], x[2], x[3]};
        const int bins = 1 + static_cast<int>(rng.below(25));
        const CellKey key = featureDescriptor(c, bins, b);
        for (std::size_t d = 0; d < 4; ++d)
            CHECK(key[d] == oracle::linearScanBin(x[d], b.lower[d], b.upper[d], bins));
    }
}

TEST_CASE("insert, replace on strictly lower fitness, reject ties")
{
    Archive a(20, unitBounds());
    const Genotype g1 = test::makeGenotype({0, 1}, "CC");
    const Genotype g2 = test::makeGenotype({1, 0}, "CC");
    const Genotype g3 = test::makeGenotype({1, 0}, "PP");
    const Characteristics c = uniformCharacteristics(0.3);
    CHECK(a.tryInsert(g1, 100000, c) == InsertOutcome::Inserted);
    CHECK(a.tryInsert(g2, 99000, c) == InsertOutcome::Replaced);
    CHECK(a.tryInsert(g3, 99000, c) == InsertOutcome::Rejected);
    CHECK(a.tryInsert(g3, 150000, c) == InsertOutcome::Rejected);
    REQUIRE(a.size() == 1);
    CHECK(a.at(0).genotype == g2);
    CHECK(a.at(0).fitness == 99000);
    const Elite* e = a.find(a.keyOf(c));
    REQUIRE(e != nullptr);
    CHECK(e->fitness == 99000);
    CHECK(a.find(CellKey{1, 2, 3, 4}) == nullptr);
}

TEST_CASE("random insertion stream matches best-per-cell replay")
{
    Rng rng(123);
    Archive a(4, unitBounds());
    std::map<CellKey, std::pair<Metres, Genotype>> best;
    for (int i = 0; i < 5000; ++i) {
        const Characteristics c{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
        const Metres fitness = 1000 + static_cast<Metres>(rng.below(500));
        const Genotype g = test::makeGenotype({static_cast<VisitId>(i)}, "C");
        a.tryInsert(g, fitness, c);
        CellKey key{};
        for (std::size_t d = 0; d < 4; ++d)
            key[d] = static_cast<std::uint16_t>(oracle::linearScanBin(featureVector(c)[d], 0.0, 1.0, 4));
        auto [it, fresh] = best.try_emplace(key, fitness, g);
        if (!fresh && fitness < it->second.first)
            it->second = {fitness, g};
    }
    REQUIRE(a.size() == best.size());
    for (const auto& [key, entry] : best) {
        const Elite* e = a.find(key);
        REQUIRE(e != nullptr);
        CHECK(e->fitness == entry.first);
        CHECK(e->genotype == entry.second);
    }
    const auto slots = a.sortedSlots();
    REQUIRE(slots.size() == a.size());
    for (std::size_t i = 1; i < slots.size(); ++i)
        CHECK(a.keyAt(slots[i - 1]) < a.keyAt(slots[i]));
    for (std::size_t s = 0; s < a.size(); ++s)
        CHECK(a.keyOf(a.at(s).characteristics) == a.keyAt(s));
}

TEST_CASE("archive rejects unusable grids")
{
    CHECK_THROWS_AS(Archive(0, unitBounds()), std::invalid_argument);
    ArchiveBounds flat = unitBounds();
    flat.upper[2] = 0.0;
    CHECK_THROWS_AS(Archive(20, flat), std::invalid_argument);
    CHECK(Archive(20, unitBounds()).cellCount() == 160000);
}

TEST_CASE("calibrated bounds pad the sample range")
{
    const std::vector<Characteristics> samples{{10.0, 2.0, 5.0, 0.0}, {30.0, 4.0, 5.0, 1.0}};
    const ArchiveBounds b = calibrateBounds(samples, 0.1);
    CHECK(b.lower[0] == doctest::Approx(8.0));
    CHECK(b.upper[0] == doctest::Approx(32.0));
    CHECK(b.lower[1] == doctest::Approx(1.8));
    CHECK(b.upper[1] == doctest::Approx(4.2));
    CHECK(b.lower[2] < 5.0);
    CHECK(b.upper[2] > 5.0);
    CHECK(b.lower[3] == doctest::Approx(-0.1));
    CHECK(b.upper[3] == doctest::Approx(1.1));
    for (const auto& s : samples) {
        const CellKey k = featureDescriptor(s, 20, b);
        for (auto bin : k) {
            CHECK(bin > 0);
            CHECK(bin < 19);
        }
    }
}
