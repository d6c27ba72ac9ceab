#include <doctest.h>

#include <wsrp/decoder.hpp>
#include <wsrp/evaluator.hpp>
#include <wsrp/instances.hpp>
#include <wsrp/operators.hpp>

#include "fixtures.hpp"

using namespace wsrp;

TEST_CASE("10 km by car emits 1400 g")
{
    const auto d = test::uniformMatrix<Metres>(2, 5000);
    const auto t = test::uniformMatrix<Minutes>(2, 10);
    const Instance inst = test::handInstance(d, t, d, t, {{0, 480}});
    const Phenotype ph = decode(inst, test::makeGenotype({0}, "C"));
    CHECK(ph.objective == 10000);
    CHECK(ph.characteristics.emissions == doctest::Approx(1400.0).epsilon(1e-12));
    // 0 -> 10 travel, 10..40 service, back at 50.
    CHECK(ph.characteristics.staffCost == doctest::Approx(50.0 / 60.0 * 15.0));
    CHECK(ph.characteristics.travelCost == doctest::Approx(4.5));
    CHECK(ph.characteristics.carUseFraction == 1.0);
}

TEST_CASE("all public transport gives zero car use")
{
    GeneratorConfig c;
    c.visitCount = 30;
    c.timeWindowScheme = WindowScheme::Four;
    c.seed = 8;
    const Instance inst = generateInstance(c);
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        Genotype g = randomGenotype(inst.visitCount(), rng);
        std::fill(g.modes.begin(), g.modes.end(), Mode::PublicTransport);
        const Phenotype ph = decode(inst, g);
        if (ph.modeFallbacks == 0)
            CHECK(ph.characteristics.carUseFraction == 0.0);
    }
}

TEST_CASE("two journeys computed by hand")
{
    // locations: 0 depot, 1 = visit 0, 2 = visit 1
    const std::vector<std::vector<Metres>> carD{{0, 4000, 5000}, {4000, 0, 6000}, {5000, 6000, 0}};
    const std::vector<std::vector<Minutes>> carT{{0, 8, 10}, {8, 0, 12}, {10, 12, 0}};
    const std::vector<std::vector<Metres>> ptD{{0, 5000, 3000}, {5000, 0, 7000}, {3000, 7000, 0}};
    const std::vector<std::vector<Minutes>> ptT{{0, 20, 15}, {20, 0, 25}, {15, 25, 0}};
    const Instance inst = test::handInstance(carD, carT, ptD, ptT, {{0, 100}, {0, 20}});
    const Phenotype ph = decode(inst, test::makeGenotype({0, 1}, "CP"));
    REQUIRE(ph.journeys.size() == 2);

    // Car journey: 4 + 4 km, elapsed 0..46. PT journey: 3 + 3 km, elapsed 0..60.
    CHECK(ph.objective == 14000);
    CHECK(ph.objectiveKm() == doctest::Approx(14.0));
    CHECK(ph.characteristics.emissions == doctest::Approx(8 * 140.0 + 6 * 80.0));
    CHECK(ph.characteristics.staffCost == doctest::Approx((46 + 60) / 60.0 * 15.0));
    CHECK(ph.characteristics.travelCost == doctest::Approx(8 * 0.45 + 6 * 0.20));
    CHECK(ph.characteristics.carUseFraction == 0.5);

    const Evaluation direct = evaluate(inst, ph);
    CHECK(direct.objective == ph.objective);
    CHECK(direct.characteristics == ph.characteristics);
    CHECK(journeyDistance(inst, ph.journeys[0]) == 8000);
    CHECK(journeyDistance(inst, ph.journeys[1]) == 6000);
}

TEST_CASE("lengthening a travelled leg never lowers distance-based values")
{
    GeneratorConfig c;
    c.visitCount = 20;
    c.timeWindowScheme = WindowScheme::Two;
    c.seed = 12;
    const Instance inst = generateInstance(c);
    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        const Phenotype ph = decode(inst, randomGenotype(inst.visitCount(), rng));
        const Journey& j = ph.journeys[rng.index(ph.journeys.size())];
        const LocationId from = inst.depot;
        const LocationId to = inst.visits[static_cast<std::size_t>(j.visits.front())].location;
        const std::size_t size = inst.travel.locationCount();
        std::array<std::vector<Metres>, 2> d{inst.travel.distances(Mode::Car),
                                             inst.travel.distances(Mode::PublicTransport)};
        std::array<std::vector<Minutes>, 2> t{inst.travel.times(Mode::Car), inst.travel.times(Mode::PublicTransport)};
        const Metres extra = 1 + static_cast<Metres>(rng.below(5000));
        d[static_cast<std::size_t>(j.mode)][static_cast<std::size_t>(from) * size + static_cast<std::size_t>(to)] +=
            extra;
        Instance longer = inst;
        longer.travel = TravelModel(size, d, t);
        const Evaluation before = evaluate(inst, ph);
        const Evaluation after = evaluate(longer, ph);
        CHECK(after.objective == before.objective + extra);
        CHECK(after.characteristics.emissions > before.characteristics.emissions);
        CHECK(after.characteristics.travelCost > before.characteristics.travelCost);
        CHECK(after.characteristics.staffCost == before.characteristics.staffCost);
    }
}

TEST_CASE("switching a journey's mode with equal distances shifts emissions and cost by the factor gap")
{
    const auto d = test::uniformMatrix<Metres>(4, 2750);
    const auto t = test::uniformMatrix<Minutes>(4, 9);
    const Instance inst = test::handInstance(d, t, d, t, {{0, 480}, {0, 480}, {0, 480}});
    const Phenotype car = decode(inst, test::makeGenotype({0, 1, 2}, "CCC"));
    Phenotype pt = car;
    pt.journeys[0].mode = Mode::PublicTransport;
    const Evaluation a = evaluate(inst, car);
    const Evaluation b = evaluate(inst, pt);
    const double km = 4 * 2.75;
    const CostParams& p = inst.costParams;
    CHECK(a.objective == b.objective);
    CHECK(a.characteristics.emissions - b.characteristics.emissions ==
          doctest::Approx(km * (p.carEmissionsPerKm - p.ptEmissionsPerKm)));
    CHECK(a.characteristics.travelCost - b.characteristics.travelCost ==
          doctest::Approx(km * (p.carCostPerKm - p.ptCostPerKm)));
    CHECK(b.characteristics.carUseFraction == 0.0);
}

TEST_CASE("car use fraction stays in [0, 1]")
{
    GeneratorConfig c;
    c.visitCount = 60;
    c.timeWindowScheme = WindowScheme::Random;
    c.seed = 4;
    const Instance inst = generateInstance(c);
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const Characteristics ch = decode(inst, randomGenotype(inst.visitCount(), rng)).characteristics;
        CHECK(ch.carUseFraction >= 0.0);
        CHECK(ch.carUseFraction <= 1.0);
        CHECK(ch.emissions >= 0.0);
        CHECK(ch.staffCost >= 0.0);
        CHECK(ch.travelCost >= 0.0);
    }
}
