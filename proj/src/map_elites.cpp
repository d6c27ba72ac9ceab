#include <wsrp/map_elites.hpp>

#include <stdexcept>
#include <string>

namespace wsrp {

void validate(const MapElitesConfig& c)
{
    if (c.evaluationBudget < 1)
        throw std::invalid_argument("evaluation budget must be at least 1");
    if (c.initCount < 1)
        throw std::invalid_argument("initialisation count must be at least 1");
    if (c.initCount > c.evaluationBudget)
        throw std::invalid_argument("initialisation count G=" + std::to_string(c.initCount) +
                                    " exceeds the evaluation budget I=" + std::to_string(c.evaluationBudget) +
                                    " (G <= I is required)");
    if (!(c.crossoverProbability >= 0.0 && c.crossoverProbability <= 1.0))
        throw std::invalid_argument("crossover probability must be in [0, 1]");
    if (!(c.mutation.modeFlipProbability >= 0.0 && c.mutation.modeFlipProbability <= 1.0))
        throw std::invalid_argument("mode flip probability must be in [0, 1]");
}

ArchiveBounds calibrateFromRandomSamples(const Instance& instance, std::int64_t samples, std::uint64_t seed,
                                         double padding)
{
    if (samples < 1)
        throw std::invalid_argument("calibration needs at least one sample");
    Rng rng(seed, 0xca1b);
    std::vector<Characteristics> chars;
    chars.reserve(static_cast<std::size_t>(samples));
    for (std::int64_t i = 0; i < samples; ++i)
        chars.push_back(evaluateCandidate(instance, randomGenotype(instance.visitCount(), rng)).characteristics);
    return calibrateBounds(chars, padding);
}

namespace {

    Archive makeArchive(const ArchiveConfig& config, const std::vector<Candidate>& initial)
    {
        if (config.bounds)
            return Archive(config.binsPerDim, *config.bounds);
        std::vector<Characteristics> chars;
        chars.reserve(initial.size());
        for (const Candidate& c : initial)
            chars.push_back(c.characteristics);
        return Archive(config.binsPerDim, calibrateBounds(chars, config.calibrationPadding));
    }

} // namespace

MapElitesResult runMapElites(const Instance& instance, const MapElitesConfig& config,
                             const ArchiveConfig& archiveConfig, const InsertObserver& observer)
{
    validate(config);
    const std::size_t n = instance.visitCount();
    Rng rng(config.seed);
    CheckpointRecorder progress(config.evaluationBudget, config.checkpointCount);
    int fallbacks = 0;

    std::vector<Candidate> initial;
    initial.reserve(static_cast<std::size_t>(config.initCount));
    for (std::int64_t i = 0; i < config.initCount; ++i) {
        initial.push_back(evaluateCandidate(instance, randomGenotype(n, rng)));
        progress.record(initial.back().fitness);
        fallbacks += initial.back().modeFallbacks;
    }

    Archive archive = makeArchive(archiveConfig, initial);
    const auto insert = [&](const Candidate& c, std::int64_t evaluation) {
        const InsertOutcome outcome = archive.tryInsert(c.genotype, c.fitness, c.characteristics);
        if (observer)
            observer({evaluation, archive.keyOf(c.characteristics), c.fitness, outcome}, archive);
    };
    for (std::size_t i = 0; i < initial.size(); ++i)
        insert(initial[i], static_cast<std::int64_t>(i) + 1);
    initial.clear();

    for (std::int64_t evaluation = config.initCount + 1; evaluation <= config.evaluationBudget; ++evaluation) {
        const Elite& parent = archive.at(rng.index(archive.size()));
        Genotype child;
        const bool cross = rng.bernoulli(config.crossoverProbability);
        if (cross && archive.size() >= 2) {
            const Elite& mate = archive.at(rng.index(archive.size()));
            child = mutate(crossover(parent.genotype, mate.genotype, rng), rng, config.mutation);
        }
        else {
            child = mutate(parent.genotype, rng, config.mutation);
        }
        const Candidate c = evaluateCandidate(instance, std::move(child));
        progress.record(c.fitness);
        fallbacks += c.modeFallbacks;
        insert(c, evaluation);
    }

    return {std::move(archive), progress.checkpoints(), progress.evaluations(), progress.best(), fallbacks};
}

} // namespace wsrp
