#include <wsrp/ea.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wsrp {

void validate(const EaConfig& c)
{
    if (c.populationSize < 2)
        throw std::invalid_argument("population size must be at least 2");
    if (c.childrenPerGeneration < 1)
        throw std::invalid_argument("children per generation must be at least 1");
    if (c.tournamentSize < 1 || c.tournamentSize > c.populationSize)
        throw std::invalid_argument("tournament size must be in [1, populationSize]");
    for (double p : {c.mutationRate, c.crossoverProbability, c.mutation.modeFlipProbability})
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("rates must be in [0, 1]");
    if (c.evaluationBudget < c.populationSize)
        throw std::invalid_argument("evaluation budget " + std::to_string(c.evaluationBudget) +
                                    " is smaller than the population size " + std::to_string(c.populationSize));
}

namespace {

    // Distinct uniformly drawn members, in draw order.
    std::vector<std::size_t> drawTournament(std::size_t populationSize, int size, Rng& rng)
    {
        std::vector<std::size_t> picks;
        picks.reserve(static_cast<std::size_t>(size));
        while (picks.size() < static_cast<std::size_t>(size)) {
            const std::size_t i = rng.index(populationSize);
            if (std::find(picks.begin(), picks.end(), i) == picks.end())
                picks.push_back(i);
        }
        return picks;
    }

    // Lowest distance wins; ties go to the earlier draw.
    std::size_t tournamentWinner(const std::vector<Candidate>& pop, int size, Rng& rng)
    {
        const auto picks = drawTournament(pop.size(), size, rng);
        std::size_t best = picks.front();
        for (std::size_t i : picks)
            if (pop[i].fitness < pop[best].fitness)
                best = i;
        return best;
    }

    // Highest distance loses; ties go to the later draw.
    std::size_t tournamentLoser(const std::vector<Candidate>& pop, int size, Rng& rng)
    {
        const auto picks = drawTournament(pop.size(), size, rng);
        std::size_t worst = picks.front();
        for (std::size_t i : picks)
            if (pop[i].fitness >= pop[worst].fitness)
                worst = i;
        return worst;
    }

} // namespace

EaResult runEa(const Instance& instance, const EaConfig& config, const EaObservers& observers)
{
    validate(config);
    const std::size_t n = instance.visitCount();
    Rng rng(config.seed);
    CheckpointRecorder progress(config.evaluationBudget, config.checkpointCount);

    const auto evaluateAndLog = [&](Genotype g) {
        Candidate c = evaluateCandidate(instance, std::move(g));
        progress.record(c.fitness);
        if (observers.onEvaluation)
            observers.onEvaluation(c);
        return c;
    };

    std::vector<Candidate> population;
    population.reserve(static_cast<std::size_t>(config.populationSize));
    for (int i = 0; i < config.populationSize; ++i)
        population.push_back(evaluateAndLog(randomGenotype(n, rng)));

    std::int64_t generations = 0;
    std::vector<Candidate> children;
    while (progress.evaluations() < config.evaluationBudget) {
        children.clear();
        for (int c = 0; c < config.childrenPerGeneration && progress.evaluations() < config.evaluationBudget; ++c) {
            const Candidate& first = population[tournamentWinner(population, config.tournamentSize, rng)];
            Genotype child;
            if (rng.bernoulli(config.crossoverProbability)) {
                const Candidate& second = population[tournamentWinner(population, config.tournamentSize, rng)];
                child = crossover(first.genotype, second.genotype, rng);
            }
            else {
                child = first.genotype;
            }
            if (rng.bernoulli(config.mutationRate))
                child = mutate(child, rng, config.mutation);
            children.push_back(evaluateAndLog(std::move(child)));
        }
        for (Candidate& child : children) {
            Candidate& loser = population[tournamentLoser(population, config.tournamentSize, rng)];
            if (child.fitness < loser.fitness)
                loser = std::move(child);
        }
        ++generations;
        if (observers.onGeneration)
            observers.onGeneration(population);
    }

    const auto bestIt = std::min_element(population.begin(), population.end(),
                                         [](const Candidate& a, const Candidate& b) { return a.fitness < b.fitness; });
    EaResult result;
    result.best = *bestIt;
    result.bestPhenotype = decode(instance, bestIt->genotype);
    result.population = std::move(population);
    result.history = progress.checkpoints();
    result.evaluations = progress.evaluations();
    result.generations = generations;
    return result;
}

} // namespace wsrp
