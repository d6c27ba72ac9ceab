#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <wsrp/operators.hpp>
#include <wsrp/search.hpp>

namespace wsrp {

struct EaConfig {
    int populationSize = 100;
    int childrenPerGeneration = 40;
    int tournamentSize = 2;
    // Chance that a child is mutated.
    double mutationRate = 0.7;
    // Chance that a child comes from two-parent crossover rather than a clone.
    double crossoverProbability = 0.5;
    MutationConfig mutation;
    std::int64_t evaluationBudget = 100000;
    std::uint64_t seed = 0;
    std::int64_t checkpointCount = 100;
};

void validate(const EaConfig& config);

struct EaObservers {
    // Every evaluated genotype, in evaluation order.
    std::function<void(const Candidate&)> onEvaluation;
    // Population after each generation's replacements.
    std::function<void(std::span<const Candidate>)> onGeneration;
};

struct EaResult {
    Candidate best;
    Phenotype bestPhenotype;
    std::vector<Candidate> population;
    std::vector<Checkpoint> history;
    std::int64_t evaluations = 0;
    std::int64_t generations = 0;
};

/// Steady-state EA. The random initial population counts against the budget.
/// Each generation breeds childrenPerGeneration children from
/// tournament-selected parents (crossover or clone, then mutation with
/// probability mutationRate); each child then replaces the loser of a fresh
/// tournament if it is strictly shorter. Stops once the budget is used up.
EaResult runEa(const Instance& instance, const EaConfig& config, const EaObservers& observers = {});

} // namespace wsrp
