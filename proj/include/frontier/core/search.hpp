#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frontier/core/archive.hpp"
#include "frontier/core/config.hpp"
#include "frontier/core/domain.hpp"
#include "frontier/core/events.hpp"
#include "frontier/core/fitness.hpp"
#include "frontier/core/individual.hpp"
#include "frontier/core/nsga2.hpp"
#include "frontier/core/parallel.hpp"

namespace frontier::core {

/// Mutable state shared by the evolution operators of one run.
struct RunContext {
    Rng rng;
    IdSource ids;
    EventLog log;
    std::size_t generation = 0;

    explicit RunContext(std::uint64_t seed) : rng(seed) {}
};

/// Mutates `parent` until the result is valid and differs from both the
/// parent and the sibling member, up to `retry_cap` attempts. Returns nullopt
/// (and logs) when every attempt was rejected.
template <Domain D>
std::optional<Member<typename D::Model>>
mutate_member(const Member<typename D::Model>& parent, const Member<typename D::Model>& sibling,
              const D& domain, const SearchConfig& config, RunContext& ctx) {
    for (std::size_t attempt = 0; attempt < config.mutation_retry_cap; ++attempt) {
        auto candidate = domain.mutate(parent.model, ctx.rng, config.mutation_lower_bound,
                                       config.mutation_upper_bound);
        if (!domain.is_valid(candidate)) {
            continue;
        }
        if (!(domain.distance(candidate, parent.model) > 0.0) ||
            !(domain.distance(candidate, sibling.model) > 0.0)) {
            continue;
        }
        return Member<typename D::Model>{std::move(candidate), std::nullopt, ctx.ids.next()};
    }
    Event ev;
    ev.kind = EventKind::mutation_exhausted;
    ev.generation = ctx.generation;
    ev.m1 = parent.id;
    ev.m2 = sibling.id;
    ctx.log.record(ev);
    return std::nullopt;
}

/// Fresh individual from a seed: m1 is the seed, m2 a mutant of it.
template <Domain D>
Individual<typename D::Model> individual_from_seed(const typename D::Model& seed,
                                                   std::size_t seed_id, const D& domain,
                                                   const SearchConfig& config, RunContext& ctx) {
    Individual<typename D::Model> x;
    x.m1 = Member<typename D::Model>{seed, std::nullopt, ctx.ids.next()};
    x.seed_id = seed_id;
    auto mutant = mutate_member(x.m1, x.m1, domain, config, ctx);
    if (!mutant) {
        throw SearchError("seed " + std::to_string(seed_id) +
                          " admits no valid distinct mutant within the retry cap");
    }
    x.m2 = std::move(*mutant);
    return x;
}

/// Builds `popsize` individuals by assigning seeds round-robin. Every seed
/// must make the system behave (eval > 0).
template <Domain D>
Population<typename D::Model> initialize_population(std::span<const typename D::Model> seeds,
                                                    const D& domain, const SearchConfig& config,
                                                    RunContext& ctx) {
    if (seeds.empty()) {
        throw SearchError("no seeds supplied");
    }
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const double e = domain.evaluate(seeds[i]);
        if (!(e > 0.0)) {
            throw SearchError("seed " + std::to_string(i) + " does not behave (eval " +
                              std::to_string(e) + ")");
        }
    }
    Population<typename D::Model> population;
    population.reserve(config.popsize);
    for (std::size_t i = 0; i < config.popsize; ++i) {
        const std::size_t seed_id = i % seeds.size();
        population.push_back(individual_from_seed(seeds[seed_id], seed_id, domain, config, ctx));
    }
    return population;
}

/// Evaluates missing member evals, then f2 and f1 (against the archive as it
/// stands). Evaluations may run in parallel; results land by index.
template <Domain D>
void evaluate_population(Population<typename D::Model>& population,
                         const Archive<typename D::Model>& archive, const D& domain,
                         const SearchConfig& config, RunContext& ctx) {
    std::vector<Member<typename D::Model>*> pending;
    for (auto& x : population) {
        for (auto* m : {&x.m1, &x.m2}) {
            if (!m->eval) {
                pending.push_back(m);
            }
        }
    }
    std::vector<double> results(pending.size());
    parallel_for(pending.size(), config.eval_threads,
                 [&](std::size_t i) { results[i] = domain.evaluate(pending[i]->model); });
    for (std::size_t i = 0; i < pending.size(); ++i) {
        pending[i]->eval = results[i];
        if (results[i] == 0.0) {
            Event ev;
            ev.kind = EventKind::zero_eval;
            ev.generation = ctx.generation;
            ev.m1 = pending[i]->id;
            ctx.log.record(ev);
        }
    }

    const double empty = config.effective_empty_sparseness();
    std::vector<double> f1(population.size());
    parallel_for(population.size(), config.eval_threads, [&](std::size_t i) {
        f1[i] = fitness_quality(population[i], archive, config.k, empty, domain);
    });
    for (std::size_t i = 0; i < population.size(); ++i) {
        population[i].f1 = f1[i];
        population[i].f2 = fitness_frontier(*population[i].m1.eval, *population[i].m2.eval);
    }
}

template <typename Model>
std::vector<Objectives> objectives_of(const Population<Model>& population) {
    std::vector<Objectives> out;
    out.reserve(population.size());
    for (const auto& x : population) {
        out.push_back({x.f1, x.f2});
    }
    return out;
}

/// Assigns rank (front index) and crowding distance to every individual and
/// returns the fronts.
template <typename Model>
std::vector<Front> assign_rank_and_crowding(Population<Model>& population) {
    const auto objectives = objectives_of(population);
    const auto fronts = nondominated_sort(objectives);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        const auto crowd = crowding_distance(objectives, fronts[f]);
        for (std::size_t i = 0; i < fronts[f].size(); ++i) {
            population[fronts[f][i]].rank = f;
            population[fronts[f][i]].crowding = crowd[i];
        }
    }
    return fronts;
}

/// NSGA-II environmental selection down to `count` individuals.
template <typename Model>
Population<Model> select_survivors(Population<Model> population, std::size_t count) {
    assign_rank_and_crowding(population);
    const auto objectives = objectives_of(population);
    const auto chosen = environmental_selection(objectives, count);
    Population<Model> survivors;
    survivors.reserve(chosen.size());
    for (std::size_t i : chosen) {
        survivors.push_back(std::move(population[i]));
    }
    return survivors;
}

template <typename Model>
std::pair<std::vector<std::size_t>, std::vector<double>>
rank_vectors(const Population<Model>& population) {
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
    for (const auto& x : population) {
        rank.push_back(x.rank);
        crowding.push_back(x.crowding);
    }
    return {std::move(rank), std::move(crowding)};
}

/// Binary tournaments on (rank, crowding); winners are copied unmutated.
template <typename Model>
Population<Model> tournament_offspring(const Population<Model>& population, std::size_t count,
                                       Rng& rng) {
    const auto [rank, crowding] = rank_vectors(population);
    const auto winners = tournament_selection(rank, crowding, count, rng);
    Population<Model> offspring;
    offspring.reserve(winners.size());
    for (std::size_t i : winners) {
        offspring.push_back(population[i]);
    }
    return offspring;
}

/// Mutates one uniformly chosen member of x in place. Returns false when the
/// retry cap was exhausted and x was left unchanged.
template <Domain D>
bool mutate_individual(Individual<typename D::Model>& x, const D& domain,
                       const SearchConfig& config, RunContext& ctx) {
    const bool second = std::uniform_int_distribution<int>(0, 1)(ctx.rng) == 1;
    auto& target = second ? x.m2 : x.m1;
    const auto& sibling = second ? x.m1 : x.m2;
    auto mutant = mutate_member(target, sibling, domain, config, ctx);
    if (!mutant) {
        return false;
    }
    target = std::move(*mutant);
    return true;
}

/// Replaces n ~ U[1, repopulation_upper_bound] of the most dominated
/// individuals with fresh seed-derived ones, preferring seeds that have no
/// archive entry yet.
template <Domain D>
void repopulate(Population<typename D::Model>& population,
                std::span<const typename D::Model> seeds, const Archive<typename D::Model>& archive,
                const D& domain, const SearchConfig& config, RunContext& ctx) {
    const std::size_t upper = std::min(config.repopulation_upper_bound, population.size());
    if (upper == 0 || seeds.empty()) {
        return;
    }
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, upper)(ctx.rng);
    const auto [rank, crowding] = rank_vectors(population);
    const auto victims = most_dominated(rank, crowding, n, ctx.rng);

    std::set<std::size_t> represented;
    for (const auto& e : archive.entries) {
        represented.insert(e.individual.seed_id);
    }
    std::vector<std::size_t> fresh;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        if (!represented.contains(s)) {
            fresh.push_back(s);
        }
    }
    for (std::size_t victim : victims) {
        std::size_t seed_id;
        if (!fresh.empty()) {
            seed_id = fresh[std::uniform_int_distribution<std::size_t>(0, fresh.size() - 1)(ctx.rng)];
        } else {
            seed_id = std::uniform_int_distribution<std::size_t>(0, seeds.size() - 1)(ctx.rng);
        }
        population[victim] = individual_from_seed(seeds[seed_id], seed_id, domain, config, ctx);
    }
}

template <typename Model>
struct SearchResult {
    Archive<Model> archive;
    EventLog log;
    std::vector<Model> seeds;
    Population<Model> final_population;
    std::size_t generations = 0;
};

/// Optional per-generation callback (generation index, archive so far).
template <typename Model>
using GenerationHook = std::function<void(std::size_t, const Archive<Model>&)>;

/// Runs the frontier exploration. Given the same configuration and domain,
/// the archive and event log are identical regardless of eval_threads.
template <Domain D>
SearchResult<typename D::Model> run_search(const SearchConfig& config, const D& domain,
                                           const GenerationHook<typename D::Model>& hook = {}) {
    using Model = typename D::Model;
    config.validate();
    RunContext ctx(config.rng_seed);
    SearchResult<Model> result;
    result.archive.threshold = config.archive_threshold;

    const std::size_t wanted = config.effective_seed_count();
    result.seeds = domain.generate_seeds(wanted, ctx.rng);
    if (result.seeds.size() < wanted) {
        throw SearchError("domain produced " + std::to_string(result.seeds.size()) + " of " +
                          std::to_string(wanted) + " requested seeds");
    }
    const std::span<const Model> seeds(result.seeds);

    auto population = initialize_population(seeds, domain, config, ctx);
    evaluate_population(population, result.archive, domain, config, ctx);
    for (const auto& x : population) {
        update_archive(result.archive, x, domain, ctx.generation, &ctx.log);
    }
    population = select_survivors(std::move(population), config.popsize);
    if (hook) {
        hook(0, result.archive);
    }

    while (ctx.generation < config.generations) {
        ++ctx.generation;
        auto offspring = tournament_offspring(population, config.popsize, ctx.rng);
        for (auto& q : offspring) {
            mutate_individual(q, domain, config, ctx);
        }
        repopulate(population, seeds, result.archive, domain, config, ctx);

        Population<Model> merged;
        merged.reserve(population.size() + offspring.size());
        std::move(population.begin(), population.end(), std::back_inserter(merged));
        std::move(offspring.begin(), offspring.end(), std::back_inserter(merged));

        evaluate_population(merged, result.archive, domain, config, ctx);
        for (const auto& x : merged) {
            update_archive(result.archive, x, domain, ctx.generation, &ctx.log);
        }
        population = select_survivors(std::move(merged), config.popsize);
        if (hook) {
            hook(ctx.generation, result.archive);
        }
    }

    result.generations = ctx.generation;
    result.log = std::move(ctx.log);
    result.final_population = std::move(population);
    return result;
}

} // namespace frontier::core
