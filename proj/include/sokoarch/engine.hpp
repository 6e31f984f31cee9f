#pragma once

// Generic Two_Arch2 engine.
//
// A generation: mating selection (one parent uniform from CA, one uniform
// from DA), reproduction (crossover with probability crossover_probability,
// otherwise clones; then mutation of both children), evaluation, and
// survivor selection (feasible children offered to both archives).
//
// Every random draw comes from the state's single Rng, in this order per
// mating: CA index, DA index, crossover coin, the crossover's own draws,
// mutation of the first child, mutation of the second child. Children are
// evaluated and given ids in creation order. With an odd offspring count
// the last second child is still mutated (so the stream does not depend on
// parity) but discarded.

#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sokoarch/archive.hpp"
#include "sokoarch/engine_config.hpp"
#include "sokoarch/error.hpp"
#include "sokoarch/objective_vector.hpp"
#include "sokoarch/pareto.hpp"
#include "sokoarch/records.hpp"
#include "sokoarch/rng.hpp"

namespace sokoarch {

template <class Details>
struct Evaluation {
    ObjectiveVector objectives;  ///< reported form
    bool feasible = false;
    bool limit_exceeded = false;  ///< infeasible only because a budget ran out
    Details details{};
};

template <class G, class Details>
struct Individual {
    std::uint64_t id = 0;
    G genome;
    ObjectiveVector objectives;
    bool feasible = false;
    Details details{};
};

/// Hooks a problem exposes to the engine. Genomes returned by
/// random_genome, crossover and mutate are already repaired.
template <class P>
concept Problem = requires(const P& p, const typename P::Genome& g, Rng& rng, double rate) {
    typename P::Genome;
    typename P::Details;
    requires std::equality_comparable<typename P::Genome>;
    { p.senses() } -> std::convertible_to<std::span<const Sense>>;
    { p.random_genome(rng) } -> std::same_as<typename P::Genome>;
    { p.crossover(g, g, rng) } -> std::same_as<std::pair<typename P::Genome, typename P::Genome>>;
    { p.mutate(g, rate, rng) } -> std::same_as<typename P::Genome>;
    { p.evaluate(g) } -> std::same_as<Evaluation<typename P::Details>>;
    { p.default_mutation_rate() } -> std::convertible_to<double>;
    { p.hypervolume_reference() } -> std::convertible_to<ObjectiveVector>;
    { p.genome_text(g) } -> std::convertible_to<std::string>;
};

template <Problem P>
using MemberOf = Individual<typename P::Genome, typename P::Details>;

template <Problem P>
struct EngineState {
    EngineConfig config;  ///< mutation_rate always resolved
    std::size_t generation = 0;
    Archive<MemberOf<P>> ca;
    Archive<MemberOf<P>> da;
    Rng rng;
    std::uint64_t evaluation_count = 0;
    std::vector<ObjectiveVector> cumulative_front;  ///< reported form, sorted, unique
};

template <Problem P>
struct RunRecord {
    std::vector<GenerationRecord> generations;
    Archive<MemberOf<P>> final_ca;
    Archive<MemberOf<P>> final_da;
};

namespace engine_detail {

/// Objectives in the all-maximise form the hypervolume routine expects.
template <Problem P>
ObjectiveVector hv_form(const P& problem, const ObjectiveVector& v) {
    ObjectiveVector out = v;
    const auto senses = problem.senses();
    for (std::size_t i = 0; i < out.size(); ++i)
        if (senses[i] == Sense::Minimize) out[i] = -out[i];
    return out;
}

template <Problem P>
double hypervolume_of(const P& problem, const std::vector<ObjectiveVector>& pts) {
    if (problem.senses().size() != 2) return 0.0;
    FrontSnapshot front;
    front.reference = hv_form(problem, problem.hypervolume_reference());
    for (const auto& p : pts) front.points.push_back(hv_form(problem, p));
    return hypervolume_2d(front);
}

template <Problem P>
void extend_cumulative_front(EngineState<P>& state, const P& problem, const ObjectiveVector& v) {
    const auto senses = problem.senses();
    const auto mv = to_minimization(v, senses);
    auto& front = state.cumulative_front;
    for (const auto& f : front) {
        const auto mf = to_minimization(f, senses);
        if (f == v || minimizing::dominates(mf.view(), mv.view())) return;
    }
    std::erase_if(front, [&](const ObjectiveVector& f) {
        return minimizing::dominates(mv.view(), to_minimization(f, senses).view());
    });
    front.insert(std::upper_bound(front.begin(), front.end(), v), v);
}

template <class Member>
std::vector<MemberSummary> summarize(const Archive<Member>& a) {
    std::vector<MemberSummary> out;
    for (const auto& m : a.members) out.push_back({m.id, m.objectives});
    return out;
}

template <Problem P>
GenerationRecord make_record(const EngineState<P>& state, const P& problem, std::size_t offspring,
                             std::size_t feasible, std::size_t limit_exceeded) {
    GenerationRecord r;
    r.generation = state.generation;
    r.ca = summarize(state.ca);
    r.da = summarize(state.da);
    r.offspring = offspring;
    r.feasible_offspring = feasible;
    r.limit_exceeded_offspring = limit_exceeded;
    r.evaluations = state.evaluation_count;
    std::vector<ObjectiveVector> da_points;
    for (const auto& m : state.da.members) da_points.push_back(m.objectives);
    r.hypervolume_da = hypervolume_of(problem, da_points);
    r.hypervolume_cumulative = hypervolume_of(problem, state.cumulative_front);
    return r;
}

template <Problem P>
void absorb(EngineState<P>& state, const P& problem, const std::vector<MemberOf<P>>& batch) {
    std::vector<MemberOf<P>> feasible;
    for (const auto& m : batch)
        if (m.feasible) feasible.push_back(m);
    const auto senses = problem.senses();
    const std::span<const MemberOf<P>> cand(feasible);
    state.ca = update_ca(std::move(state.ca), cand, senses, state.config.indicator_scale_kappa);
    state.da = update_da(std::move(state.da), cand, senses);
    for (const auto& m : feasible) extend_cumulative_front(state, problem, m.objectives);
}

}  // namespace engine_detail

/// Initial population of offspring_per_generation random genomes; if none
/// is feasible, up to feasible_retry_cap * offspring_per_generation further
/// genomes are drawn one at a time until one is. Throws
/// InitializationExhausted when that fails too.
template <Problem P>
EngineState<P> initialize(const EngineConfig& config, const P& problem, GenerationRecord* record = nullptr) {
    if (auto errors = config.validate(); !errors.empty())
        throw Error("invalid engine config: " + errors.front().field + " " + errors.front().message);

    EngineState<P> state;
    state.config = config;
    if (!state.config.mutation_rate) state.config.mutation_rate = problem.default_mutation_rate();
    state.rng = Rng(config.rng_seed);
    state.ca = {ArchiveKind::Convergence, config.ca_capacity, {}};
    state.da = {ArchiveKind::Diversity, config.da_capacity, {}};

    std::vector<MemberOf<P>> batch;
    std::size_t feasible = 0, limit_exceeded = 0;
    auto sample = [&] {
        auto g = problem.random_genome(state.rng);
        auto eval = problem.evaluate(g);
        ++state.evaluation_count;
        feasible += eval.feasible;
        limit_exceeded += eval.limit_exceeded;
        batch.push_back(MemberOf<P>{state.evaluation_count, std::move(g), std::move(eval.objectives), eval.feasible,
                                    std::move(eval.details)});
    };
    for (std::size_t i = 0; i < config.offspring_per_generation; ++i) sample();
    const std::size_t extra = config.feasible_retry_cap * config.offspring_per_generation;
    for (std::size_t i = 0; i < extra && feasible == 0; ++i) sample();
    if (feasible == 0)
        throw InitializationExhausted("no feasible individual after " + std::to_string(batch.size()) + " attempts");

    engine_detail::absorb(state, problem, batch);
    if (record) *record = engine_detail::make_record(state, problem, batch.size(), feasible, limit_exceeded);
    return state;
}

/// Parent A uniform from CA, parent B uniform from DA. Throws EmptyArchive.
template <class Member>
std::pair<Member, Member> mating_select(const Archive<Member>& ca, const Archive<Member>& da, Rng& rng) {
    if (ca.empty() || da.empty()) throw EmptyArchive("mating selection needs both archives nonempty");
    const std::size_t a = rng.uniform_index(ca.size());
    const std::size_t b = rng.uniform_index(da.size());
    return {ca.members[a], da.members[b]};
}

template <Problem P>
GenerationRecord step(EngineState<P>& state, const P& problem) {
    const EngineConfig& cfg = state.config;
    const double rate = *cfg.mutation_rate;
    std::vector<typename P::Genome> children;
    children.reserve(cfg.offspring_per_generation + 1);
    while (children.size() < cfg.offspring_per_generation) {
        auto [a, b] = mating_select(state.ca, state.da, state.rng);
        std::pair<typename P::Genome, typename P::Genome> pair =
            state.rng.bernoulli(cfg.crossover_probability) ? problem.crossover(a.genome, b.genome, state.rng)
                                                           : std::make_pair(a.genome, b.genome);
        auto first = problem.mutate(pair.first, rate, state.rng);
        auto second = problem.mutate(pair.second, rate, state.rng);
        children.push_back(std::move(first));
        if (children.size() < cfg.offspring_per_generation) children.push_back(std::move(second));
    }

    std::vector<Evaluation<typename P::Details>> evals;
    evals.reserve(children.size());
    for (const auto& g : children) evals.push_back(problem.evaluate(g));

    std::vector<MemberOf<P>> batch;
    std::size_t feasible = 0, limit_exceeded = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
        ++state.evaluation_count;
        feasible += evals[i].feasible;
        limit_exceeded += evals[i].limit_exceeded;
        batch.push_back(MemberOf<P>{state.evaluation_count, std::move(children[i]), std::move(evals[i].objectives),
                                    evals[i].feasible, std::move(evals[i].details)});
    }
    engine_detail::absorb(state, problem, batch);
    ++state.generation;
    return engine_detail::make_record(state, problem, batch.size(), feasible, limit_exceeded);
}

/// initialize, then config.generations steps; every record (generation 0
/// included) is passed to `sink` as soon as it exists.
template <Problem P>
RunRecord<P> run(const EngineConfig& config, const P& problem,
                 const std::function<void(const GenerationRecord&)>& sink = {}) {
    RunRecord<P> out;
    GenerationRecord init;
    auto state = initialize(config, problem, &init);
    if (sink) sink(init);
    out.generations.push_back(std::move(init));
    for (std::size_t g = 0; g < config.generations; ++g) {
        auto rec = step(state, problem);
        if (sink) sink(rec);
        out.generations.push_back(std::move(rec));
    }
    out.final_ca = state.ca;
    out.final_da = state.da;
    return out;
}

/// Full engine state as JSON text (archives with genomes, generator state,
/// counters, cumulative front).
template <Problem P>
std::string serialize_state(const EngineState<P>& state, const P& problem) {
    using nlohmann::ordered_json;
    auto archive_json = [&](const Archive<MemberOf<P>>& a) {
        ordered_json arr = ordered_json::array();
        for (const auto& m : a.members)
            arr.push_back(ordered_json{{"id", m.id},
                                       {"objectives", m.objectives.values},
                                       {"feasible", m.feasible},
                                       {"genome", problem.genome_text(m.genome)}});
        return ordered_json{{"kind", archive_kind_name(a.kind)}, {"capacity", a.capacity}, {"members", arr}};
    };
    ordered_json front = ordered_json::array();
    for (const auto& v : state.cumulative_front) front.push_back(v.values);
    ordered_json j{{"generation", state.generation},
                   {"evaluation_count", state.evaluation_count},
                   {"ca", archive_json(state.ca)},
                   {"da", archive_json(state.da)},
                   {"cumulative_front", front},
                   {"rng_state", state.rng.save_state()}};
    return j.dump();
}

}  // namespace sokoarch
