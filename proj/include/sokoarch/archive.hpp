#pragma once

// The two Two_Arch2 archives and their update rules.
//
// Both updates merge the candidates into the archive, drop duplicate
// genomes (the lowest id survives), drop dominated members, and truncate
// one member at a time until the capacity holds. Members come back sorted
// by id, so the result depends only on the merged set, never on the order
// the candidates were offered in.
//
// Convergence archive: remove the member with the lowest additive-epsilon
// fitness F(y) = sum_{x != y} -exp(-I(x, y) / (kappa * c)), c being the
// largest |I| over ordered pairs of the current set (1 when that is 0).
//
// Diversity archive: remove the non-boundary member closest to its nearest
// neighbour under the Minkowski distance with p = 1/m; ties go to the
// smaller second-nearest distance, then to the lower id. Members that are
// best in some objective are protected while more than two remain.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "sokoarch/indicators.hpp"
#include "sokoarch/kernels.hpp"
#include "sokoarch/objective_vector.hpp"
#include "sokoarch/pareto.hpp"

namespace sokoarch {

enum class ArchiveKind { Convergence, Diversity };

inline const char* archive_kind_name(ArchiveKind k) { return k == ArchiveKind::Convergence ? "CA" : "DA"; }

template <class Member>
struct Archive {
    ArchiveKind kind = ArchiveKind::Convergence;
    std::size_t capacity = 1;
    std::vector<Member> members;

    std::size_t size() const noexcept { return members.size(); }
    bool empty() const noexcept { return members.empty(); }
};

namespace archive_detail {

template <class Member>
std::vector<ObjectiveVector> minimization_points(const std::vector<Member>& members, std::span<const Sense> senses) {
    std::vector<ObjectiveVector> pts;
    pts.reserve(members.size());
    for (const auto& m : members) pts.push_back(to_minimization(m.objectives, senses));
    return pts;
}

/// Union of archive and feasible candidates: unique genomes (lowest id
/// kept), nondominated, sorted by id.
template <class Member>
std::vector<Member> merge(const std::vector<Member>& current, std::span<const Member> candidates,
                          std::span<const Sense> senses) {
    std::vector<Member> pool(current.begin(), current.end());
    for (const auto& c : candidates)
        if (c.feasible) pool.push_back(c);
    std::stable_sort(pool.begin(), pool.end(), [](const Member& a, const Member& b) { return a.id < b.id; });

    std::vector<Member> unique;
    for (auto& m : pool) {
        const bool duplicate = std::any_of(unique.begin(), unique.end(), [&](const Member& u) {
            return u.id == m.id || u.genome == m.genome;
        });
        if (!duplicate) unique.push_back(std::move(m));
    }

    const auto pts = minimization_points(unique, senses);
    std::vector<Member> kept;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < unique.size() && !dominated; ++j)
            dominated = j != i && minimizing::dominates(pts[j].view(), pts[i].view());
        if (!dominated) kept.push_back(std::move(unique[i]));
    }
    return kept;
}

inline void split_columns(const std::vector<ObjectiveVector>& pts, std::vector<double>& x, std::vector<double>& y) {
    x.resize(pts.size());
    y.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        x[i] = pts[i][0];
        y[i] = pts[i][1];
    }
}

/// I[x * n + y] = epsilon_indicator(x, y).
inline std::vector<double> epsilon_matrix(const std::vector<ObjectiveVector>& pts) {
    const std::size_t n = pts.size();
    std::vector<double> out(n * n);
    if (n > 0 && pts[0].size() == 2) {
        std::vector<double> x, y;
        split_columns(pts, x, y);
        kernels::active_kernels().epsilon_matrix_2d(x, y, out);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] = epsilon_indicator(pts[i], pts[j]);
    }
    return out;
}

inline std::vector<double> distance_matrix(const std::vector<ObjectiveVector>& pts) {
    const std::size_t n = pts.size();
    std::vector<double> out(n * n);
    if (n > 0 && pts[0].size() == 2) {
        std::vector<double> x, y;
        split_columns(pts, x, y);
        kernels::active_kernels().lp_half_matrix_2d(x, y, out);
    } else {
        const double p = n > 0 ? 1.0 / static_cast<double>(pts[0].size()) : 1.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] = lp_distance(pts[i], pts[j], p);
    }
    return out;
}

}  // namespace archive_detail

/// Epsilon-indicator fitness of every point (minimisation space), in order.
inline std::vector<double> indicator_fitness(const std::vector<ObjectiveVector>& pts, double kappa) {
    const std::size_t n = pts.size();
    const auto ind = archive_detail::epsilon_matrix(pts);
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) c = std::max(c, std::fabs(ind[i * n + j]));
    if (c == 0.0) c = 1.0;
    std::vector<double> fitness(n, 0.0);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if (x != y) fitness[y] -= std::exp(-ind[x * n + y] / (kappa * c));
    return fitness;
}

template <class Member>
Archive<Member> update_ca(Archive<Member> ca, std::span<const Member> candidates, std::span<const Sense> senses,
                          double kappa) {
    ca.members = archive_detail::merge(ca.members, candidates, senses);
    while (ca.members.size() > ca.capacity) {
        const auto fitness = indicator_fitness(archive_detail::minimization_points(ca.members, senses), kappa);
        // Members are in id order, so the first minimum is the lowest id.
        const auto worst = std::min_element(fitness.begin(), fitness.end()) - fitness.begin();
        ca.members.erase(ca.members.begin() + worst);
    }
    return ca;
}

/// Index of the member the diversity truncation removes next.
inline std::size_t diversity_victim(const std::vector<ObjectiveVector>& pts) {
    const std::size_t n = pts.size();
    const std::size_t m = pts.front().size();
    const auto dist = archive_detail::distance_matrix(pts);

    std::vector<bool> protect(n, false);
    if (n > 2) {
        for (std::size_t k = 0; k < m; ++k) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : pts) best = std::min(best, p[k]);
            for (std::size_t i = 0; i < n; ++i)
                if (pts[i][k] == best) protect[i] = true;
        }
        if (std::all_of(protect.begin(), protect.end(), [](bool b) { return b; }))
            std::fill(protect.begin(), protect.end(), false);
    }

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::size_t victim = n;
    double victim_first = inf, victim_second = inf;
    for (std::size_t i = 0; i < n; ++i) {
        if (protect[i]) continue;
        double first = inf, second = inf;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = dist[i * n + j];
            if (d < first) {
                second = first;
                first = d;
            } else if (d < second) {
                second = d;
            }
        }
        if (victim == n || first < victim_first || (first == victim_first && second < victim_second)) {
            victim = i;
            victim_first = first;
            victim_second = second;
        }
    }
    return victim;
}

template <class Member>
Archive<Member> update_da(Archive<Member> da, std::span<const Member> candidates, std::span<const Sense> senses) {
    da.members = archive_detail::merge(da.members, candidates, senses);
    while (da.members.size() > da.capacity) {
        const auto victim = diversity_victim(archive_detail::minimization_points(da.members, senses));
        da.members.erase(da.members.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    return da;
}

}  // namespace sokoarch
