#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

namespace sokoarch {

/// The single run generator: std::mt19937_64 with hand-written, portable
/// draw functions (the std:: distributions differ between standard
/// libraries, so none of them are used).
///
///   uniform_index(n): rejection sampling on raw 64-bit words, then x % n.
///   uniform01():      top 53 bits of one word, scaled by 2^-53.
///   bernoulli(p):     uniform01() < p.
///   weighted(w):      one uniform01() against the cumulative weights.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    std::size_t uniform_index(std::size_t n);
    double uniform01();
    bool bernoulli(double p) { return uniform01() < p; }
    std::size_t weighted(std::span<const double> weights);

    /// Full generator state as text; restoring it resumes the same stream.
    std::string save_state() const;
    void restore_state(const std::string& state);

    friend bool operator==(const Rng& a, const Rng& b) { return a.engine_ == b.engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace sokoarch
