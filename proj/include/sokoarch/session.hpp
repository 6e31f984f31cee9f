#pragma once

// Live engine sessions for the interactive service. Each session owns one
// engine state; steps on a session never overlap (a second concurrent step
// is refused with SessionBusy), and reads wait for an in-flight step.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sokoarch/experiment_config.hpp"
#include "sokoarch/sokoban_problem.hpp"

namespace sokoarch {

class SessionNotFound : public Error {
public:
    using Error::Error;
};
class SessionBusy : public Error {
public:
    using Error::Error;
};
/// The session already ran its configured number of generations.
class SessionDone : public Error {
public:
    using Error::Error;
};
class TooManySessions : public Error {
public:
    using Error::Error;
};

enum class SessionStatus { Idle, Stepping, Done };
const char* session_status_name(SessionStatus s);

struct HistoryPoint {
    std::size_t generation = 0;
    std::size_t ca_size = 0;
    std::size_t da_size = 0;
    double hypervolume_da = 0.0;
    double hypervolume_cumulative = 0.0;
};

struct SessionSnapshot {
    std::string id;
    std::size_t generation = 0;
    SessionStatus status = SessionStatus::Idle;
    std::vector<MemberSummary> ca;
    std::vector<MemberSummary> da;
    std::vector<HistoryPoint> history;
};

struct LevelPayload {
    std::uint64_t member = 0;
    std::string level;
    ObjectiveVector objectives;
    std::string solution;
    std::size_t pushes = 0;
    bool in_ca = false;
    bool in_da = false;
};

struct CreatedSession {
    SessionSnapshot snapshot;
    GenerationRecord initial_record;
};

/// Broadcast channel of serialized GenerationRecords for one session.
class EventChannel {
public:
    void publish(const std::string& line);
    void close();
    /// Next event at or after `cursor` (advancing it); nullopt on timeout or
    /// once the channel is closed.
    std::optional<std::string> next(std::size_t& cursor, std::chrono::milliseconds timeout);
    std::size_t size() const;
    bool closed() const;

private:
    mutable std::mutex mutex_;
    std::condition_variable cv_;
    std::vector<std::string> events_;
    bool closed_ = false;
};

class SessionManager {
public:
    using Clock = std::chrono::steady_clock;

    struct Options {
        std::size_t max_sessions = 64;
        std::chrono::seconds idle_timeout{30 * 60};
        std::function<Clock::time_point()> now = [] { return Clock::now(); };
    };

    SessionManager();
    explicit SessionManager(Options options);
    ~SessionManager();

    /// Throws ConfigError, InitializationExhausted, TooManySessions.
    CreatedSession create(const ExperimentConfig& config);

    /// Advances up to k generations (fewer if the generation cap is hit).
    /// Returns the records, which are also published on the event channel.
    /// Throws SessionNotFound, SessionBusy, SessionDone, std::invalid_argument
    /// for k = 0.
    std::vector<GenerationRecord> step(const std::string& id, std::size_t k);

    SessionSnapshot state(const std::string& id);
    LevelPayload level(const std::string& id, std::uint64_t member);
    /// Throws MoveStringInvalid before touching the session's level.
    PlayResult play(const std::string& id, std::uint64_t member, const std::string& moves);
    /// Idempotent; returns whether a session was removed.
    bool remove(const std::string& id);

    std::shared_ptr<EventChannel> events(const std::string& id);

    /// Drops sessions idle for longer than the timeout; returns how many.
    std::size_t evict_idle();
    std::size_t size() const;

private:
    struct Session;
    std::shared_ptr<Session> find(const std::string& id);
    std::string new_id();

    Options options_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace sokoarch
