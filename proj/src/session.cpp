#include "sokoarch/session.hpp"

#include <array>
#include <cstdio>
#include <random>

namespace sokoarch {

const char* session_status_name(SessionStatus s) {
    switch (s) {
        case SessionStatus::Idle: return "Idle";
        case SessionStatus::Stepping: return "Stepping";
        case SessionStatus::Done: return "Done";
    }
    return "?";
}

void EventChannel::publish(const std::string& line) {
    {
        std::lock_guard lock(mutex_);
        if (closed_) return;
        events_.push_back(line);
    }
    cv_.notify_all();
}

void EventChannel::close() {
    {
        std::lock_guard lock(mutex_);
        closed_ = true;
    }
    cv_.notify_all();
}

std::optional<std::string> EventChannel::next(std::size_t& cursor, std::chrono::milliseconds timeout) {
    std::unique_lock lock(mutex_);
    cv_.wait_for(lock, timeout, [&] { return closed_ || cursor < events_.size(); });
    if (closed_ || cursor >= events_.size()) return std::nullopt;
    return events_[cursor++];
}

std::size_t EventChannel::size() const {
    std::lock_guard lock(mutex_);
    return events_.size();
}

bool EventChannel::closed() const {
    std::lock_guard lock(mutex_);
    return closed_;
}

struct SessionManager::Session {
    Session(std::string id_, ExperimentConfig config_)
        : id(std::move(id_)), config(std::move(config_)), problem(config.design, config.limits) {}

    std::string id;
    ExperimentConfig config;
    SokobanProblem problem;
    EngineState<SokobanProblem> state;
    std::vector<HistoryPoint> history;
    Clock::time_point created;
    std::atomic<Clock::time_point> touched;
    std::atomic<bool> stepping{false};
    std::mutex engine;
    std::shared_ptr<EventChannel> channel = std::make_shared<EventChannel>();

    bool done() const { return state.generation >= config.engine.generations; }

    SessionSnapshot snapshot() const {
        SessionSnapshot s;
        s.id = id;
        s.generation = state.generation;
        s.status = done() ? SessionStatus::Done : SessionStatus::Idle;
        for (const auto& m : state.ca.members) s.ca.push_back({m.id, m.objectives});
        for (const auto& m : state.da.members) s.da.push_back({m.id, m.objectives});
        s.history = history;
        return s;
    }

    const SokobanMember* member(std::uint64_t id_) const {
        for (const auto* a : {&state.ca, &state.da})
            for (const auto& m : a->members)
                if (m.id == id_) return &m;
        return nullptr;
    }
};

namespace {

HistoryPoint history_point(const GenerationRecord& r) {
    return {r.generation, r.ca.size(), r.da.size(), r.hypervolume_da, r.hypervolume_cumulative};
}

}  // namespace

SessionManager::SessionManager() : SessionManager(Options{}) {}
SessionManager::SessionManager(Options options) : options_(std::move(options)) {}

SessionManager::~SessionManager() {
    std::lock_guard lock(mutex_);
    for (auto& [_, s] : sessions_) s->channel->close();
}

std::string SessionManager::new_id() {
    static thread_local std::random_device device;
    std::array<char, 33> buf{};
    std::uint64_t hi = (static_cast<std::uint64_t>(device()) << 32) | device();
    std::uint64_t lo = (static_cast<std::uint64_t>(device()) << 32) | device();
    std::snprintf(buf.data(), buf.size(), "%016llx%016llx", static_cast<unsigned long long>(hi),
                  static_cast<unsigned long long>(lo));
    return buf.data();
}

CreatedSession SessionManager::create(const ExperimentConfig& config) {
    evict_idle();
    const ExperimentConfig resolved = resolve(config);
    {
        std::lock_guard lock(mutex_);
        if (sessions_.size() >= options_.max_sessions)
            throw TooManySessions("session limit of " + std::to_string(options_.max_sessions) + " reached");
    }

    auto session = std::make_shared<Session>(new_id(), resolved);
    GenerationRecord init;
    EngineConfig engine = resolved.engine;
    engine.rng_seed = resolved.seeds.front();
    session->state = initialize(engine, session->problem, &init);
    session->history.push_back(history_point(init));
    session->created = options_.now();
    session->touched = session->created;

    CreatedSession out{session->snapshot(), init};
    std::lock_guard lock(mutex_);
    if (sessions_.size() >= options_.max_sessions)
        throw TooManySessions("session limit of " + std::to_string(options_.max_sessions) + " reached");
    while (sessions_.contains(session->id)) session->id = new_id();
    out.snapshot.id = session->id;
    sessions_.emplace(session->id, std::move(session));
    return out;
}

std::shared_ptr<SessionManager::Session> SessionManager::find(const std::string& id) {
    evict_idle();
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw SessionNotFound("no session " + id);
    it->second->touched = options_.now();
    return it->second;
}

std::vector<GenerationRecord> SessionManager::step(const std::string& id, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    auto session = find(id);
    bool expected = false;
    if (!session->stepping.compare_exchange_strong(expected, true)) throw SessionBusy("a step is already running");
    struct Release {
        Session& s;
        ~Release() { s.stepping = false; }
    } release{*session};

    std::lock_guard lock(session->engine);
    if (session->done()) throw SessionDone("session reached its generation cap");
    std::vector<GenerationRecord> records;
    for (std::size_t i = 0; i < k && !session->done(); ++i) {
        records.push_back(sokoarch::step(session->state, session->problem));
        session->history.push_back(history_point(records.back()));
        session->channel->publish(to_json_line(records.back()));
    }
    session->touched = options_.now();
    return records;
}

SessionSnapshot SessionManager::state(const std::string& id) {
    auto session = find(id);
    std::lock_guard lock(session->engine);
    SessionSnapshot s = session->snapshot();
    return s;
}

LevelPayload SessionManager::level(const std::string& id, std::uint64_t member) {
    auto session = find(id);
    std::lock_guard lock(session->engine);
    const SokobanMember* m = session->member(member);
    if (!m) throw SessionNotFound("member " + std::to_string(member) + " is in neither archive");
    LevelPayload p;
    p.member = m->id;
    p.level = serialize_level(decode(m->genome));
    p.objectives = m->objectives;
    p.solution = m->details.solution;
    p.pushes = m->details.pushes;
    auto contains = [&](const Archive<SokobanMember>& a) {
        return std::any_of(a.members.begin(), a.members.end(), [&](const SokobanMember& x) { return x.id == member; });
    };
    p.in_ca = contains(session->state.ca);
    p.in_da = contains(session->state.da);
    return p;
}

PlayResult SessionManager::play(const std::string& id, std::uint64_t member, const std::string& moves) {
    const auto parsed = parse_moves(moves);
    auto session = find(id);
    std::optional<Level> level;
    {
        std::lock_guard lock(session->engine);
        const SokobanMember* m = session->member(member);
        if (!m) throw SessionNotFound("member " + std::to_string(member) + " is in neither archive");
        level.emplace(decode(m->genome));
    }
    return validate_playthrough(*level, parsed);
}

bool SessionManager::remove(const std::string& id) {
    std::shared_ptr<Session> removed;
    {
        std::lock_guard lock(mutex_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) return false;
        removed = std::move(it->second);
        sessions_.erase(it);
    }
    removed->channel->close();
    return true;
}

std::shared_ptr<EventChannel> SessionManager::events(const std::string& id) { return find(id)->channel; }

std::size_t SessionManager::evict_idle() {
    const auto now = options_.now();
    std::vector<std::shared_ptr<Session>> evicted;
    {
        std::lock_guard lock(mutex_);
        for (auto it = sessions_.begin(); it != sessions_.end();) {
            const bool idle = !it->second->stepping && now - it->second->touched.load() > options_.idle_timeout;
            if (idle) {
                evicted.push_back(std::move(it->second));
                it = sessions_.erase(it);
            } else {
                ++it;
            }
        }
    }
    for (auto& s : evicted) s->channel->close();
    return evicted.size();
}

std::size_t SessionManager::size() const {
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

}  // namespace sokoarch
