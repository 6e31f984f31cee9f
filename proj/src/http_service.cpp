#include "sokoarch/http_service.hpp"

#include <httplib.h>

#include <chrono>

namespace sokoarch {
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json members_json(const std::vector<MemberSummary>& members) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : members) arr.push_back(ordered_json{{"id", m.id}, {"objectives", m.objectives.values}});
    return arr;
}

void send(httplib::Response& res, int status, const std::string& body) {
    res.status = status;
    res.set_content(body, "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message,
                const std::vector<FieldError>& fields = {}) {
    ordered_json j{{"error", code}, {"message", message}};
    if (!fields.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& f : fields) arr.push_back(ordered_json{{"field", f.field}, {"message", f.message}});
        j["fields"] = arr;
    }
    send(res, status, j.dump());
}

// Maps library exceptions onto status codes.
template <class F>
void guarded(httplib::Response& res, F&& handler) {
    try {
        handler();
    } catch (const ConfigError& e) {
        send_error(res, 422, "ValidationError", e.what(), e.fields());
    } catch (const InitializationExhausted& e) {
        send_error(res, 422, "InitializationExhausted", e.what());
    } catch (const SessionNotFound& e) {
        send_error(res, 404, "NotFound", e.what());
    } catch (const SessionBusy& e) {
        send_error(res, 409, "Busy", e.what());
    } catch (const SessionDone& e) {
        send_error(res, 409, "Done", e.what());
    } catch (const TooManySessions& e) {
        send_error(res, 503, "TooManySessions", e.what());
    } catch (const MoveStringInvalid& e) {
        send_error(res, 400, "MoveStringInvalid", e.what());
    } catch (const json::exception& e) {
        send_error(res, 400, "BadRequest", e.what());
    } catch (const std::invalid_argument& e) {
        send_error(res, 400, "BadRequest", e.what());
    } catch (const std::exception& e) {
        send_error(res, 500, "InternalError", e.what());
    }
}

json body_json(const httplib::Request& req) {
    if (req.body.empty()) return json::object();
    return json::parse(req.body);
}

std::uint64_t parse_member(const std::string& text) {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("member id must be an integer");
    return v;
}

}  // namespace

ordered_json snapshot_json(const SessionSnapshot& s) {
    ordered_json history = ordered_json::array();
    for (const auto& h : s.history)
        history.push_back(ordered_json{{"generation", h.generation},
                                       {"ca_size", h.ca_size},
                                       {"da_size", h.da_size},
                                       {"hypervolume_da", h.hypervolume_da},
                                       {"hypervolume_cumulative", h.hypervolume_cumulative}});
    return ordered_json{{"id", s.id},
                        {"generation", s.generation},
                        {"status", session_status_name(s.status)},
                        {"ca", members_json(s.ca)},
                        {"da", members_json(s.da)},
                        {"history", history}};
}

ordered_json level_payload_json(const LevelPayload& p) {
    ordered_json archives = ordered_json::array();
    if (p.in_ca) archives.push_back("CA");
    if (p.in_da) archives.push_back("DA");
    return ordered_json{{"member", p.member},     {"level", p.level},   {"objectives", p.objectives.values},
                        {"solution", p.solution}, {"pushes", p.pushes}, {"archives", archives}};
}

ordered_json play_result_json(const PlayResult& r) {
    return ordered_json{{"won", r.won},
                        {"rejected", r.rejected},
                        {"final_level", serialize_level(r.final_state.to_level())}};
}

std::string step_response_body(const std::vector<GenerationRecord>& records) {
    std::string body = "{\"records\":[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i) body += ',';
        body += to_json_line(records[i]);
    }
    body += "]}";
    return body;
}

void install_routes(httplib::Server& server, SessionManager& sessions,
                    const std::optional<std::filesystem::path>& static_dir) {
    server.Post("/sessions", [&sessions](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const auto created = sessions.create(parse_experiment_config(body_json(req)));
            ordered_json j{{"id", created.snapshot.id},
                           {"snapshot", snapshot_json(created.snapshot)},
                           {"initial_record", ordered_json::parse(to_json_line(created.initial_record))}};
            send(res, 201, j.dump());
        });
    });

    server.Post(R"(/sessions/([^/]+)/step)", [&sessions](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const json body = body_json(req);
            std::size_t k = 1;
            if (body.contains("k")) {
                if (!body.at("k").is_number_unsigned() || body.at("k").get<std::uint64_t>() == 0) {
                    send_error(res, 422, "ValidationError", "k must be a positive integer", {{"k", "must be positive"}});
                    return;
                }
                k = body.at("k").get<std::size_t>();
            }
            send(res, 200, step_response_body(sessions.step(req.matches[1], k)));
        });
    });

    server.Get(R"(/sessions/([^/]+)/state)", [&sessions](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send(res, 200, snapshot_json(sessions.state(req.matches[1])).dump()); });
    });

    server.Get(R"(/sessions/([^/]+)/levels/([^/]+))",
               [&sessions](const httplib::Request& req, httplib::Response& res) {
                   guarded(res, [&] {
                       std::uint64_t member = 0;
                       try {
                           member = parse_member(req.matches[2]);
                       } catch (const std::exception&) {
                           throw SessionNotFound("no member " + std::string(req.matches[2]));
                       }
                       send(res, 200, level_payload_json(sessions.level(req.matches[1], member)).dump());
                   });
               });

    server.Post(R"(/sessions/([^/]+)/play)", [&sessions](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const json body = body_json(req);
            if (!body.contains("member") || !body.at("member").is_number_unsigned())
                throw std::invalid_argument("member must be a nonnegative integer");
            const std::string moves = body.value("moves", std::string{});
            const auto result = sessions.play(req.matches[1], body.at("member").get<std::uint64_t>(), moves);
            send(res, 200, play_result_json(result).dump());
        });
    });

    server.Delete(R"(/sessions/([^/]+))", [&sessions](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const bool removed = sessions.remove(req.matches[1]);
            send(res, 200, ordered_json{{"deleted", removed}}.dump());
        });
    });

    server.Get(R"(/sessions/([^/]+)/events)", [&sessions](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            auto channel = sessions.events(req.matches[1]);
            auto cursor = std::make_shared<std::size_t>(channel->size());
            res.set_header("Cache-Control", "no-cache");
            res.set_chunked_content_provider("text/event-stream", [channel, cursor](std::size_t, httplib::DataSink& sink) {
                if (!sink.is_writable()) return false;
                if (auto line = channel->next(*cursor, std::chrono::milliseconds(1000))) {
                    const std::string frame = "data: " + *line + "\n\n";
                    return sink.write(frame.data(), frame.size());
                }
                if (channel->closed()) {
                    sink.done();
                    return true;
                }
                static constexpr char keepalive[] = ": keepalive\n\n";
                return sink.write(keepalive, sizeof keepalive - 1);
            });
        });
    });

    if (static_dir) server.set_mount_point("/", static_dir->string());
}

BindAddress parse_bind_address(const std::string& text) {
    BindAddress addr;
    std::string port = text;
    if (const auto colon = text.rfind(':'); colon != std::string::npos) {
        if (colon > 0) addr.host = text.substr(0, colon);
        port = text.substr(colon + 1);
    }
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(port, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad port in bind address '" + text + "'");
    }
    if (used != port.size() || value < 0 || value > 65535)
        throw std::invalid_argument("bad port in bind address '" + text + "'");
    addr.port = value;
    return addr;
}

}  // namespace sokoarch
