#pragma once

// HTTP front end of SessionManager. All bodies are JSON.
//
//   POST   /sessions                      config -> {id, snapshot, initial_record}
//   POST   /sessions/{id}/step            {k} -> {records: [GenerationRecord...]}
//   GET    /sessions/{id}/state           -> snapshot
//   GET    /sessions/{id}/levels/{member} -> level payload
//   POST   /sessions/{id}/play            {member, moves} -> play result
//   DELETE /sessions/{id}                 -> {deleted}
//   GET    /sessions/{id}/events          text/event-stream of GenerationRecords
//
// Errors are {"error": <code>, "message": ..., ["fields": [...]]} with
// 404 NotFound, 409 Busy / Done, 422 ValidationError /
// InitializationExhausted, 400 MoveStringInvalid / BadRequest,
// 503 TooManySessions.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "sokoarch/session.hpp"

namespace httplib {
class Server;
}

namespace sokoarch {

nlohmann::ordered_json snapshot_json(const SessionSnapshot& s);
nlohmann::ordered_json level_payload_json(const LevelPayload& p);
nlohmann::ordered_json play_result_json(const PlayResult& r);

/// `{"records":[...]}` built from to_json_line output, so each element is
/// byte-identical to the matching event-stream payload.
std::string step_response_body(const std::vector<GenerationRecord>& records);

/// Registers every endpoint; `static_dir`, when given, is served at "/".
void install_routes(httplib::Server& server, SessionManager& sessions,
                    const std::optional<std::filesystem::path>& static_dir = std::nullopt);

struct BindAddress {
    std::string host = "127.0.0.1";
    int port = 8080;
};

/// Parses "host:port" or ":port" or "port". Throws std::invalid_argument.
BindAddress parse_bind_address(const std::string& text);

}  // namespace sokoarch
