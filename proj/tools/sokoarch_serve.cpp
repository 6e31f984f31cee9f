// sokoarch-serve: interactive session service.
//
// Bind address comes from SOKOARCH_BIND ("host:port"), overridden by
// --host / --port. --static serves a built UI at "/".

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <iostream>

#include "sokoarch/http_service.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Two-archive Sokoban session service"};
    sokoarch::BindAddress bind;
    if (const char* env = std::getenv("SOKOARCH_BIND")) {
        try {
            bind = sokoarch::parse_bind_address(env);
        } catch (const std::exception& e) {
            std::cerr << "SOKOARCH_BIND: " << e.what() << '\n';
            return 2;
        }
    }
    std::optional<std::string> host;
    std::optional<int> port;
    std::string static_dir;
    int idle_minutes = 30;
    app.add_option("--host", host, "Bind host");
    app.add_option("--port", port, "Bind port")->check(CLI::Range(0, 65535));
    app.add_option("--static", static_dir, "Directory of built UI assets served at /")->check(CLI::ExistingDirectory);
    app.add_option("--idle-minutes", idle_minutes, "Evict sessions idle this long")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (host) bind.host = *host;
    if (port) bind.port = *port;

    sokoarch::SessionManager::Options options;
    options.idle_timeout = std::chrono::minutes(idle_minutes);
    sokoarch::SessionManager sessions(options);
    httplib::Server server;
    std::optional<std::filesystem::path> dir;
    if (!static_dir.empty()) dir = static_dir;
    sokoarch::install_routes(server, sessions, dir);

    std::cerr << "listening on " << bind.host << ':' << bind.port << '\n';
    if (!server.listen(bind.host, bind.port)) {
        std::cerr << "cannot bind " << bind.host << ':' << bind.port << '\n';
        return 3;
    }
    return 0;
}
