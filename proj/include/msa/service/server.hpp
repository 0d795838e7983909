#pragma once

#include <functional>
#include <ostream>

#include "msa/service/api.hpp"
#include "msa/service/settings.hpp"

namespace httplib {
class Server;
}

namespace msa::service {

/// Registers the HTTP routes on `server`:
///   POST /generate_with_speaker_module   GenerateRequest -> GenerateResponse
///   POST /annotate                       transcript -> scorecard
///   POST /analyze_graph                  graph -> loops and drift nodes
///   GET  /health                         {"status": "ok"}
/// Validation errors answer 400 with {code, message, detail?}; client
/// failures 502 (unavailable) or 504 (timeout). `engine` must outlive the server.
void mount_routes(httplib::Server& server, const Engine& engine);

/// Binds host:port and serves until stopped. `on_ready` runs once listening.
/// Returns non-zero when the socket cannot be bound.
int serve(const Settings& settings, std::ostream& log, const std::function<void(httplib::Server&)>& on_ready = {});

}  // namespace msa::service
