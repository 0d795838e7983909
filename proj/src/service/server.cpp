#include "msa/service/server.hpp"

#include <httplib.h>

namespace msa::service {

namespace {

constexpr const char* kJson = "application/json";

int status_for(const Error& e) {
  if (e.code() == ErrorCode::LlmTimeout) return 504;
  if (e.code() == ErrorCode::LlmUnavailable) return 502;
  return is_validation_error(e.code()) ? 400 : 500;
}

template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    res.status = status_for(e);
    res.set_content(error_body(e).dump() + "\n", kJson);
  } catch (const std::exception& e) {
    res.status = 500;
    res.set_content(error_body(Error(ErrorCode::Io, "internal error", e.what())).dump() + "\n", kJson);
  }
}

}  // namespace

void mount_routes(httplib::Server& server, const Engine& engine) {
  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"status":"ok"})" "\n", kJson);
  });

  server.Post("/generate_with_speaker_module", [&engine](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      nlohmann::json body;
      try {
        body = nlohmann::json::parse(req.body);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedJson, "request body is not valid JSON", e.what());
      }
      const auto response = generate(GenerateRequest::from_json(body), engine);
      res.set_content(response.to_json().dump() + "\n", kJson);
    });
  });

  server.Post("/annotate", [&engine](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { res.set_content(annotate_document(req.body, engine.pipeline.rubric), kJson); });
  });

  server.Post("/analyze_graph", [](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { res.set_content(analyze_graph_document(req.body), kJson); });
  });
}

int serve(const Settings& settings, std::ostream& log, const std::function<void(httplib::Server&)>& on_ready) {
  const Engine engine = Engine::from_settings(settings);
  httplib::Server server;
  mount_routes(server, engine);
  if (!server.bind_to_port(settings.host, settings.port)) {
    log << "cannot bind " << settings.host << ':' << settings.port << '\n';
    return 1;
  }
  log << "listening on http://" << settings.host << ':' << settings.port << '\n';
  if (on_ready) {
    std::thread watcher([&] {
      server.wait_until_ready();
      on_ready(server);
    });
    const bool ok = server.listen_after_bind();
    watcher.join();
    return ok ? 0 : 1;
  }
  return server.listen_after_bind() ? 0 : 1;
}

}  // namespace msa::service
