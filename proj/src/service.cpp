#include "bisplit/service.hpp"

#include <httplib.h>

#include "bisplit/exact_minimize.hpp"
#include "bisplit/layout.hpp"
#include "bisplit/serialize.hpp"

namespace bisplit {

namespace {

template <typename F>
Reply guarded(F&& f) {
  auto error = [](int status, const std::string& msg) { return Reply{status, dump(Json{{"error", msg}})}; };
  try {
    return {200, f()};
  } catch (const BudgetGuardError& e) {
    return error(422, e.what());
  } catch (const InputError& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

const Json& field(const Json& body, const char* key) {
  if (!body.is_object() || !body.contains(key)) throw InputError(std::string("request: missing \"") + key + "\"");
  return body[key];
}

}  // namespace

Reply handle_health() { return {200, dump(Json{{"status", "ok"}})}; }

Reply handle_layout(std::string_view body) {
  return guarded([&] {
    const auto req = parse_json(body);
    const auto g = dataset_from_json(field(req, "dataset"));
    const auto cfg = config_from_json(req.contains("config") ? req["config"] : Json());
    return dump(document_to_json(make_initial_layout(g, cfg)));
  });
}

Reply handle_split(std::string_view body) {
  return guarded([&] {
    const auto req = parse_json(body);
    const auto doc = document_from_json(field(req, "layout"));
    const auto cfg = req.contains("config") ? config_from_json(req["config"]) : doc.config;
    return dump(document_to_json(split_layout(doc, cfg)));
  });
}

struct LayoutServer::Impl {
  httplib::Server server;
};

LayoutServer::LayoutServer(std::optional<std::filesystem::path> static_dir) : impl_(std::make_unique<Impl>()) {
  auto& s = impl_->server;
  auto send = [](httplib::Response& res, const Reply& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  s.Get("/api/health", [send](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });
  s.Post("/api/layout",
         [send](const httplib::Request& req, httplib::Response& res) { send(res, handle_layout(req.body)); });
  s.Post("/api/split",
         [send](const httplib::Request& req, httplib::Response& res) { send(res, handle_split(req.body)); });
  if (static_dir && !s.set_mount_point("/", static_dir->string())) {
    throw InputError("static directory not found: " + static_dir->string());
  }
}

LayoutServer::~LayoutServer() { stop(); }

int LayoutServer::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw InputError("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void LayoutServer::run() { impl_->server.listen_after_bind(); }

void LayoutServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace bisplit
