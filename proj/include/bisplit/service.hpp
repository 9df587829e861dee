#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace bisplit {

struct Reply {
  int status = 200;
  std::string body;
};

/// Request handlers, independent of the HTTP server so the CLI and tests can
/// call them directly. Errors come back as {"error": message} with 400 for
/// invalid input, 422 for a refused budget and 500 otherwise.
Reply handle_health();
/// Body {"dataset": canonical dataset, "config": RunConfig} -> initial LayoutDocument.
Reply handle_layout(std::string_view body);
/// Body {"layout": LayoutDocument, "config": RunConfig} -> post-split LayoutDocument.
/// Without "config" the layout's own config is used.
Reply handle_split(std::string_view body);

class LayoutServer {
 public:
  explicit LayoutServer(std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~LayoutServer();
  LayoutServer(const LayoutServer&) = delete;
  LayoutServer& operator=(const LayoutServer&) = delete;

  /// Binds to `port` (0 picks a free one) and returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace bisplit
