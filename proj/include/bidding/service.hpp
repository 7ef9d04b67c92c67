#ifndef BIDDING_SERVICE_HPP_
#define BIDDING_SERVICE_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "bidding/engine.hpp"

namespace httplib {
class Server;
}

namespace bidding {

struct ServiceConfig {
  std::string store_path;  // empty: in-memory only
};

// Reads BIDGAME_STORE.
ServiceConfig service_config_from_env();
// BIDGAME_PORT, or `fallback`.
int service_port_from_env(int fallback = 8080);

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// JSON API over games and play sessions. All state that must survive a
// restart is written to the store; loading a store replays every session.
class Service {
 public:
  explicit Service(ServiceConfig config = {});
  ~Service();

  HttpResponse handle(const std::string& method, const std::string& path,
                      const std::string& body);

  // Blocks until stop(). Returns false if the port cannot be bound.
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it; serve with listen_after_bind().
  int bind_any(const std::string& host);
  bool listen_after_bind();
  void stop();

 private:
  struct GameEntry;
  struct SessionEntry;

  HttpResponse post_game(const std::string& body);
  HttpResponse get_thresholds(const std::string& id);
  HttpResponse post_session(const std::string& body);
  HttpResponse get_session(const std::string& id);
  HttpResponse post_bid(const std::string& id, const std::string& body);
  HttpResponse get_log(const std::string& id);

  std::shared_ptr<GameEntry> find_game(const std::string& id);
  std::shared_ptr<SessionEntry> find_session(const std::string& id);
  void load_store();
  void persist_game(const std::string& id, const GameEntry& entry);
  void persist_session(const std::string& id, const SessionEntry& entry);

  ServiceConfig config_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<GameEntry>> games_;
  std::map<std::string, std::shared_ptr<SessionEntry>> sessions_;
  std::size_t next_game_ = 1;
  std::size_t next_session_ = 1;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace bidding

#endif  // BIDDING_SERVICE_HPP_
