#include "bidding/service.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <vector>

#include "bidding/average.hpp"
#include "bidding/io.hpp"
#include "httplib.h"
#include "json.hpp"

namespace bidding {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kSchema = 1;

HttpResponse reply(int status, json body) {
  body["schema"] = kSchema;
  return {status, body.dump(), "application/json"};
}

HttpResponse error(int status, const std::string& code, const std::string& message) {
  return reply(status, {{"code", code}, {"message", message}});
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '/')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

json threshold_object(const FrugalParityGame& game, const ThresholdMap& t) {
  json m = json::object();
  for (int v = 0; v < game.size(); ++v) m[game.ids[v]] = to_string(t[v]);
  return m;
}

std::optional<HumanSide> parse_side(const std::string& s) {
  if (s == "player1") return HumanSide::kPlayer1;
  if (s == "player2") return HumanSide::kPlayer2;
  if (s == "none") return HumanSide::kNone;
  return std::nullopt;
}

std::optional<StrategySource> parse_source(const std::string& s) {
  if (s == "certified") return StrategySource::kCertified;
  if (s == "oracle") return StrategySource::kOracle;
  if (s == "heuristic") return StrategySource::kHeuristic;
  return std::nullopt;
}

struct BadRequest : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json parse_body(const std::string& body) {
  try {
    json j = json::parse(body.empty() ? "{}" : body);
    if (!j.is_object()) throw BadRequest("body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw BadRequest(std::string("malformed JSON: ") + e.what());
  }
}

std::string string_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw BadRequest(std::string("field '") + key + "' must be a string");
  }
  return j[key].get<std::string>();
}

}  // namespace

struct Service::GameEntry {
  std::string document;  // canonical game file
  std::shared_ptr<const EngineContext> context;
};

struct Service::SessionEntry {
  std::mutex mutex;
  std::string game_id;
  json request;              // the creation request, replayed on load
  json moves = json::array();
  Session session;
};

ServiceConfig service_config_from_env() {
  ServiceConfig c;
  if (const char* store = std::getenv("BIDGAME_STORE")) c.store_path = store;
  return c;
}

int service_port_from_env(int fallback) {
  if (const char* port = std::getenv("BIDGAME_PORT")) {
    try {
      return std::stoi(port);
    } catch (const std::exception&) {
      return fallback;
    }
  }
  return fallback;
}

Service::Service(ServiceConfig config) : config_(std::move(config)) {
  if (!config_.store_path.empty()) load_store();
}

Service::~Service() { stop(); }

namespace {

Session create_session(const std::shared_ptr<const EngineContext>& ctx, const json& request) {
  const FrugalParityGame& game = ctx->game;
  SessionOptions options;
  auto side = parse_side(request.value("human_side", std::string("player2")));
  if (!side) throw BadRequest("human_side must be player1, player2 or none");
  options.human = *side;
  const std::string start = string_field(request, "start");
  auto v = game.find(start);
  if (!v) throw BadRequest("unknown start vertex '" + start + "'");
  options.start = *v;
  try {
    options.p1_budget = parse_budget(string_field(request, "p1_budget"));
  } catch (const BudgetError& e) {
    throw BadRequest(e.what());
  }
  auto source = parse_source(request.value("source", std::string("certified")));
  if (!source) throw BadRequest("source must be certified, oracle or heuristic");
  options.preferred = *source;
  if (request.contains("horizon")) {
    if (!request["horizon"].is_number_unsigned()) throw BadRequest("horizon must be a count");
    options.horizon = request["horizon"].get<std::size_t>();
  }
  return new_session(ctx, options);
}

std::optional<MoveHalf> parse_half(const Session& s, const json& body) {
  if (s.human == HumanSide::kNone) return std::nullopt;
  MoveHalf half;
  try {
    half.bid = parse_budget(string_field(body, "bid"));
  } catch (const BudgetError& e) {
    throw BadRequest(e.what());
  }
  const std::string move = string_field(body, "move");
  auto v = s.game().find(move);
  if (!v) throw IllegalAction("unknown move target '" + move + "'");
  half.target = *v;
  return half;
}

json seat_json(const EngineSeat& seat) {
  return {{"side", to_string(seat.side)},
          {"mode", to_string(seat.mode)},
          {"best_effort", seat.mode == StrategySource::kHeuristic},
          {"spare", seat.spare},
          {"restarts", seat.restarts},
          {"resyncs", seat.resyncs}};
}

json hint_json(const Session& s) {
  if (s.human == HumanSide::kNone || s.status != PlayStatus::kOngoing) return nullptr;
  const Player p = s.human == HumanSide::kPlayer1 ? Player::kOne : Player::kTwo;
  const CertGame& cert = p == Player::kOne ? *s.context->report.upper : *s.context->report.lower;
  const int v = s.config.vertex;
  const AdvValue b = s.budget(p);
  if (!meets(b, cert.thresholds[v])) return nullptr;
  json allowed = json::array();
  for (int u : allowed_set(cert.game, cert.thresholds, v)) allowed.push_back(s.game().ids[u]);
  return {{"player", to_string(p)},
          {"bid", to_string(strategy_bid(cert.game, cert.thresholds, v, b))},
          {"allowed", allowed}};
}

json session_json(const std::string& id, const std::string& game_id, const Session& s) {
  const FrugalParityGame& game = s.game();
  json seats = json::array();
  for (const auto& seat : s.seats) seats.push_back(seat_json(seat));
  json state = {
      {"id", id},
      {"game_id", game_id},
      {"k", game.k},
      {"human_side", to_string(s.human)},
      {"vertex", game.ids[s.config.vertex]},
      {"p1_budget", to_string(s.config.p1_budget)},
      {"p2_budget", to_string(s.budget(Player::kTwo))},
      {"status", to_string(s.status)},
      {"rounds", s.history.size()},
      {"horizon", s.horizon},
      {"engine", seats},
      {"thresholds", threshold_object(game, s.context->thresholds)},
      {"dual_thresholds", threshold_object(game, s.context->dual_thresholds)},
      {"hint", hint_json(s)},
  };
  state["provisional_winner"] =
      s.provisional_winner ? json(to_string(*s.provisional_winner)) : json(nullptr);
  return state;
}

json round_json(const FrugalParityGame& game, const RoundRecord& r) {
  return json::parse(round_log_line(game, r));
}

}  // namespace

HttpResponse Service::handle(const std::string& method, const std::string& path,
                             const std::string& body) {
  const auto parts = split_path(path);
  try {
    if (parts.size() == 1 && parts[0] == "games" && method == "POST") return post_game(body);
    if (parts.size() == 3 && parts[0] == "games" && parts[2] == "thresholds" &&
        method == "GET") {
      return get_thresholds(parts[1]);
    }
    if (parts.size() == 1 && parts[0] == "sessions" && method == "POST") {
      return post_session(body);
    }
    if (parts.size() == 2 && parts[0] == "sessions" && method == "GET") {
      return get_session(parts[1]);
    }
    if (parts.size() == 3 && parts[0] == "sessions" && parts[2] == "bid" && method == "POST") {
      return post_bid(parts[1], body);
    }
    if (parts.size() == 3 && parts[0] == "sessions" && parts[2] == "log" && method == "GET") {
      return get_log(parts[1]);
    }
    return error(404, "not_found", method + " " + path);
  } catch (const BadRequest& e) {
    return error(400, "bad_request", e.what());
  } catch (const IllegalAction& e) {
    return error(422, "illegal_action", e.what());
  } catch (const std::exception& e) {
    return error(500, "internal", e.what());
  }
}

HttpResponse Service::post_game(const std::string& body) {
  FrugalParityGame game;
  try {
    game = normalize_objective(parse_game_document(body));
  } catch (const ParseError& e) {
    return error(400, "parse_error", e.what());
  } catch (const GameError& e) {
    json issues = json::array();
    for (const auto& i : e.report()) {
      issues.push_back({{"location", i.location}, {"message", i.message}});
    }
    return reply(400, {{"code", "invalid_game"}, {"message", e.what()}, {"issues", issues}});
  }
  auto entry = std::make_shared<GameEntry>();
  entry->document = render_game_document(game);
  entry->context = make_context(game);
  std::string id;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    id = "g" + std::to_string(next_game_++);
    games_[id] = entry;
  }
  persist_game(id, *entry);
  return reply(201, {{"id", id}, {"game", json::parse(entry->document)}});
}

HttpResponse Service::get_thresholds(const std::string& id) {
  auto entry = find_game(id);
  if (!entry) return error(404, "not_found", "game " + id);
  const EngineContext& ctx = *entry->context;
  return reply(200, {{"game_id", id},
                     {"verdict", to_string(ctx.report.verdict)},
                     {"thresholds", threshold_object(ctx.game, ctx.thresholds)},
                     {"dual_thresholds", threshold_object(ctx.game, ctx.dual_thresholds)}});
}

HttpResponse Service::post_session(const std::string& body) {
  const json request = parse_body(body);
  const std::string game_id = string_field(request, "game_id");
  auto game = find_game(game_id);
  if (!game) return error(404, "not_found", "game " + game_id);
  auto entry = std::make_shared<SessionEntry>();
  entry->game_id = game_id;
  entry->request = request;
  entry->session = create_session(game->context, request);
  std::string id;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    id = "s" + std::to_string(next_session_++);
    sessions_[id] = entry;
  }
  persist_session(id, *entry);
  return reply(201, session_json(id, game_id, entry->session));
}

HttpResponse Service::get_session(const std::string& id) {
  auto entry = find_session(id);
  if (!entry) return error(404, "not_found", "session " + id);
  std::lock_guard<std::mutex> lock(entry->mutex);
  return reply(200, session_json(id, entry->game_id, entry->session));
}

HttpResponse Service::post_bid(const std::string& id, const std::string& body) {
  auto entry = find_session(id);
  if (!entry) return error(404, "not_found", "session " + id);
  const json request = parse_body(body);
  std::lock_guard<std::mutex> lock(entry->mutex);
  Session& s = entry->session;
  if (s.status != PlayStatus::kOngoing) return error(409, "play_over", "the play has ended");
  const std::optional<MoveHalf> half = parse_half(s, request);
  const RoundRecord record = step(s, half);
  entry->moves.push_back(s.human == HumanSide::kNone ? json::object() : request);
  persist_session(id, *entry);
  return reply(200, {{"round", round_json(s.game(), record)},
                     {"state", session_json(id, entry->game_id, s)}});
}

HttpResponse Service::get_log(const std::string& id) {
  auto entry = find_session(id);
  if (!entry) return error(404, "not_found", "session " + id);
  std::lock_guard<std::mutex> lock(entry->mutex);
  return {200, round_log(entry->session), "application/x-ndjson"};
}

std::shared_ptr<Service::GameEntry> Service::find_game(const std::string& id) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = games_.find(id);
  return it == games_.end() ? nullptr : it->second;
}

std::shared_ptr<Service::SessionEntry> Service::find_session(const std::string& id) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

void Service::persist_game(const std::string& id, const GameEntry& entry) {
  if (config_.store_path.empty()) return;
  const fs::path dir = fs::path(config_.store_path) / "games";
  fs::create_directories(dir);
  json doc = {{"schema", kSchema}, {"id", id}, {"game", json::parse(entry.document)}};
  write_file((dir / (id + ".json")).string(), doc.dump(2) + "\n");
}

void Service::persist_session(const std::string& id, const SessionEntry& entry) {
  if (config_.store_path.empty()) return;
  const fs::path dir = fs::path(config_.store_path) / "sessions";
  fs::create_directories(dir);
  json doc = {{"schema", kSchema},
              {"id", id},
              {"game_id", entry.game_id},
              {"request", entry.request},
              {"moves", entry.moves}};
  write_file((dir / (id + ".json")).string(), doc.dump(2) + "\n");
}

namespace {

std::size_t numeric_suffix(const std::string& id) {
  try {
    return id.size() > 1 ? std::stoul(id.substr(1)) : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

void Service::load_store() {
  const fs::path root(config_.store_path);
  if (fs::exists(root / "games")) {
    for (const auto& file : fs::directory_iterator(root / "games")) {
      const json doc = json::parse(read_file(file.path().string()));
      const std::string id = doc.at("id").get<std::string>();
      auto entry = std::make_shared<GameEntry>();
      const FrugalParityGame game = normalize_objective(parse_game_document(doc.at("game").dump()));
      entry->document = render_game_document(game);
      entry->context = make_context(game);
      games_[id] = entry;
      next_game_ = std::max(next_game_, numeric_suffix(id) + 1);
    }
  }
  if (fs::exists(root / "sessions")) {
    for (const auto& file : fs::directory_iterator(root / "sessions")) {
      const json doc = json::parse(read_file(file.path().string()));
      const std::string id = doc.at("id").get<std::string>();
      auto game = games_.at(doc.at("game_id").get<std::string>());
      auto entry = std::make_shared<SessionEntry>();
      entry->game_id = doc.at("game_id").get<std::string>();
      entry->request = doc.at("request");
      entry->session = create_session(game->context, entry->request);
      for (const auto& move : doc.at("moves")) {
        step(entry->session, parse_half(entry->session, move));
        entry->moves.push_back(move);
      }
      sessions_[id] = entry;
      next_session_ = std::max(next_session_, numeric_suffix(id) + 1);
    }
  }
}

namespace {

void install_routes(httplib::Server& server, Service& service) {
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get(R"(/.*)", forward);
  server.Post(R"(/.*)", forward);
}

}  // namespace

bool Service::listen(const std::string& host, int port) {
  server_ = std::make_unique<httplib::Server>();
  install_routes(*server_, *this);
  return server_->listen(host, port);
}

int Service::bind_any(const std::string& host) {
  server_ = std::make_unique<httplib::Server>();
  install_routes(*server_, *this);
  return server_->bind_to_any_port(host);
}

bool Service::listen_after_bind() { return server_ && server_->listen_after_bind(); }

void Service::stop() {
  if (server_) server_->stop();
}

}  // namespace bidding
