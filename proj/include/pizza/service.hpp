// service.hpp
// Live games against an engine, kept in memory, plus the HTTP routes that
// expose them.

#pragma once

#include "pizza/engines.hpp"
#include "pizza/fixtures.hpp"
#include "pizza/serialize.hpp"

#include <httplib.h>

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace pizza {

enum class SessionStatus { AwaitingHuman, AwaitingEngine, Finished };

inline const char* name(SessionStatus s) {
  switch (s) {
    case SessionStatus::AwaitingHuman: return "awaiting-human";
    case SessionStatus::AwaitingEngine: return "awaiting-engine";
    case SessionStatus::Finished: return "finished";
  }
  return "?";
}

/// A request the service refuses; `status` is the HTTP code to answer with.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, const std::string& what, Json details = Json::object())
      : std::runtime_error(what), status_(status), code_(std::move(code)), details_(std::move(details)) {}
  int status() const { return status_; }
  const std::string& code() const { return code_; }
  const Json& details() const { return details_; }

  Json to_json() const {
    Json j{{"error", {{"code", code_}, {"message", what()}}}};
    for (auto& [k, v] : details_.items()) j["error"][k] = v;
    return j;
  }

 private:
  int status_;
  std::string code_;
  Json details_;
};

struct GameSession {
  std::string id;
  Cutting cutting;
  std::string engine;
  std::uint64_t seed = 1;
  Player human = Player::Alice;
  Position position{1};
  std::vector<Turn> history;
  Rational alice_gain = 0, bob_gain = 0;
  SessionStatus status = SessionStatus::AwaitingHuman;
};

inline Json to_json(const GameSession& s) {
  Json j{{"id", s.id},
         {"cutting", to_json(s.cutting)},
         {"engine", s.engine},
         {"seed", s.seed},
         {"human_side", name(s.human)},
         {"status", name(s.status)},
         {"position", to_json(s.position)},
         {"moves", turns_json(s.history)},
         {"gains", {{"alice", to_json(s.alice_gain)}, {"bob", to_json(s.bob_gain)}}}};
  return j;
}

class GameService {
 public:
  /// Completed games are appended to `log_path` as JSON lines when it is set.
  explicit GameService(std::string log_path = {}) : log_path_(std::move(log_path)) {}

  GameSession create_game(const Cutting& P, const std::string& engine, Player human, std::uint64_t seed = 1) {
    if (P.size() > kMaxSlices)
      throw ServiceError(422, "bad-cutting", "at most " + std::to_string(kMaxSlices) + " slices are supported");
    auto entry = std::make_shared<Entry>();
    entry->session.cutting = P;
    entry->session.engine = engine;
    entry->session.seed = seed;
    entry->session.human = human;
    entry->session.position = Position(P.size());
    entry->table = std::make_shared<const ValueTable>(P);
    try {
      entry->strategy = make_engine(engine, P, other(human), seed, entry->table);
    } catch (const std::invalid_argument& e) {
      bool known = std::any_of(engines().begin(), engines().end(), [&](const auto& i) { return i.name == engine; });
      throw ServiceError(422, known ? "engine-unavailable" : "unknown-engine", e.what());
    }
    entry->session.id = "g" + std::to_string(++counter_);
    std::lock_guard entry_lock(entry->mutex);
    advance(*entry);
    {
      std::unique_lock lock(sessions_mutex_);
      sessions_[entry->session.id] = entry;
    }
    return entry->session;
  }

  GameSession get(const std::string& id) const {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    return entry->session;
  }

  GameSession submit_move(const std::string& id, std::size_t index) {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    GameSession& s = entry->session;
    if (s.status == SessionStatus::Finished) throw ServiceError(409, "game-over", "the game is finished");
    if (s.status != SessionStatus::AwaitingHuman) throw ServiceError(409, "wrong-turn", "it is not the human's turn");
    if (!is_legal(s.position, index)) {
      auto legal = legal_moves(s.position);
      std::string list;
      for (std::size_t i = 0; i < legal.size() && i < 2; ++i) list += (i ? " and " : "") + std::to_string(legal[i]);
      std::string what = "slice " + std::to_string(index) + " is not takeable on turn " +
                         std::to_string(s.position.turn()) +
                         (s.position.full_circle() ? "" : "; legal moves are " + list);
      throw ServiceError(422, "illegal-move", what, Json{{"legal_moves", legal}});
    }
    record(s, index);
    advance(*entry);
    return s;
  }

  /// Exact what-if values for the player to move, from the session's table.
  Json analyze_position(const std::string& id) const {
    auto entry = find(id);
    GameSession s;
    {
      std::lock_guard lock(entry->mutex);
      s = entry->session;
    }
    const ValueTable& t = *entry->table;
    Json moves = Json::array();
    Json value = nullptr;
    if (!s.position.finished()) {
      auto best = t.optimal_moves(s.position);
      for (std::size_t idx : legal_moves(s.position)) {
        moves.push_back(Json{{"index", idx},
                             {"kind", name(classify_move(s.position, idx))},
                             {"value", to_json(t.move_value(s.position, idx))},
                             {"optimal", std::find(best.begin(), best.end(), idx) != best.end()}});
      }
      value = to_json(t.position_value(s.position));
    }
    return Json{{"id", s.id},
                {"status", name(s.status)},
                {"turn", s.position.turn()},
                {"to_move", s.position.finished() ? Json(nullptr) : Json(name(s.position.to_move()))},
                {"position_value", value},
                {"moves", moves},
                {"gains", {{"alice", to_json(s.alice_gain)}, {"bob", to_json(s.bob_gain)}}},
                {"values", {{"alice", to_json(t.alice_value())}, {"bob", to_json(t.bob_value())}}},
                {"potentials", potentials_json(s.cutting)}};
  }

  std::size_t session_count() const {
    std::shared_lock lock(sessions_mutex_);
    return sessions_.size();
  }

  static constexpr std::size_t kMaxSlices = 2000;

 private:
  struct Entry {
    mutable std::mutex mutex;
    GameSession session;
    Strategy strategy;
    std::shared_ptr<const ValueTable> table;
  };

  std::shared_ptr<Entry> find(const std::string& id) const {
    std::shared_lock lock(sessions_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ServiceError(404, "not-found", "no game with id '" + id + "'");
    return it->second;
  }

  static void record(GameSession& s, std::size_t idx) {
    Player mover = s.position.to_move();
    s.history.push_back({s.position.turn(), mover, idx, classify_move(s.position, idx)});
    (mover == Player::Alice ? s.alice_gain : s.bob_gain) += s.cutting.slices()[idx];
    s.position = apply_move(s.position, idx);
  }

  /// Plays engine turns until the human is to move or the game ends.
  void advance(Entry& e) {
    GameSession& s = e.session;
    while (!s.position.finished() && s.position.to_move() != s.human) {
      s.status = SessionStatus::AwaitingEngine;
      std::size_t idx = e.strategy.next_move(s.history, s.position);
      if (!is_legal(s.position, idx))
        throw ServiceError(500, "engine-error", "engine chose illegal slice " + std::to_string(idx));
      record(s, idx);
    }
    if (s.position.finished()) {
      s.status = SessionStatus::Finished;
      append_log(s);
    } else {
      s.status = SessionStatus::AwaitingHuman;
    }
  }

  void append_log(const GameSession& s) {
    if (log_path_.empty()) return;
    Json line{{"id", s.id},
              {"cutting", format_cutting(s.cutting)},
              {"engine", s.engine},
              {"human_side", name(s.human)},
              {"moves", turns_json(s.history)},
              {"gains", {{"alice", fraction_string(s.alice_gain)}, {"bob", fraction_string(s.bob_gain)}}}};
    std::lock_guard lock(log_mutex_);
    std::ofstream out(log_path_, std::ios::app);
    out << line.dump() << '\n';
  }

  std::string log_path_;
  std::mutex log_mutex_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::atomic<std::uint64_t> counter_{0};
};

inline Player parse_side(const std::string& s) {
  if (s == "alice") return Player::Alice;
  if (s == "bob") return Player::Bob;
  throw std::invalid_argument("side must be 'alice' or 'bob'");
}

inline Json families_json() {
  Json out = Json::array();
  for (const auto& f : cutting_families()) {
    Json params = Json::array();
    for (const auto& [k, d] : f.parameters) params.push_back(Json{{"name", k}, {"description", d}});
    out.push_back(Json{{"family", f.family}, {"parameters", params}, {"description", f.description}});
  }
  return out;
}

inline Json engines_json() {
  Json out = Json::array();
  for (const auto& e : engines()) {
    Json sides = Json::array();
    if (e.plays_alice) sides.push_back("alice");
    if (e.plays_bob) sides.push_back("bob");
    out.push_back(Json{{"name", e.name},
                       {"sides", sides},
                       {"max_jumps", e.max_jumps ? Json(*e.max_jumps) : Json(nullptr)},
                       {"description", e.description}});
  }
  return out;
}

/// The cutting of a POST /games body: "cutting" (text or array) or
/// "family" with "params".
inline Cutting cutting_from_request(const Json& body) {
  if (body.contains("cutting")) return cutting_from_json(body.at("cutting"));
  if (body.contains("family")) {
    CuttingSpec spec;
    spec.family = body.at("family").get<std::string>();
    if (body.contains("params"))
      for (auto& [k, v] : body.at("params").items()) spec.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return generate(spec);
  }
  throw std::invalid_argument("request needs 'cutting' or 'family'");
}

namespace detail {

template <class F>
void respond(httplib::Response& res, F&& f) {
  try {
    Json body = f();
    res.set_content(body.dump(), "application/json");
  } catch (const ServiceError& e) {
    res.status = e.status();
    res.set_content(e.to_json().dump(), "application/json");
  } catch (const Json::exception& e) {
    res.status = 400;
    res.set_content(ServiceError(400, "bad-request", e.what()).to_json().dump(), "application/json");
  } catch (const std::invalid_argument& e) {
    res.status = 422;
    res.set_content(ServiceError(422, "invalid", e.what()).to_json().dump(), "application/json");
  }
}

}  // namespace detail

inline void register_routes(httplib::Server& server, GameService& service) {
  server.Post("/games", [&](const httplib::Request& req, httplib::Response& res) {
    detail::respond(res, [&] {
      Json body = Json::parse(req.body);
      Cutting P;
      try {
        P = cutting_from_request(body);
      } catch (const std::invalid_argument& e) {
        throw ServiceError(422, "bad-cutting", e.what());
      } catch (const ParseError& e) {
        throw ServiceError(422, "bad-cutting", e.what());
      }
      std::string engine = body.value("engine", std::string("optimal"));
      Player human = parse_side(body.value("human_side", std::string("alice")));
      std::uint64_t seed = body.value("seed", std::uint64_t{1});
      res.status = 201;
      return to_json(service.create_game(P, engine, human, seed));
    });
  });
  server.Get(R"(/games/([A-Za-z0-9]+))", [&](const httplib::Request& req, httplib::Response& res) {
    detail::respond(res, [&] { return to_json(service.get(req.matches[1])); });
  });
  server.Post(R"(/games/([A-Za-z0-9]+)/moves)", [&](const httplib::Request& req, httplib::Response& res) {
    detail::respond(res, [&] {
      Json body = Json::parse(req.body);
      const Json& index = body.at("index");
      if (!index.is_number_unsigned()) throw ServiceError(422, "bad-index", "index must be a nonnegative integer");
      return to_json(service.submit_move(req.matches[1], index.get<std::size_t>()));
    });
  });
  server.Get(R"(/games/([A-Za-z0-9]+)/analysis)", [&](const httplib::Request& req, httplib::Response& res) {
    detail::respond(res, [&] { return service.analyze_position(req.matches[1]); });
  });
  server.Get("/engines", [](const httplib::Request&, httplib::Response& res) {
    detail::respond(res, [] { return engines_json(); });
  });
  server.Get("/cuttings/families", [](const httplib::Request&, httplib::Response& res) {
    detail::respond(res, [] { return families_json(); });
  });
}

}  // namespace pizza
