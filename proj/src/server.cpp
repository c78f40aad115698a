#include "mutlab/server.hpp"

#include <random>
#include <sstream>

#include <httplib.h>

#include "mutlab/diagram.hpp"
#include "mutlab/json_io.hpp"

namespace mutlab::api {

namespace {

json parse_body(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw ApiError(400, std::string("malformed JSON: ") + e.what());
  }
}

std::string new_token(unsigned long long counter) {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream os;
  os << 's' << counter << std::hex << (rng() & 0xffffffffULL);
  return os.str();
}

}  // namespace

Companion SessionStore::companion_for(const Session& s, const YSeed& seed) {
  Companion expl = explicit_companion(seed);
  if (!s.cartan) return expl;
  Companion paired = pairing_companion(seed, *s.cartan);
  if (paired != expl) throw ApiError(500, "explicit companion disagrees with pairing companion");
  return paired;
}

json SessionStore::render(const Session& s) {
  const ExchangeMatrix& b = s.current.matrix();
  const ConditionReport report = check_companion_conditions(b, s.companion);
  json j = io::seed_to_json(s.current, s.companion);
  j["positive_edges"] = io::edges_to_json(positive_edges(b, s.companion));
  j["admissible"] = report.admissible();
  j["conditions"] = io::conditions_to_json(report);
  j["word"] = s.word.to_one_based();
  j["companion_source"] = s.cartan ? "pairing" : "explicit";
  return j;
}

json SessionStore::create(const std::string& body) {
  const json doc = parse_body(body);
  bool track = true;
  if (doc.is_object() && doc.contains("track_companion")) {
    if (!doc.at("track_companion").is_boolean()) throw ApiError(400, "\"track_companion\" must be a boolean");
    track = doc.at("track_companion").get<bool>();
  }
  io::MatrixDocument parsed = [&] {
    try {
      return io::parse_matrix_document(doc);
    } catch (const OverflowError& e) {
      throw ApiError(400, e.what());
    } catch (const ValidationError& e) {
      throw ApiError(400, e.what());
    }
  }();

  std::optional<CartanMatrix> cartan;
  if (track) {
    if (!parsed.is_initial()) throw ApiError(422, "companion tracking needs an initial seed (c absent or identity)");
    try {
      cartan = cartan_from_acyclic(parsed.matrix);
    } catch (const NotAcyclic&) {
      throw ApiError(422, "initial matrix must be acyclic for companion tracking");
    }
  }

  const YSeed seed = parsed.seed();
  auto session = std::make_shared<Session>(seed, cartan, explicit_companion(seed));
  session->companion = companion_for(*session, seed);

  std::string id;
  {
    std::lock_guard lock(mutex_);
    id = new_token(++counter_);
    sessions_.emplace(id, session);
  }
  std::lock_guard lock(session->mutex);
  return json{{"id", id}, {"state", render(*session)}};
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ApiError(404, "unknown session " + id);
  return it->second;
}

json SessionStore::state(const std::string& id) const {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  return render(*s);
}

json SessionStore::mutate(const std::string& id, const std::string& body) {
  auto s = find(id);
  const json doc = parse_body(body);
  if (!doc.is_object() || !doc.contains("k") || !doc.at("k").is_number_integer())
    throw ApiError(400, "body must be {\"k\": int}");
  const Int k = doc.at("k").get<Int>();
  std::lock_guard lock(s->mutex);
  if (k < 1 || static_cast<std::size_t>(k) > s->current.size())
    throw ApiError(400, "k = " + std::to_string(k) + " out of range 1.." + std::to_string(s->current.size()));
  const std::size_t k0 = static_cast<std::size_t>(k - 1);
  YSeed next = mutate_seed(s->current, k0);
  Companion a = companion_for(*s, next);
  s->word.letters.push_back(k0);
  s->current = std::move(next);
  s->companion = std::move(a);
  return render(*s);
}

json SessionStore::undo(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (!s->word.letters.empty()) {
    MutationWord shorter = s->word;
    shorter.letters.pop_back();
    YSeed seed = apply_word(s->initial, shorter);
    Companion a = companion_for(*s, seed);
    s->word = std::move(shorter);
    s->current = std::move(seed);
    s->companion = std::move(a);
  }
  return render(*s);
}

std::string SessionStore::dot(const std::string& id) const {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  return to_dot(diagram_of(s->current.matrix()), s->companion);
}

namespace {

template <typename F>
void respond(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const ApiError& e) {
    res.status = e.status();
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  } catch (const OverflowError& e) {
    res.status = 500;
    res.set_content(json{{"error", std::string("overflow: ") + e.what()}}.dump(), "application/json");
  } catch (const std::exception& e) {
    res.status = 500;
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  }
}

void send(httplib::Response& res, const json& j) { res.set_content(j.dump(), "application/json"); }

}  // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
  server.Post("/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] {
      send(res, store.create(req.body));
      res.status = 201;
    });
  });
  server.Get(R"(/sessions/([A-Za-z0-9]+))", [&store](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { send(res, store.state(req.matches[1])); });
  });
  server.Post(R"(/sessions/([A-Za-z0-9]+)/mutate)", [&store](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { send(res, store.mutate(req.matches[1], req.body)); });
  });
  server.Post(R"(/sessions/([A-Za-z0-9]+)/undo)", [&store](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { send(res, store.undo(req.matches[1])); });
  });
  server.Get(R"(/sessions/([A-Za-z0-9]+)/dot)", [&store](const httplib::Request& req, httplib::Response& res) {
    respond(res, [&] { res.set_content(store.dot(req.matches[1]), "text/vnd.graphviz"); });
  });
}

bool serve(const std::string& host, int port) {
  SessionStore store;
  httplib::Server server;
  install_routes(server, store);
  return server.listen(host, port);
}

}  // namespace mutlab::api
